// Copyright 2026 The pdcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdcover/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace pdcover::io {

namespace {

std::string name_of(const std::vector<std::string>& names, ElementId e) {
  if (e >= 0 && e < static_cast<ElementId>(names.size())) return names[e];
  return "e" + std::to_string(e);
}

Json support_names(const std::vector<ElementId>& support, const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (ElementId e : support) arr.push_back(name_of(names, e));
  return arr;
}

std::map<std::string, int> name_index(const std::vector<std::string>& names) {
  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!idx.emplace(names[i], i).second) throw ParseError("duplicate element name " + names[i]);
  }
  return idx;
}

std::vector<std::string> parse_names(const Json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) throw ParseError(std::string(what) + " must be a non-empty array");
  std::vector<std::string> names;
  for (const auto& v : arr) names.push_back(v.get<std::string>());
  return names;
}

std::vector<Rational> parse_costs(const Json& j, const std::vector<std::string>& names) {
  if (!j.is_object()) throw ParseError("costs must be an object");
  std::vector<Rational> costs;
  for (const auto& n : names) {
    if (!j.contains(n)) throw ParseError("missing cost for element " + n);
    Rational c = parse_rational(j.at(n));
    if (c.sign() < 0) throw ParseError("negative cost for element " + n);
    costs.push_back(c);
  }
  return costs;
}

std::vector<ElementId> parse_support(const Json& arr, const std::map<std::string, int>& idx) {
  std::vector<ElementId> support;
  for (const auto& v : arr) {
    auto it = idx.find(v.get<std::string>());
    if (it == idx.end()) throw ParseError("unknown element " + v.get<std::string>());
    support.push_back(it->second);
  }
  std::sort(support.begin(), support.end());
  return support;
}

std::vector<std::pair<int, int>> parse_covers(const Json& j, std::size_t row_count) {
  std::vector<std::pair<int, int>> covers;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("covers entries must be pairs");
    int lo = pair[0].get<int>(), hi = pair[1].get<int>();
    if (lo < 0 || hi < 0 || lo >= static_cast<int>(row_count) || hi >= static_cast<int>(row_count))
      throw ParseError("cover index out of range");
    covers.emplace_back(lo, hi);
  }
  return covers;
}

GreedySystem explicit_table_system(std::shared_ptr<ExplicitLattice> lat,
                                   std::vector<std::map<ElementId, Rational>> coeffs,
                                   std::vector<Rational> ranks, std::vector<Rational> costs) {
  auto coeff_tab = std::make_shared<std::vector<std::map<ElementId, Rational>>>(std::move(coeffs));
  auto rank_tab = std::make_shared<std::vector<Rational>>(std::move(ranks));
  GreedySystem sys;
  sys.lattice = lat;
  sys.coeff = [lat, coeff_tab](const LatticeElement& s, ElementId e) {
    const auto& row = (*coeff_tab)[lat->index_of(s)];
    auto it = row.find(e);
    return it == row.end() ? Rational(0) : it->second;
  };
  sys.rank = [lat, rank_tab](const LatticeElement& s) { return (*rank_tab)[lat->index_of(s)]; };
  sys.costs = std::move(costs);
  return sys;
}

Instance parse_greedy_explicit(const Json& j) {
  Instance inst;
  inst.format = "greedy-explicit-v1";
  inst.adapter = "explicit";
  inst.element_names = parse_names(j.at("elements"), "elements");
  auto idx = name_index(inst.element_names);
  std::vector<Rational> costs = parse_costs(j.at("costs"), inst.element_names);

  const Json& rows = j.at("rows");
  if (!rows.is_array() || rows.empty()) throw ParseError("rows must be a non-empty array");
  std::vector<std::vector<ElementId>> supports;
  std::vector<std::map<ElementId, Rational>> coeffs;
  std::vector<Rational> ranks;
  for (const auto& row : rows) {
    std::vector<ElementId> support = parse_support(row.at("support"), idx);
    std::map<ElementId, Rational> coeff;
    if (row.contains("coeffs"))
      for (auto it = row.at("coeffs").begin(); it != row.at("coeffs").end(); ++it) {
        auto nit = idx.find(it.key());
        if (nit == idx.end()) throw ParseError("unknown element in coeffs: " + it.key());
        coeff[nit->second] = parse_rational(it.value());
      }
    for (ElementId e : support) {
      auto it = coeff.find(e);
      if (it == coeff.end() || it->second.sign() <= 0)
        throw ParseError("every support element needs a positive coefficient");
    }
    for (const auto& [e, a] : coeff)
      if (!std::binary_search(support.begin(), support.end(), e))
        throw ParseError("coefficient outside the row support");
    supports.push_back(std::move(support));
    coeffs.push_back(std::move(coeff));
    ranks.push_back(parse_rational(row.at("rank")));
  }
  std::shared_ptr<ExplicitLattice> lat;
  if (j.contains("lattice") && j.at("lattice").contains("covers")) {
    lat = std::make_shared<ExplicitLattice>(supports,
                                            parse_covers(j.at("lattice").at("covers"), supports.size()));
  } else {
    lat = std::make_shared<ExplicitLattice>(supports);
    if (!lat->order_is_lattice())
      throw ParseError("support inclusion order is not a lattice: " + lat->structure_note());
  }
  inst.plain = explicit_table_system(lat, std::move(coeffs), std::move(ranks), std::move(costs));
  return inst;
}

Instance parse_product_explicit(const Json& j) {
  Instance inst;
  inst.format = "product-explicit-v1";
  inst.adapter = "product-explicit";
  inst.element_names = parse_names(j.at("elements"), "elements");
  auto idx = name_index(inst.element_names);
  std::vector<Rational> costs = parse_costs(j.at("costs"), inst.element_names);

  std::vector<std::vector<ElementId>> u_sets;
  for (const auto& u : j.at("ufamily")) u_sets.push_back(parse_support(u, idx));
  std::vector<std::vector<ElementId>> lsets;
  for (const auto& s : j.at("lsets")) lsets.push_back(parse_support(s, idx));
  if (lsets.empty()) throw ParseError("lsets must be non-empty");

  std::shared_ptr<ExplicitLattice> lat;
  if (j.contains("lattice") && j.at("lattice").contains("covers")) {
    lat = std::make_shared<ExplicitLattice>(lsets, parse_covers(j.at("lattice").at("covers"), lsets.size()));
  } else {
    lat = std::make_shared<ExplicitLattice>(lsets);
    if (!lat->order_is_lattice())
      throw ParseError("lset inclusion order is not a lattice: " + lat->structure_note());
  }

  const Json& ranks_json = j.at("ranks");
  if (!ranks_json.is_array() || ranks_json.size() != u_sets.size())
    throw ParseError("ranks must hold one array per U member");
  auto ranks = std::make_shared<std::vector<std::vector<Rational>>>();
  for (const auto& per_u : ranks_json) {
    if (per_u.size() != lsets.size()) throw ParseError("ranks row length mismatch");
    std::vector<Rational> r;
    for (const auto& v : per_u) r.push_back(parse_rational(v));
    ranks->push_back(std::move(r));
  }

  bool unit_coeffs = true;
  auto coeff_tab = std::make_shared<std::vector<std::vector<std::map<ElementId, Rational>>>>();
  if (j.contains("coeffs") && j.at("coeffs").is_array()) {
    unit_coeffs = false;
    for (const auto& per_u : j.at("coeffs")) {
      std::vector<std::map<ElementId, Rational>> rows;
      for (const auto& row : per_u) {
        std::map<ElementId, Rational> coeff;
        for (auto it = row.begin(); it != row.end(); ++it)
          coeff[idx.at(it.key())] = parse_rational(it.value());
        rows.push_back(std::move(coeff));
      }
      coeff_tab->push_back(std::move(rows));
    }
  } else if (j.contains("coeffs") && j.at("coeffs") != Json("unit")) {
    throw ParseError("coeffs must be \"unit\" or per-U tables");
  }

  std::string orders = j.value("orders", std::string("incomparable"));
  auto shared_u = std::make_shared<std::vector<std::vector<ElementId>>>(u_sets);

  ProductSystem ps;
  ps.lattice = lat;
  ps.u_sets = u_sets;
  ps.rank = [lat, ranks](int u, const LatticeElement& s) { return (*ranks)[u][lat->index_of(s)]; };
  if (unit_coeffs) {
    ps.coeff = [shared_u](int u, const LatticeElement& s, ElementId e) {
      const auto& set = (*shared_u)[u];
      if (std::binary_search(set.begin(), set.end(), e) && s.contains(e)) return Rational(1);
      return Rational(0);
    };
  } else {
    ps.coeff = [lat, coeff_tab](int u, const LatticeElement& s, ElementId e) {
      const auto& row = (*coeff_tab)[u][lat->index_of(s)];
      auto it = row.find(e);
      return it == row.end() ? Rational(0) : it->second;
    };
  }
  if (orders == "incomparable") {
    ps.u_leq = [](int a, int b, const LatticeElement&) { return a == b; };
  } else if (orders == "inclusion") {
    ps.u_leq = [shared_u](int a, int b, const LatticeElement&) {
      const auto& sa = (*shared_u)[a];
      const auto& sb = (*shared_u)[b];
      return a == b || std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
    };
  } else {
    throw ParseError("unknown orders tag " + orders);
  }
  ps.costs = std::move(costs);
  inst.product = std::move(ps);
  return inst;
}

apps::ContraPolymatroidInstance parse_polymatroid_body(const Json& j,
                                                       std::vector<std::string>* names_out) {
  std::vector<std::string> names = parse_names(j.at("elements"), "elements");
  const int n = static_cast<int>(names.size());
  auto idx = name_index(names);
  apps::ContraPolymatroidInstance inst;
  inst.n = n;
  inst.costs = parse_costs(j.at("costs"), names);
  if (j.contains("rank_table")) {
    auto table = std::make_shared<std::map<std::vector<ElementId>, Rational>>();
    for (const auto& entry : j.at("rank_table")) {
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError("rank_table entries are [subset, value] pairs");
      (*table)[parse_support(entry[0], idx)] = parse_rational(entry[1]);
    }
    if (table->size() != (std::size_t{1} << n))
      throw ParseError("rank_table must list every subset once");
    inst.rank = [table](const std::vector<ElementId>& s) {
      auto it = table->find(s);
      if (it == table->end()) throw ParseError("rank_table lookup failed");
      return it->second;
    };
  } else if (j.contains("cardinality_fn")) {
    const Json& fn = j.at("cardinality_fn");
    auto g = std::make_shared<std::vector<Rational>>();
    for (const auto& v : fn.at("g")) g->push_back(parse_rational(v));
    if (static_cast<int>(g->size()) != n + 1) throw ParseError("cardinality_fn g needs n + 1 values");
    Rational t = fn.contains("t") ? parse_rational(fn.at("t")) : Rational(0);
    inst.rank = [g, t](const std::vector<ElementId>& s) { return (*g)[s.size()] - t; };
  } else {
    throw ParseError("polymatroid needs rank_table or cardinality_fn");
  }
  if (names_out) *names_out = std::move(names);
  return inst;
}

Instance parse_polymatroid(const Json& j) {
  Instance inst;
  inst.format = "polymatroid-v1";
  inst.adapter = "polymatroid";
  apps::ContraPolymatroidInstance body = parse_polymatroid_body(j, &inst.element_names);
  if (j.contains("cardinality_fn")) {
    const Json& fn = j.at("cardinality_fn");
    std::vector<Rational> g;
    for (const auto& v : fn.at("g")) g.push_back(parse_rational(v));
    Rational t = fn.contains("t") ? parse_rational(fn.at("t")) : Rational(0);
    inst.plain = apps::build_cardinality_system(body.n, std::move(g), t, body.costs);
  } else {
    inst.plain = apps::build_contra_polymatroid(body, body.n <= 12);
  }
  return inst;
}

Instance parse_intersection(const Json& j) {
  Instance inst;
  inst.format = "intersection-v1";
  inst.adapter = "intersection";
  std::vector<apps::ContraPolymatroidInstance> bodies;
  const Json& systems = j.at("systems");
  if (!systems.is_array() || systems.empty()) throw ParseError("systems must be non-empty");
  for (const auto& sys : systems) {
    std::vector<std::string> names;
    bodies.push_back(parse_polymatroid_body(sys, &names));
    if (inst.element_names.empty())
      inst.element_names = names;
    else if (inst.element_names != names)
      throw ParseError("intersection systems must share the element list");
  }
  inst.product = apps::build_intersection(bodies, bodies.front().n <= 12);
  return inst;
}

Instance parse_knapsack(const Json& j) {
  Instance inst;
  inst.format = "knapsack-v1";
  inst.adapter = "knapsack";
  apps::KnapsackInstance body;
  body.demand = parse_rational(j.at("D"));
  std::vector<std::string> item_names;
  for (const auto& item : j.at("items")) {
    apps::KnapsackItem ki;
    ki.weight = parse_rational(item.at("u"));
    ki.cost = parse_rational(item.at("c"));
    ki.multiplicity = item.value("d", 1);
    if (item.contains("cost_marginals"))
      for (const auto& v : item.at("cost_marginals")) ki.cost_marginals.push_back(parse_rational(v));
    if (item.contains("weight_marginals"))
      for (const auto& v : item.at("weight_marginals"))
        ki.weight_marginals.push_back(parse_rational(v));
    item_names.push_back(item.value("name", "i" + std::to_string(item_names.size())));
    body.items.push_back(std::move(ki));
  }
  apps::KnapsackBuild build = apps::build_knapsack_cover(body);
  std::map<int, int> total_copies;
  for (const auto& [item, copy] : build.copy_of)
    total_copies[item] = std::max(total_copies[item], copy);
  for (const auto& [item, copy] : build.copy_of)
    inst.element_names.push_back(total_copies[item] > 1
                                     ? item_names[item] + "#" + std::to_string(copy)
                                     : item_names[item]);
  inst.plain = std::move(build.system);
  return inst;
}

Instance parse_subsetcover(const Json& j) {
  Instance inst;
  inst.format = "subsetcover-v1";
  inst.adapter = "subsetcover";
  std::vector<std::string> ground = parse_names(j.at("ground"), "ground");
  auto gidx = name_index(ground);
  apps::SubsetCoverInstance body;
  body.ground_size = static_cast<int>(ground.size());
  for (const auto& set : j.at("sets")) {
    std::vector<int> members;
    for (const auto& m : set.at("members")) members.push_back(gidx.at(m.get<std::string>()));
    std::sort(members.begin(), members.end());
    body.sets.push_back(std::move(members));
    body.costs.push_back(parse_rational(set.at("cost")));
    inst.element_names.push_back(set.value("name", "s" + std::to_string(inst.element_names.size())));
  }
  inst.plain = apps::build_subset_cover(body);
  return inst;
}

Instance parse_flowcover(const Json& j) {
  Instance inst;
  inst.format = "flowcover-v1";
  inst.adapter = "flowcover";
  std::map<std::string, int> edge_idx;
  std::vector<std::string> edge_names;
  apps::FlowCoverInstance body;
  for (const auto& path : j.at("paths")) {
    std::vector<int> p;
    for (const auto& e : path) {
      std::string name = e.get<std::string>();
      auto [it, fresh] = edge_idx.emplace(name, static_cast<int>(edge_names.size()));
      if (fresh) edge_names.push_back(name);
      p.push_back(it->second);
    }
    body.paths.push_back(std::move(p));
  }
  body.demands.assign(edge_names.size(), Rational(0));
  if (j.contains("demands"))
    for (auto it = j.at("demands").begin(); it != j.at("demands").end(); ++it) {
      auto eit = edge_idx.find(it.key());
      if (eit == edge_idx.end()) throw ParseError("demand for unknown edge " + it.key());
      body.demands[eit->second] = parse_rational(it.value());
    }
  for (const auto& cand : j.at("candidates")) {
    apps::FlowCoverInstance::Candidate c;
    c.path = cand.at("path_idx").get<int>();
    c.from = cand.at("from").get<int>();
    c.to = cand.at("to").get<int>();
    c.weight = parse_rational(cand.at("u"));
    c.cost = parse_rational(cand.at("c"));
    inst.element_names.push_back(
        cand.value("name", "c" + std::to_string(inst.element_names.size())));
    body.candidates.push_back(std::move(c));
  }
  inst.product = apps::build_flow_cover_lines(body).system;
  return inst;
}

Instance parse_multicut(const Json& j) {
  Instance inst;
  inst.format = "multicut-v1";
  inst.adapter = "multicut";
  std::map<std::string, int> vidx;
  auto vertex = [&vidx](const Json& v) {
    std::string name = v.is_string() ? v.get<std::string>() : v.dump();
    return vidx.emplace(name, static_cast<int>(vidx.size())).first->second;
  };
  apps::MulticutInstance body;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("edges entries are [a, b, cost]");
    apps::MulticutInstance::Edge edge;
    edge.a = vertex(e[0]);
    edge.b = vertex(e[1]);
    edge.cost = parse_rational(e[2]);
    inst.element_names.push_back("e" + std::to_string(body.edges.size()));
    body.edges.push_back(std::move(edge));
  }
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("pairs entries are [s, t]");
    body.pairs.emplace_back(vertex(p[0]), vertex(p[1]));
  }
  body.num_vertices = static_cast<int>(vidx.size());
  body.root = j.contains("root") ? vertex(j.at("root")) : 0;
  inst.product = apps::build_multicut_tree(body).system;
  return inst;
}

Instance parse_precknap(const Json& j) {
  Instance inst;
  inst.format = "precknap-v1";
  inst.adapter = "precknap";
  apps::PrecedenceKnapsackInstance body;
  body.demand = parse_rational(j.at("D"));
  for (const auto& item : j.at("items")) {
    body.weights.push_back(parse_rational(item.at("u")));
    body.costs.push_back(parse_rational(item.at("c")));
    inst.element_names.push_back(item.value("name", "i" + std::to_string(inst.element_names.size())));
  }
  for (const auto& arc : j.at("arcs")) {
    if (!arc.is_array() || arc.size() != 2) throw ParseError("arcs entries are [i, j]");
    body.arcs.emplace_back(arc[0].get<int>(), arc[1].get<int>());
  }
  inst.product = apps::build_precedence_knapsack(body).system;
  return inst;
}

}  // namespace

Rational parse_rational(const Json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_number_unsigned()) return Rational(static_cast<long>(v.get<unsigned long long>()));
  throw ParseError("numbers must be integers or decimal strings, got " + v.dump());
}

Json rational_out(const Rational& r) { return Json(r.str()); }

Instance parse_instance(const Json& j) {
  if (!j.is_object() || !j.contains("format")) throw ParseError("instance needs a format field");
  std::string format = j.at("format").get<std::string>();
  try {
    if (format == "greedy-explicit-v1") return parse_greedy_explicit(j);
    if (format == "product-explicit-v1") return parse_product_explicit(j);
    if (format == "polymatroid-v1") return parse_polymatroid(j);
    if (format == "intersection-v1") return parse_intersection(j);
    if (format == "knapsack-v1") return parse_knapsack(j);
    if (format == "subsetcover-v1") return parse_subsetcover(j);
    if (format == "flowcover-v1") return parse_flowcover(j);
    if (format == "multicut-v1") return parse_multicut(j);
    if (format == "precknap-v1") return parse_precknap(j);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(format + ": " + ex.what());
  } catch (const std::out_of_range& ex) {
    throw ParseError(format + ": " + ex.what());
  }
  throw ParseError("unknown format " + format);
}

ExplicitLattice parse_lattice_fragment(const Json& j) {
  std::vector<std::vector<ElementId>> supports;
  for (const auto& el : j.at("elements")) {
    std::vector<ElementId> s;
    for (const auto& v : el) s.push_back(v.get<int>());
    supports.push_back(std::move(s));
  }
  if (j.contains("covers")) {
    auto covers = parse_covers(j.at("covers"), supports.size());
    return ExplicitLattice(std::move(supports), covers);
  }
  return ExplicitLattice(std::move(supports));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw ParseError("invalid JSON in " + path + ": " + ex.what());
  }
  return parse_instance(j);
}

Json run_result_json(const RunResult& run, const TruncatedSystem& tr,
                     const std::optional<Certificate>& cert,
                     const std::vector<std::string>& names) {
  Json out;
  Json x = Json::object();
  for (ElementId e = 0; e < static_cast<ElementId>(run.x.size()); ++e)
    x[name_of(names, e)] = run.x[e];
  out["x"] = std::move(x);
  Json y = Json::array();
  for (const auto& [row, value] : run.y)
    y.push_back({{"row_support", support_names(row.support(), names)},
                 {"value", rational_out(value)}});
  out["y"] = std::move(y);
  Json chain = Json::array();
  for (std::size_t i = 0; i < run.chain.rows.size(); ++i) {
    Json link;
    link["row_support"] = support_names(run.chain.rows[i].support(), names);
    link["rank"] = rational_out(tr.rank(run.chain.rows[i]));
    if (i < run.chain.length()) {
      link["bottleneck"] = name_of(names, run.chain.bottlenecks[i]);
      link["epsilon"] = rational_out(run.chain.raises[i]);
    } else {
      link["bottleneck"] = nullptr;
      link["epsilon"] = nullptr;
    }
    chain.push_back(std::move(link));
  }
  out["chain"] = std::move(chain);
  out["dual_value"] = rational_out(run.dual_value);
  out["primal_cost"] = rational_out(run.primal_cost);
  if (cert) {
    out["certificate"] = {{"rho", rational_out(cert->rho)},
                          {"delta_eff", rational_out(cert->delta_effective)},
                          {"b", cert->b},
                          {"a", cert->a},
                          {"guarantee", rational_out(cert->guarantee)}};
  }
  return out;
}

Json product_run_json(const ProductRunResult& run, const ProductTruncation& tr,
                      const std::optional<WitnessReport>& witness,
                      const std::optional<ProductCertificate>& cert,
                      const std::vector<std::string>& names) {
  Json out;
  Json x = Json::object();
  for (ElementId e = 0; e < static_cast<ElementId>(run.x.size()); ++e)
    x[name_of(names, e)] = run.x[e];
  out["x"] = std::move(x);
  Json y = Json::array();
  for (const auto& [u, row, value] : run.y)
    y.push_back({{"u_index", u},
                 {"row_support", support_names(row.support(), names)},
                 {"value", rational_out(value)}});
  out["y"] = std::move(y);
  Json chain = Json::array();
  for (const auto& it : run.iterations) {
    Json link;
    link["row_support"] = support_names(it.s.support(), names);
    link["rank"] = rational_out(it.rank_value);
    link["raised"] = it.raised;
    link["bottleneck"] = name_of(names, it.bottleneck);
    link["epsilon"] = rational_out(it.epsilon);
    chain.push_back(std::move(link));
  }
  {
    Json link;
    link["row_support"] = support_names(run.final_row.support(), names);
    // Rank of the STOP row: the best rank any family member attains there.
    bool first = true;
    Rational stop_rank(0);
    for (int u = 0; u < tr.base().u_count(); ++u) {
      Rational r = tr.rank(u, run.final_row);
      if (first || r > stop_rank) stop_rank = r;
      first = false;
    }
    if (!first) link["rank"] = rational_out(stop_rank);
    link["bottleneck"] = nullptr;
    link["epsilon"] = nullptr;
    chain.push_back(std::move(link));
  }
  out["chain"] = std::move(chain);
  out["dual_value"] = rational_out(run.dual_value);
  out["primal_cost"] = rational_out(run.primal_cost);
  out["primal_cost_pre_cleanup"] = rational_out(run.primal_cost_pre_cleanup);
  Json xpre = Json::object();
  for (ElementId e = 0; e < static_cast<ElementId>(run.x_pre_cleanup.size()); ++e)
    xpre[name_of(names, e)] = run.x_pre_cleanup[e];
  out["x_pre_cleanup"] = std::move(xpre);
  if (cert) {
    out["certificate"] = {{"rho", rational_out(cert->rho)},
                          {"delta_eff", rational_out(cert->delta_effective)},
                          {"b", cert->b},
                          {"a", cert->a},
                          {"k_observed", rational_out(cert->k_observed)},
                          {"guarantee", rational_out(cert->guarantee)}};
  }
  if (witness) {
    Json w;
    w["k_observed"] = rational_out(witness->k_observed);
    w["all_covers_found"] = witness->all_covers_found;
    w["binary_truncation"] = witness->truncation_binary;
    Json per_element = Json::array();
    for (const auto& [e, found] : witness->witnesses) {
      Json entry;
      entry["element"] = name_of(names, e);
      if (found) {
        entry["u_index"] = found->u;
        entry["row_support"] = support_names(found->s.support(), names);
      } else {
        entry["witness"] = nullptr;
      }
      per_element.push_back(std::move(entry));
    }
    w["witnesses"] = std::move(per_element);
    Json iters = Json::array();
    for (const auto& diag : witness->iterations)
      iters.push_back({{"iteration", diag.iteration},
                       {"cover_size", diag.cover.size()},
                       {"found", diag.cover_found}});
    w["iterations"] = std::move(iters);
    out["witness"] = std::move(w);
  }
  return out;
}

Json oracle_json(const OracleResult& result, const std::vector<std::string>& names) {
  Json out;
  out["feasible"] = result.feasible;
  if (result.feasible) {
    out["opt_value"] = rational_out(result.opt_value);
    Json argmin = Json::object();
    for (ElementId e = 0; e < static_cast<ElementId>(result.argmin.size()); ++e)
      argmin[name_of(names, e)] = result.argmin[e];
    out["argmin"] = std::move(argmin);
  } else {
    out["opt_value"] = nullptr;
  }
  out["nodes_enumerated"] = result.nodes_enumerated;
  return out;
}

Json validation_json(const ValidationReport& report, const std::vector<std::string>& names) {
  Json out;
  out["ok"] = report.ok();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["property"] = v.property;
    item["message"] = v.message;
    Json rows = Json::array();
    for (const auto& row : v.rows) rows.push_back(support_names(row, names));
    item["rows"] = std::move(rows);
    if (v.element >= 0) item["element"] = name_of(names, v.element);
    Json values = Json::array();
    for (const auto& val : v.values) values.push_back(rational_out(val));
    item["values"] = std::move(values);
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out;
}

Json emit_explicit_system(const std::vector<std::string>& names,
                          const std::vector<Rational>& costs,
                          const std::vector<ExplicitRowSpec>& rows) {
  Json out;
  out["format"] = "greedy-explicit-v1";
  out["elements"] = names;
  Json cost_obj = Json::object();
  for (std::size_t e = 0; e < names.size(); ++e) cost_obj[names[e]] = rational_out(costs[e]);
  out["costs"] = std::move(cost_obj);
  Json row_arr = Json::array();
  for (const auto& row : rows) {
    Json r;
    Json support = Json::array();
    Json coeffs = Json::object();
    for (std::size_t k = 0; k < row.support.size(); ++k) {
      support.push_back(names[row.support[k]]);
      coeffs[names[row.support[k]]] = rational_out(row.coeffs[k]);
    }
    r["support"] = std::move(support);
    r["coeffs"] = std::move(coeffs);
    r["rank"] = rational_out(row.rank);
    row_arr.push_back(std::move(r));
  }
  out["rows"] = std::move(row_arr);
  return out;
}

Json emit_product_explicit(const std::vector<std::string>& names,
                           const std::vector<Rational>& costs,
                           const std::vector<std::vector<int>>& u_sets,
                           const std::string& orders,
                           const std::vector<std::vector<int>>& lsets,
                           const std::vector<std::vector<Rational>>& ranks) {
  Json out;
  out["format"] = "product-explicit-v1";
  out["elements"] = names;
  Json cost_obj = Json::object();
  for (std::size_t e = 0; e < names.size(); ++e) cost_obj[names[e]] = rational_out(costs[e]);
  out["costs"] = std::move(cost_obj);
  Json ufam = Json::array();
  for (const auto& u : u_sets) {
    Json arr = Json::array();
    for (int e : u) arr.push_back(names[e]);
    ufam.push_back(std::move(arr));
  }
  out["ufamily"] = std::move(ufam);
  out["orders"] = orders;
  Json ls = Json::array();
  for (const auto& s : lsets) {
    Json arr = Json::array();
    for (int e : s) arr.push_back(names[e]);
    ls.push_back(std::move(arr));
  }
  out["lsets"] = std::move(ls);
  out["coeffs"] = "unit";
  Json rk = Json::array();
  for (const auto& per_u : ranks) {
    Json arr = Json::array();
    for (const auto& r : per_u) arr.push_back(rational_out(r));
    rk.push_back(std::move(arr));
  }
  out["ranks"] = std::move(rk);
  return out;
}

Json emit_knapsack(const apps::KnapsackInstance& inst) {
  Json out;
  out["format"] = "knapsack-v1";
  Json items = Json::array();
  for (const auto& item : inst.items) {
    Json entry;
    entry["u"] = rational_out(item.weight);
    entry["c"] = rational_out(item.cost);
    entry["d"] = item.multiplicity;
    if (!item.cost_marginals.empty()) {
      Json cm = Json::array();
      for (const auto& v : item.cost_marginals) cm.push_back(rational_out(v));
      entry["cost_marginals"] = std::move(cm);
      Json um = Json::array();
      for (const auto& v : item.weight_marginals) um.push_back(rational_out(v));
      entry["weight_marginals"] = std::move(um);
    }
    items.push_back(std::move(entry));
  }
  out["items"] = std::move(items);
  out["D"] = rational_out(inst.demand);
  return out;
}

Json emit_subsetcover(const apps::SubsetCoverInstance& inst) {
  Json out;
  out["format"] = "subsetcover-v1";
  Json ground = Json::array();
  for (int g = 0; g < inst.ground_size; ++g) ground.push_back("g" + std::to_string(g));
  out["ground"] = std::move(ground);
  Json sets = Json::array();
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    Json members = Json::array();
    for (int g : inst.sets[i]) members.push_back("g" + std::to_string(g));
    sets.push_back({{"members", std::move(members)}, {"cost", rational_out(inst.costs[i])}});
  }
  out["sets"] = std::move(sets);
  return out;
}

Json emit_flowcover(const apps::FlowCoverInstance& inst) {
  Json out;
  out["format"] = "flowcover-v1";
  Json paths = Json::array();
  for (const auto& path : inst.paths) {
    Json p = Json::array();
    for (int e : path) p.push_back("f" + std::to_string(e));
    paths.push_back(std::move(p));
  }
  out["paths"] = std::move(paths);
  Json demands = Json::object();
  for (std::size_t e = 0; e < inst.demands.size(); ++e)
    demands["f" + std::to_string(e)] = rational_out(inst.demands[e]);
  out["demands"] = std::move(demands);
  Json cands = Json::array();
  for (const auto& c : inst.candidates)
    cands.push_back({{"path_idx", c.path},
                     {"from", c.from},
                     {"to", c.to},
                     {"u", rational_out(c.weight)},
                     {"c", rational_out(c.cost)}});
  out["candidates"] = std::move(cands);
  return out;
}

Json emit_multicut(const apps::MulticutInstance& inst) {
  Json out;
  out["format"] = "multicut-v1";
  auto vname = [](int v) { return "v" + std::to_string(v); };
  Json edges = Json::array();
  for (const auto& e : inst.edges)
    edges.push_back(Json::array({vname(e.a), vname(e.b), rational_out(e.cost)}));
  out["edges"] = std::move(edges);
  Json pairs = Json::array();
  for (auto [s, t] : inst.pairs) pairs.push_back(Json::array({vname(s), vname(t)}));
  out["pairs"] = std::move(pairs);
  out["root"] = vname(inst.root);
  return out;
}

Json emit_precknap(const apps::PrecedenceKnapsackInstance& inst) {
  Json out;
  out["format"] = "precknap-v1";
  Json items = Json::array();
  for (std::size_t i = 0; i < inst.weights.size(); ++i)
    items.push_back({{"u", rational_out(inst.weights[i])}, {"c", rational_out(inst.costs[i])}});
  out["items"] = std::move(items);
  Json arcs = Json::array();
  for (auto [a, b] : inst.arcs) arcs.push_back(Json::array({a, b}));
  out["arcs"] = std::move(arcs);
  out["D"] = rational_out(inst.demand);
  return out;
}

Json emit_polymatroid_cardinality(int n, const std::vector<Rational>& g, const Rational& shift,
                                  const std::vector<Rational>& costs) {
  Json out;
  out["format"] = "polymatroid-v1";
  Json elements = Json::array();
  for (int e = 0; e < n; ++e) elements.push_back("e" + std::to_string(e));
  out["elements"] = std::move(elements);
  Json fn;
  Json garr = Json::array();
  for (const auto& v : g) garr.push_back(rational_out(v));
  fn["g"] = std::move(garr);
  fn["t"] = rational_out(shift);
  out["cardinality_fn"] = std::move(fn);
  Json cost_obj = Json::object();
  for (int e = 0; e < n; ++e) cost_obj["e" + std::to_string(e)] = rational_out(costs[e]);
  out["costs"] = std::move(cost_obj);
  return out;
}

}  // namespace pdcover::io
