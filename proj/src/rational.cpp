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

#include "pdcover/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace pdcover {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in " + text);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    return Rational(mpq_class(mpz_class(text)));
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0 || digits.empty()) {
    throw std::invalid_argument("Rational: malformed decimal " + text);
  }
  mpz_class num(digits);
  mpz_class den(1);
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

long long Rational::ceil_to_int() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("Rational: ceil does not fit a long");
  return q.get_si();
}

long long Rational::floor_to_int() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("Rational: floor does not fit a long");
  return q.get_si();
}

std::string Rational::str() const {
  mpz_class den = v_.get_den();
  if (den == 1) return v_.get_num().get_str();
  // Split off factors of 2 and 5; a finite decimal exists iff nothing remains.
  mpz_class rest = den;
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) { rest /= 2; ++twos; }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) { rest /= 5; ++fives; }
  if (rest != 1) return v_.get_num().get_str() + "/" + den.get_str();
  unsigned digits = twos > fives ? twos : fives;
  mpz_class scale(1);
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  mpz_class scaled = v_.get_num() * (scale / den);
  bool neg = scaled < 0;
  mpz_class mag = neg ? mpz_class(-scaled) : scaled;
  std::string s = mag.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return (neg ? "-" : "") + s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pdcover
