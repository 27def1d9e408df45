# Copyright 2026 The pdcover Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

pdcover = pytest.importorskip("pdcover")


SQUARE = {
    "format": "polymatroid-v1",
    "elements": ["1", "2"],
    "rank_table": [[[], "0"], [["1"], "1"], [["2"], "1"], [["1", "2"], "4"]],
    "costs": {"1": "1", "2": "2"},
}


def as_fraction(text):
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(text)


def test_solve_square_polymatroid():
    result = pdcover.solve_dict(SQUARE)
    assert result["x"] == {"1": 3, "2": 1}
    assert as_fraction(result["primal_cost"]) == 5
    assert as_fraction(result["dual_value"]) == 5
    assert result["certificate"]["b"] == 1
    assert result["certificate"]["a"] == 0
    assert as_fraction(result["certificate"]["rho"]) == 1


def test_validate_flags_the_broken_system():
    broken = pdcover.generate("p2cex", 2)
    report = pdcover.validate_dict(broken)
    assert not report["ok"]
    assert report["violations"][0]["property"] == "P2"
    good = pdcover.validate_dict(SQUARE)
    assert good["ok"]


def test_forced_run_matches_the_counterexample():
    run = pdcover.solve_dict(pdcover.generate("p2cex", 2), certificate=False)
    assert run["x"] == {"1": 5, "2": 1}


def test_oracle_and_ratio():
    opt = pdcover.oracle_dict(SQUARE)
    assert opt["feasible"]
    assert as_fraction(opt["opt_value"]) == 5
    assert opt["argmin"] == {"1": 3, "2": 1}


def test_product_instance_roundtrip():
    kgap = pdcover.generate("kgap", 3)
    run = pdcover.solve_dict(kgap)
    assert as_fraction(run["dual_value"]) == 1
    assert as_fraction(run["primal_cost"]) == 3
    assert as_fraction(run["certificate"]["k_observed"]) == 3


def test_cleanup_flag():
    star = pdcover.generate("starcleanup", 4)
    kept = pdcover.solve_dict(star, cleanup=False, certificate=False)
    cleaned = pdcover.solve_dict(star, certificate=False)
    assert as_fraction(kept["primal_cost"]) == 10
    assert as_fraction(cleaned["primal_cost"]) == 4


def test_generate_is_deterministic():
    a = pdcover.generate("subsetcover", 4, seed=9)
    b = pdcover.generate("subsetcover", 4, seed=9)
    assert a == b
