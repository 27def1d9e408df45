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

#include <random>

#include "doctest.h"
#include "pdcover/rational.hpp"

using pdcover::Rational;

TEST_CASE("parsing decimals and fractions") {
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("-3.25") == Rational(-13, 4));
  CHECK(Rational::parse("5/2") == Rational(5, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rendering picks finite decimals when exact") {
  CHECK(Rational(5, 2).str() == "2.5");
  CHECK(Rational(-13, 4).str() == "-3.25");
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(1, 10).str() == "0.1");
  CHECK(Rational(2, 5).str() == "0.4");
  CHECK(Rational(0).str() == "0");
}

TEST_CASE("round trip through str") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 50) + 1;
    Rational r(num, den);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("exact arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((a + b + b + b + b).str() == "1");
  CHECK_THROWS(a / Rational(0));
}

TEST_CASE("ceil and floor") {
  CHECK(Rational(7, 2).ceil_to_int() == 4);
  CHECK(Rational(7, 2).floor_to_int() == 3);
  CHECK(Rational(-7, 2).ceil_to_int() == -3);
  CHECK(Rational(-7, 2).floor_to_int() == -4);
  CHECK(Rational(6).ceil_to_int() == 6);
  CHECK(Rational(0).positive_part() == Rational(0));
  CHECK(Rational(-2).positive_part() == Rational(0));
  CHECK(Rational(10).positive_part() == Rational(10));
}
