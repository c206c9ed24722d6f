//------------------------------------------------------------------------------
//
//   Copyright 2026 the bidmatch authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <doctest.h>

#include <random>

#include "market/rational.hpp"

using market::Ceiling;
using market::Rat;
using market::Utility;

TEST_CASE("rationals stay canonically reduced") {
  Rat r(6, 4);
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);
  Rat neg(3, -6);
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);
  CHECK(Rat(0, 5).str() == "0");
  CHECK_THROWS_AS(Rat(1, 0), market::UsageError);
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rat::parse("7")->str() == "7");
  CHECK(Rat::parse("-7")->str() == "-7");
  CHECK(Rat::parse("10/4")->str() == "5/2");
  CHECK(Rat::parse("-10/4")->str() == "-5/2");
  CHECK(!Rat::parse("1.5"));
  CHECK(!Rat::parse("1/0"));
  CHECK(!Rat::parse(""));
  CHECK(!Rat::parse("a/b"));
}

TEST_CASE("exact arithmetic: (a+b)-b == a on random rationals") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    Rat a(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 40));
    Rat b(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 40));
    CHECK((a + b) - b == a);
    if (b != Rat(0)) CHECK((a * b) / b == a);
  }
}

TEST_CASE("ceiling: plus infinity beats every finite value") {
  Ceiling inf = Ceiling::infinity();
  Ceiling five = Ceiling::finite(Rat(5));
  CHECK(five < inf);
  CHECK(!(inf < inf));
  CHECK(Rat(1000000) < inf);
  CHECK(min(inf, five) == five);
  CHECK((inf - Rat(3)).is_infinite());
  CHECK((Rat(2) * inf).is_infinite());
  CHECK((Rat(2) * five).finite_value() == Rat(10));
}

TEST_CASE("utility: minus infinity loses to every finite value") {
  Utility bottom = Utility::minus_infinity();
  Utility zero = Utility::finite(Rat(0));
  CHECK(bottom < zero);
  CHECK(!(bottom < bottom));
  CHECK(zero >= Rat(0));
  CHECK(bottom < Rat(-1000000));
}
