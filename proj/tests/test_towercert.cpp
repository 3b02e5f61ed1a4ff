/*
   Copyright 2026 The sspoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <set>

#include "doctest.h"
#include "sspoly/error.hpp"
#include "sspoly/towercert.hpp"
#include "test_util.hpp"

using namespace sspoly;
using sspoly::testing::tower_for;

TEST_CASE("omega for q = 2, d = 1") {
  auto t = FieldTower::build(2, {1, 1});
  const auto ss = H_lambda(*t);
  const auto omega = omega_compute(*t, ss);
  const FiniteField& f4 = t->top();
  REQUIRE(omega.elements.size() == 2);
  for (const auto& s : omega.elements) CHECK((s * s + s + f4.one()).is_zero());

  SplittingSolver solver(*t);
  const Fe w = omega.elements[0];
  const auto sols = solver.step(omega, w);
  CHECK(sols.size() == 2);
  std::set<BigInt> got, want;
  for (const auto& b : sols) got.insert(f4.index_of(b));
  for (const auto& b : omega.elements) want.insert(f4.index_of(b));
  CHECK(got == want);
  try {
    solver.step(omega, f4.one());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotInOmega);
  }
  CHECK(covering_consistency_check(*t, ss, omega));
}

TEST_CASE("omega sizes and splitting") {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {4, 1}, {5, 1}, {2, 3}}) {
    auto t = tower_for(q, d);
    const auto ss = H_lambda(*t);
    const auto omega = omega_compute(*t, ss);
    CHECK(BigInt(omega.elements.size()) == BigInt(q) * t->ss_degree());
    CHECK(!omega.contains(-t->top().one()));
    SplittingSolver solver(*t);
    for (const auto& a : omega.elements) {
      const auto sols = solver.step(omega, a);
      CHECK(sols.size() == q);
      for (const auto& b : sols) CHECK(omega.contains(b));
    }
    CHECK(omega_expansion_check(*t, ss));
    CHECK(covering_consistency_check(*t, ss, omega));
  }
  auto t31 = tower_for(3, 1);
  CHECK(omega_compute(*t31, H_lambda(*t31)).elements.size() == 3);
  auto t = tower_for(3, 2);
  CHECK(omega_compute(*t, H_lambda(*t)).elements.size() == 12);
  CHECK_THROWS_AS(omega_compute(*t, H_lambda(*t), 10), Error);
}

TEST_CASE("omega expansion fails for a wrong polynomial") {
  auto t = tower_for(3, 2);
  auto ss = H_lambda(*t);
  ss.H += Poly::monomial(t->mid().one(), 1);
  CHECK(!omega_expansion_check(*t, ss));
}

TEST_CASE("genus values") {
  CHECK(genus_X0Tn(2, 0) == 0);
  CHECK(genus_X0Tn(2, 1) == 0);
  CHECK(genus_X0Tn(2, 2) == 0);
  CHECK(genus_X0Tn(2, 3) == 1);
  CHECK(genus_X0Tn(2, 4) == 3);
  CHECK(genus_X0Tn(2, 5) == 9);
  CHECK(genus_X0Tn(2, 14) == 8001);
  CHECK(genus_X0Tn(3, 3) == 2);
  CHECK(genus_X0Tn(3, 4) == 8);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned n = 0; n <= 30; ++n) {
      const BigInt g = genus_X0Tn(q, n);
      CHECK(g >= 0);
      CHECK((g >= 1) == (n >= 3));
    }
  }
}

TEST_CASE("ratio table") {
  const auto rows = ratio_table(2, 2, 12);
  REQUIRE(rows.size() == 12);
  CHECK(rows[7].N_lower == 512);
  CHECK(rows[7].genus == 465);
  CHECK(rows[7].ratio == BigRational(512, 465));
  CHECK(rows[7].ratio_decimal == "1.101075");
  CHECK(rows[9].ratio == BigRational(2048, 1953));
  CHECK(rows[11].ratio == BigRational(8192, 8001));
  CHECK(rows[11].ratio_decimal == "1.023872");
  CHECK(dv_bound(3, 2) == 8);
  CHECK_THROWS_AS(ratio_table(2, 2, 65), Error);
  CHECK(to_decimal(BigRational(-1, 3), 3) == "-0.333");
  CHECK(to_decimal(BigRational(5, 1), 0) == "5");
  CHECK(to_decimal(BigRational(1, 200), 2) == "0.00");
}

TEST_CASE("modular relation") {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) CHECK(modular_relation_check(q));
}
