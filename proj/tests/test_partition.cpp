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

#include <functional>
#include <set>

#include "doctest.h"
#include "sspoly/error.hpp"
#include "sspoly/mpoly.hpp"
#include "sspoly/partition.hpp"
#include "test_util.hpp"

using namespace sspoly;
using sspoly::testing::tower_for;

namespace {

// h_n over the given variables by listing every exponent vector of total degree n.
MPolyZ h_direct(int n, const IndexSet& vars) {
  MPolyZ out;
  if (n < 0) return out;
  Monomial current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == vars.size()) {
      Monomial m = current;
      if (left > 0) m.emplace_back(vars[pos], left);
      out += MPolyZ::monomial(1, m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      if (k > 0) current.emplace_back(vars[pos], k);
      rec(pos + 1, left - k);
      if (k > 0) current.pop_back();
    }
  };
  if (vars.empty()) return n == 0 ? MPolyZ::constant(1) : out;
  rec(0, n);
  return out;
}

MPolyZ X(unsigned i) { return MPolyZ::variable(i); }

}  // namespace

TEST_CASE("mpoly arithmetic") {
  const MPolyZ a = X(0) + X(1);
  CHECK(a * a == X(0).pow(2) + BigInt(2) * X(0) * X(1) + X(1).pow(2));
  CHECK((a - a).is_zero());
  CHECK((BigInt(6) * a).reduce_mod(3).is_zero());
  CHECK((BigInt(-1) * X(2)).reduce_mod(5) == BigInt(4) * X(2));
  CHECK(a.pow(3).total_degree() == 3);
  CHECK((X(0) - X(1)).to_string() == "X0 - X1");
  CHECK(MPolyZ().to_string() == "0");
  CHECK(MPolyZ::monomial(3, {{1, 2}, {0, 1}, {1, 1}}) == BigInt(3) * X(0) * X(1).pow(3));
}

TEST_CASE("P(d) listings") {
  CHECK(enumerate_P(-1).empty());
  auto p0 = enumerate_P(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].S1.empty());
  CHECK(p0[0].S2.empty());
  auto p1 = enumerate_P(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].S1 == IndexSet{0});
  auto p2 = enumerate_P(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].S1 == IndexSet{0, 1});
  CHECK(p2[1].S1.empty());
  CHECK(p2[1].S2 == IndexSet{0});
  const std::vector<std::size_t> sizes{1, 2, 3, 5, 8};
  for (int d = 1; d <= 5; ++d) CHECK(enumerate_P(d).size() == sizes[d - 1]);
  CHECK_THROWS_AS(enumerate_P(kMaxEnumerateD + 1), Error);
}

TEST_CASE("P(d) structure") {
  for (int d = 1; d <= 12; ++d) {
    const auto pd = enumerate_P(d);
    CHECK(pd.size() == enumerate_P(d - 1).size() + enumerate_P(d - 2).size());
    std::set<std::pair<IndexSet, IndexSet>> distinct;
    for (const auto& pair : pd) {
      CHECK(is_partition_pair(pair));
      CHECK(pair.S1.size() + 2 * pair.S2.size() == static_cast<std::size_t>(d));
      distinct.emplace(pair.S1, pair.S2);
      for (std::uint64_t q : {2, 3, 7}) {
        CHECK(w_of(pair.S1, q) + w_of(pair.S2, q) + w_of(shift(pair.S2, 1), q) == geometric_sum(BigInt(q), d));
      }
    }
    CHECK(distinct.size() == pd.size());
  }
  CHECK(!is_partition_pair({{0, 1}, {0}, 3}));
  CHECK(!is_partition_pair({{0}, {}, 2}));
}

TEST_CASE("weights and bracket products") {
  CHECK(w_of({}, 3) == 0);
  CHECK(w_of({0, 1}, 3) == 4);
  CHECK(w_of({0, 1, 2, 3}, 2) == 15);
  auto t = tower_for(3, 2);
  CHECK(L_of({}, *t).is_one());
  CHECK(L_of({1}, *t) == -t->bracket(1));
  CHECK(L_of({1, 3}, *t) == t->bracket(1) * t->bracket(3));
}

TEST_CASE("elementary symmetric polynomials") {
  const std::vector<unsigned> v5{0, 1, 2, 3, 4};
  CHECK(elem_sym(0, v5) == MPolyZ::constant(1));
  CHECK(elem_sym(1, v5) == -(X(0) + X(1) + X(2) + X(3) + X(4)));
  const std::vector<unsigned> v2{0, 1};
  CHECK(elem_sym(2, v2) == X(0) * X(1));
  CHECK_THROWS_AS(elem_sym(3, v2), Error);
  // prod (Y - X_i) = sum_k s_k Y^{n-k}, checked at Y = X_5.
  MPolyZ lhs = MPolyZ::constant(1), rhs;
  for (unsigned i : v5) lhs *= X(5) - X(i);
  for (unsigned k = 0; k <= 5; ++k) rhs += elem_sym(k, v5) * X(5).pow(5 - k);
  CHECK(lhs == rhs);
}

TEST_CASE("s_d at the conjugates of alpha is mu_0") {
  for (std::uint64_t q : {2, 3, 4}) {
    for (unsigned d = 1; d <= 4; ++d) {
      auto t = tower_for(q, d);
      std::vector<unsigned> vars;
      std::vector<Fe> vals;
      for (unsigned i = 0; i < d; ++i) {
        vars.push_back(i);
        vals.push_back(t->alpha().frob(i));
      }
      for (unsigned i = 0; i <= d; ++i) {
        CHECK(elem_sym(d - i, vars).eval(vals) == t->mid().embed(t->ideal().mu[i]));
      }
    }
  }
}

TEST_CASE("complete homogeneous polynomials") {
  CHECK(h_complete(1, {0, 1, 3, 5}) == X(0) + X(1) + X(3) + X(5));
  CHECK(h_complete(0, {}) == MPolyZ::constant(1));
  CHECK(h_complete(2, {}).is_zero());
  CHECK(h_complete(-2, {0, 1}).is_zero());
  for (const IndexSet& s : {IndexSet{0}, IndexSet{0, 2}, IndexSet{1, 2, 4}, IndexSet{0, 1, 2, 3, 5}}) {
    for (int n = -1; n <= 4; ++n) CHECK(h_complete(n, s) == h_direct(n, s));
  }
}

TEST_CASE("keylemma, worked instance") {
  const PartitionPair pair{{0}, {1, 3}, 5};
  const auto sides = keylemma_sides(pair);
  CHECK(sides.lhs == (X(5) - X(2)) * (X(5) - X(4)));
  CHECK(sides.rhs == sides.lhs);
}

TEST_CASE("keylemma for every pair up to d = 6") {
  std::size_t total = 0;
  for (int d = 0; d <= 6; ++d) {
    for (const auto& pair : enumerate_P(d)) {
      CHECK(keylemma_check(pair));
      if (pair.S2.empty()) CHECK(keylemma_sides(pair).lhs == MPolyZ::constant(1));
      ++total;
    }
  }
  CHECK(total == 1 + 1 + 2 + 3 + 5 + 8 + 13);
  CHECK_THROWS_AS(keylemma_sides({{0}, {0}, 2}), Error);
}

TEST_CASE("keylemma specialisation mod p") {
  for (std::uint64_t q : {2, 3, 4}) {
    for (unsigned d = 1; d <= 5; ++d) {
      auto t = tower_for(q, d);
      for (const auto& pair : enumerate_P(static_cast<int>(d))) CHECK(bracket_identity_check(pair, *t));
    }
  }
  auto t2 = tower_for(3, 2);
  CHECK(bracket_identity_lhs(enumerate_P(2)[1], *t2) == -t2->bracket(1));
  auto t1 = tower_for(5, 1);
  CHECK(bracket_identity_lhs(enumerate_P(1)[0], *t1).is_one());
  CHECK_THROWS_AS(bracket_identity_lhs(enumerate_P(3)[0], *t2), Error);
}
