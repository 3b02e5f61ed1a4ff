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

#include <random>

#include "doctest.h"
#include "sspoly/drinfeld.hpp"
#include "sspoly/error.hpp"
#include "test_util.hpp"

using namespace sspoly;
using sspoly::testing::random_nonzero;
using sspoly::testing::random_poly;
using sspoly::testing::tower_for;

TEST_CASE("phi_of basics") {
  auto t = FieldTower::build(2, {1, 1});
  const FiniteField& mid = t->mid();
  // lambda = 1: phi_T = 1 + 0 tau + tau^2.
  auto dm = normal_form(t, mid.one());
  const auto phi_T = dm.phi_of(Poly::variable(t->base()));
  CHECK(phi_T == dm.phi_T());
  CHECK(phi_T == TwistedPoly<Fe>(mid.zero(), {mid.one(), mid.zero(), mid.one()}));
  const auto phi_p = dm.phi_p();
  CHECK(phi_p == TwistedPoly<Fe>::monomial(mid.one(), 2));
  CHECK(dm.is_supersingular());

  // Over F_4 with lambda outside F_2.
  const FiniteField& top = t->top();
  const Fe w = top.from_index(2);
  auto dm2 = normal_form(t, w);
  CHECK(!dm2.is_supersingular());
  CHECK(dm2.H() == top.one() + w);
  // j = (1 + w)^3 / w = w^2.
  CHECK(dm2.j_invariant() == w * w);
  CHECK_THROWS_AS(dm.phi_of(Poly::variable(mid)), Error);
}

TEST_CASE("explicit small-degree coefficients") {
  std::mt19937_64 rng(21);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    auto t2 = tower_for(q, 2);
    auto t3 = tower_for(q, 3);
    for (int it = 0; it < 5; ++it) {
      const Fe a1 = t2->mid().random(rng), a2 = random_nonzero(t2->mid(), rng);
      DrinfeldModule<Fe> dm(t2, a1, a2);
      CHECK(dm.H() == a1.frob(1) * a1 - t2->bracket(1) * a2);

      const Fe b1 = t3->top().random(rng), b2 = random_nonzero(t3->top(), rng);
      DrinfeldModule<Fe> dm3(t3, b1, b2);
      const Fe br1 = t3->top().embed(t3->bracket(1)), br2 = t3->top().embed(t3->bracket(2));
      CHECK(dm3.H() == b1.frob(2) * b1.frob(1) * b1 - br1 * b1.frob(2) * b2 - br2 * b1 * b2.frob(1));
      CHECK(dm3.j_invariant() == b1.pow(BigInt(q + 1)) / b2);
    }
  }
}

TEST_CASE("d = 1: H equals A1") {
  std::mt19937_64 rng(22);
  auto t = tower_for(5, 1);
  for (int it = 0; it < 10; ++it) {
    const Fe a1 = t->top().random(rng), a2 = random_nonzero(t->top(), rng);
    DrinfeldModule<Fe> dm(t, a1, a2);
    auto g = dm.pp_coeffs();
    CHECK(g[0].is_zero());
    CHECK(g[1] == a1);
    CHECK(dm.is_supersingular() == a1.is_zero());
  }
}

TEST_CASE("partition formula for c(n; m) matches twisted multiplication") {
  std::mt19937_64 rng(23);
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {4, 2}, {2, 4}, {5, 1}}) {
    auto t = tower_for(q, d);
    for (const FiniteField* f : {&t->mid(), &t->top()}) {
      const Fe a1 = f->random(rng), a2 = random_nonzero(*f, rng);
      DrinfeldModule<Fe> dm(t, a1, a2);
      const auto powers = dm.phi_T_powers(d);
      for (unsigned m = 0; m <= d; ++m) {
        for (int n = -1; n <= static_cast<int>(2 * m + 1); ++n) {
          const Fe expect = n < 0 ? f->zero() : powers[m].coeff(static_cast<std::size_t>(n));
          CHECK(dm.c_coeff(n, m) == expect);
        }
      }
      CHECK(dm.c_coeff(0, 3) == f->embed(t->alpha()).pow(BigInt(3)));
      CHECK(dm.c_coeff(2, 1) == a2);
      CHECK(dm.c_coeff(3, 1).is_zero());
    }
  }
}

TEST_CASE("phi is a ring homomorphism") {
  std::mt19937_64 rng(24);
  auto t = tower_for(3, 2);
  const FiniteField& top = t->top();
  DrinfeldModule<Fe> dm(t, top.random(rng), random_nonzero(top, rng));
  for (int it = 0; it < 10; ++it) {
    const Poly a = random_poly(t->base(), 3, rng), b = random_poly(t->base(), 3, rng);
    const auto pa = dm.phi_of(a), pb = dm.phi_of(b);
    CHECK(pa * pb == dm.phi_of(a * b));
    CHECK(pb * pa == dm.phi_of(a * b));
    CHECK(dm.phi_of(a + b) == pa + pb);
    if (!a.is_zero()) {
      CHECK(pa.coeff(0) == top.embed(a.eval(t->alpha())));
      CHECK(pa.degree() == Degree(2 * a.degree().value()));
    }
  }
}

TEST_CASE("commutation recursion and low-coefficient vanishing") {
  std::mt19937_64 rng(25);
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 3}, {4, 2}, {5, 2}, {2, 5}}) {
    auto t = tower_for(q, d);
    for (int it = 0; it < 3; ++it) {
      DrinfeldModule<Fe> dm(t, t->top().random(rng), random_nonzero(t->top(), rng));
      CHECK_NOTHROW(dm.pp_coeffs());
      CHECK(dm.commutation_recursion_holds());
    }
    auto sym = symbolic_normal_form(t);
    CHECK(sym.commutation_recursion_holds());
  }
}

TEST_CASE("symbolic family: top coefficient and divisibility") {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {3, 1}}) {
    auto t = tower_for(q, d);
    auto sym = symbolic_normal_form(t);
    const auto g = sym.pp_coeffs();
    const BigInt e = (ipow(BigInt(q), 2 * d) - 1) / (BigInt(q) * q - 1);
    CHECK(g[2 * d] == Poly::monomial(t->mid().one(), static_cast<std::size_t>(e)));
    for (unsigned i = d; i < 2 * d; ++i) CHECK(divmod(g[i], g[d]).second.is_zero());
    CHECK_THROWS_AS(sym.is_supersingular(), Error);
    try {
      (void)sym.is_supersingular();
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::kSymbolicCoefficients);
    }
  }
}

TEST_CASE("A2 must be nonzero and in the same ring as A1") {
  auto t = tower_for(3, 2);
  CHECK_THROWS_AS(DrinfeldModule<Fe>(t, t->mid().one(), t->mid().zero()), Error);
  CHECK_THROWS_AS(DrinfeldModule<Fe>(t, t->mid().one(), t->top().one()), Error);
  // Coefficients below F_{q^d} cannot hold alpha.
  auto t2 = tower_for(3, 2);
  CHECK_THROWS_AS(DrinfeldModule<Fe>(t2, t2->base().one(), t2->base().one()), Error);
}
