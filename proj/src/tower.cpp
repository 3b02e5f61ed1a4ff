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

#include "sspoly/tower.hpp"

#include "sspoly/error.hpp"

namespace sspoly {

BasePrimePower BasePrimePower::from_q(std::uint64_t q) {
  if (q < 2) fail(ErrorCode::kInvalidArgument, "q must be at least 2");
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) p = q;
  BasePrimePower out;
  out.p = static_cast<std::uint32_t>(p);
  out.q = q;
  for (std::uint64_t t = q; t > 1; t /= p) {
    if (t % p != 0) fail(ErrorCode::kInvalidArgument, std::to_string(q) + " is not a prime power");
    ++out.e;
  }
  if (p >= (1U << 31)) fail(ErrorCode::kInvalidArgument, "characteristic too large");
  return out;
}

Poly smallest_monic_irreducible(const FiniteField& field, std::size_t degree, bool nonzero_constant) {
  if (degree == 0) fail(ErrorCode::kInvalidArgument, "degree must be positive");
  const BigInt size = field.order();
  const BigInt limit = ipow(size, degree);
  for (BigInt n = 0; n < limit; ++n) {
    std::vector<Fe> coeffs;
    coeffs.reserve(degree + 1);
    BigInt rest = n;
    for (std::size_t i = 0; i < degree; ++i) {
      coeffs.push_back(field.from_index(BigInt(rest % size)));
      rest /= size;
    }
    if (nonzero_constant && coeffs[0].is_zero()) continue;
    coeffs.push_back(field.one());
    Poly f(field, std::move(coeffs));
    if (is_irreducible(f)) return f;
  }
  fail(ErrorCode::kInternal, "no irreducible polynomial found");
}

std::shared_ptr<const FiniteField> make_base_field(const BasePrimePower& q) {
  if (q.e == 1) return FiniteField::prime(q.p, Level::kBase);
  auto prime = FiniteField::prime(q.p, Level::kPrime);
  const Poly m = smallest_monic_irreducible(*prime, q.e, true);
  return FiniteField::extension(prime, m.coeffs(), Level::kBase, q.q);
}

Poly fq_poly_from_codes(const FiniteField& base, const std::vector<std::uint64_t>& codes) {
  std::vector<Fe> coeffs;
  coeffs.reserve(codes.size());
  for (auto c : codes) {
    if (BigInt(c) >= base.order()) {
      fail(ErrorCode::kInvalidArgument, "coefficient code " + std::to_string(c) + " is not an element of F_q");
    }
    coeffs.push_back(base.from_index(c));
  }
  return Poly(base, std::move(coeffs));
}

std::vector<std::uint64_t> fq_poly_codes(const Poly& f) {
  std::vector<std::uint64_t> out;
  for (const auto& c : f.coeffs()) out.push_back(static_cast<std::uint64_t>(f.field().index_of(c)));
  return out;
}

PrimeIdeal PrimeIdeal::validate(const Poly& p_of_T) {
  if (!p_of_T.valid() || p_of_T.is_zero() || p_of_T.degree() == Degree(0)) {
    fail(ErrorCode::kInvalidArgument, "p(T) must have positive degree");
  }
  if (!p_of_T.lead().is_one()) fail(ErrorCode::kNotMonic, "p(T) is not monic");
  const Fe one = p_of_T.field().one();
  if (p_of_T == Poly::monomial(one, 1)) fail(ErrorCode::kIdealIsT, "p(T) = T is excluded");
  if (!is_irreducible(p_of_T)) fail(ErrorCode::kNotIrreducible, "p(T) is reducible over F_q");
  PrimeIdeal out;
  out.p_of_T = p_of_T;
  out.d = static_cast<unsigned>(p_of_T.degree().value());
  out.mu = p_of_T.coeffs();
  return out;
}

std::shared_ptr<const FieldTower> FieldTower::build(std::uint64_t q, const std::vector<std::uint64_t>& p_codes) {
  const BasePrimePower pp = BasePrimePower::from_q(q);
  auto base = make_base_field(pp);
  return build(base, fq_poly_from_codes(*base, p_codes));
}

std::shared_ptr<const FieldTower> FieldTower::build(std::shared_ptr<const FiniteField> base, const Poly& p_of_T) {
  if (!base || base->level() != Level::kBase) fail(ErrorCode::kInvalidArgument, "expected the base field F_q");
  if (!p_of_T.valid() || &p_of_T.field() != base.get()) {
    fail(ErrorCode::kLevelMismatch, "p(T) must have coefficients in F_q");
  }
  std::shared_ptr<FieldTower> tower(new FieldTower());
  tower->q_ = BasePrimePower::from_q(static_cast<std::uint64_t>(base->order()));
  tower->ideal_ = PrimeIdeal::validate(p_of_T);
  tower->base_ = base;
  tower->mid_ = FiniteField::extension(base, p_of_T.coeffs(), Level::kMid, tower->q_.q);
  const Poly quad = smallest_monic_irreducible(*tower->mid_, 2, false);
  tower->top_ = FiniteField::extension(tower->mid_, quad.coeffs(), Level::kTop, tower->q_.q);
  tower->alpha_ = tower->mid_->generator();
  ensure(p_of_T.eval(tower->alpha_).is_zero(), "alpha is not a root of p(T)");
  return tower;
}

Fe FieldTower::bracket(std::uint64_t n) const { return alpha_.frob(n) - alpha_; }

BigInt FieldTower::ss_degree() const { return geometric_sum(BigInt(q_.q), ideal_.d); }

std::vector<std::uint64_t> auto_ideal_codes(std::uint64_t q, unsigned d) {
  const BasePrimePower pp = BasePrimePower::from_q(q);
  auto base = make_base_field(pp);
  return fq_poly_codes(smallest_monic_irreducible(*base, d, true));
}

}  // namespace sspoly
