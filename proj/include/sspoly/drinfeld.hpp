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

#ifndef SSPOLY_DRINFELD_HPP
#define SSPOLY_DRINFELD_HPP

#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

#include "sspoly/error.hpp"
#include "sspoly/field.hpp"
#include "sspoly/partition.hpp"
#include "sspoly/poly.hpp"
#include "sspoly/tower.hpp"
#include "sspoly/twisted.hpp"

namespace sspoly {

/// prod_{i in S} frob^i(a), i.e. a^{w(S)} without forming the exponent.
template <FrobeniusRing R>
R frob_weight_power(const R& a, const IndexSet& s) {
  R out = a.one();
  for (unsigned i : s) out = out * a.frob(i);
  return out;
}

/// Rank-2 Drinfeld module phi_T = alpha + A1 tau + A2 tau^2 over a ring R
/// containing F_{q^d}: a field level (Fe) or a polynomial ring over one (Poly).
template <FrobeniusRing R>
class DrinfeldModule {
 public:
  DrinfeldModule(std::shared_ptr<const FieldTower> tower, R a1, R a2)
      : tower_(std::move(tower)), a1_(std::move(a1)), a2_(std::move(a2)) {
    if (!a1_.same_ring(a2_)) fail(ErrorCode::kRingMismatch, "A1 and A2 lie in different rings");
    if (a2_.is_zero()) fail(ErrorCode::kInvalidArgument, "A2 must be nonzero");
    iota_t_ = lift_scalar(a2_, tower_->alpha());
  }

  const FieldTower& tower() const { return *tower_; }
  std::shared_ptr<const FieldTower> tower_ptr() const { return tower_; }
  const R& A1() const { return a1_; }
  const R& A2() const { return a2_; }
  /// iota(T) = alpha inside R.
  const R& iota_T() const { return iota_t_; }

  TwistedPoly<R> phi_T() const { return TwistedPoly<R>(a2_.zero(), {iota_t_, a1_, a2_}); }

  /// phi_{T^0}, ..., phi_{T^m}, each by one left multiplication with phi_T.
  std::vector<TwistedPoly<R>> phi_T_powers(unsigned m) const {
    std::vector<TwistedPoly<R>> out;
    out.push_back(TwistedPoly<R>::constant(a2_.one()));
    const TwistedPoly<R> t = phi_T();
    for (unsigned i = 1; i <= m; ++i) out.push_back(t * out.back());
    return out;
  }

  /// phi_a for a in F_q[T].
  TwistedPoly<R> phi_of(const Poly& a) const {
    if (!a.valid() || &a.field() != &tower_->base()) {
      fail(ErrorCode::kLevelMismatch, "phi_of expects a polynomial over F_q");
    }
    TwistedPoly<R> out(a2_.zero());
    if (a.is_zero()) return out;
    const auto powers = phi_T_powers(static_cast<unsigned>(a.degree().value()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs()[i].is_zero()) continue;
      out = out + lift_scalar(a2_, a.coeffs()[i]) * powers[i];
    }
    return out;
  }

  TwistedPoly<R> phi_p() const { return phi_of(tower_->ideal().p_of_T); }

  /// g_0, ..., g_{2d} of phi_{p(T)}. g_0 .. g_{d-1} must vanish.
  std::vector<R> pp_coeffs() const {
    const TwistedPoly<R> f = phi_p();
    const unsigned d = tower_->d();
    std::vector<R> g;
    for (unsigned i = 0; i <= 2 * d; ++i) g.push_back(f.coeff(i));
    for (unsigned i = 0; i < d; ++i) ensure(g[i].is_zero(), "low coefficient of phi_p does not vanish");
    return g;
  }

  /// g_d.
  R H() const { return pp_coeffs()[tower_->d()]; }

  /// Coefficient of tau^n in phi_{T^m} by the partition-sum formula.
  R c_coeff(int n, unsigned m) const {
    R acc = a2_.zero();
    if (n < 0 || n > 2 * static_cast<int>(m)) return acc;
    const auto un = static_cast<unsigned>(n);
    std::vector<Fe> x;
    for (unsigned i = 0; i <= un; ++i) x.push_back(tower_->alpha().frob(i));
    for (const auto& pair : enumerate_P(n)) {
      IndexSet sprime = pair.support();
      const int k = static_cast<int>(m) - static_cast<int>(sprime.size());
      sprime.push_back(un);
      const MPolyZ h = h_complete(k, sprime);
      if (h.is_zero()) continue;
      acc = acc + frob_weight_power(a1_, pair.S1) * frob_weight_power(a2_, pair.S2) * lift_scalar(a2_, h.eval(x));
    }
    return acc;
  }

  /// (alpha^{q^i} - alpha) g_i = g_{i-2}^{q^2} A2 - g_{i-2} A2^{q^{i-2}} + g_{i-1}^q A1 - g_{i-1} A1^{q^{i-1}}
  /// for 0 <= i <= 2d + 2, i.e. phi_T phi_p = phi_p phi_T coefficientwise.
  bool commutation_recursion_holds() const {
    const TwistedPoly<R> f = phi_p();
    const unsigned d = tower_->d();
    for (unsigned i = 0; i <= 2 * d + 2; ++i) {
      const R gi = f.coeff(i);
      R lhs = lift_scalar(a2_, tower_->bracket(i)) * gi;
      R rhs = a2_.zero();
      if (i >= 2) {
        const R g2 = f.coeff(i - 2);
        rhs = rhs + g2.frob(2) * a2_ - g2 * a2_.frob(i - 2);
      }
      if (i >= 1) {
        const R g1 = f.coeff(i - 1);
        rhs = rhs + g1.frob(1) * a1_ - g1 * a1_.frob(i - 1);
      }
      if (!(lhs == rhs)) return false;
    }
    return true;
  }

  /// g_d == 0. Only meaningful for numeric coefficients.
  bool is_supersingular() const {
    if constexpr (std::is_same_v<R, Fe>) {
      return H().is_zero();
    } else {
      fail(ErrorCode::kSymbolicCoefficients, "supersingularity needs numeric coefficients");
    }
  }

  /// A1^{q+1} / A2.
  R j_invariant() const {
    if constexpr (std::is_same_v<R, Fe>) {
      return a1_.frob(1) * a1_ / a2_;
    } else {
      fail(ErrorCode::kSymbolicCoefficients, "j-invariant needs numeric coefficients");
    }
  }

 private:
  std::shared_ptr<const FieldTower> tower_;
  R a1_;
  R a2_;
  R iota_t_;
};

/// phi_T = alpha + (alpha + lambda) tau + lambda tau^2 with lambda numeric.
inline DrinfeldModule<Fe> normal_form(std::shared_ptr<const FieldTower> tower, const Fe& lambda) {
  const Fe a = lambda.field().embed(tower->alpha());
  return DrinfeldModule<Fe>(std::move(tower), a + lambda, lambda);
}

/// The same family with lambda an indeterminate: coefficients in F_{q^d}[lambda].
inline DrinfeldModule<Poly> symbolic_normal_form(std::shared_ptr<const FieldTower> tower) {
  const FiniteField& mid = tower->mid();
  const Poly lambda = Poly::variable(mid);
  const Poly a1 = Poly::constant(tower->alpha()) + lambda;
  return DrinfeldModule<Poly>(std::move(tower), a1, lambda);
}

}  // namespace sspoly

#endif  // SSPOLY_DRINFELD_HPP
