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

#ifndef SSPOLY_SSFORMULA_HPP
#define SSPOLY_SSFORMULA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sspoly/drinfeld.hpp"
#include "sspoly/field.hpp"
#include "sspoly/partition.hpp"
#include "sspoly/poly.hpp"
#include "sspoly/tower.hpp"
#include "sspoly/twisted.hpp"

namespace sspoly {

/// One summand L(S2+1) A1^{w(S1)} A2^{w(S2)} of the explicit formula, kept
/// symbolic: sign (-1)^{|S2|}, bracket indices S2+1, and the q-power
/// exponents making up each weight.
struct FormulaTerm {
  int sign = 1;
  IndexSet brackets;
  IndexSet a1_powers;
  IndexSet a2_powers;
  friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

/// Terms of H^{(d)} in P(d) enumeration order.
std::vector<FormulaTerm> explicit_terms(int d);
/// E.g. "-[1]A1^{q^2}A2^{q}".
std::string format_term(const FormulaTerm& term);

/// sum over P(d) of L(S2+1) A1^{w(S1)} A2^{w(S2)}.
template <FrobeniusRing R>
R H_explicit(const FieldTower& tower, const R& a1, const R& a2) {
  if (!a1.same_ring(a2)) fail(ErrorCode::kRingMismatch, "A1 and A2 lie in different rings");
  R acc = a1.zero();
  for (const auto& pair : enumerate_P(static_cast<int>(tower.d()))) {
    const Fe l = L_of(shift(pair.S2, 1), tower);
    acc = acc + lift_scalar(a1, l) * frob_weight_power(a1, pair.S1) * frob_weight_power(a2, pair.S2);
  }
  return acc;
}

/// Which construction produced a supersingular polynomial.
enum class Route { kExplicit, kSymbolic, kRecursion, kClosedForm };
std::string_view route_name(Route route) noexcept;

/// H^{(d)}(lambda) in F_{q^d}[lambda] together with its provenance.
struct SsPolynomial {
  Poly H;
  Route provenance = Route::kExplicit;
};

/// Explicit formula with A1 = alpha + lambda, A2 = lambda.
SsPolynomial H_lambda(const FieldTower& tower);
/// g_d of phi_{p(T)} computed in F_{q^d}[lambda]{tau}.
SsPolynomial H_symbolic(std::shared_ptr<const FieldTower> tower);
/// (-1)^d alpha^{(q^d-1)/(q-1)} b(d), from b_recursive or b_closed_form.
SsPolynomial H_from_b(const FieldTower& tower, Route route);

/// b(n) at T = alpha via the three-term recursion; 1 at n = 0, 0 for n < 0.
Poly b_recursive(const FieldTower& tower, int n);

inline constexpr unsigned kDefaultSubsetCap = 16;
/// (-1)^n sum_{S subset N_<n} (lambda/alpha^q)^{w(S)} / m(S). Enumerates 2^n subsets.
Poly b_closed_form(const FieldTower& tower, int n, unsigned cap = kDefaultSubsetCap);

/// Data for the truncated period check. Odd q only.
struct PeriodContext {
  /// First element of F_{q^{2d}} in index order with delta != 0, delta^q = -delta.
  Fe delta;
  /// (-1)^d [d][d-1]...[1] in F_{q^d}; zero, since [d] = 0.
  Fe L_d;
  /// xi_n = [1]^{(q^n-1)/(q-1)} / ((-1)^n L_n) for 0 <= n < d.
  std::vector<Fe> xi;
};

PeriodContext make_period_context(const FieldTower& tower);

/// L_n = (-1)^n [n][n-1]...[1], L_0 = 1.
Fe L_n(const FieldTower& tower, unsigned n);
/// prod_{k=0}^{n-1} (1 - [k]/[k+1]).
Fe xi_product(const FieldTower& tower, unsigned n);

/// a(n) in F_{q^{2d}}[lambda] from the three-term recursion, for n < d.
Poly a_recursive(const FieldTower& tower, const PeriodContext& ctx, int n);
/// beta_j in F_{q^d}[lambda] (A1 = alpha + lambda, A2 = lambda).
Poly beta_coeff(const FieldTower& tower, int j);
/// alpha delta sum_{j<=n} (-1)^j beta_j, in F_{q^{2d}}[lambda].
Poly a_via_beta(const FieldTower& tower, const PeriodContext& ctx, int n);

struct TruncatedPeriodReport {
  /// sum_{n=0}^{d} L_d a(n) (delta alpha)^{-q^n} == H, over F_{q^{2d}}[lambda].
  bool congruence = false;
  /// a_recursive(n) == a_via_beta(n) for 0 <= n < d.
  bool a_routes_agree = false;
  /// L_n a(n) == delta alpha^{1+q+...+q^n} b(n) for 0 <= n < d.
  bool a_matches_b = false;
  /// Both expressions for xi_n agree for 0 <= n < d.
  bool xi_consistent = false;
  bool passed() const { return congruence && a_routes_agree && a_matches_b && xi_consistent; }
};

TruncatedPeriodReport truncated_period_check(const FieldTower& tower, const PeriodContext& ctx);

struct PropertyReport {
  bool degree_ok = false;
  bool h0_ok = false;
  bool separable = false;
  /// H(lambda^{q+1}) has (q+1) deg H distinct roots in F_{q^{2d}}.
  bool roots_in_Fp2 = false;
  std::size_t substituted_root_count = 0;
  /// H has deg H distinct roots in F_{q^{2d}}.
  bool h_roots_in_top = false;
  /// G(s) = H(-alpha^q s (s+1)^{q-1}) is separable.
  bool composite_separable = false;
  /// Even d: H(-alpha) matches the closed product. Odd d: not applicable (true).
  bool minus_alpha_ok = false;
  bool minus_alpha_is_root = false;
  /// g_d divides g_i in F_{q^d}[lambda] for d <= i < 2d.
  bool divisibility_ok = false;
  /// At every root lambda0, phi_p collapses to lambda0^{(q^{2d}-1)/(q^2-1)} tau^{2d}.
  bool collapse_ok = false;
  bool passed() const {
    return degree_ok && h0_ok && separable && roots_in_Fp2 && h_roots_in_top && composite_separable &&
           minus_alpha_ok && divisibility_ok && collapse_ok;
  }
};

/// Full battery over one tower; exhaustive scans of F_{q^{2d}} honour `cap`.
PropertyReport property_suite(std::shared_ptr<const FieldTower> tower, const SsPolynomial& ss,
                              std::uint64_t cap = kDefaultScanCap);

/// G(s) = H(-alpha^q s (s+1)^{q-1}) over F_{q^d}.
Poly composite_G(const FieldTower& tower, const Poly& H);

struct JCountReport {
  std::size_t root_count = 0;
  std::size_t j_count = 0;
  std::size_t expected = 0;
  /// Odd d: the fibre over j = 0 has one root, all others q+1. Even d: all q+1.
  bool fibers_ok = false;
  bool passed() const { return j_count == expected && fibers_ok; }
};

/// Distinct j = (alpha + lambda0)^{q+1}/lambda0 over the roots lambda0 of H.
JCountReport ss_count_by_j(const FieldTower& tower, const SsPolynomial& ss, std::uint64_t cap = kDefaultScanCap);

}  // namespace sspoly

#endif  // SSPOLY_SSFORMULA_HPP
