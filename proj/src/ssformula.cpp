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

#include "sspoly/ssformula.hpp"

#include <map>
#include <sstream>

#include "sspoly/error.hpp"

namespace sspoly {

namespace {

std::uint64_t checked_qpow(std::uint64_t q, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (out > UINT64_MAX / q) fail(ErrorCode::kCapExceeded, "lambda exponent exceeds 64 bits");
    out *= q;
  }
  return out;
}

// "q^3+q^2+q+1" for {0,1,2,3}; empty for {0}.
std::string weight_exponent(const IndexSet& s) {
  std::string out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (!out.empty()) out += "+";
    if (*it == 0) {
      out += "1";
    } else if (*it == 1) {
      out += "q";
    } else {
      out += "q^" + std::to_string(*it);
    }
  }
  return out == "1" ? std::string() : out;
}

Fe sign_of(const FiniteField& f, bool negative) { return negative ? -f.one() : f.one(); }

}  // namespace

std::vector<FormulaTerm> explicit_terms(int d) {
  std::vector<FormulaTerm> out;
  for (const auto& pair : enumerate_P(d)) {
    FormulaTerm t;
    t.sign = pair.S2.size() % 2 == 0 ? 1 : -1;
    t.brackets = shift(pair.S2, 1);
    t.a1_powers = pair.S1;
    t.a2_powers = pair.S2;
    out.push_back(std::move(t));
  }
  return out;
}

std::string format_term(const FormulaTerm& term) {
  std::ostringstream os;
  os << (term.sign < 0 ? "-" : "+");
  bool any = false;
  for (unsigned b : term.brackets) {
    os << "[" << b << "]";
    any = true;
  }
  auto factor = [&](const char* name, const IndexSet& s) {
    if (s.empty()) return;
    os << name;
    const std::string e = weight_exponent(s);
    if (!e.empty()) os << "^{" << e << "}";
    any = true;
  };
  factor("A1", term.a1_powers);
  factor("A2", term.a2_powers);
  if (!any) os << "1";
  return os.str();
}

std::string_view route_name(Route route) noexcept {
  switch (route) {
    case Route::kExplicit: return "explicit";
    case Route::kSymbolic: return "symbolic";
    case Route::kRecursion: return "recursion";
    case Route::kClosedForm: return "closed_form";
  }
  return "unknown";
}

SsPolynomial H_lambda(const FieldTower& tower) {
  const Poly lambda = Poly::variable(tower.mid());
  const Poly a1 = Poly::constant(tower.alpha()) + lambda;
  return {H_explicit(tower, a1, lambda), Route::kExplicit};
}

SsPolynomial H_symbolic(std::shared_ptr<const FieldTower> tower) {
  return {symbolic_normal_form(std::move(tower)).H(), Route::kSymbolic};
}

SsPolynomial H_from_b(const FieldTower& tower, Route route) {
  const int d = static_cast<int>(tower.d());
  Poly b;
  if (route == Route::kRecursion) {
    b = b_recursive(tower, d);
  } else if (route == Route::kClosedForm) {
    b = b_closed_form(tower, d);
  } else {
    fail(ErrorCode::kInvalidArgument, "H_from_b takes the recursion or closed-form route");
  }
  const Fe c = sign_of(tower.mid(), d % 2 == 1) * tower.alpha().pow(tower.ss_degree());
  return {c * b, route};
}

Poly b_recursive(const FieldTower& tower, int n) {
  const FiniteField& mid = tower.mid();
  if (n < 0) return Poly(mid);
  const Fe& alpha = tower.alpha();
  const Fe alpha_inv = alpha.inv();
  const Poly one = Poly::constant(mid.one());
  Poly prev2(mid);
  Poly prev1 = one;
  for (int k = 1; k <= n; ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    // D^{q^{k-1}} = lambda^{q^{k-1}} alpha^{-q^k}.
    const Poly dk = Poly::monomial(alpha_inv.frob(uk), checked_qpow(tower.q(), uk - 1));
    const Fe t = alpha * alpha_inv.frob(uk - 1) - mid.one();
    Poly next = -((one + dk) * prev1) + t * (dk * prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

Poly b_closed_form(const FieldTower& tower, int n, unsigned cap) {
  const FiniteField& mid = tower.mid();
  if (n < 0) return Poly(mid);
  if (static_cast<unsigned>(n) > cap) fail(ErrorCode::kCapExceeded, "subset enumeration cap exceeded");
  const std::uint64_t q = tower.q();
  std::vector<std::uint64_t> qp;
  for (int i = 0; i < n; ++i) qp.push_back(checked_qpow(q, static_cast<std::uint64_t>(i)));
  const std::uint64_t max_w = n == 0 ? 0 : (qp.back() * q - 1) / (q - 1);
  std::vector<Fe> coeffs(max_w + 1, mid.zero());
  const Fe& alpha = tower.alpha();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t w = 0;
    BigInt m_exp = 0;
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      w += qp[i];
      const bool prev_in = i > 0 && ((mask >> (i - 1)) & 1);
      if (!prev_in) m_exp += qp[i] - 1;
    }
    // (lambda/alpha^q)^w / m(S).
    coeffs[w] += alpha.pow(-(BigInt(q) * w + m_exp));
  }
  const Poly sum(mid, std::move(coeffs));
  return n % 2 == 1 ? -sum : sum;
}

Fe L_n(const FieldTower& tower, unsigned n) {
  Fe out = tower.mid().one();
  for (unsigned k = 1; k <= n; ++k) out *= tower.bracket(k);
  return n % 2 == 1 ? -out : out;
}

Fe xi_product(const FieldTower& tower, unsigned n) {
  Fe out = tower.mid().one();
  for (unsigned k = 0; k < n; ++k) {
    const Fe den = tower.bracket(k + 1);
    if (den.is_zero()) fail(ErrorCode::kBracketVanishes, "[" + std::to_string(k + 1) + "] vanishes mod p");
    out *= tower.mid().one() - tower.bracket(k) / den;
  }
  return out;
}

PeriodContext make_period_context(const FieldTower& tower) {
  if (tower.p() == 2) fail(ErrorCode::kEvenCharacteristic, "delta with delta^q = -delta needs odd q");
  const FiniteField& top = tower.top();
  PeriodContext ctx;
  for (std::uint64_t i = 1;; ++i) {
    if (BigInt(i) >= top.order()) fail(ErrorCode::kInternal, "no delta found in F_{q^{2d}}");
    const Fe x = top.from_index(i);
    if (x.frob(1) == -x) {
      ctx.delta = x;
      break;
    }
  }
  const unsigned d = tower.d();
  ctx.L_d = L_n(tower, d);
  for (unsigned n = 0; n < d; ++n) ctx.xi.push_back(xi_product(tower, n));
  return ctx;
}

Poly a_recursive(const FieldTower& tower, const PeriodContext& ctx, int n) {
  if (tower.p() == 2) fail(ErrorCode::kEvenCharacteristic, "a(n) needs odd q");
  const FiniteField& top = tower.top();
  if (n < 0) return Poly(top);
  if (n >= static_cast<int>(tower.d())) {
    fail(ErrorCode::kIndexAtD, "the a(n) recursion divides by [n], which vanishes at n = d");
  }
  const Fe alpha = tower.alpha_in(top);
  Poly prev2(top);
  Poly prev1 = Poly::constant(alpha * ctx.delta);
  for (int k = 1; k <= n; ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    const Poly lq = Poly::monomial(top.one(), checked_qpow(tower.q(), uk - 1));
    const Poly next = prev1 * (Poly::constant(alpha.frob(uk)) + lq) - lq * prev2;
    prev2 = std::move(prev1);
    prev1 = top.embed(tower.bracket(uk)).inv() * next;
  }
  return prev1;
}

Poly beta_coeff(const FieldTower& tower, int j) {
  const FiniteField& mid = tower.mid();
  if (j < 0) return Poly(mid);
  const Poly lambda = Poly::variable(mid);
  const Poly a1 = Poly::constant(tower.alpha()) + lambda;
  Poly acc(mid);
  for (const auto& pair : enumerate_P(j)) {
    const Fe den = L_of(shift(pair.S1, 1), tower) * L_of(shift(pair.S2, 2), tower);
    if (den.is_zero()) fail(ErrorCode::kBracketVanishes, "beta_" + std::to_string(j) + " has a vanishing bracket mod p");
    acc += den.inv() * (frob_weight_power(a1, pair.S1) * frob_weight_power(lambda, pair.S2));
  }
  return acc;
}

Poly a_via_beta(const FieldTower& tower, const PeriodContext& ctx, int n) {
  const FiniteField& top = tower.top();
  Poly sum(tower.mid());
  for (int j = 0; j <= n; ++j) {
    const Poly b = beta_coeff(tower, j);
    sum = j % 2 == 0 ? sum + b : sum - b;
  }
  return (tower.alpha_in(top) * ctx.delta) * sum.embed(top);
}

TruncatedPeriodReport truncated_period_check(const FieldTower& tower, const PeriodContext& ctx) {
  const FiniteField& top = tower.top();
  const unsigned d = tower.d();
  const std::uint64_t q = tower.q();
  const Fe alpha = tower.alpha_in(top);
  const Fe da_inv = (ctx.delta * alpha).inv();
  TruncatedPeriodReport rep;
  rep.a_routes_agree = true;
  rep.a_matches_b = true;
  rep.xi_consistent = true;

  Poly total(top);
  for (unsigned n = 0; n < d; ++n) {
    const Poly a = a_recursive(tower, ctx, static_cast<int>(n));
    rep.a_routes_agree = rep.a_routes_agree && a == a_via_beta(tower, ctx, static_cast<int>(n));
    const Fe scale = ctx.delta * alpha.pow(geometric_sum(BigInt(q), n + 1));
    const Poly via_b = scale * b_recursive(tower, static_cast<int>(n)).embed(top);
    rep.a_matches_b = rep.a_matches_b && top.embed(L_n(tower, n)) * a == via_b;
    total += (top.embed(ctx.L_d) * da_inv.frob(n)) * a;

    const Fe lhs = tower.bracket(1).pow(geometric_sum(BigInt(q), n)) / (sign_of(tower.mid(), n % 2 == 1) * L_n(tower, n));
    rep.xi_consistent = rep.xi_consistent && lhs == ctx.xi[n];
  }
  // n = d: L_d a(d) = delta alpha^{1+q+...+q^d} b(d), the definition of b(d).
  const Fe lead = ctx.delta * alpha.pow(geometric_sum(BigInt(q), d + 1)) * da_inv.frob(d);
  total += lead * b_recursive(tower, static_cast<int>(d)).embed(top);
  rep.congruence = total == H_lambda(tower).H.embed(top);
  return rep;
}

Poly composite_G(const FieldTower& tower, const Poly& H) {
  const FiniteField& mid = tower.mid();
  const Poly s = Poly::variable(mid);
  const Poly s1 = s + Poly::constant(mid.one());
  const Poly inner = (-tower.alpha().frob(1)) * (s * s1.pow(tower.q() - 1));
  return H.compose(inner);
}

PropertyReport property_suite(std::shared_ptr<const FieldTower> tower_ptr, const SsPolynomial& ss,
                              std::uint64_t cap) {
  const FieldTower& tower = *tower_ptr;
  const FiniteField& mid = tower.mid();
  const FiniteField& top = tower.top();
  const Poly& H = ss.H;
  const unsigned d = tower.d();
  const std::uint64_t q = tower.q();
  PropertyReport rep;

  const BigInt deg = tower.ss_degree();
  rep.degree_ok = !H.is_zero() && BigInt(H.degree().value()) == deg;
  rep.h0_ok = !H.coeff(0).is_zero() && H.coeff(0) == tower.alpha().pow(deg);
  rep.separable = gcd(H, H.derivative()) == H.one();

  check_scan_cap(top, cap);
  const auto top_size = static_cast<std::uint64_t>(top.order());
  const Poly Ht = H.embed(top);
  std::vector<Fe> h_roots;
  for (std::uint64_t i = 0; i < top_size; ++i) {
    const Fe x = top.from_index(i);
    if (Ht.eval(x.frob(1) * x).is_zero()) ++rep.substituted_root_count;
    if (Ht.eval(x).is_zero()) h_roots.push_back(x);
  }
  rep.roots_in_Fp2 = BigInt(rep.substituted_root_count) == deg * (q + 1);
  rep.h_roots_in_top = BigInt(h_roots.size()) == deg;

  const Poly G = composite_G(tower, H);
  rep.composite_separable = gcd(G, G.derivative()) == G.one();

  const Fe minus_alpha = -tower.alpha();
  const Fe h_at = H.eval(minus_alpha);
  rep.minus_alpha_is_root = h_at.is_zero();
  if (d % 2 == 0) {
    Fe expected = sign_of(mid, (d / 2) % 2 == 1);
    BigInt e = 0;
    for (unsigned k = 1; k < d; k += 2) expected *= tower.bracket(k);
    for (unsigned k = 0; 2 * k < d; ++k) e += ipow(BigInt(q), 2 * k);
    expected *= minus_alpha.pow(e);
    rep.minus_alpha_ok = !h_at.is_zero() && h_at == expected;
  } else {
    rep.minus_alpha_ok = true;
  }

  const auto g = symbolic_normal_form(tower_ptr).pp_coeffs();
  rep.divisibility_ok = !g[d].is_zero();
  for (unsigned i = d; i < 2 * d && rep.divisibility_ok; ++i) {
    rep.divisibility_ok = divmod(g[i], g[d]).second.is_zero();
  }

  rep.collapse_ok = true;
  const BigInt top_exp = (ipow(BigInt(q), 2 * d) - 1) / (BigInt(q) * q - 1);
  for (const auto& lam : h_roots) {
    const auto gl = normal_form(tower_ptr, lam).pp_coeffs();
    for (unsigned i = d; i < 2 * d; ++i) rep.collapse_ok = rep.collapse_ok && gl[i].is_zero();
    rep.collapse_ok = rep.collapse_ok && gl[2 * d] == lam.pow(top_exp);
  }
  rep.collapse_ok = rep.collapse_ok && !h_roots.empty();
  return rep;
}

JCountReport ss_count_by_j(const FieldTower& tower, const SsPolynomial& ss, std::uint64_t cap) {
  const FiniteField& top = tower.top();
  const auto roots = roots_exhaustive(ss.H.embed(top), top, cap);
  const Fe alpha = tower.alpha_in(top);
  std::map<BigInt, std::size_t> fibers;
  for (const auto& lam : roots) {
    const Fe a1 = alpha + lam;
    ++fibers[top.index_of(a1.frob(1) * a1 / lam)];
  }
  const std::uint64_t q = tower.q();
  const unsigned d = tower.d();
  const BigInt qd = ipow(BigInt(q), d);
  const BigInt q2m1 = BigInt(q) * q - 1;
  JCountReport rep;
  rep.root_count = roots.size();
  rep.j_count = fibers.size();
  rep.expected = static_cast<std::size_t>(d % 2 == 0 ? (qd - 1) / q2m1 : (qd - q) / q2m1 + 1);
  rep.fibers_ok = true;
  for (const auto& [j, size] : fibers) {
    const std::size_t want = (d % 2 == 1 && j == 0) ? 1 : q + 1;
    rep.fibers_ok = rep.fibers_ok && size == want;
  }
  if (d % 2 == 1) rep.fibers_ok = rep.fibers_ok && fibers.count(0) == 1;
  return rep;
}

}  // namespace sspoly
