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

#include "sspoly/towercert.hpp"

#include <algorithm>

#include "sspoly/error.hpp"
#include "sspoly/mpoly.hpp"

namespace sspoly {

namespace {

Fe lambda0_of(const FieldTower& tower, const Fe& s) {
  const Fe alpha = tower.alpha_in(s.field());
  const Fe s1 = s + s.one();
  return -alpha.frob(1) * s * s1.pow(BigInt(tower.q() - 1));
}

Fe lambda1_of(const FieldTower& tower, const Fe& s) {
  const Fe alpha = tower.alpha_in(s.field());
  const Fe s1 = s + s.one();
  return -alpha.frob(1) * s.frob(1) / (alpha * s1).pow(BigInt(tower.q() - 1));
}

unsigned ceil_half(int m) { return m <= 0 ? 0 : static_cast<unsigned>((m + 1) / 2); }

}  // namespace

bool OmegaSet::contains(const Fe& s) const {
  return std::find(elements.begin(), elements.end(), s) != elements.end();
}

OmegaSet omega_compute(const FieldTower& tower, const SsPolynomial& ss, std::uint64_t cap) {
  const FiniteField& top = tower.top();
  check_scan_cap(top, cap);
  const Poly Ht = ss.H.embed(top);
  OmegaSet out;
  const auto size = static_cast<std::uint64_t>(top.order());
  for (std::uint64_t i = 0; i < size; ++i) {
    const Fe s = top.from_index(i);
    if (Ht.eval(lambda0_of(tower, s)).is_zero()) out.elements.push_back(s);
  }
  if (out.contains(-top.one())) fail(ErrorCode::kSplitDefect, "-1 lies in omega");
  if (BigInt(out.elements.size()) != tower.ss_degree() * tower.q()) {
    fail(ErrorCode::kSplitDefect, "omega has " + std::to_string(out.elements.size()) + " elements, expected " +
                                      to_string(tower.ss_degree() * tower.q()));
  }
  return out;
}

SplittingSolver::SplittingSolver(const FieldTower& tower, std::uint64_t cap) : tower_(&tower) {
  const FiniteField& top = tower.top();
  check_scan_cap(top, cap);
  const auto size = static_cast<std::uint64_t>(top.order());
  const BigInt e(tower.q() - 1);
  for (std::uint64_t i = 0; i < size; ++i) {
    const Fe b = top.from_index(i);
    fibres_[top.index_of(b * (b + b.one()).pow(e))].push_back(b);
  }
}

std::vector<Fe> SplittingSolver::solve(const Fe& a) const {
  const FiniteField& top = tower_->top();
  const Fe a1 = a + top.one();
  if (a1.is_zero()) fail(ErrorCode::kInvalidArgument, "a = -1 has no image");
  const Fe rhs = a.frob(1) / (tower_->alpha_in(top) * a1).pow(BigInt(tower_->q() - 1));
  auto it = fibres_.find(top.index_of(rhs));
  return it == fibres_.end() ? std::vector<Fe>{} : it->second;
}

std::vector<Fe> SplittingSolver::step(const OmegaSet& omega, const Fe& a) const {
  if (!omega.contains(a)) fail(ErrorCode::kNotInOmega, "splitting step needs a member of omega");
  auto sols = solve(a);
  if (sols.size() != tower_->q()) {
    fail(ErrorCode::kSplitDefect, "found " + std::to_string(sols.size()) + " solutions, expected q");
  }
  for (const auto& b : sols) {
    if (!omega.contains(b)) fail(ErrorCode::kSplitDefect, "a solution of the tower equation lies outside omega");
  }
  return sols;
}

bool omega_expansion_check(const FieldTower& tower, const SsPolynomial& ss) {
  const FiniteField& mid = tower.mid();
  const std::uint64_t q = tower.q();
  const Poly& H = ss.H;
  const Poly lhs = composite_G(tower, H);

  const Poly s = Poly::variable(mid);
  const Poly s1 = s + Poly::constant(mid.one());
  const Fe alpha = tower.alpha();
  const std::size_t D = H.degree().value();
  // -alpha^q s^q alpha^{-(q-1)} = -alpha s^q.
  const Poly base = (-alpha) * s.pow(q);
  const Poly s1q = s1.pow(q - 1);
  Poly rhs(mid);
  Poly base_k = Poly::constant(mid.one());
  std::vector<Poly> s1_pow{Poly::constant(mid.one())};
  for (std::size_t k = 1; k <= D; ++k) s1_pow.push_back(s1_pow.back() * s1q);
  for (std::size_t k = 0; k <= D; ++k) {
    if (!H.coeff(k).is_zero()) rhs += H.coeff(k) * (base_k * s1_pow[D - k]);
    base_k = base_k * base;
  }
  return lhs == rhs;
}

BigInt genus_X0Tn(std::uint64_t q, unsigned n) {
  if (q < 2) fail(ErrorCode::kInvalidArgument, "q must be at least 2");
  if (n == 0) return 0;
  const int ni = static_cast<int>(n);
  const BigInt Q(q);
  const BigInt num = ipow(Q, n - 1) - ipow(Q, ceil_half(ni - 1)) - ipow(Q, ceil_half(ni - 2)) + 1;
  if (num % (Q - 1) != 0 || num < 0) fail(ErrorCode::kNonIntegerGenus, "genus formula is not a natural number");
  return num / (Q - 1);
}

BigInt dv_bound(std::uint64_t q, unsigned d) { return ipow(BigInt(q), d) - 1; }

std::string to_decimal(const BigRational& x, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigInt scaled = num * ipow(BigInt(10), digits) / den;
  std::string s = scaled.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return sign + s;
}

std::vector<TowerLevelReport> ratio_table(std::uint64_t q, std::size_t omega_size, unsigned n_max) {
  if (n_max > kMaxTowerLevel) fail(ErrorCode::kInvalidArgument, "n_max is limited to 64");
  std::vector<TowerLevelReport> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    TowerLevelReport row;
    row.n = n;
    row.N_lower = BigInt(omega_size) * ipow(BigInt(q), n);
    row.genus = genus_X0Tn(q, n + 2);
    row.ratio = BigRational(row.N_lower, row.genus);
    row.ratio_decimal = to_decimal(row.ratio);
    out.push_back(std::move(row));
  }
  return out;
}

bool modular_relation_check(std::uint64_t q) {
  const BasePrimePower pp = BasePrimePower::from_q(q);
  const MPolyZ T = MPolyZ::variable(0);
  const MPolyZ l0 = MPolyZ::variable(1);
  const MPolyZ l1 = MPolyZ::variable(2);
  const MPolyZ lhs = (T + l1).pow(q + 1) * l0.pow(q) - (T.pow(q) + l0).pow(q + 1) * l1;
  const MPolyZ u = T.pow(q + 1) - l0 * l1;
  const MPolyZ rhs = u * (T.pow(q * q) + l0.pow(q) - u.pow(q - 1) * (T + l1));
  return (lhs - rhs).reduce_mod(pp.p).is_zero();
}

bool covering_consistency_check(const FieldTower& tower, const SsPolynomial& ss, const OmegaSet& omega) {
  const FiniteField& top = tower.top();
  const Poly Ht = ss.H.embed(top);
  const std::uint64_t q = tower.q();
  const Fe t = tower.alpha_in(top);
  for (const auto& s : omega.elements) {
    const Fe l0 = lambda0_of(tower, s);
    const Fe l1 = lambda1_of(tower, s);
    if (!Ht.eval(l0).is_zero() || !Ht.eval(l1).is_zero()) return false;
    const Fe u = t.pow(BigInt(q + 1)) - l0 * l1;
    const Fe rel = t.pow(BigInt(q * q)) + l0.frob(1) - u.pow(BigInt(q - 1)) * (t + l1);
    if (!rel.is_zero()) return false;
  }
  return !omega.elements.empty();
}

}  // namespace sspoly
