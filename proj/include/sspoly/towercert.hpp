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

#ifndef SSPOLY_TOWERCERT_HPP
#define SSPOLY_TOWERCERT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sspoly/bigint.hpp"
#include "sspoly/field.hpp"
#include "sspoly/poly.hpp"
#include "sspoly/ssformula.hpp"
#include "sspoly/tower.hpp"

namespace sspoly {

/// Parameters s in F_{q^{2d}} with H(-alpha^q s (s+1)^{q-1}) = 0, in index order.
struct OmegaSet {
  std::vector<Fe> elements;
  bool contains(const Fe& s) const;
};

/// Exhaustive scan of F_{q^{2d}}. Throws SplitDefect when the size is not
/// q (q^d-1)/(q-1) or -1 slips in.
OmegaSet omega_compute(const FieldTower& tower, const SsPolynomial& ss, std::uint64_t cap = kDefaultScanCap);

/// Solves Y(Y+1)^{q-1} = X^q/(alpha(X+1))^{q-1} over F_{q^{2d}} by tabulating
/// the left-hand side once.
class SplittingSolver {
 public:
  SplittingSolver(const FieldTower& tower, std::uint64_t cap = kDefaultScanCap);

  /// All b with b(b+1)^{q-1} = a^q/(alpha(a+1))^{q-1}. a must lie in omega;
  /// the result must be q distinct members of omega.
  std::vector<Fe> step(const OmegaSet& omega, const Fe& a) const;
  /// Solutions without membership checks (a != -1).
  std::vector<Fe> solve(const Fe& a) const;

 private:
  const FieldTower* tower_;
  std::map<BigInt, std::vector<Fe>> fibres_;
};

/// H(-alpha^q s(s+1)^{q-1}) == sum_k h_k (-alpha^q s^q)^k alpha^{-(q-1)k} (s+1)^{(q-1)(D-k)}
/// as polynomials in s, D = deg H.
bool omega_expansion_check(const FieldTower& tower, const SsPolynomial& ss);

/// Genus of X_0(T^n): (q^{n-1} - q^{ceil((n-1)/2)} - q^{ceil((n-2)/2)} + 1)/(q-1), 0 at n = 0.
BigInt genus_X0Tn(std::uint64_t q, unsigned n);

struct TowerLevelReport {
  unsigned n = 0;
  BigInt N_lower;
  BigInt genus;
  BigRational ratio;
  std::string ratio_decimal;
};

/// Upper limit on tower levels in a ratio table.
inline constexpr unsigned kMaxTowerLevel = 64;

/// Levels n = 1..n_max: N_lower = |omega| q^n, genus of X_0(T^{n+2}), exact ratio.
std::vector<TowerLevelReport> ratio_table(std::uint64_t q, std::size_t omega_size, unsigned n_max);

/// Drinfeld-Vladut ceiling A(q^{2d}) = q^d - 1.
BigInt dv_bound(std::uint64_t q, unsigned d);

/// Decimal expansion of x with `digits` places after the point, truncated toward zero.
std::string to_decimal(const BigRational& x, unsigned digits = 6);

/// (T+l1)^{q+1} l0^q - (T^q+l0)^{q+1} l1 ==
/// (T^{q+1} - l0 l1)(T^{q^2} + l0^q - (T^{q+1} - l0 l1)^{q-1}(T + l1)) over F_p.
bool modular_relation_check(std::uint64_t q);

/// Every s in omega gives lambda0, lambda1 that are roots of H and satisfy the
/// minimal relation at T = alpha.
bool covering_consistency_check(const FieldTower& tower, const SsPolynomial& ss, const OmegaSet& omega);

}  // namespace sspoly

#endif  // SSPOLY_TOWERCERT_HPP
