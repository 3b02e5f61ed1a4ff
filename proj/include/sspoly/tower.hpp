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

#ifndef SSPOLY_TOWER_HPP
#define SSPOLY_TOWER_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "sspoly/field.hpp"
#include "sspoly/poly.hpp"

namespace sspoly {

/// q = p^e.
struct BasePrimePower {
  std::uint32_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;

  /// Throws InvalidArgument unless q is a prime power >= 2.
  static BasePrimePower from_q(std::uint64_t q);
};

/// F_q itself: F_p when e = 1, otherwise F_p[y]/(m(y)) with m the smallest
/// monic irreducible of degree e (see smallest_monic_irreducible).
std::shared_ptr<const FiniteField> make_base_field(const BasePrimePower& q);

/// Smallest monic irreducible of the given degree over `field`. Candidates are
/// ordered by the integer sum_i index(c_i) * |field|^i, so the constant term
/// varies fastest.
Poly smallest_monic_irreducible(const FiniteField& field, std::size_t degree, bool nonzero_constant);

/// Polynomial over F_q from integer codes (code = element index in F_q), ascending.
Poly fq_poly_from_codes(const FiniteField& base, const std::vector<std::uint64_t>& codes);
std::vector<std::uint64_t> fq_poly_codes(const Poly& f);

/// The prime p(T) of F_q[T]: monic, irreducible, and different from T.
struct PrimeIdeal {
  Poly p_of_T;
  unsigned d = 0;
  /// mu_0 .. mu_d, mu_d = 1.
  std::vector<Fe> mu;

  static PrimeIdeal validate(const Poly& p_of_T);
};

/// F_q <= F_{q^d} = F_q[x]/(p(x)) <= F_{q^{2d}} = mid[z]/(z^2 + c1 z + c0).
/// alpha is the class of x. Owns all three fields; elements produced from a
/// tower keep raw pointers into it.
class FieldTower {
 public:
  static std::shared_ptr<const FieldTower> build(std::uint64_t q, const std::vector<std::uint64_t>& p_codes);
  static std::shared_ptr<const FieldTower> build(std::shared_ptr<const FiniteField> base, const Poly& p_of_T);

  const BasePrimePower& prime_power() const { return q_; }
  std::uint64_t q() const { return q_.q; }
  std::uint32_t p() const { return q_.p; }
  unsigned d() const { return ideal_.d; }
  const PrimeIdeal& ideal() const { return ideal_; }

  const FiniteField& base() const { return *base_; }
  const FiniteField& mid() const { return *mid_; }
  const FiniteField& top() const { return *top_; }
  std::shared_ptr<const FiniteField> base_ptr() const { return base_; }

  const Fe& alpha() const { return alpha_; }
  /// alpha embedded into `level` (mid or top).
  Fe alpha_in(const FiniteField& level) const { return level.embed(alpha_); }
  /// [n] = alpha^{q^n} - alpha, in mid.
  Fe bracket(std::uint64_t n) const;
  /// (q^d - 1)/(q - 1), the degree of the supersingular polynomial.
  BigInt ss_degree() const;

 private:
  FieldTower() = default;

  BasePrimePower q_;
  PrimeIdeal ideal_;
  std::shared_ptr<const FiniteField> base_;
  std::shared_ptr<const FiniteField> mid_;
  std::shared_ptr<const FiniteField> top_;
  Fe alpha_;
};

/// Smallest monic irreducible p(T) of degree d with p(T) != T ("auto:d").
std::vector<std::uint64_t> auto_ideal_codes(std::uint64_t q, unsigned d);

}  // namespace sspoly

#endif  // SSPOLY_TOWER_HPP
