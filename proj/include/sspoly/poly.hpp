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

#ifndef SSPOLY_POLY_HPP
#define SSPOLY_POLY_HPP

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "sspoly/field.hpp"

namespace sspoly {

/// Polynomial degree with a distinguished -infinity for the zero polynomial.
class Degree {
 public:
  static constexpr Degree neg_inf() { return Degree(); }
  constexpr explicit Degree(std::size_t value) : finite_(true), value_(value) {}

  constexpr bool is_neg_inf() const { return !finite_; }
  std::size_t value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

/// Dense univariate polynomial over one FiniteField (coefficients ascending).
/// Also serves as a Frobenius ring: frob raises coefficients to the q-th
/// power and multiplies every exponent by q.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FiniteField& field) : field_(&field) {}
  Poly(const FiniteField& field, std::vector<Fe> coeffs);

  static Poly constant(const Fe& c);
  static Poly monomial(const Fe& c, std::size_t k);
  /// The indeterminate itself.
  static Poly variable(const FiniteField& field);

  const FiniteField& field() const { return *field_; }
  bool valid() const { return field_ != nullptr; }
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Fe>& coeffs() const { return coeffs_; }
  Fe coeff(std::size_t i) const;
  Fe lead() const;

  Poly zero() const { return Poly(*field_); }
  Poly one() const { return constant(field_->one()); }
  bool same_ring(const Poly& other) const { return field_ == other.field_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Fe& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  Poly frob(std::uint64_t k = 1) const;
  Poly pow(std::uint64_t e) const;
  /// Horner evaluation; x may live in any extension of the coefficient field.
  Fe eval(const Fe& x) const;
  /// this(g(s)).
  Poly compose(const Poly& g) const;
  Poly derivative() const;
  Poly monic() const;
  /// Same polynomial viewed over an extension field.
  Poly embed(const FiniteField& ext) const;

 private:
  void normalize();

  const FiniteField* field_ = nullptr;
  std::vector<Fe> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
Poly powmod(const Poly& base, const BigInt& e, const Poly& mod);

/// Ben-Or test over the coefficient field.
bool is_irreducible(const Poly& f);

/// Default bound on the number of elements an exhaustive scan may visit.
inline constexpr std::uint64_t kDefaultScanCap = std::uint64_t{1} << 24;

/// Every root of f lying in `level`, by evaluation at each element.
std::vector<Fe> roots_exhaustive(const Poly& f, const FiniteField& level,
                                 std::uint64_t cap = kDefaultScanCap);

/// Throws SearchSpaceTooLarge when the field has more than `cap` elements.
void check_scan_cap(const FiniteField& level, std::uint64_t cap);

}  // namespace sspoly

#endif  // SSPOLY_POLY_HPP
