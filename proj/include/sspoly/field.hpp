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

#ifndef SSPOLY_FIELD_HPP
#define SSPOLY_FIELD_HPP

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "sspoly/bigint.hpp"

namespace sspoly {

/// Position of a field in the tower F_p <= F_q <= F_{q^d} <= F_{q^{2d}}.
enum class Level { kPrime, kBase, kMid, kTop };

std::string_view level_name(Level level) noexcept;
Level parse_level(std::string_view name);

/// Prime-field residues, flattened ascending through every extension layer.
using Digits = boost::container::small_vector<std::uint32_t, 16>;

class FiniteField;

/// An element of one FiniteField. Holds a non-owning pointer to its field, so
/// the field (normally owned by a FieldTower) must outlive the element.
class Fe {
 public:
  Fe() = default;
  Fe(const FiniteField* field, Digits digits) : field_(field), digits_(std::move(digits)) {}

  const FiniteField& field() const { return *field_; }
  const FiniteField* field_ptr() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  std::span<const std::uint32_t> digits() const { return {digits_.data(), digits_.size()}; }

  bool is_zero() const;
  bool is_one() const;
  Fe zero() const;
  Fe one() const;
  bool same_ring(const Fe& other) const { return field_ == other.field_; }

  /// x^{q^k}, q being the Frobenius exponent of the tower.
  Fe frob(std::uint64_t k = 1) const;
  Fe pow(const BigInt& e) const;
  Fe inv() const;

  Fe operator-() const;
  Fe& operator+=(const Fe& rhs);
  Fe& operator-=(const Fe& rhs);
  Fe& operator*=(const Fe& rhs);
  Fe& operator/=(const Fe& rhs) { return *this *= rhs.inv(); }

  friend Fe operator+(Fe lhs, const Fe& rhs) { return lhs += rhs; }
  friend Fe operator-(Fe lhs, const Fe& rhs) { return lhs -= rhs; }
  friend Fe operator*(Fe lhs, const Fe& rhs) { return lhs *= rhs; }
  friend Fe operator/(Fe lhs, const Fe& rhs) { return lhs /= rhs; }
  friend bool operator==(const Fe& a, const Fe& b) {
    return a.field_ == b.field_ && a.digits_ == b.digits_;
  }

 private:
  friend class FiniteField;
  const FiniteField* field_ = nullptr;
  Digits digits_;
};

/// A finite field given either as F_p or as sub[x]/(m(x)) for a monic
/// irreducible m over a parent field. Immutable after construction.
class FiniteField {
 public:
  static std::shared_ptr<const FiniteField> prime(std::uint32_t p, Level level = Level::kPrime);

  /// `modulus` is monic over `sub`, ascending; irreducibility is the caller's job.
  /// `frob_q` is the exponent of the Frobenius used by twisted polynomials.
  static std::shared_ptr<const FiniteField> extension(std::shared_ptr<const FiniteField> sub,
                                                      const std::vector<Fe>& modulus, Level level,
                                                      std::uint64_t frob_q);

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::uint32_t characteristic() const { return p_; }
  Level level() const { return level_; }
  /// Degree over the immediate subfield (1 for a prime field).
  std::size_t degree() const { return degree_; }
  /// Degree over F_p.
  std::size_t width() const { return width_; }
  const BigInt& order() const { return order_; }
  const FiniteField* sub() const { return sub_.get(); }
  std::uint64_t frob_q() const { return frob_q_; }
  /// Smallest m > 0 with x^{q^m} = x for all x.
  std::uint64_t frob_period() const { return frob_period_; }
  const std::vector<Fe>& modulus() const { return modulus_; }

  Fe zero() const;
  Fe one() const;
  Fe from_int(std::int64_t n) const;
  Fe from_int(const BigInt& n) const;
  Fe from_digits(Digits digits) const;
  /// Class of x in sub[x]/(m); for a prime field, the element 1.
  Fe generator() const;

  /// Elements are numbered by reading digits as base-p, least significant first.
  Fe from_index(const BigInt& index) const;
  Fe from_index(std::uint64_t index) const;
  BigInt index_of(const Fe& x) const;

  Fe random(std::mt19937_64& rng) const;

  /// True when `other` is this field or one of its subfields.
  bool contains_field(const FiniteField& other) const;
  /// Injects an element of a subfield (or of this field) as a constant.
  Fe embed(const Fe& x) const;
  /// Coefficient i of x over the immediate subfield.
  Fe component(const Fe& x, std::size_t i) const;
  /// Builds sum_i parts[i] * generator^i from subfield elements.
  Fe compose(std::span<const Fe> parts) const;

 private:
  friend class Fe;
  FiniteField() = default;

  void add_raw(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void sub_raw(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void mul_raw(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void frob_raw(const std::uint32_t* a, std::uint32_t* out) const;
  Fe pow_small(const Fe& x, std::uint64_t e) const;

  std::uint32_t p_ = 0;
  Level level_ = Level::kPrime;
  std::size_t degree_ = 1;
  std::size_t width_ = 1;
  BigInt order_;
  std::shared_ptr<const FiniteField> sub_;
  std::vector<Fe> modulus_;
  std::uint64_t frob_q_ = 0;
  std::uint64_t frob_period_ = 1;
  std::vector<Digits> frob_images_;
};

}  // namespace sspoly

#endif  // SSPOLY_FIELD_HPP
