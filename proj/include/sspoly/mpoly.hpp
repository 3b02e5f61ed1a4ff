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

#ifndef SSPOLY_MPOLY_HPP
#define SSPOLY_MPOLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sspoly/bigint.hpp"
#include "sspoly/field.hpp"

namespace sspoly {

/// (variable index, exponent) pairs, sorted by variable, exponents positive.
using Monomial = std::vector<std::pair<unsigned, std::uint64_t>>;

/// Sparse polynomial in X_0, X_1, ... with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class MPolyZ {
 public:
  MPolyZ() = default;
  static MPolyZ constant(const BigInt& c);
  static MPolyZ variable(unsigned index);
  static MPolyZ monomial(const BigInt& c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of m (zero when absent).
  BigInt coeff(const Monomial& m) const;
  std::uint64_t total_degree() const;

  MPolyZ operator-() const;
  MPolyZ& operator+=(const MPolyZ& rhs);
  MPolyZ& operator-=(const MPolyZ& rhs);
  MPolyZ& operator*=(const MPolyZ& rhs) { return *this = *this * rhs; }
  friend MPolyZ operator+(MPolyZ a, const MPolyZ& b) { return a += b; }
  friend MPolyZ operator-(MPolyZ a, const MPolyZ& b) { return a -= b; }
  friend MPolyZ operator*(const MPolyZ& a, const MPolyZ& b);
  friend MPolyZ operator*(const BigInt& c, const MPolyZ& a);
  friend bool operator==(const MPolyZ&, const MPolyZ&) = default;

  MPolyZ pow(std::uint64_t e) const;
  /// Coefficients reduced into [0, m); terms that vanish are dropped.
  MPolyZ reduce_mod(const BigInt& m) const;
  /// Substitutes values[i] for X_i; all values must share one field.
  Fe eval(std::span<const Fe> values) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);

  std::map<Monomial, BigInt> terms_;
};

}  // namespace sspoly

#endif  // SSPOLY_MPOLY_HPP
