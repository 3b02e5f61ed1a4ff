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

#ifndef SSPOLY_TWISTED_HPP
#define SSPOLY_TWISTED_HPP

#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "sspoly/error.hpp"
#include "sspoly/field.hpp"
#include "sspoly/poly.hpp"

namespace sspoly {

/// A commutative ring with a q-power Frobenius endomorphism. Satisfied by Fe
/// (any tower level) and by Poly (univariate polynomials over a level).
template <class R>
concept FrobeniusRing = std::copyable<R> && requires(const R a, const R b, std::uint64_t k) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.frob(k) } -> std::convertible_to<R>;
  { a.zero() } -> std::convertible_to<R>;
  { a.one() } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.same_ring(b) } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

/// Coefficient-field element viewed inside ring R, using `proto` to identify
/// the ring. For Fe this is a field embedding; for Poly a constant polynomial.
inline Fe lift_scalar(const Fe& proto, const Fe& x) { return proto.field().embed(x); }
inline Poly lift_scalar(const Poly& proto, const Fe& x) { return Poly::constant(proto.field().embed(x)); }

/// Element of R{tau}: sum_i c_i tau^i with tau r = frob(r) tau.
template <FrobeniusRing R>
class TwistedPoly {
 public:
  /// The zero element; `zero` pins the coefficient ring.
  explicit TwistedPoly(R zero) : zero_(std::move(zero)) {}
  TwistedPoly(R zero, std::vector<R> coeffs) : zero_(std::move(zero)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
      if (!c.same_ring(zero_)) fail(ErrorCode::kRingMismatch, "coefficient outside the coefficient ring");
    }
    normalize();
  }

  static TwistedPoly constant(const R& c) { return TwistedPoly(c.zero(), {c}); }
  /// c tau^k.
  static TwistedPoly monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, c.zero());
    v[k] = c;
    return TwistedPoly(c.zero(), std::move(v));
  }

  Degree degree() const { return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1); }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& ring_zero() const { return zero_; }
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }

  friend TwistedPoly operator+(const TwistedPoly& f, const TwistedPoly& g) {
    check(f, g);
    std::vector<R> out(std::max(f.coeffs_.size(), g.coeffs_.size()), f.zero_);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) out[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) out[i] = out[i] + g.coeffs_[i];
    return TwistedPoly(f.zero_, std::move(out));
  }

  friend TwistedPoly operator-(const TwistedPoly& f, const TwistedPoly& g) {
    check(f, g);
    std::vector<R> out(std::max(f.coeffs_.size(), g.coeffs_.size()), f.zero_);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) out[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) out[i] = out[i] - g.coeffs_[i];
    return TwistedPoly(f.zero_, std::move(out));
  }

  /// (a tau^i)(b tau^j) = a frob^i(b) tau^{i+j}.
  friend TwistedPoly operator*(const TwistedPoly& f, const TwistedPoly& g) {
    check(f, g);
    if (f.is_zero() || g.is_zero()) return TwistedPoly(f.zero_);
    std::vector<R> out(f.coeffs_.size() + g.coeffs_.size() - 1, f.zero_);
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      if (g.coeffs_[j].is_zero()) continue;
      for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        out[i + j] = out[i + j] + f.coeffs_[i] * g.coeffs_[j].frob(i);
      }
    }
    return TwistedPoly(f.zero_, std::move(out));
  }

  /// Left multiplication by a ring scalar.
  friend TwistedPoly operator*(const R& c, const TwistedPoly& f) { return constant(c) * f; }

  friend bool operator==(const TwistedPoly& f, const TwistedPoly& g) {
    return f.zero_.same_ring(g.zero_) && f.coeffs_ == g.coeffs_;
  }

 private:
  static void check(const TwistedPoly& f, const TwistedPoly& g) {
    if (!f.zero_.same_ring(g.zero_)) fail(ErrorCode::kRingMismatch, "twisted polynomials over different rings");
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  R zero_;
  std::vector<R> coeffs_;
};

/// sum_i c_i x^{q^i}. x may lie in an extension of the coefficient field.
inline Fe eval_linearized(const TwistedPoly<Fe>& f, const Fe& x) {
  const FiniteField& target = x.field();
  if (!target.contains_field(f.ring_zero().field())) {
    fail(ErrorCode::kLevelMismatch, "evaluation point is not in an extension of the coefficient field");
  }
  Fe acc = target.zero();
  Fe xq = x;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) xq = xq.frob(1);
    acc += target.embed(f.coeffs()[i]) * xq;
  }
  return acc;
}

}  // namespace sspoly

#endif  // SSPOLY_TWISTED_HPP
