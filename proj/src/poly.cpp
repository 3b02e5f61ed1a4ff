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

#include "sspoly/poly.hpp"

#include <limits>

#include "sspoly/error.hpp"

namespace sspoly {

std::size_t Degree::value() const {
  if (!finite_) fail(ErrorCode::kInvalidArgument, "degree of the zero polynomial is -infinity");
  return value_;
}

namespace {

void check_ring(const Poly& a, const Poly& b) {
  if (!a.valid() || !b.valid()) fail(ErrorCode::kInvalidArgument, "uninitialised polynomial");
  if (!a.same_ring(b)) fail(ErrorCode::kLevelMismatch, "polynomials over different fields");
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      fail(ErrorCode::kInvalidArgument, "exponent overflow in polynomial Frobenius");
    }
    r *= base;
  }
  return r;
}

}  // namespace

Poly::Poly(const FiniteField& field, std::vector<Fe> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (!c.valid()) fail(ErrorCode::kInvalidArgument, "uninitialised coefficient");
    if (c.field_ptr() != field_) c = field_->embed(c);
  }
  normalize();
}

Poly Poly::constant(const Fe& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Fe& c, std::size_t k) {
  std::vector<Fe> v(k + 1, c.zero());
  v[k] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::variable(const FiniteField& field) { return monomial(field.one(), 1); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const {
  return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1);
}

Fe Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

Fe Poly::lead() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_ring(*this, rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_ring(*this, rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_ring(a, b);
  if (a.is_zero() || b.is_zero()) return a.zero();
  std::vector<std::size_t> nz_a;
  std::vector<std::size_t> nz_b;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!a.coeffs_[i].is_zero()) nz_a.push_back(i);
  }
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
    if (!b.coeffs_[j].is_zero()) nz_b.push_back(j);
  }
  std::vector<Fe> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
  for (std::size_t i : nz_a) {
    for (std::size_t j : nz_b) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(*a.field_, std::move(out));
}

Poly operator*(const Fe& c, const Poly& a) {
  Fe s = a.field().embed(c);
  std::vector<Fe> out = a.coeffs_;
  for (auto& v : out) v *= s;
  return Poly(*a.field_, std::move(out));
}

Poly Poly::frob(std::uint64_t k) const {
  if (k == 0 || coeffs_.empty()) return *this;
  const std::uint64_t stride = checked_pow(field_->frob_q(), k);
  std::vector<Fe> out((coeffs_.size() - 1) * stride + 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out[i * stride] = coeffs_[i].frob(k);
  }
  return Poly(*field_, std::move(out));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = one();
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Fe Poly::eval(const Fe& x) const {
  const FiniteField& target = x.field();
  if (!target.contains_field(*field_)) {
    fail(ErrorCode::kLevelMismatch, "evaluation point is not in an extension of the coefficient field");
  }
  Fe acc = target.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += target.embed(coeffs_[i]);
  }
  return acc;
}

Poly Poly::compose(const Poly& g) const {
  check_ring(*this, g);
  Poly acc = zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * g;
    acc += constant(coeffs_[i]);
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return zero();
  std::vector<Fe> out(coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())) * coeffs_[i];
  }
  return Poly(*field_, std::move(out));
}

Poly Poly::monic() const {
  if (coeffs_.empty()) return *this;
  return lead().inv() * *this;
}

Poly Poly::embed(const FiniteField& ext) const {
  std::vector<Fe> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(ext.embed(c));
  return Poly(ext, std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_ring(a, b);
  if (b.is_zero()) fail(ErrorCode::kInvalidArgument, "polynomial division by zero");
  const FiniteField& f = a.field();
  if (a.size() < b.size()) return {Poly(f), a};
  std::vector<Fe> rem = a.coeffs();
  std::vector<Fe> quo(a.size() - b.size() + 1, f.zero());
  const Fe inv_lead = b.lead().inv();
  const std::size_t db = b.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Fe c = rem[k] * inv_lead;
    quo[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      if (!b.coeffs()[j].is_zero()) rem[k - db + j] -= c * b.coeffs()[j];
    }
  }
  rem.resize(db, f.zero());
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  check_ring(a, b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod) {
  Poly result = divmod(base.one(), mod).second;
  if (e == 0) return result;
  const Poly b = divmod(base, mod).second;
  const std::size_t top_bit = boost::multiprecision::msb(e);
  for (std::size_t i = top_bit + 1; i-- > 0;) {
    result = divmod(result * result, mod).second;
    if (boost::multiprecision::bit_test(e, i)) result = divmod(result * b, mod).second;
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.degree().value() == 0) return false;
  const std::size_t n = f.degree().value();
  if (n == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::variable(f.field());
  Poly xp = x;  // x^{Q^i} mod g
  for (std::size_t i = 1; i <= n / 2; ++i) {
    xp = powmod(xp, f.field().order(), g);
    if (gcd(g, xp - x).degree() != Degree(0)) return false;
  }
  return true;
}

void check_scan_cap(const FiniteField& level, std::uint64_t cap) {
  if (level.order() > cap) {
    fail(ErrorCode::kSearchSpaceTooLarge, "exhaustive scan over " + level.order().str() +
                                              " elements exceeds cap " + std::to_string(cap));
  }
}

std::vector<Fe> roots_exhaustive(const Poly& f, const FiniteField& level, std::uint64_t cap) {
  if (!level.contains_field(f.field())) {
    fail(ErrorCode::kLevelMismatch, "search field does not contain the coefficient field");
  }
  check_scan_cap(level, cap);
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "every element is a root of the zero polynomial");
  const Poly g = f.embed(level);
  const auto n = static_cast<std::uint64_t>(level.order());
  std::vector<Fe> roots;
  for (std::uint64_t i = 0; i < n; ++i) {
    Fe x = level.from_index(i);
    if (g.eval(x).is_zero()) roots.push_back(std::move(x));
  }
  return roots;
}

}  // namespace sspoly
