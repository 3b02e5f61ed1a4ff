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

#include "sspoly/field.hpp"

#include <algorithm>

#include "sspoly/error.hpp"

namespace sspoly {

std::string_view level_name(Level level) noexcept {
  switch (level) {
    case Level::kPrime: return "prime";
    case Level::kBase: return "base";
    case Level::kMid: return "mid";
    case Level::kTop: return "top";
  }
  return "?";
}

Level parse_level(std::string_view name) {
  if (name == "prime") return Level::kPrime;
  if (name == "base") return Level::kBase;
  if (name == "mid") return Level::kMid;
  if (name == "top") return Level::kTop;
  fail(ErrorCode::kInvalidArgument, "unknown level '" + std::string(name) + "'");
}

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kIdealIsT: return "IdealIsT";
    case ErrorCode::kNotMonic: return "NotMonic";
    case ErrorCode::kLevelMismatch: return "LevelMismatch";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kSymbolicCoefficients: return "SymbolicCoefficients";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kIndexAtD: return "IndexAtD";
    case ErrorCode::kBracketVanishes: return "BracketVanishes";
    case ErrorCode::kNotInOmega: return "NotInOmega";
    case ErrorCode::kSplitDefect: return "SplitDefect";
    case ErrorCode::kNonIntegerGenus: return "NonIntegerGenus";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {

void check_same(const Fe& a, const Fe& b) {
  if (!a.valid() || !b.valid()) fail(ErrorCode::kInvalidArgument, "uninitialised field element");
  if (!a.same_ring(b)) {
    fail(ErrorCode::kLevelMismatch, std::string("operands live in different fields (") +
                                        std::string(level_name(a.field().level())) + " vs " +
                                        std::string(level_name(b.field().level())) + ")");
  }
}

bool all_zero(const std::uint32_t* a, std::size_t n) {
  return std::all_of(a, a + n, [](std::uint32_t v) { return v == 0; });
}

}  // namespace

// ---- Fe ----------------------------------------------------------------

bool Fe::is_zero() const { return all_zero(digits_.data(), digits_.size()); }

bool Fe::is_one() const {
  if (digits_.empty() || digits_[0] != 1) return false;
  return all_zero(digits_.data() + 1, digits_.size() - 1);
}

Fe Fe::zero() const { return field_->zero(); }
Fe Fe::one() const { return field_->one(); }

Fe Fe::frob(std::uint64_t k) const {
  k %= field_->frob_period();
  Fe cur = *this;
  Digits tmp(digits_.size());
  for (std::uint64_t i = 0; i < k; ++i) {
    field_->frob_raw(cur.digits_.data(), tmp.data());
    std::swap(cur.digits_, tmp);
  }
  return cur;
}

Fe Fe::pow(const BigInt& e) const {
  if (e < 0) return inv().pow(-e);
  Fe result = one();
  if (e == 0) return result;
  const std::size_t top_bit = boost::multiprecision::msb(e);
  for (std::size_t i = top_bit + 1; i-- > 0;) {
    result *= result;
    if (boost::multiprecision::bit_test(e, i)) result *= *this;
  }
  return result;
}

Fe Fe::inv() const {
  if (is_zero()) fail(ErrorCode::kInvalidArgument, "inverse of zero");
  return pow(field_->order() - 2);
}

Fe Fe::operator-() const {
  Fe out = *this;
  const std::uint32_t p = field_->characteristic();
  for (auto& v : out.digits_) v = v == 0 ? 0 : p - v;
  return out;
}

Fe& Fe::operator+=(const Fe& rhs) {
  check_same(*this, rhs);
  field_->add_raw(digits_.data(), rhs.digits_.data(), digits_.data());
  return *this;
}

Fe& Fe::operator-=(const Fe& rhs) {
  check_same(*this, rhs);
  field_->sub_raw(digits_.data(), rhs.digits_.data(), digits_.data());
  return *this;
}

Fe& Fe::operator*=(const Fe& rhs) {
  check_same(*this, rhs);
  Digits out(digits_.size());
  field_->mul_raw(digits_.data(), rhs.digits_.data(), out.data());
  digits_ = std::move(out);
  return *this;
}

// ---- FiniteField ---------------------------------------------------------

std::shared_ptr<const FiniteField> FiniteField::prime(std::uint32_t p, Level level) {
  if (p < 2 || p >= (1U << 31)) fail(ErrorCode::kInvalidArgument, "prime out of range");
  for (std::uint64_t f = 2; f * f <= p; ++f) {
    if (p % f == 0) fail(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
  std::shared_ptr<FiniteField> field(new FiniteField());
  field->p_ = p;
  field->level_ = level;
  field->order_ = p;
  field->frob_q_ = p;
  field->frob_period_ = 1;
  return field;
}

std::shared_ptr<const FiniteField> FiniteField::extension(std::shared_ptr<const FiniteField> sub,
                                                          const std::vector<Fe>& modulus,
                                                          Level level, std::uint64_t frob_q) {
  if (!sub) fail(ErrorCode::kInvalidArgument, "missing subfield");
  if (modulus.size() < 2) fail(ErrorCode::kInvalidArgument, "modulus must have degree >= 1");
  for (const auto& c : modulus) {
    if (c.field_ptr() != sub.get()) fail(ErrorCode::kLevelMismatch, "modulus over wrong field");
  }
  if (!modulus.back().is_one()) fail(ErrorCode::kNotMonic, "modulus is not monic");

  std::shared_ptr<FiniteField> field(new FiniteField());
  field->p_ = sub->p_;
  field->level_ = level;
  field->degree_ = modulus.size() - 1;
  field->width_ = field->degree_ * sub->width_;
  field->order_ = ipow(BigInt(field->p_), field->width_);
  field->sub_ = std::move(sub);
  field->modulus_ = modulus;

  // frob_q must be a power of p dividing into the absolute degree.
  std::uint64_t e = 0;
  for (std::uint64_t t = frob_q; t > 1; t /= field->p_) {
    if (t % field->p_ != 0) fail(ErrorCode::kInvalidArgument, "Frobenius exponent is not a power of p");
    ++e;
  }
  if (e == 0 || field->width_ % e != 0) {
    fail(ErrorCode::kInvalidArgument, "Frobenius exponent incompatible with field size");
  }
  field->frob_q_ = frob_q;
  field->frob_period_ = field->width_ / e;

  field->frob_images_.reserve(field->width_);
  for (std::size_t k = 0; k < field->width_; ++k) {
    Digits unit(field->width_, 0);
    unit[k] = 1;
    Fe basis(field.get(), unit);
    field->frob_images_.push_back(field->pow_small(basis, frob_q).digits_);
  }
  return field;
}

Fe FiniteField::zero() const { return Fe(this, Digits(width_, 0)); }

Fe FiniteField::one() const {
  Digits d(width_, 0);
  d[0] = 1;
  return Fe(this, d);
}

Fe FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  Digits d(width_, 0);
  d[0] = static_cast<std::uint32_t>(r);
  return Fe(this, d);
}

Fe FiniteField::from_int(const BigInt& n) const {
  BigInt r = n % p_;
  if (r < 0) r += p_;
  return from_int(static_cast<std::int64_t>(r));
}

Fe FiniteField::from_digits(Digits digits) const {
  if (digits.size() != width_) fail(ErrorCode::kInvalidArgument, "digit vector has wrong length");
  for (auto v : digits) {
    if (v >= p_) fail(ErrorCode::kInvalidArgument, "digit out of range");
  }
  return Fe(this, std::move(digits));
}

Fe FiniteField::generator() const {
  if (!sub_) return one();
  Digits d(width_, 0);
  if (degree_ == 1) {
    // x = -m_0 when the modulus is linear.
    Fe root = -modulus_[0];
    return embed(root);
  }
  d[sub_->width_] = 1;
  return Fe(this, d);
}

Fe FiniteField::from_index(const BigInt& index) const {
  if (index < 0 || index >= order_) fail(ErrorCode::kInvalidArgument, "element index out of range");
  Digits d(width_, 0);
  BigInt rest = index;
  for (std::size_t i = 0; i < width_; ++i) {
    d[i] = static_cast<std::uint32_t>(rest % p_);
    rest /= p_;
  }
  return Fe(this, d);
}

Fe FiniteField::from_index(std::uint64_t index) const {
  Digits d(width_, 0);
  std::uint64_t rest = index;
  for (std::size_t i = 0; i < width_; ++i) {
    d[i] = static_cast<std::uint32_t>(rest % p_);
    rest /= p_;
  }
  if (rest != 0) fail(ErrorCode::kInvalidArgument, "element index out of range");
  return Fe(this, d);
}

BigInt FiniteField::index_of(const Fe& x) const {
  if (x.field_ptr() != this) fail(ErrorCode::kLevelMismatch, "element from another field");
  BigInt idx = 0;
  for (std::size_t i = width_; i-- > 0;) idx = idx * p_ + x.digits_[i];
  return idx;
}

Fe FiniteField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
  Digits d(width_);
  for (auto& v : d) v = dist(rng);
  return Fe(this, d);
}

bool FiniteField::contains_field(const FiniteField& other) const {
  for (const FiniteField* f = this; f != nullptr; f = f->sub_.get()) {
    if (f == &other) return true;
  }
  return false;
}

Fe FiniteField::embed(const Fe& x) const {
  if (x.field_ptr() == this) return x;
  if (!sub_ || !sub_->contains_field(x.field())) {
    fail(ErrorCode::kLevelMismatch, std::string("cannot embed ") +
                                        std::string(level_name(x.field().level())) + " element into " +
                                        std::string(level_name(level_)) + " field");
  }
  Fe inner = sub_->embed(x);
  Digits d(width_, 0);
  std::copy(inner.digits_.begin(), inner.digits_.end(), d.begin());
  return Fe(this, d);
}

Fe FiniteField::component(const Fe& x, std::size_t i) const {
  if (x.field_ptr() != this) fail(ErrorCode::kLevelMismatch, "element from another field");
  if (!sub_) return x;
  if (i >= degree_) fail(ErrorCode::kInvalidArgument, "component index out of range");
  const std::size_t w = sub_->width_;
  Digits d(x.digits_.begin() + static_cast<std::ptrdiff_t>(i * w),
           x.digits_.begin() + static_cast<std::ptrdiff_t>((i + 1) * w));
  return Fe(sub_.get(), d);
}

Fe FiniteField::compose(std::span<const Fe> parts) const {
  if (!sub_) {
    if (parts.size() != 1) fail(ErrorCode::kInvalidArgument, "prime field has one component");
    return embed(parts[0]);
  }
  if (parts.size() != degree_) fail(ErrorCode::kInvalidArgument, "wrong number of components");
  Digits d(width_, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (parts[i].field_ptr() != sub_.get()) fail(ErrorCode::kLevelMismatch, "component over wrong field");
    std::copy(parts[i].digits_.begin(), parts[i].digits_.end(),
              d.begin() + static_cast<std::ptrdiff_t>(i * sub_->width_));
  }
  return Fe(this, d);
}

void FiniteField::add_raw(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  for (std::size_t i = 0; i < width_; ++i) {
    const std::uint32_t s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void FiniteField::sub_raw(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  for (std::size_t i = 0; i < width_; ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
}

void FiniteField::mul_raw(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  const std::uint64_t p = p_;
  if (!sub_) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p);
    return;
  }
  const std::size_t n = degree_;
  const std::size_t w = sub_->width_;

  if (w == 1) {
    // Directly over F_p: plain polynomial arithmetic on residues.
    boost::container::small_vector<std::uint64_t, 32> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
      }
    }
    for (std::size_t k = 2 * n - 1; k-- > n;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t m = modulus_[j].digits_[0];
        if (m == 0) continue;
        prod[k - n + j] = (prod[k - n + j] + (p - c) * m) % p;
      }
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return;
  }

  Digits prod((2 * n - 1) * w, 0);
  Digits tmp(w);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t* ai = a + i * w;
    if (all_zero(ai, w)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t* bj = b + j * w;
      if (all_zero(bj, w)) continue;
      sub_->mul_raw(ai, bj, tmp.data());
      std::uint32_t* dst = prod.data() + (i + j) * w;
      sub_->add_raw(dst, tmp.data(), dst);
    }
  }
  for (std::size_t k = 2 * n - 1; k-- > n;) {
    const std::uint32_t* c = prod.data() + k * w;
    if (all_zero(c, w)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t* m = modulus_[j].digits_.data();
      if (all_zero(m, w)) continue;
      sub_->mul_raw(c, m, tmp.data());
      std::uint32_t* dst = prod.data() + (k - n + j) * w;
      sub_->sub_raw(dst, tmp.data(), dst);
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n * w), out);
}

void FiniteField::frob_raw(const std::uint32_t* a, std::uint32_t* out) const {
  if (!sub_) {
    out[0] = a[0];
    return;
  }
  const std::uint64_t p = p_;
  boost::container::small_vector<std::uint64_t, 32> acc(width_, 0);
  for (std::size_t k = 0; k < width_; ++k) {
    if (a[k] == 0) continue;
    const Digits& img = frob_images_[k];
    for (std::size_t i = 0; i < width_; ++i) acc[i] = (acc[i] + static_cast<std::uint64_t>(a[k]) * img[i]) % p;
  }
  for (std::size_t i = 0; i < width_; ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
}

Fe FiniteField::pow_small(const Fe& x, std::uint64_t e) const {
  Fe result = one();
  Fe base = x;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace sspoly
