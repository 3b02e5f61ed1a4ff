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

#include "sspoly/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "sspoly/error.hpp"

namespace sspoly {

namespace {

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPolyZ MPolyZ::constant(const BigInt& c) { return monomial(c, {}); }

MPolyZ MPolyZ::variable(unsigned index) { return monomial(1, {{index, 1}}); }

MPolyZ MPolyZ::monomial(const BigInt& c, Monomial m) {
  std::sort(m.begin(), m.end());
  Monomial merged;
  for (const auto& [v, e] : m) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += e;
    } else {
      merged.emplace_back(v, e);
    }
  }
  MPolyZ out;
  out.add_term(merged, c);
  return out;
}

BigInt MPolyZ::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint64_t MPolyZ::total_degree() const {
  std::uint64_t best = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t deg = 0;
    for (const auto& ve : m) deg += ve.second;
    best = std::max(best, deg);
  }
  return best;
}

void MPolyZ::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPolyZ MPolyZ::operator-() const {
  MPolyZ out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPolyZ& MPolyZ::operator+=(const MPolyZ& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MPolyZ& MPolyZ::operator-=(const MPolyZ& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MPolyZ operator*(const MPolyZ& a, const MPolyZ& b) {
  MPolyZ out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(mul_monomials(ma, mb), ca * cb);
  }
  return out;
}

MPolyZ operator*(const BigInt& c, const MPolyZ& a) {
  MPolyZ out;
  if (c == 0) return out;
  for (const auto& [m, v] : a.terms_) out.terms_.emplace(m, c * v);
  return out;
}

MPolyZ MPolyZ::pow(std::uint64_t e) const {
  MPolyZ result = constant(1);
  MPolyZ base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MPolyZ MPolyZ::reduce_mod(const BigInt& m) const {
  if (m <= 0) fail(ErrorCode::kInvalidArgument, "modulus must be positive");
  MPolyZ out;
  for (const auto& [mono, c] : terms_) {
    BigInt r = c % m;
    if (r < 0) r += m;
    if (r != 0) out.terms_.emplace(mono, r);
  }
  return out;
}

Fe MPolyZ::eval(std::span<const Fe> values) const {
  if (values.empty()) fail(ErrorCode::kInvalidArgument, "no evaluation point");
  const FiniteField& field = values.front().field();
  Fe acc = field.zero();
  for (const auto& [mono, c] : terms_) {
    Fe term = field.from_int(c);
    for (const auto& [v, e] : mono) {
      if (v >= values.size()) fail(ErrorCode::kInvalidArgument, "missing value for X_" + std::to_string(v));
      term *= values[v].pow(BigInt(e));
    }
    acc += term;
  }
  return acc;
}

std::string MPolyZ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool show_coeff = mag != 1 || mono.empty();
    if (show_coeff) os << mag;
    bool first_var = true;
    for (const auto& [v, e] : mono) {
      if (show_coeff || !first_var) os << "*";
      first_var = false;
      os << "X" << v;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace sspoly
