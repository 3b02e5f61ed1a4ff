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

#ifndef SSPOLY_BIGINT_HPP
#define SSPOLY_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sspoly {

// Expression templates off: results are plain values, so auto and ?: behave.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                  boost::multiprecision::et_off>;

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

/// (q^n - 1)/(q - 1) = 1 + q + ... + q^{n-1}; zero for n = 0.
inline BigInt geometric_sum(const BigInt& q, std::uint64_t n) {
  BigInt sum = 0;
  BigInt term = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace sspoly

#endif  // SSPOLY_BIGINT_HPP
