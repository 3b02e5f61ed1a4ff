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

#ifndef SSPOLY_ERROR_HPP
#define SSPOLY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sspoly {

/// Failure categories shared by the C++ core and the C API status codes.
/// The numeric values are part of the C ABI (see sspoly.h); append only.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kNotIrreducible = 2,
  kIdealIsT = 3,
  kNotMonic = 4,
  kLevelMismatch = 5,
  kSearchSpaceTooLarge = 6,
  kRingMismatch = 7,
  kSymbolicCoefficients = 8,
  kKTooLarge = 9,
  kCapExceeded = 10,
  kEvenCharacteristic = 11,
  kIndexAtD = 12,
  kBracketVanishes = 13,
  kNotInOmega = 14,
  kSplitDefect = 15,
  kNonIntegerGenus = 16,
  kInternal = 17,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Internal consistency check; a failure means an arithmetic bug, not bad input.
inline void ensure(bool cond, const char* what) {
  if (!cond) fail(ErrorCode::kInternal, what);
}

}  // namespace sspoly

#endif  // SSPOLY_ERROR_HPP
