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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "sspoly/error.hpp"
#include "sspoly/report.hpp"
#include "sspoly/sspoly.h"
#include "sspoly/tower.hpp"
#include "test_util.hpp"

using namespace sspoly;
using json = nlohmann::ordered_json;

#define SSPOLY_MIRROR(c_name, cxx_name) \
  static_assert(static_cast<int>(c_name) == static_cast<int>(ErrorCode::cxx_name))
SSPOLY_MIRROR(SSPOLY_ERR_INVALID_ARGUMENT, kInvalidArgument);
SSPOLY_MIRROR(SSPOLY_ERR_NOT_IRREDUCIBLE, kNotIrreducible);
SSPOLY_MIRROR(SSPOLY_ERR_IDEAL_IS_T, kIdealIsT);
SSPOLY_MIRROR(SSPOLY_ERR_NOT_MONIC, kNotMonic);
SSPOLY_MIRROR(SSPOLY_ERR_LEVEL_MISMATCH, kLevelMismatch);
SSPOLY_MIRROR(SSPOLY_ERR_SEARCH_SPACE_TOO_LARGE, kSearchSpaceTooLarge);
SSPOLY_MIRROR(SSPOLY_ERR_RING_MISMATCH, kRingMismatch);
SSPOLY_MIRROR(SSPOLY_ERR_SYMBOLIC_COEFFICIENTS, kSymbolicCoefficients);
SSPOLY_MIRROR(SSPOLY_ERR_K_TOO_LARGE, kKTooLarge);
SSPOLY_MIRROR(SSPOLY_ERR_CAP_EXCEEDED, kCapExceeded);
SSPOLY_MIRROR(SSPOLY_ERR_EVEN_CHARACTERISTIC, kEvenCharacteristic);
SSPOLY_MIRROR(SSPOLY_ERR_INDEX_AT_D, kIndexAtD);
SSPOLY_MIRROR(SSPOLY_ERR_BRACKET_VANISHES, kBracketVanishes);
SSPOLY_MIRROR(SSPOLY_ERR_NOT_IN_OMEGA, kNotInOmega);
SSPOLY_MIRROR(SSPOLY_ERR_SPLIT_DEFECT, kSplitDefect);
SSPOLY_MIRROR(SSPOLY_ERR_NON_INTEGER_GENUS, kNonIntegerGenus);
SSPOLY_MIRROR(SSPOLY_ERR_INTERNAL, kInternal);
static_assert(SSPOLY_SCHEMA_VERSION == kSchemaVersion);

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

// Smallest sum c_i q^i over monic degree-d polynomials with c_0 != 0 that are
// linear or root-free in F_p, which is irreducibility for d <= 3.
std::vector<std::uint64_t> brute_auto(std::uint64_t p, unsigned d) {
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < d; ++i) limit *= p;
  for (std::uint64_t n = 0; n < limit; ++n) {
    std::vector<std::uint64_t> c;
    for (std::uint64_t r = n, i = 0; i < d; ++i, r /= p) c.push_back(r % p);
    c.push_back(1);
    if (c[0] == 0) continue;
    bool root = false;
    for (std::uint64_t x = 0; x < p && !root; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = c.size(); i-- > 0;) v = (v * x + c[i]) % p;
      root = v == 0;
    }
    if (d == 1 || !root) return c;
  }
  return {};
}

}  // namespace

TEST_CASE("parse_p_of_T") {
  CHECK(parse_p_of_T(3, "1,0,1") == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(parse_p_of_T(3, " 1, 0 ,1 ") == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(code_of([] { parse_p_of_T(3, ""); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { parse_p_of_T(3, "1,,1"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { parse_p_of_T(3, "auto:"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { parse_p_of_T(3, "auto:-2"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("auto:d agrees with a brute-force search for d <= 3") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned d = 1; d <= 3; ++d) {
      CAPTURE(p);
      CAPTURE(d);
      CHECK(parse_p_of_T(p, "auto:" + std::to_string(d)) == brute_auto(p, d));
    }
  }
}

TEST_CASE("auto:d always yields a valid ideal") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned d = 1; d <= 4; ++d) {
      const auto codes = parse_p_of_T(q, "auto:" + std::to_string(d));
      CHECK(codes.size() == d + 1);
      CHECK(FieldTower::build(q, codes)->d() == d);
    }
  }
}

TEST_CASE("field elements serialize one F_q coordinate per chunk") {
  auto tower = testing::tower_for(9, 2);
  const auto& top = tower->top();
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    const Fe x = top.random(rng);
    const json j = fe_to_json(x);
    CHECK(j["level"] == "top");
    REQUIRE(j["coeffs"].size() == 4);
    const auto digits = x.digits();
    std::size_t k = 0;
    for (const auto& chunk : j["coeffs"]) {
      REQUIRE(chunk.size() == 2);
      for (const auto& dgt : chunk) CHECK(dgt.get<std::uint32_t>() == digits[k++]);
    }
  }
  CHECK(fe_to_json(tower->base().from_index(5))["coeffs"] == json::parse("[[2,1]]"));
}

TEST_CASE("hpoly bundle verdict follows its checks") {
  RunConfig cfg;
  cfg.q = 5;
  cfg.p_text = "auto:2";
  const Bundle b = run_hpoly(cfg);
  CHECK(b.passed);
  CHECK(b.json["passed"] == true);
  CHECK(b.json["degree"] == 6);
  CHECK(b.json["H_coeffs"].size() == 7);
  CHECK(b.json["partition_count"] == 2);
  CHECK(b.json["terms"].size() == 2);
}

TEST_CASE("check groups select what runs") {
  RunConfig cfg;
  cfg.q = 3;
  cfg.p_text = "1,0,1";
  cfg.checks = {"terms", "omega"};
  const json j = run_hpoly(cfg).json;
  CHECK(j.contains("terms"));
  CHECK_FALSE(j.contains("routes_agree"));
  CHECK_FALSE(j.contains("truncated_period"));
  cfg.checks = {"nope"};
  CHECK(code_of([&] { run_hpoly(cfg); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { run_tower(cfg); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("tower csv") {
  RunConfig cfg;
  cfg.q = 3;
  cfg.p_text = "auto:1";
  cfg.n_max = 4;
  const Bundle b = run_tower(cfg);
  CHECK(b.passed);
  CHECK(b.csv.rfind("n,N_lower,genus,ratio_num,ratio_den,ratio_decimal,target\n", 0) == 0);
  CHECK(std::count(b.csv.begin(), b.csv.end(), '\n') == 5);
  CHECK(b.json["omega"]["size"] == 3 * (3 - 1) / (3 - 1));
  CHECK(b.json["omega"]["contains_minus_one"] == false);
}

TEST_CASE("keylemma bundle") {
  const Bundle b = run_keylemma(5);
  CHECK(b.passed);
  CHECK(b.json["total_pairs"] == 1 + 2 + 3 + 5 + 8);
  CHECK(b.json["example"]["matches"] == true);
  CHECK(run_keylemma(4).json.contains("example") == false);
  CHECK(code_of([] { run_keylemma(kMaxKeylemmaD + 1); }) == ErrorCode::kInvalidArgument);
}
