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

#ifndef SSPOLY_REPORT_HPP
#define SSPOLY_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "sspoly/field.hpp"
#include "sspoly/partition.hpp"
#include "sspoly/poly.hpp"
#include "sspoly/twisted.hpp"

namespace sspoly {

inline constexpr int kSchemaVersion = 1;
inline constexpr unsigned kMaxKeylemmaD = 8;

/// Everything a pipeline run needs. `p_text` is "c0,c1,...,cd" (ascending
/// F_q element codes) or "auto:d".
struct RunConfig {
  std::uint64_t q = 2;
  std::string p_text = "auto:1";
  unsigned n_max = 12;
  /// Check groups to run; empty means all of them.
  std::vector<std::string> checks;
  std::uint64_t scan_cap = kDefaultScanCap;
  unsigned jobs = 1;
  /// Adds wall-clock timings, which makes output run-dependent.
  bool timing = false;
};

/// Coefficient codes from a p_text.
std::vector<std::uint64_t> parse_p_of_T(std::uint64_t q, const std::string& text);

/// Result of one command: a JSON document, a CSV rendering, and the verdict.
struct Bundle {
  nlohmann::ordered_json json;
  std::string csv;
  bool passed = false;
};

Bundle run_hpoly(const RunConfig& config);
Bundle run_keylemma(unsigned d_max);
Bundle run_tower(const RunConfig& config);
/// One hpoly + tower cell per (q, d) with p = auto:d; cells run on config.jobs threads.
Bundle run_sweep(const std::vector<std::uint64_t>& qs, const std::vector<unsigned>& ds, const RunConfig& config);

/// {"level": ..., "coeffs": [[F_p residues of one F_q coordinate], ...]}.
nlohmann::ordered_json fe_to_json(const Fe& x);
/// List of "coeffs" arrays, one per polynomial coefficient.
nlohmann::ordered_json poly_to_json(const Poly& f);
nlohmann::ordered_json pair_to_json(const PartitionPair& pair);

inline nlohmann::ordered_json tp_to_json(const TwistedPoly<Fe>& f) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(fe_to_json(c));
  return {{"tau_coeffs", coeffs}};
}

}  // namespace sspoly

#endif  // SSPOLY_REPORT_HPP
