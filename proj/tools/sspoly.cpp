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

// sspoly command-line front end. Talks to the library only through sspoly.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sspoly/sspoly.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct Options {
  std::uint64_t q = 2;
  std::vector<std::uint64_t> q_list;
  std::string p;
  std::vector<unsigned> d_list;
  unsigned nmax = 12;
  unsigned dmax = 6;
  std::string checks;
  std::string format = "json";
  std::string out;
  std::uint64_t scan_cap = std::uint64_t{1} << 24;
  unsigned jobs = 1;
  bool timing = false;
};

int report_error(sspoly_status s) {
  std::cerr << "error: " << sspoly_status_name(s) << " (" << static_cast<int>(s) << "): " << sspoly_last_error()
            << "\n";
  return kExitError;
}

class ConfigHandle {
 public:
  ConfigHandle() {
    if (sspoly_config_create(&c_) != SSPOLY_OK) c_ = nullptr;
  }
  ~ConfigHandle() { sspoly_config_destroy(c_); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
  sspoly_config* get() const { return c_; }

 private:
  sspoly_config* c_ = nullptr;
};

// Resolves --p / --d into a p(T) string for single-ideal commands.
std::string p_text_of(const Options& o) {
  if (!o.p.empty()) return o.p;
  if (!o.d_list.empty()) return "auto:" + std::to_string(o.d_list.front());
  return "auto:1";
}

sspoly_status configure(const Options& o, std::uint64_t q, sspoly_config* c) {
  sspoly_status s = SSPOLY_OK;
  if (c == nullptr) return SSPOLY_ERR_INTERNAL;
  if ((s = sspoly_config_set_q(c, q)) != SSPOLY_OK) return s;
  if ((s = sspoly_config_set_p(c, p_text_of(o).c_str())) != SSPOLY_OK) return s;
  if ((s = sspoly_config_set_nmax(c, o.nmax)) != SSPOLY_OK) return s;
  if ((s = sspoly_config_set_checks(c, o.checks.c_str())) != SSPOLY_OK) return s;
  if ((s = sspoly_config_set_scan_cap(c, o.scan_cap)) != SSPOLY_OK) return s;
  if ((s = sspoly_config_set_jobs(c, o.jobs)) != SSPOLY_OK) return s;
  return sspoly_config_set_timing(c, o.timing ? 1 : 0);
}

int emit(const Options& o, sspoly_bundle* bundle) {
  const char* text = o.format == "csv" ? sspoly_bundle_csv(bundle) : sspoly_bundle_json(bundle);
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << o.out << " for writing\n";
      sspoly_bundle_destroy(bundle);
      return kExitError;
    }
    f << text;
  }
  const bool passed = sspoly_bundle_passed(bundle) != 0;
  sspoly_bundle_destroy(bundle);
  if (!passed) std::cerr << "sspoly: one or more checks FAILED\n";
  return passed ? 0 : kExitCheckFailed;
}

template <class Run>
int finish(const Options& o, Run&& run) {
  sspoly_bundle* bundle = nullptr;
  const sspoly_status s = run(&bundle);
  if (s != SSPOLY_OK) return report_error(s);
  return emit(o, bundle);
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("SSPOLY_FORMAT")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output file; stdout when omitted")->envname("SSPOLY_OUT");
}

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--checks", o.checks, "Comma-separated check groups; all when omitted")->envname("SSPOLY_CHECKS");
  cmd->add_option("--scan-cap", o.scan_cap, "Largest exhaustive root scan allowed")
      ->envname("SSPOLY_SCAN_CAP")
      ->capture_default_str();
  cmd->add_option("--timing", o.timing, "Add wall-clock timings (output no longer reproducible)")
      ->envname("SSPOLY_TIMING")
      ->default_val(false);
}

void add_ideal_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "Size of the constant field F_q (a prime power)")
      ->envname("SSPOLY_Q")
      ->capture_default_str();
  auto* p = cmd->add_option("--p", o.p,
                            "p(T) as ascending F_q codes, \"1,0,1\" = 1 + T^2; or \"auto:d\"")
                ->envname("SSPOLY_P");
  cmd->add_option("--d", o.d_list, "Degree of p(T) when --p is omitted (auto selection)")
      ->envname("SSPOLY_D")
      ->expected(1)
      ->excludes(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supersingular polynomials of rank-2 Drinfeld modules and the X_0(T^n) tower"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sspoly_version()));
  app.footer(
      "Polynomials p(T) are given by their F_q element codes in ascending degree order.\n"
      "Exit status: 0 all checks passed, 1 a check failed, 2 invalid input or error.");

  Options o;

  auto* hpoly = app.add_subcommand("hpoly", "Supersingular polynomial H(lambda) for one ideal, with all checks");
  add_ideal_flags(hpoly, o);
  add_run_flags(hpoly, o);
  add_output_flags(hpoly, o);

  auto* keylemma = app.add_subcommand("keylemma", "Symbolic identity over all partition pairs of level <= dmax");
  keylemma->add_option("--dmax", o.dmax, "Largest level (at most 8)")
      ->envname("SSPOLY_DMAX")
      ->capture_default_str();
  add_output_flags(keylemma, o);

  auto* tower = app.add_subcommand("tower", "Omega, splitting, genus ratios and covering checks for X_0(T^n)");
  add_ideal_flags(tower, o);
  tower->add_option("--nmax", o.nmax, "Last tower level (at most 64)")
      ->envname("SSPOLY_NMAX")
      ->capture_default_str();
  add_run_flags(tower, o);
  add_output_flags(tower, o);

  auto* sweep = app.add_subcommand("sweep", "hpoly and tower over a grid of q and deg p(T)");
  sweep->add_option("--q", o.q_list, "Comma-separated q values")->delimiter(',')->required()->envname("SSPOLY_Q");
  sweep->add_option("--d", o.d_list, "Comma-separated degrees of p(T)")
      ->delimiter(',')
      ->required()
      ->envname("SSPOLY_D");
  sweep->add_option("--nmax", o.nmax, "Last tower level per cell")->envname("SSPOLY_NMAX")->capture_default_str();
  sweep->add_option("--jobs", o.jobs, "Cells computed in parallel")->envname("SSPOLY_JOBS")->capture_default_str();
  add_run_flags(sweep, o);
  add_output_flags(sweep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  ConfigHandle config;
  sspoly_config* c = config.get();

  if (*keylemma) return finish(o, [&](sspoly_bundle** b) { return sspoly_run_keylemma(o.dmax, b); });

  if (*sweep) {
    const sspoly_status s = configure(o, o.q_list.front(), c);
    if (s != SSPOLY_OK) return report_error(s);
    return finish(o, [&](sspoly_bundle** b) {
      return sspoly_run_sweep(o.q_list.data(), o.q_list.size(), o.d_list.data(), o.d_list.size(), c, b);
    });
  }

  const sspoly_status s = configure(o, o.q, c);
  if (s != SSPOLY_OK) return report_error(s);
  if (*hpoly) return finish(o, [&](sspoly_bundle** b) { return sspoly_run_hpoly(c, b); });
  return finish(o, [&](sspoly_bundle** b) { return sspoly_run_tower(c, b); });
}
