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

#include "sspoly/sspoly.h"

#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "sspoly/error.hpp"
#include "sspoly/report.hpp"
#include "sspoly/ssformula.hpp"
#include "sspoly/tower.hpp"
#include "sspoly/towercert.hpp"

struct sspoly_config {
  sspoly::RunConfig run;
};

struct sspoly_bundle {
  std::string json;
  std::string csv;
  bool passed = false;
};

struct sspoly_tower {
  std::shared_ptr<const sspoly::FieldTower> tower;
  std::string hpoly_json;
};

namespace {

thread_local std::string g_last_error;

sspoly_status fail_with(sspoly_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
sspoly_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SSPOLY_OK;
  } catch (const sspoly::Error& e) {
    return fail_with(static_cast<sspoly_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(SSPOLY_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(SSPOLY_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_with(SSPOLY_ERR_INTERNAL, "unknown exception");
  }
}

sspoly_status null_arg(const char* name) {
  return fail_with(SSPOLY_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

sspoly_bundle* wrap(sspoly::Bundle&& b) {
  auto* out = new sspoly_bundle;
  out->json = b.json.dump(2) + "\n";
  out->csv = std::move(b.csv);
  out->passed = b.passed;
  return out;
}

std::vector<std::string> split_checks(const char* checks) {
  std::vector<std::string> out;
  if (checks == nullptr) return out;
  std::stringstream ss(checks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

extern "C" {

const char* sspoly_version(void) { return "0.1.0"; }

const char* sspoly_status_name(sspoly_status status) {
  if (status == SSPOLY_OK) return "OK";
  if (status < SSPOLY_ERR_INVALID_ARGUMENT || status > SSPOLY_ERR_INTERNAL) return "Unknown";
  return sspoly::error_code_name(static_cast<sspoly::ErrorCode>(status)).data();
}

const char* sspoly_last_error(void) { return g_last_error.c_str(); }

sspoly_status sspoly_config_create(sspoly_config** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new sspoly_config; });
}

void sspoly_config_destroy(sspoly_config* config) { delete config; }

sspoly_status sspoly_config_set_q(sspoly_config* config, uint64_t q) {
  if (config == nullptr) return null_arg("config");
  return guarded([&] {
    sspoly::BasePrimePower::from_q(q);
    config->run.q = q;
  });
}

sspoly_status sspoly_config_set_p(sspoly_config* config, const char* text) {
  if (config == nullptr) return null_arg("config");
  if (text == nullptr) return null_arg("text");
  config->run.p_text = text;
  return SSPOLY_OK;
}

sspoly_status sspoly_config_set_nmax(sspoly_config* config, unsigned nmax) {
  if (config == nullptr) return null_arg("config");
  if (nmax > sspoly::kMaxTowerLevel) return fail_with(SSPOLY_ERR_INVALID_ARGUMENT, "nmax is limited to 64");
  config->run.n_max = nmax;
  return SSPOLY_OK;
}

sspoly_status sspoly_config_set_checks(sspoly_config* config, const char* checks) {
  if (config == nullptr) return null_arg("config");
  return guarded([&] { config->run.checks = split_checks(checks); });
}

sspoly_status sspoly_config_set_scan_cap(sspoly_config* config, uint64_t cap) {
  if (config == nullptr) return null_arg("config");
  if (cap == 0) return fail_with(SSPOLY_ERR_INVALID_ARGUMENT, "scan cap must be positive");
  config->run.scan_cap = cap;
  return SSPOLY_OK;
}

sspoly_status sspoly_config_set_jobs(sspoly_config* config, unsigned jobs) {
  if (config == nullptr) return null_arg("config");
  if (jobs == 0) return fail_with(SSPOLY_ERR_INVALID_ARGUMENT, "jobs must be positive");
  config->run.jobs = jobs;
  return SSPOLY_OK;
}

sspoly_status sspoly_config_set_timing(sspoly_config* config, int enabled) {
  if (config == nullptr) return null_arg("config");
  config->run.timing = enabled != 0;
  return SSPOLY_OK;
}

sspoly_status sspoly_run_hpoly(const sspoly_config* config, sspoly_bundle** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  if (config == nullptr) return null_arg("config");
  return guarded([&] { *out = wrap(sspoly::run_hpoly(config->run)); });
}

sspoly_status sspoly_run_keylemma(unsigned dmax, sspoly_bundle** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = wrap(sspoly::run_keylemma(dmax)); });
}

sspoly_status sspoly_run_tower(const sspoly_config* config, sspoly_bundle** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  if (config == nullptr) return null_arg("config");
  return guarded([&] { *out = wrap(sspoly::run_tower(config->run)); });
}

sspoly_status sspoly_run_sweep(const uint64_t* qs, size_t nq, const unsigned* ds, size_t nd,
                               const sspoly_config* config, sspoly_bundle** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  if (config == nullptr) return null_arg("config");
  if ((qs == nullptr && nq > 0) || (ds == nullptr && nd > 0)) return null_arg("qs/ds");
  return guarded([&] {
    const std::vector<std::uint64_t> q_list(qs, qs + nq);
    const std::vector<unsigned> d_list(ds, ds + nd);
    *out = wrap(sspoly::run_sweep(q_list, d_list, config->run));
  });
}

int sspoly_bundle_passed(const sspoly_bundle* bundle) { return bundle != nullptr && bundle->passed ? 1 : 0; }

const char* sspoly_bundle_json(const sspoly_bundle* bundle) { return bundle ? bundle->json.c_str() : ""; }

const char* sspoly_bundle_csv(const sspoly_bundle* bundle) { return bundle ? bundle->csv.c_str() : ""; }

void sspoly_bundle_destroy(sspoly_bundle* bundle) { delete bundle; }

sspoly_status sspoly_tower_create(uint64_t q, const char* p_text, sspoly_tower** out) {
  if (out == nullptr) return null_arg("out");
  *out = nullptr;
  if (p_text == nullptr) return null_arg("p_text");
  return guarded([&] {
    auto t = std::make_unique<sspoly_tower>();
    t->tower = sspoly::FieldTower::build(q, sspoly::parse_p_of_T(q, p_text));
    *out = t.release();
  });
}

void sspoly_tower_destroy(sspoly_tower* tower) { delete tower; }

unsigned sspoly_tower_degree(const sspoly_tower* tower) { return tower ? tower->tower->d() : 0; }

sspoly_status sspoly_tower_ss_degree(const sspoly_tower* tower, uint64_t* out) {
  if (tower == nullptr) return null_arg("tower");
  if (out == nullptr) return null_arg("out");
  const sspoly::BigInt deg = tower->tower->ss_degree();
  if (deg > UINT64_MAX) return fail_with(SSPOLY_ERR_CAP_EXCEEDED, "degree exceeds 64 bits");
  *out = static_cast<uint64_t>(deg);
  return SSPOLY_OK;
}

sspoly_status sspoly_tower_hpoly_json(sspoly_tower* tower, const char** out) {
  if (tower == nullptr) return null_arg("tower");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    if (tower->hpoly_json.empty()) {
      tower->hpoly_json = sspoly::poly_to_json(sspoly::H_lambda(*tower->tower).H).dump();
    }
    *out = tower->hpoly_json.c_str();
  });
}

}  // extern "C"
