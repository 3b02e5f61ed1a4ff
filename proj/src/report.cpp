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

#include "sspoly/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "sspoly/error.hpp"
#include "sspoly/mpoly.hpp"
#include "sspoly/ssformula.hpp"
#include "sspoly/tower.hpp"
#include "sspoly/towercert.hpp"

namespace sspoly {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kHpolyChecks{"terms", "routes", "properties", "jcount", "period"};
const std::vector<std::string> kTowerChecks{"omega", "splitting", "expansion", "ratio", "covering", "modular"};

std::set<std::string> resolve_checks(const std::vector<std::string>& requested, const std::vector<std::string>& known,
                                     const std::vector<std::string>& foreign) {
  if (requested.empty()) return {known.begin(), known.end()};
  std::set<std::string> out;
  for (const auto& c : requested) {
    if (std::find(known.begin(), known.end(), c) != known.end()) {
      out.insert(c);
    } else if (std::find(foreign.begin(), foreign.end(), c) == foreign.end()) {
      fail(ErrorCode::kInvalidArgument, "unknown check group '" + c + "'");
    }
  }
  return out;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}
  template <class F>
  auto time(const char* name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto guard = [&] {
      if (!enabled_) return;
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      timings_[name] = ms;
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      guard();
    } else {
      auto r = f();
      guard();
      return r;
    }
  }
  void attach(json& j) const {
    if (enabled_) j["timing_ms"] = timings_;
  }

 private:
  bool enabled_;
  json timings_ = json::object();
};

json header(const char* command, const RunConfig& config, const FieldTower& tower) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["q"] = config.q;
  j["p_of_T"] = fq_poly_codes(tower.ideal().p_of_T);
  j["d"] = tower.d();
  return j;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

std::string join_codes(const std::vector<std::uint64_t>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(codes[i]);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> parse_p_of_T(std::uint64_t q, const std::string& text) {
  if (text.rfind("auto:", 0) == 0) {
    const std::string rest = text.substr(5);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 4) {
      fail(ErrorCode::kInvalidArgument, "auto:d needs a positive integer degree");
    }
    const int d = std::stoi(rest);
    if (d < 1) fail(ErrorCode::kInvalidArgument, "auto:d needs a positive integer degree");
    return auto_ideal_codes(q, static_cast<unsigned>(d));
  }
  std::vector<std::uint64_t> codes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18) {
      fail(ErrorCode::kInvalidArgument, "bad coefficient '" + item + "' in p(T)");
    }
    codes.push_back(std::stoull(item));
  }
  if (codes.empty()) fail(ErrorCode::kInvalidArgument, "p(T) has no coefficients");
  return codes;
}

json fe_to_json(const Fe& x) {
  const FiniteField& f = x.field();
  std::size_t chunk = 1;
  switch (f.level()) {
    case Level::kPrime: chunk = 1; break;
    case Level::kBase: chunk = f.width(); break;
    case Level::kMid: chunk = f.sub()->width(); break;
    case Level::kTop: chunk = f.sub()->sub()->width(); break;
  }
  json coeffs = json::array();
  const auto digits = x.digits();
  for (std::size_t i = 0; i < digits.size(); i += chunk) {
    coeffs.push_back(std::vector<std::uint32_t>(digits.begin() + i, digits.begin() + i + chunk));
  }
  return {{"level", level_name(f.level())}, {"coeffs", coeffs}};
}

json poly_to_json(const Poly& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(fe_to_json(c)["coeffs"]);
  return out;
}

json pair_to_json(const PartitionPair& pair) { return {{"S1", pair.S1}, {"S2", pair.S2}}; }

Bundle run_hpoly(const RunConfig& config) {
  const auto checks = resolve_checks(config.checks, kHpolyChecks, kTowerChecks);
  const auto codes = parse_p_of_T(config.q, config.p_text);
  auto tower = FieldTower::build(config.q, codes);
  Stopwatch sw(config.timing);
  const unsigned d = tower->d();

  Bundle b;
  json& j = b.json;
  j = header("hpoly", config, *tower);
  const SsPolynomial ss = sw.time("explicit", [&] { return H_lambda(*tower); });
  j["degree"] = ss.H.degree().value();
  j["H_coeffs"] = poly_to_json(ss.H);
  bool pass = true;
  std::vector<std::pair<std::string, bool>> rows;

  if (checks.count("terms")) {
    json terms = json::array();
    for (const auto& t : explicit_terms(static_cast<int>(d))) terms.push_back(format_term(t));
    j["terms"] = terms;
    j["partition_count"] = terms.size();
  }
  if (checks.count("routes")) {
    json compared = json::array({"explicit"});
    json agree = json::array({"explicit"});
    auto consider = [&](Route r, const Poly& h) {
      compared.push_back(route_name(r));
      if (h == ss.H) agree.push_back(route_name(r));
    };
    sw.time("symbolic", [&] { consider(Route::kSymbolic, H_symbolic(tower).H); });
    sw.time("recursion", [&] { consider(Route::kRecursion, H_from_b(*tower, Route::kRecursion).H); });
    if (d <= kDefaultSubsetCap) {
      sw.time("closed_form", [&] { consider(Route::kClosedForm, H_from_b(*tower, Route::kClosedForm).H); });
    }
    const bool ok = compared.size() == agree.size();
    j["routes_compared"] = compared;
    j["routes_agree"] = agree;
    rows.emplace_back("routes", ok);
    pass = pass && ok;
  }
  if (checks.count("properties")) {
    const auto rep = sw.time("properties", [&] { return property_suite(tower, ss, config.scan_cap); });
    j["degree_ok"] = rep.degree_ok;
    j["h0_ok"] = rep.h0_ok;
    j["separable"] = rep.separable;
    j["roots_in_Fp2"] = rep.roots_in_Fp2;
    j["substituted_root_count"] = rep.substituted_root_count;
    j["h_roots_in_top"] = rep.h_roots_in_top;
    j["composite_separable"] = rep.composite_separable;
    j["minus_alpha_ok"] = rep.minus_alpha_ok;
    j["minus_alpha_is_root"] = rep.minus_alpha_is_root;
    j["divisibility_ok"] = rep.divisibility_ok;
    j["collapse_ok"] = rep.collapse_ok;
    for (const char* k : {"degree_ok", "h0_ok", "separable", "roots_in_Fp2", "h_roots_in_top", "composite_separable",
                          "minus_alpha_ok", "divisibility_ok", "collapse_ok"}) {
      rows.emplace_back(k, j[k].get<bool>());
    }
    pass = pass && rep.passed();
  }
  if (checks.count("jcount")) {
    const auto r = sw.time("jcount", [&] { return ss_count_by_j(*tower, ss, config.scan_cap); });
    j["ss_j_count"] = {{"count", r.j_count}, {"expected", r.expected}, {"roots", r.root_count}, {"fibers_ok", r.fibers_ok}};
    rows.emplace_back("ss_j_count", r.passed());
    pass = pass && r.passed();
  }
  if (checks.count("period")) {
    if (tower->p() == 2) {
      j["truncated_period"] = {{"skipped", "even characteristic"}};
    } else {
      const auto ctx = make_period_context(*tower);
      const auto r = sw.time("period", [&] { return truncated_period_check(*tower, ctx); });
      j["truncated_period"] = {{"delta", fe_to_json(ctx.delta)},
                               {"congruence", r.congruence},
                               {"a_routes_agree", r.a_routes_agree},
                               {"a_matches_b", r.a_matches_b},
                               {"xi_consistent", r.xi_consistent}};
      rows.emplace_back("truncated_period", r.passed());
      pass = pass && r.passed();
    }
  }
  j["passed"] = pass;
  sw.attach(j);
  b.passed = pass;
  std::ostringstream csv;
  csv << "check,passed\n";
  for (const auto& [k, v] : rows) csv << k << "," << csv_bool(v) << "\n";
  b.csv = csv.str();
  return b;
}

Bundle run_keylemma(unsigned d_max) {
  if (d_max > kMaxKeylemmaD) fail(ErrorCode::kInvalidArgument, "keylemma is limited to dmax <= 8");
  Bundle b;
  json& j = b.json;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "keylemma";
  j["dmax"] = d_max;
  json levels = json::array();
  std::ostringstream csv;
  csv << "d,pairs,failures,passed\n";
  bool pass = true;
  std::size_t total = 0;
  for (unsigned d = 1; d <= d_max; ++d) {
    const auto pairs = enumerate_P(static_cast<int>(d));
    std::size_t failures = 0;
    json list = json::array();
    for (const auto& pair : pairs) {
      if (!keylemma_check(pair)) ++failures;
      list.push_back(pair_to_json(pair));
    }
    total += pairs.size();
    pass = pass && failures == 0;
    levels.push_back({{"d", d}, {"pairs", pairs.size()}, {"failures", failures}, {"pair_list", list}});
    csv << d << "," << pairs.size() << "," << failures << "," << csv_bool(failures == 0) << "\n";
  }
  j["levels"] = levels;
  j["total_pairs"] = total;
  if (d_max >= 5) {
    const PartitionPair pair{{0}, {1, 3}, 5};
    const auto sides = keylemma_sides(pair);
    const MPolyZ x5 = MPolyZ::variable(5);
    const bool matches = sides.lhs == (x5 - MPolyZ::variable(2)) * (x5 - MPolyZ::variable(4));
    j["example"] = {{"pair", pair_to_json(pair)}, {"lhs", sides.lhs.to_string()}, {"matches", matches}};
    pass = pass && matches;
  }
  j["passed"] = pass;
  b.passed = pass;
  b.csv = csv.str();
  return b;
}

Bundle run_tower(const RunConfig& config) {
  auto checks = resolve_checks(config.checks, kTowerChecks, kHpolyChecks);
  if (config.n_max > kMaxTowerLevel) fail(ErrorCode::kInvalidArgument, "n_max is limited to 64");
  const auto codes = parse_p_of_T(config.q, config.p_text);
  auto tower = FieldTower::build(config.q, codes);
  Stopwatch sw(config.timing);
  Bundle b;
  json& j = b.json;
  j = header("tower", config, *tower);
  j["n_max"] = config.n_max;
  const SsPolynomial ss = H_lambda(*tower);
  bool pass = true;

  const bool need_omega = checks.count("omega") || checks.count("splitting") || checks.count("ratio") ||
                          checks.count("covering");
  std::optional<OmegaSet> omega;
  if (need_omega) {
    omega = sw.time("omega", [&] { return omega_compute(*tower, ss, config.scan_cap); });
    json elems = json::array();
    for (const auto& s : omega->elements) elems.push_back(fe_to_json(s));
    j["omega"] = {{"size", omega->elements.size()},
                  {"expected", to_string(tower->ss_degree() * config.q)},
                  {"contains_minus_one", omega->contains(-tower->top().one())},
                  {"elements", elems}};
  }
  if (checks.count("splitting")) {
    json witnesses = json::array();
    sw.time("splitting", [&] {
      SplittingSolver solver(*tower, config.scan_cap);
      for (const auto& a : omega->elements) {
        json sols = json::array();
        for (const auto& s : solver.step(*omega, a)) sols.push_back(fe_to_json(s));
        witnesses.push_back({{"a", fe_to_json(a)}, {"solutions", sols}});
      }
    });
    j["splitting"] = {{"ok", true}, {"witnesses", witnesses}};
  }
  if (checks.count("expansion")) {
    const bool ok = sw.time("expansion", [&] { return omega_expansion_check(*tower, ss); });
    j["expansion"] = ok;
    pass = pass && ok;
  }
  std::ostringstream csv;
  csv << "n,N_lower,genus,ratio_num,ratio_den,ratio_decimal,target\n";
  if (checks.count("ratio")) {
    const auto rows = ratio_table(config.q, omega->elements.size(), config.n_max);
    const BigInt target = dv_bound(config.q, tower->d());
    json table = json::array();
    bool monotone = true;
    std::optional<BigRational> prev_gap;
    for (const auto& r : rows) {
      const BigRational gap = r.ratio - BigRational(target);
      const std::string num = to_string(boost::multiprecision::numerator(r.ratio));
      const std::string den = to_string(boost::multiprecision::denominator(r.ratio));
      table.push_back({{"n", r.n},
                       {"N_lower", to_string(r.N_lower)},
                       {"genus", to_string(r.genus)},
                       {"ratio_num", num},
                       {"ratio_den", den},
                       {"ratio_decimal", r.ratio_decimal},
                       {"gap_decimal", to_decimal(gap)}});
      csv << r.n << "," << r.N_lower << "," << r.genus << "," << num << "," << den << "," << r.ratio_decimal << ","
          << target << "\n";
      if (r.n >= 4) {
        const BigRational abs_gap = gap < 0 ? BigRational(-gap) : gap;
        if (prev_gap && !(abs_gap < *prev_gap)) monotone = false;
        prev_gap = abs_gap;
      }
    }
    j["target"] = to_string(target);
    j["ratio_table"] = table;
    j["gap_decreasing"] = monotone;
    pass = pass && monotone;
  }
  if (checks.count("covering")) {
    const bool ok = sw.time("covering", [&] { return covering_consistency_check(*tower, ss, *omega); });
    j["covering"] = ok;
    pass = pass && ok;
  }
  if (checks.count("modular")) {
    const bool ok = sw.time("modular", [&] { return modular_relation_check(config.q); });
    j["modular_relation"] = ok;
    pass = pass && ok;
  }
  j["passed"] = pass;
  sw.attach(j);
  b.passed = pass;
  b.csv = csv.str();
  return b;
}

Bundle run_sweep(const std::vector<std::uint64_t>& qs, const std::vector<unsigned>& ds, const RunConfig& config) {
  if (qs.empty() || ds.empty()) fail(ErrorCode::kInvalidArgument, "sweep needs at least one q and one d");
  struct Cell {
    std::uint64_t q;
    unsigned d;
    std::vector<std::uint64_t> codes;
    bool hpoly = false;
    bool tower = false;
    std::string error;
  };
  resolve_checks(config.checks, kHpolyChecks, kTowerChecks);
  std::vector<Cell> cells;
  for (auto q : qs) {
    BasePrimePower::from_q(q);
    for (auto d : ds) {
      if (d == 0) fail(ErrorCode::kInvalidArgument, "sweep degrees must be positive");
      cells.push_back({q, d, {}, false, false, {}});
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      Cell& c = cells[i];
      RunConfig cfg = config;
      cfg.q = c.q;
      cfg.p_text = "auto:" + std::to_string(c.d);
      cfg.timing = false;
      try {
        c.codes = parse_p_of_T(c.q, cfg.p_text);
        c.hpoly = run_hpoly(cfg).passed;
        c.tower = run_tower(cfg).passed;
      } catch (const Error& e) {
        c.error = std::string(error_code_name(e.code()));
      } catch (const std::exception&) {
        c.error = std::string(error_code_name(ErrorCode::kInternal));
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Bundle b;
  json& j = b.json;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "sweep";
  j["q_list"] = qs;
  j["d_list"] = ds;
  j["checks"] = config.checks;
  json matrix = json::array();
  std::ostringstream csv;
  csv << "q,d,p_of_T,hpoly,tower,error\n";
  bool pass = true;
  for (const auto& c : cells) {
    const bool ok = c.error.empty() && c.hpoly && c.tower;
    json cell = {{"q", c.q}, {"d", c.d}, {"p_of_T", c.codes}, {"hpoly", c.hpoly}, {"tower", c.tower}, {"passed", ok}};
    if (!c.error.empty()) cell["error"] = c.error;
    matrix.push_back(cell);
    csv << c.q << "," << c.d << ",\"" << join_codes(c.codes) << "\"," << csv_bool(c.hpoly) << "," << csv_bool(c.tower)
        << "," << c.error << "\n";
    pass = pass && ok;
  }
  j["cells"] = matrix;
  j["passed"] = pass;
  b.passed = pass;
  b.csv = csv.str();
  return b;
}

}  // namespace sspoly
