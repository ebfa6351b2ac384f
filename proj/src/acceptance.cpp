// Copyright 2026 The ctq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctq/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include <json.hpp>

#include "ctq/bounds.hpp"
#include "ctq/measures.hpp"
#include "ctq/monogamy.hpp"
#include "ctq/states.hpp"

namespace ctq {

namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

class Recorder {
 public:
  Recorder(int id, std::string name) {
    result_.id = id;
    result_.name = std::move(name);
  }

  /// measured <= limit
  void at_most(const std::string& label, double measured, double limit) {
    add(label, measured, "<= " + fmt(limit), measured <= limit);
  }
  void at_least(const std::string& label, double measured, double limit) {
    add(label, measured, ">= " + fmt(limit), measured >= limit);
  }
  void within(const std::string& label, double measured, double lo, double hi) {
    add(label, measured, "in [" + fmt(lo) + ", " + fmt(hi) + "]", measured >= lo && measured <= hi);
  }
  void add(const std::string& label, double measured, std::string expected, bool ok) {
    // NaN never satisfies a comparison, so it fails every check above.
    result_.checks.push_back(SubCheck{label, measured, std::move(expected), ok && std::isfinite(measured)});
  }
  CriterionResult take(double seconds) {
    result_.seconds = seconds;
    return std::move(result_);
  }

 private:
  CriterionResult result_;
};

// 50 evenly spaced points in (lo, hi].
std::vector<double> open_closed_points(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 1; i <= count; ++i) out.push_back(lo + (hi - lo) * static_cast<double>(i) / count);
  return out;
}

void criterion_isotropic_d2_q3(Recorder& r, const AcceptanceOptions& o) {
  const ConvexCurve env = isotropic_envelope(3.0, 2, o.grid_step);
  double err = 0.0;
  double bound_gap = 0.0;
  for (double f : open_closed_points(0.5, 1.0, 50)) {
    const double value = ctq_isotropic(env, f, 3.0, 2);
    const double expected = (2.0 * f - 1.0) * (2.0 * f - 1.0);
    err = std::max(err, std::abs(value - expected));
    const double bound = lower_bound_thm2(isotropic(f, 2), 4.0).lower_bound;
    bound_gap = std::max(bound_gap, std::abs(value - bound));
  }
  r.at_most("max_abs_err_vs_(2F-1)^2", err, 1e-10);
  r.at_most("max_abs_gap_vs_q4_bound", bound_gap, 1e-9);
}

void criterion_isotropic_d2_q4(Recorder& r, const AcceptanceOptions& o) {
  const ConvexCurve env = isotropic_envelope(4.0, 2, o.grid_step);
  double err = 0.0;
  double violation = -1.0;
  for (double f : open_closed_points(0.5, 1.0, 50)) {
    const double value = ctq_isotropic(env, f, 4.0, 2);
    const double s = 2.0 * f - 1.0;
    err = std::max(err, std::abs(value - (7.0 + 4.0 * f * (1.0 - f)) / 7.0 * s * s));
    violation = std::max(violation, lower_bound_thm2(isotropic(f, 2), 4.0).lower_bound - value);
  }
  r.at_most("max_abs_err_vs_closed_form", err, 1e-10);
  r.at_most("max(bound-value)", violation, 1e-9);
  for (double f : {0.5, 1.0}) {
    const double gap = std::abs(ctq_isotropic(env, f, 4.0, 2) - lower_bound_thm2(isotropic(f, 2), 4.0).lower_bound);
    r.at_most("equality_gap_at_F=" + fmt(f), gap, 1e-9);
  }
}

void criterion_breakpoints(Recorder& r, const AcceptanceOptions& o) {
  const ConvexCurve e3 = isotropic_envelope(3.0, 3, o.grid_step);
  const ConvexCurve e4 = isotropic_envelope(4.0, 3, o.grid_step);
  auto last_chord = [](const ConvexCurve& c) -> std::optional<Chord> {
    if (c.chords().empty()) return std::nullopt;
    return c.chords().back();
  };
  const auto c3 = last_chord(e3);
  const auto c4 = last_chord(e4);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.within("d3_q3_breakpoint_F", c3 ? e3.grid()(c3->from) : nan, 0.93, 0.95);
  r.within("d3_q3_chord_slope", c3 ? c3->slope : nan, 2.21, 2.25);
  r.within("d3_q4_breakpoint_F", c4 ? e4.grid()(c4->from) : nan, 0.894, 0.914);
  const double target = 2.0658 * 0.95 - 1.06566;
  const double v = ctq_isotropic(e4, 0.95, 4.0, 3);
  r.at_most("d3_q4_|value(0.95)-" + fmt(target) + "|", std::abs(v - target), 2e-3);
}

void criterion_isotropic_bound_d3(Recorder& r, const AcceptanceOptions& o) {
  for (double q : {3.0, 4.0}) {
    const ConvexCurve env = isotropic_envelope(q, 3, o.grid_step);
    double violation = -1.0;
    double form_err = 0.0;
    for (double f : open_closed_points(1.0 / 3.0, 1.0, 200)) {
      const double bound = lower_bound_thm2(isotropic(f, 3), q).lower_bound;
      form_err = std::max(form_err, std::abs(bound - (3.0 * f - 1.0) * (3.0 * f - 1.0) / 4.0));
      violation = std::max(violation, bound - ctq_isotropic(env, f, q, 3));
    }
    r.at_most("q" + fmt(q) + "_max(bound-value)", violation, 1e-9);
    r.at_most("q" + fmt(q) + "_bound_vs_(3F-1)^2/4", form_err, 1e-9);
  }
}

void criterion_werner(Recorder& r, const AcceptanceOptions& o) {
  double err3 = 0.0;
  for (double w : open_closed_points(0.5, 1.0, 50)) err3 = std::max(err3, std::abs(zeta_werner(w, 3.0) - std::pow(2.0 * w - 1.0, 2)));
  r.at_most("max_abs_err_q3_vs_(2w-1)^2", err3, 1e-12);
  std::mt19937_64 rng(o.seed + 5);
  std::uniform_real_distribution<double> wdist(0.5, 1.0);
  std::uniform_real_distribution<double> qdist(2.0, 8.0);
  double err = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double w = std::max(std::nextafter(0.5, 1.0), wdist(rng));
    const double q = qdist(rng);
    err = std::max(err, std::abs(zeta_werner(w, q) - h_q(2.0 * w - 1.0, q)));
  }
  r.at_most("max_abs_err_vs_h_q(2w-1)", err, 1e-12);
}

void criterion_threshold(Recorder& r, const AcceptanceOptions&) {
  r.within("s_threshold", s_threshold(), 3.33802, 3.34002);
  const double g23 = stationary_second_derivative(3.0, 2);
  const double g24 = stationary_second_derivative(4.0, 2);
  const double g32 = stationary_second_derivative(2.0, 3);
  r.add("g''(q=3,d=2)", g23, "< 0", g23 < 0.0);
  r.add("g''(q=4,d=2)", g24, "> 0", g24 > 0.0);
  r.at_least("g''(q=2,d=3)", g32, 0.0);
}

void criterion_trace_norms(Recorder& r, const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed + 7);
  const std::array<std::pair<Index, Index>, 4> shapes{{{2, 2}, {2, 3}, {3, 3}, {3, 4}}};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto [da, db] = shapes[static_cast<std::size_t>(i % 4)];
    const DimensionSignature sig{da, db};
    const PureState psi = random_pure(sig, rng);
    const double expected = std::pow(schmidt_spectrum(psi).values().cwiseSqrt().sum(), 2);
    const ComplexMatrix rho = psi.density();
    const double pt = trace_norm(partial_transpose(rho, sig));
    const double re = trace_norm(realign(rho, sig));
    worst = std::max({worst, std::abs(pt - expected) / expected, std::abs(re - expected) / expected});
  }
  r.at_most("max_rel_err", worst, 1e-8);
}

void criterion_oracle(Recorder& r, const AcceptanceOptions& o) {
  double worst = 0.0;
  int points = 0;
  for (Index d : {2, 3, 4}) {
    for (double q : {2.0, 3.0, 4.0}) {
      for (double f : {0.4, 0.6, 0.8, 0.95}) {
        if (f <= 1.0 / static_cast<double>(d)) continue;
        OracleOptions opts;
        opts.seed = o.seed + static_cast<std::uint64_t>(points);
        const double oracle = oracle_min_schmidt(f, q, d, opts);
        worst = std::max(worst, std::abs(oracle - zeta_isotropic(f, q, d, false)));
        ++points;
      }
    }
  }
  r.add("grid_points", points, "= 33", points == 33);
  r.at_most("max_abs_err", worst, 1e-6);
}

void criterion_concavity(Recorder& r, const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed + 9);
  std::uniform_int_distribution<Index> ddist(2, 4);
  std::uniform_real_distribution<double> pdist(0.0, 1.0);
  std::uniform_real_distribution<double> qdist(2.0, 6.0);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const Index d = ddist(rng);
    const DimensionSignature sig{d};
    std::uniform_int_distribution<Index> rdist(1, d);
    const ComplexMatrix a = random_density(sig, rdist(rng), rng).matrix();
    const ComplexMatrix b = random_density(sig, rdist(rng), rng).matrix();
    const double p = pdist(rng);
    const double q = qdist(rng);
    const ComplexMatrix mix = p * a + (1.0 - p) * b;
    const double gap = total_concurrence_functional(mix, q) - p * total_concurrence_functional(a, q) -
                       (1.0 - p) * total_concurrence_functional(b, q);
    worst = std::min(worst, gap);
  }
  r.at_least("min_mixture_gap", worst, -1e-10);
}

void criterion_monogamy(Recorder& r, const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed + 10);
  const std::array<double, 3> qs{2.0, 2.5, 3.0};
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 700; ++i) {
    const DimensionSignature sig = i < 500 ? DimensionSignature{2, 2, 2} : DimensionSignature{2, 2, 2, 2};
    const MultipartiteState psi = random_multipartite(sig, rng);
    for (double q : qs) worst = std::min(worst, monogamy_check(psi, q, 1.0).residual);
  }
  r.at_least("min_residual_random_states", worst, -1e-9);

  const double a = std::sqrt(2.0 / 7.0);
  const std::array<double, 5> nu{a, 0.0, std::sqrt(1.0 / 7.0), a, a};
  double kmin = std::numeric_limits<double>::infinity();
  for (double q : qs)
    for (double ex : {1.0, 2.0, 3.0, 4.0}) {
      const Example2Result e = example2_K(nu, q, ex);
      kmin = std::min(kmin, e.k1 - e.k2);
    }
  r.at_least("min_K1-K2", kmin, 0.0);
  const Example2Result e = example2_K(nu, 2.0, 1.0);
  const double triple_err = std::max({std::abs(e.c_a_bc - 2.0 * std::sqrt(10.0) / 7.0),
                                      std::abs(e.c_ab - 2.0 * std::sqrt(2.0) / 7.0), std::abs(e.c_ac - 4.0 / 7.0)});
  r.at_most("example2_triple_err", triple_err, 1e-12);
}

void criterion_chain(Recorder& r, const AcceptanceOptions&) {
  double err = 0.0;
  double ac_err = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / 19.0;
    for (double q : {2.0, 3.0, 4.0}) {
      const ChainValues v = chain_ctq(theta, q);
      err = std::max(err, std::abs(v.a_bc - chain_ctq_from_state(theta, q)));
      ac_err = std::max(ac_err, std::abs(v.ac - 1.0));
    }
  }
  r.at_most("max_abs_err_A|BC_closed_vs_state", err, 1e-10);
  r.at_most("max_abs_err_AC_vs_1", ac_err, 0.0);
  double quarter = 0.0;
  for (double q : {2.0, 3.0, 4.0}) {
    const ChainValues v = chain_ctq(std::numbers::pi / 4.0, q);
    quarter = std::max({quarter, std::abs(v.a_bc - 1.0), std::abs(v.ab - 1.0), std::abs(v.ac - 1.0)});
  }
  r.at_most("pi/4_max_abs_err_vs_(1,1,1)", quarter, 1e-10);
}

void criterion_hq_kernel(Recorder& r, const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed + 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> qdist(2.0, 3.0);
  double worst = std::numeric_limits<double>::infinity();
  double equality = 0.0;
  for (int i = 0; i < 10000; ++i) {
    // Uniform on the quarter disc a^2 + b^2 <= 1.
    const double radius = std::sqrt(unit(rng));
    const double angle = unit(rng) * std::numbers::pi / 2.0;
    const double a = radius * std::cos(angle);
    const double b = radius * std::sin(angle);
    const double c = std::min(1.0, std::hypot(a, b));
    const double q = qdist(rng);
    worst = std::min(worst, h_q(c, q) - h_q(a, q) - h_q(b, q));
    for (double qe : {2.0, 3.0}) equality = std::max(equality, std::abs(h_q(c, qe) - h_q(a, qe) - h_q(b, qe)));
  }
  r.at_least("min_superadditivity_gap", worst, -1e-10);
  r.at_most("max_equality_gap_q2_q3", equality, 1e-10);
}

struct CommandOutput {
  int exit_code = -1;
  std::string text;
};

CommandOutput run_command(const std::string& command) {
  CommandOutput out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return out;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.text.append(buffer.data(), n);
  const int status = pclose(pipe);
  out.exit_code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

std::set<int> failed_ids(const std::string& text) {
  std::set<int> ids;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    int id = 0;
    if (std::sscanf(line.c_str(), "[FAIL] %d", &id) == 1) ids.insert(id);
  }
  return ids;
}

void criterion_mutation(Recorder& r, const AcceptanceOptions& o, const std::vector<CriterionResult>& clean) {
  const CommandOutput run = run_command(*o.mutant_command + " 2>&1");
  r.add("mutant_exit_code", run.exit_code, "!= 0", run.exit_code != 0);
  // The mutant must trip a criterion that this build passes, otherwise a red
  // criterion unrelated to the normalization would mask the mutation.
  int newly_failed = 0;
  for (int id : failed_ids(run.text)) {
    const auto it = std::find_if(clean.begin(), clean.end(), [&](const CriterionResult& c) { return c.id == id; });
    if (it != clean.end() && it->passed()) ++newly_failed;
  }
  r.at_least("criteria_failed_only_by_mutant", newly_failed, 1.0);
}

}  // namespace

bool CriterionResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.ok; });
}

std::string CriterionResult::failing_labels() const {
  std::string out;
  for (const SubCheck& c : checks) {
    if (c.ok) continue;
    if (!out.empty()) out += ',';
    out += c.label;
  }
  return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  using Body = std::function<void(Recorder&, const AcceptanceOptions&)>;
  const std::vector<std::tuple<int, const char*, Body>> table{
      {1, "isotropic_exact_d2_q3", criterion_isotropic_d2_q3},
      {2, "isotropic_exact_d2_q4", criterion_isotropic_d2_q4},
      {3, "envelope_breakpoints_d3", criterion_breakpoints},
      {4, "isotropic_bound_d3", criterion_isotropic_bound_d3},
      {5, "werner_closed_form", criterion_werner},
      {6, "threshold_s", criterion_threshold},
      {7, "trace_norm_identity", criterion_trace_norms},
      {8, "oracle_equivalence", criterion_oracle},
      {9, "spectral_concavity", criterion_concavity},
      {10, "qubit_monogamy", criterion_monogamy},
      {11, "chain_state_identities", criterion_chain},
      {12, "h_q_superadditivity", criterion_hq_kernel},
  };
  auto selected = [&](int id) {
    return options.only.empty() || std::find(options.only.begin(), options.only.end(), id) != options.only.end();
  };

  std::vector<CriterionResult> results;
  auto timed = [&](int id, const char* name, const std::function<void(Recorder&)>& body) {
    Recorder rec(id, name);
    const auto start = std::chrono::steady_clock::now();
    try {
      body(rec);
    } catch (const std::exception& e) {
      rec.add(std::string("exception: ") + e.what(), std::numeric_limits<double>::quiet_NaN(), "no exception", false);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    results.push_back(rec.take(elapsed.count()));
  };

  for (const auto& [id, name, body] : table)
    if (selected(id)) timed(id, name, [&](Recorder& r) { body(r, options); });
  if (options.mutant_command && selected(13))
    timed(13, "mutation_smoke", [&](Recorder& r) { criterion_mutation(r, options, results); });
  return results;
}

void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const CriterionResult& c : results) {
    out << (c.passed() ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << " |";
    for (const SubCheck& s : c.checks)
      out << ' ' << s.label << '=' << fmt(s.measured) << " (expected " << s.expected << (s.ok ? "" : ", FAILED") << ')';
    out << '\n';
  }
}

std::string acceptance_json(const std::vector<CriterionResult>& results) {
  nlohmann::json doc;
  doc["passed"] = all_passed(results);
  doc["criteria"] = nlohmann::json::array();
  for (const CriterionResult& c : results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const SubCheck& s : c.checks)
      checks.push_back({{"label", s.label},
                        {"measured", std::isfinite(s.measured) ? nlohmann::json(s.measured) : nlohmann::json(nullptr)},
                        {"expected", s.expected},
                        {"ok", s.ok}});
    doc["criteria"].push_back(
        {{"id", c.id}, {"name", c.name}, {"passed", c.passed()}, {"seconds", c.seconds}, {"checks", checks}});
  }
  return doc.dump(2) + "\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const CriterionResult& c) { return c.passed(); });
}

}  // namespace ctq
