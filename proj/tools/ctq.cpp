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

// ctq: command-line front end for the total-concurrence library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ctq/acceptance.hpp"
#include "ctq/bounds.hpp"
#include "ctq/closedform.hpp"
#include "ctq/io.hpp"
#include "ctq/measures.hpp"
#include "ctq/monogamy.hpp"
#include "ctq/states.hpp"

namespace {

using nlohmann::json;
using namespace ctq;

constexpr double kMinStep = 1e-6;
constexpr double kMaxStep = 1e-1;
constexpr double kPurityTol = 1e-10;
constexpr double kFamilyTol = 1e-9;

struct Config {
  double q = 2.0;
  double alpha = 0.5;
  Index d = 2;
  std::optional<double> from;
  std::optional<double> to;
  double step = 0.01;
  std::vector<double> gamma{1.0};
  std::uint64_t seed = 7;
  bool raw = false;
  std::string out;
  std::string format;
  std::string state_path;
};

void check_step(double step, const char* what) {
  require(std::isfinite(step) && step >= kMinStep && step <= kMaxStep, ErrorCode::DomainError,
          std::string(what) + " must lie in [1e-6, 1e-1]");
}

// Envelope resolution, overridable through CTQ_GRID_STEP.
double envelope_step() {
  const char* env = std::getenv("CTQ_GRID_STEP");
  if (env == nullptr || *env == '\0') return kDefaultGridStep;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  require(end != env && *end == '\0', ErrorCode::ParseError, "CTQ_GRID_STEP is not a number");
  check_step(value, "CTQ_GRID_STEP");
  return value;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(cfg.out, text);
  }
}

std::vector<double> sweep(double from, double to, double step) {
  require(std::isfinite(from) && std::isfinite(to) && from <= to, ErrorCode::DomainError, "need from <= to");
  check_step(step, "--step");
  std::vector<double> xs;
  const auto n = static_cast<long>(std::floor((to - from) / step + 1e-9));
  for (long i = 0; i <= n; ++i) xs.push_back(std::min(to, from + static_cast<double>(i) * step));
  if (xs.back() < to - 1e-12) xs.push_back(to);
  return xs;
}

json bound_json(const BoundReport& b) {
  return json{{"ppt_norm", b.ppt_norm},
              {"realign_norm", b.realign_norm},
              {"lower_bound", b.lower_bound},
              {"q", b.q},
              {"d", b.d},
              {"entangled_by_ppt", b.entangled_by_ppt},
              {"entangled_by_realignment", b.entangled_by_realignment}};
}

json pure_json(const PureState& psi, const Config& cfg) {
  const SchmidtSpectrum lambda = schmidt_spectrum(psi);
  json j;
  j["kind"] = "exact";
  j["dims"] = psi.signature().dims();
  j["effective_dim"] = psi.effective_dim();
  j["q"] = cfg.q;
  j["alpha"] = cfg.alpha;
  j["schmidt"] = std::vector<double>(lambda.values().begin(), lambda.values().end());
  j["c_q"] = q_concurrence_pure(lambda, cfg.q);
  j["ctq_normalized"] = ctq_pure(psi, cfg.q).value;
  j["ctq_raw"] = ctq_pure_raw(psi, cfg.q).value;
  j["ct_alpha"] = ct_alpha_pure(psi, cfg.alpha);
  j["concurrence"] = concurrence_pure(psi);
  j["ctq"] = cfg.raw ? j["ctq_raw"] : j["ctq_normalized"];
  return j;
}

std::optional<PureState> as_pure(const DensityMatrix& rho) {
  if (!rho.signature().is_bipartite() || std::abs(rho.purity() - 1.0) > kPurityTol) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho.matrix());
  const ComplexVector top = eig.eigenvectors().col(rho.dim() - 1);
  return pure_from_amplitudes(top, rho.signature());
}

json measure_density(const DensityMatrix& rho, const Config& cfg) {
  const DimensionSignature& sig = rho.signature();
  require(sig.is_bipartite(), ErrorCode::UnsupportedState, "mixed states must be bipartite");
  if (auto psi = as_pure(rho)) {
    json j = pure_json(*psi, cfg);
    j["detected"] = "pure";
    return j;
  }

  json j;
  j["dims"] = sig.dims();
  j["q"] = cfg.q;
  const Index da = sig[0];
  const Index db = sig[1];
  const double scale = cfg.raw ? mu(std::min(da, db), cfg.q) : 1.0;

  if (da == db && da >= 2) {
    const double f = maximally_entangled_fidelity(rho.matrix(), da);
    if ((rho.matrix() - isotropic(f, da).matrix()).cwiseAbs().maxCoeff() < kFamilyTol) {
      j["kind"] = "exact";
      j["detected"] = "isotropic";
      j["fidelity"] = f;
      j["ctq"] = ctq_isotropic(f, cfg.q, da, envelope_step(), !cfg.raw);
    }
  }
  if (da == 2 && db == 2) {
    const double c = wootters_concurrence(rho);
    j["wootters_concurrence"] = c;
    const double w = antisymmetric_weight(rho.matrix(), 2);
    const bool is_werner = (rho.matrix() - werner(w, 2).matrix()).cwiseAbs().maxCoeff() < kFamilyTol;
    if (is_werner) {
      j["detected"] = "werner";
      j["w"] = w;
    }
    if (cfg.q >= 2.0 && cfg.q <= 4.0) {
      j["kind"] = "exact";
      j["ctq"] = ctq_two_qubit_mixed(rho, cfg.q).value * scale;
    } else if (is_werner) {
      j["kind"] = "exact";
      j["ctq"] = ctq_werner(w, cfg.q, envelope_step(), !cfg.raw);
    }
  }
  if (da == db && thm2_exponent_valid(cfg.q, da)) {
    const BoundReport b = lower_bound_thm2(rho, cfg.q);
    j["bound"] = bound_json(b);
    if (!j.contains("kind")) {
      j["kind"] = "lower_bound_only";
      j["lower_bound_only"] = true;
      j["lower_bound"] = b.lower_bound * scale;
    }
  }
  require(j.contains("kind"), ErrorCode::UnsupportedState,
          "no exact value or lower bound is available for this state and q");
  j["normalized"] = !cfg.raw;
  return j;
}

int cmd_measure(const Config& cfg) {
  const AnyState state = read_state(cfg.state_path);
  json j;
  if (const auto* p = std::get_if<PureState>(&state)) {
    j = pure_json(*p, cfg);
  } else if (const auto* m = std::get_if<MultipartiteState>(&state)) {
    j = pure_json(m->bipartition(1), cfg);
    j["cut"] = "A1|rest";
  } else {
    j = measure_density(std::get<DensityMatrix>(state), cfg);
  }
  j["normalized"] = !cfg.raw;
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_bound(const Config& cfg) {
  const AnyState state = read_state(cfg.state_path);
  const DimensionSignature& sig = signature_of(state);
  require(sig.is_bipartite(), ErrorCode::UnsupportedState, "bound needs a bipartite state");
  const DensityMatrix rho(sig, density_of(state));
  json j = bound_json(lower_bound_thm2(rho, cfg.q));
  j["normalized"] = true;
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

std::string curve_text(const std::vector<CurveRow>& rows, const std::string& x_name, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const CurveRow& r : rows) {
      json row{{x_name, r.x}, {"raw", r.raw}, {"envelope", r.envelope}};
      row["lower_bound"] = r.lower_bound ? json(*r.lower_bound) : json(nullptr);
      if (r.eof) row["eof"] = *r.eof;
      arr.push_back(row);
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream s;
  write_curve_csv(s, rows, x_name);
  return s.str();
}

int cmd_isotropic(const Config& cfg) {
  const double scale = cfg.raw ? mu(cfg.d, cfg.q) : 1.0;
  const ConvexCurve env = isotropic_envelope(cfg.q, cfg.d, envelope_step());
  const bool bound_ok = thm2_exponent_valid(cfg.q, cfg.d);
  std::vector<CurveRow> rows;
  for (double f : sweep(cfg.from.value_or(0.0), cfg.to.value_or(1.0), cfg.step)) {
    CurveRow r;
    r.x = f;
    r.raw = zeta_isotropic(f, cfg.q, cfg.d, !cfg.raw);
    r.envelope = ctq_isotropic(env, f, cfg.q, cfg.d, !cfg.raw);
    if (bound_ok) r.lower_bound = lower_bound_thm2(isotropic(f, cfg.d), cfg.q).lower_bound * scale;
    rows.push_back(r);
  }
  emit(cfg, curve_text(rows, "F", cfg.format.empty() ? "csv" : cfg.format));
  return 0;
}

int cmd_werner(const Config& cfg) {
  const double scale = cfg.raw ? mu(2, cfg.q) : 1.0;
  const bool bound_ok = thm2_exponent_valid(cfg.q, 2);
  const ConvexCurve env = werner_envelope(cfg.q, envelope_step());
  std::vector<CurveRow> rows;
  for (double w : sweep(cfg.from.value_or(0.0), cfg.to.value_or(1.0), cfg.step)) {
    CurveRow r;
    r.x = w;
    r.raw = zeta_werner(w, cfg.q, !cfg.raw);
    r.envelope = ctq_werner(env, w, cfg.q, !cfg.raw);
    if (bound_ok) r.lower_bound = lower_bound_thm2(werner(w, 2), cfg.q).lower_bound * scale;
    r.eof = eof_werner(w);
    rows.push_back(r);
  }
  emit(cfg, curve_text(rows, "w", cfg.format.empty() ? "csv" : cfg.format));
  return 0;
}

json monogamy_json(const MonogamyReport& r) {
  return json{{"lhs", r.lhs},     {"pairwise", r.pairwise}, {"residual", r.residual},
              {"q", r.q},         {"gamma", r.gamma},       {"guaranteed", r.guaranteed}};
}

int cmd_monogamy(const Config& cfg, bool example2) {
  json j;
  if (example2) {
    const double a = std::sqrt(2.0 / 7.0);
    const std::array<double, 5> nu{a, 0.0, std::sqrt(1.0 / 7.0), a, a};
    j = json::array();
    for (double g : cfg.gamma) {
      const Example2Result e = example2_K(nu, cfg.q, g);
      j.push_back({{"q", cfg.q},
                   {"exponent", g},
                   {"K1", e.k1},
                   {"K2", e.k2},
                   {"K1_minus_K2", e.k1 - e.k2},
                   {"C_A_BC", e.c_a_bc},
                   {"C_AB", e.c_ab},
                   {"C_AC", e.c_ac}});
    }
  } else {
    const AnyState state = read_state(cfg.state_path);
    const auto* m = std::get_if<MultipartiteState>(&state);
    require(m != nullptr, ErrorCode::UnsupportedState, "monogamy needs a pure state on at least three qubits");
    j = json::array();
    for (double g : cfg.gamma) j.push_back(monogamy_json(monogamy_check(*m, cfg.q, g)));
  }
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_chain(const Config& cfg, const std::string& which) {
  require(which == "ctq" || which == "concurrence", ErrorCode::ParseError, "--measure must be ctq or concurrence");
  const ResidualKind kind = which == "ctq" ? ResidualKind::CTQ : ResidualKind::Concurrence;
  std::vector<SurfaceRow> rows;
  for (double theta : sweep(cfg.from.value_or(0.0), cfg.to.value_or(std::numbers::pi / 2.0), cfg.step))
    for (double g : cfg.gamma) rows.push_back(SurfaceRow{theta, g, residual_tau(theta, cfg.q, g, kind)});
  if (cfg.format == "json") {
    json arr = json::array();
    for (const SurfaceRow& r : rows) arr.push_back({{"theta", r.x}, {"gamma", r.gamma}, {"value", r.value}});
    emit(cfg, arr.dump(2) + "\n");
  } else {
    std::ostringstream s;
    write_surface_csv(s, rows, "theta");
    emit(cfg, s.str());
  }
  return 0;
}

int cmd_accept(const Config& cfg, const std::vector<int>& only) {
  AcceptanceOptions opts;
  opts.seed = cfg.seed;
  opts.grid_step = envelope_step();
  opts.only = only;
#ifdef CTQ_MUTANT_CLI
  opts.mutant_command = std::string("\"") + CTQ_MUTANT_CLI + "\" accept";
#endif
  const auto results = run_acceptance(opts);
  if (cfg.format == "json") {
    emit(cfg, acceptance_json(results));
  } else {
    std::ostringstream s;
    print_acceptance(s, results);
    s << (all_passed(results) ? "ALL PASS\n" : "SOME CRITERIA FAILED\n");
    emit(cfg, s.str());
  }
  return all_passed(results) ? 0 : 1;
}

int cmd_state(const Config& cfg, const std::string& kind, double param) {
  std::mt19937_64 rng(cfg.seed);
  AnyState state = [&]() -> AnyState {
    if (kind == "bell") return maximally_entangled(cfg.d);
    if (kind == "product") return product_basis_state(cfg.d, cfg.d);
    if (kind == "isotropic") return isotropic(param, cfg.d);
    if (kind == "werner") return werner(param, cfg.d);
    if (kind == "random-pure") return random_pure(DimensionSignature{cfg.d, cfg.d}, rng);
    if (kind == "random-density") return random_density(DimensionSignature{cfg.d, cfg.d}, cfg.d * cfg.d, rng);
    if (kind == "ghz") return ghz_state(cfg.d);
    if (kind == "w") return w_state(cfg.d);
    if (kind == "chain") return chain_state(param);
    if (kind == "random-qubits") {
      return random_multipartite(DimensionSignature(std::vector<Index>(static_cast<std::size_t>(cfg.d), 2)), rng);
    }
    fail(ErrorCode::ParseError, "unknown state kind " + kind);
  }();
  emit(cfg, state_to_json(state));
  return 0;
}

void add_common(CLI::App* app, Config& cfg) {
  app->add_option("--q", cfg.q, "Exponent q (>= 2)");
  app->add_option("--seed", cfg.seed, "Random seed");
  app->add_option("--out", cfg.out, "Write output to this path atomically");
  app->add_flag("--raw,!--normalized", cfg.raw, "Unnormalized values (default normalized)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total concurrence C^t_q: measures, bounds, exact curves and monogamy"};
  app.require_subcommand(1);
  Config cfg;
  std::string which = "ctq";
  std::string kind;
  double param = 1.0;
  std::vector<int> only;

  auto* measure = app.add_subcommand("measure", "Evaluate measures on a state file (JSON report)");
  add_common(measure, cfg);
  measure->add_option("state", cfg.state_path, "State file")->required();
  measure->add_option("--alpha", cfg.alpha, "Exponent alpha in [0, 1/2] for C^t_alpha");
  measure->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  auto* bound = app.add_subcommand("bound", "Trace-norm lower bound for a state file (JSON report)");
  add_common(bound, cfg);
  bound->add_option("state", cfg.state_path, "State file")->required();
  bound->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  auto* iso = app.add_subcommand("isotropic", "Isotropic curve: raw zeta, convex envelope, lower bound");
  add_common(iso, cfg);
  iso->add_option("--d", cfg.d, "Local dimension")->check(CLI::Range(2, 64));
  iso->add_option("--from", cfg.from, "First fidelity");
  iso->add_option("--to", cfg.to, "Last fidelity");
  iso->add_option("--step", cfg.step, "Output spacing");
  iso->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  auto* wer = app.add_subcommand("werner", "Two-qubit Werner curve with entanglement of formation");
  add_common(wer, cfg);
  wer->add_option("--from", cfg.from, "First singlet weight");
  wer->add_option("--to", cfg.to, "Last singlet weight");
  wer->add_option("--step", cfg.step, "Output spacing");
  wer->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  auto* mono = app.add_subcommand("monogamy", "Monogamy report for a multi-qubit pure state file");
  add_common(mono, cfg);
  mono->add_option("state", cfg.state_path, "State file");
  auto* ex2 = mono->add_flag("--example2", "Evaluate K1, K2 for the generalized Schmidt example");
  mono->add_option("--gamma", cfg.gamma, "Power applied to every term")->expected(1, -1);
  mono->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  auto* chain = app.add_subcommand("chain", "Residual entanglement of the chain state (CSV surface)");
  add_common(chain, cfg);
  chain->add_option("--from", cfg.from, "First theta");
  chain->add_option("--to", cfg.to, "Last theta");
  chain->add_option("--step", cfg.step, "Theta spacing");
  chain->add_option("--gamma", cfg.gamma, "Powers")->expected(1, -1);
  chain->add_option("--measure", which, "ctq or concurrence");
  chain->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  auto* accept = app.add_subcommand("accept", "Run the acceptance suite; exit 0 iff every criterion passes");
  accept->add_option("--seed", cfg.seed, "Random seed");
  accept->add_option("--out", cfg.out, "Write the report to this path atomically");
  accept->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  accept->add_option("--only", only, "Run only these criterion ids");

  auto* state = app.add_subcommand("state", "Write a state file");
  add_common(state, cfg);
  state->add_option("kind", kind,
                    "bell | product | isotropic | werner | random-pure | random-density | ghz | w | chain | "
                    "random-qubits")
      ->required();
  state->add_option("--d", cfg.d, "Local dimension, or number of qubits for ghz, w, random-qubits");
  state->add_option("--param", param, "Fidelity, Werner weight, or chain angle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*measure) return cmd_measure(cfg);
    if (*bound) return cmd_bound(cfg);
    if (*iso) return cmd_isotropic(cfg);
    if (*wer) return cmd_werner(cfg);
    if (*mono) {
      require(*ex2 || !cfg.state_path.empty(), ErrorCode::ParseError, "give a state file or --example2");
      return cmd_monogamy(cfg, static_cast<bool>(*ex2));
    }
    if (*chain) return cmd_chain(cfg, which);
    if (*accept) return cmd_accept(cfg, only);
    if (*state) return cmd_state(cfg, kind, param);
  } catch (const ctq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
