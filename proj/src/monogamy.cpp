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

#include "ctq/monogamy.hpp"

#include <cmath>
#include <ostream>

#include "ctq/measures.hpp"

namespace ctq {

namespace {

void require_all_qubits(const MultipartiteState& psi) {
  for (Index d : psi.signature().dims())
    require(d == 2, ErrorCode::NotAllQubits, "monogamy check needs every party to be a qubit");
}

void require_gamma(double gamma) {
  require(std::isfinite(gamma) && gamma > 0.0, ErrorCode::BadExponent, "gamma must be positive");
}

double cut_concurrence(const MultipartiteState& psi) {
  const ComplexMatrix rho_a = psi.reduced({0});
  const double purity = std::real((rho_a * rho_a).trace());
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

std::vector<double> pairwise_concurrences(const MultipartiteState& psi) {
  std::vector<double> out;
  for (Index i = 1; i < psi.parties(); ++i) {
    ComplexMatrix pair = psi.reduced({0, i});
    pair = (pair + pair.adjoint()) / 2.0;
    pair /= std::real(pair.trace());
    out.push_back(wootters_concurrence(DensityMatrix(DimensionSignature{2, 2}, pair)));
  }
  return out;
}

MonogamyReport finish(double lhs, std::vector<double> pairwise, double q, double gamma) {
  MonogamyReport r;
  r.lhs = lhs;
  r.pairwise = std::move(pairwise);
  r.q = q;
  r.gamma = gamma;
  r.residual = std::pow(lhs, gamma);
  for (double p : r.pairwise) r.residual -= std::pow(p, gamma);
  return r;
}

}  // namespace

MonogamyReport monogamy_check(const MultipartiteState& psi, double q, double gamma) {
  require_all_qubits(psi);
  require_gamma(gamma);
  require(std::isfinite(q) && q >= 2.0 && q <= 4.0, ErrorCode::ExponentOutsideTheoremRange,
          "pairwise values need 2 <= q <= 4");
  std::vector<double> pairwise = pairwise_concurrences(psi);
  for (double& c : pairwise) c = h_q(std::min(c, 1.0), q);
  MonogamyReport r = finish(h_q(std::min(cut_concurrence(psi), 1.0), q), std::move(pairwise), q, gamma);
  r.guaranteed = q <= 3.0 && gamma == 1.0;
  return r;
}

MonogamyReport squared_concurrence_check(const MultipartiteState& psi) {
  require_all_qubits(psi);
  const double c = cut_concurrence(psi);
  std::vector<double> pairwise = pairwise_concurrences(psi);
  for (double& p : pairwise) p *= p;
  MonogamyReport r = finish(c * c, std::move(pairwise), 2.0, 1.0);
  r.guaranteed = true;
  return r;
}

Example2Result example2_K(const std::array<double, 5>& nu, double q, double exponent) {
  double norm = 0.0;
  for (double v : nu) {
    require(std::isfinite(v), ErrorCode::NonFinite, "coefficients must be finite");
    norm += v * v;
  }
  require(std::abs(norm - 1.0) <= kInputSlack, ErrorCode::NotNormalized, "coefficients must satisfy sum nu^2 = 1");
  require(std::isfinite(exponent) && exponent > 0.0, ErrorCode::BadExponent, "exponent must be positive");
  require(std::isfinite(q) && q >= 2.0 && q <= 4.0, ErrorCode::ExponentOutsideTheoremRange,
          "pairwise values need 2 <= q <= 4");
  Example2Result r;
  r.c_a_bc = std::min(1.0, 2.0 * std::abs(nu[0]) * std::sqrt(nu[2] * nu[2] + nu[3] * nu[3] + nu[4] * nu[4]));
  r.c_ab = std::min(1.0, 2.0 * std::abs(nu[0] * nu[2]));
  r.c_ac = std::min(1.0, 2.0 * std::abs(nu[0] * nu[3]));
  r.k1 = std::pow(h_q(r.c_a_bc, q), exponent);
  r.k2 = std::pow(h_q(r.c_ab, q), exponent) + std::pow(h_q(r.c_ac, q), exponent);
  return r;
}

ChainValues chain_ctq(double theta, double q) {
  require(std::isfinite(q) && q >= 2.0, ErrorCode::BadExponent, "q must satisfy q >= 2");
  require(std::isfinite(theta), ErrorCode::NonFinite, "theta must be finite");
  const double a2 = std::pow(std::cos(theta), 2);
  const double b2 = std::pow(std::sin(theta), 2);
  ChainValues v;
  const double num = 4.0 - std::pow(2.0, 1.0 - q) * (std::pow(a2, q) + std::pow(2.0 - a2, q) + std::pow(b2, q) +
                                                     std::pow(2.0 - b2, q));
  const double den = 4.0 - std::pow(4.0, 1.0 - q) * (std::pow(3.0, q) + 1.0);
  v.a_bc = num / den;
  v.ab = (1.0 - std::pow(a2, q) - std::pow(b2, q)) / (1.0 - std::pow(2.0, 1.0 - q));
  v.ac = 1.0;
  return v;
}

double chain_ctq_from_state(double theta, double q) {
  return ctq_pure(chain_state(theta).bipartition(1), q).value;
}

ChainValues chain_concurrences(double theta) {
  require(std::isfinite(theta), ErrorCode::NonFinite, "theta must be finite");
  const double a4 = std::pow(std::cos(theta), 4);
  const double b4 = std::pow(std::sin(theta), 4);
  return ChainValues{std::sqrt(std::max(0.0, 2.0 - a4 - b4)), std::sqrt(std::max(0.0, 2.0 - 2.0 * a4 - 2.0 * b4)),
                     1.0};
}

double residual_tau(double theta, double q, double gamma, ResidualKind which) {
  require_gamma(gamma);
  const ChainValues v = which == ResidualKind::CTQ ? chain_ctq(theta, q) : chain_concurrences(theta);
  return std::pow(std::max(0.0, v.a_bc), gamma) - std::pow(std::max(0.0, v.ab), gamma) -
         std::pow(std::max(0.0, v.ac), gamma);
}

void write_surface_csv(std::ostream& out, const std::vector<SurfaceRow>& rows, const std::string& x_name) {
  out << x_name << ",gamma,value\n";
  const auto old_precision = out.precision(15);
  for (const SurfaceRow& r : rows) out << r.x << ',' << r.gamma << ',' << r.value << '\n';
  out.precision(old_precision);
}

}  // namespace ctq
