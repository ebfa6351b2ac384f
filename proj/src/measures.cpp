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

#include "ctq/measures.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ctq {

namespace {

void require_q(double q) {
  require(std::isfinite(q) && q >= 2.0, ErrorCode::BadExponent, "q must satisfy q >= 2");
}

void require_alpha(double alpha) {
  require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 0.5, ErrorCode::BadExponent,
          "alpha must lie in [0, 1/2]");
}

// Eigenvalues of a unit-trace two-qubit state below this are treated as zero.
constexpr double kWoottersRankTol = 1e-14;

double clamp_small_negative(double v) { return (v < 0.0 && v >= -kMeasureClamp) ? 0.0 : v; }

// x^alpha with 0^alpha := 0 for every alpha, including alpha = 0.
double alpha_power(double x, double alpha) { return x <= 0.0 ? 0.0 : std::pow(x, alpha); }

double spectral_term(double x, double q) { return 1.0 - std::pow(x, q) - std::pow(1.0 - x, q); }

}  // namespace

MeasureParams MeasureParams::q_family(double q, bool normalized) {
  require_q(q);
  return MeasureParams{Family::Q, q, normalized};
}

MeasureParams MeasureParams::alpha_family(double alpha) {
  require_alpha(alpha);
  return MeasureParams{Family::Alpha, alpha, false};
}

double mu(Index d, double q) {
  require(d >= 2, ErrorCode::BadDimension, "normalization needs d >= 2");
  const double dd = static_cast<double>(d);
  double value = dd - std::pow(dd, 1.0 - q) * (1.0 + std::pow(dd - 1.0, q));
#ifdef CTQ_MU_PERTURBATION
  value += CTQ_MU_PERTURBATION;
#endif
  return value;
}

double q_concurrence_pure(const SchmidtSpectrum& lambda, double q) {
  require_q(q);
  const double sum = lambda.values().array().pow(q).sum();
  return clamp_small_negative(1.0 - sum);
}

double total_concurrence_pure(const SchmidtSpectrum& lambda, double q, Index d) {
  require_q(q);
  require(d >= 1, ErrorCode::BadDimension, "d must be positive");
  const SchmidtSpectrum padded = lambda.padded(d);
  double value = 0.0;
  for (double x : padded.values()) value += spectral_term(x, q);
  return clamp_small_negative(value);
}

RealVector total_concurrence_gradient(const RealVector& lambda, double q) {
  require_q(q);
  RealVector g(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i)
    g(i) = q * std::pow(1.0 - lambda(i), q - 1.0) - q * std::pow(lambda(i), q - 1.0);
  return g;
}

double total_concurrence_functional(const RealVector& eigenvalues, double q) {
  require_q(q);
  double value = 0.0;
  for (double x : clamp_probabilities(eigenvalues)) value += spectral_term(x, q);
  return value;
}

double total_concurrence_functional(const ComplexMatrix& rho, double q) {
  return total_concurrence_functional(hermitian_spectrum(rho), q);
}

MeasureValue ctq_pure_raw(const PureState& psi, double q) {
  const Index d = psi.effective_dim();
  require(d >= 2, ErrorCode::BadDimension, "a local dimension of one admits no entanglement measure");
  return MeasureValue{total_concurrence_pure(schmidt_spectrum(psi), q, d), MeasureParams::q_family(q, false), d};
}

MeasureValue ctq_pure(const PureState& psi, double q) {
  MeasureValue raw = ctq_pure_raw(psi, q);
  raw.value = clamp_small_negative(raw.value / mu(raw.effective_dim, q));
  raw.params.normalized = true;
  return raw;
}

double ct_alpha_spectrum(const SchmidtSpectrum& lambda, double alpha, Index d) {
  require_alpha(alpha);
  const SchmidtSpectrum padded = lambda.padded(d);
  double direct = 0.0;
  double dual = 0.0;
  for (double x : padded.values()) {
    direct += alpha_power(x, alpha);
    dual += alpha_power(1.0 - x, alpha);
  }
  return clamp_small_negative(direct - 1.0 + dual - static_cast<double>(d - 1));
}

double ct_alpha_pure(const PureState& psi, double alpha) {
  return ct_alpha_spectrum(schmidt_spectrum(psi), alpha, psi.effective_dim());
}

double classical_total_c2(const RealVector& p) {
  require(p.size() >= 1 && p.allFinite(), ErrorCode::NotADistribution, "probability vector is empty");
  require((p.array() >= 0.0).all(), ErrorCode::NotADistribution, "probabilities must be nonnegative");
  require(std::abs(p.sum() - 1.0) <= kStateTol, ErrorCode::NotADistribution, "probabilities must sum to one");
  // -sum [p f(p) + (1-p) f(1-p)] with f(p) = p - 1
  double value = 0.0;
  for (double pi : p) value -= pi * (pi - 1.0) + (1.0 - pi) * ((1.0 - pi) - 1.0);
  return value;
}

double h_q(double x, double q) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0, ErrorCode::DomainError, "h_q needs 0 <= x <= 1");
  require(std::isfinite(q) && q > 1.0, ErrorCode::BadExponent, "h_q needs q > 1");
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  const double numerator = 1.0 - std::pow((1.0 + s) / 2.0, q) - std::pow((1.0 - s) / 2.0, q);
  return clamp_small_negative(numerator / (1.0 - std::pow(2.0, 1.0 - q)));
}

double concurrence_pure(const PureState& psi) {
  const double purity = schmidt_spectrum(psi).values().squaredNorm();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double wootters_concurrence(const DensityMatrix& rho) {
  require(rho.signature() == (DimensionSignature{2, 2}), ErrorCode::WrongDimensions,
          "Wootters concurrence needs a two-qubit state");
  ComplexMatrix sigma_y(2, 2);
  sigma_y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  const ComplexMatrix flip = kron(sigma_y, sigma_y);
  // With rho = X X^dagger, the square roots of the eigenvalues of
  // rho (flip rho^* flip) are the singular values of X^T flip X. Working with
  // the factor avoids square roots of noise-level eigenvalues, which would put
  // errors of order 1e-8 on rank-deficient inputs.
  const ComplexMatrix& m = rho.matrix();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig((m + m.adjoint()) / 2.0);
  const RealVector ev = eig.eigenvalues();
  std::vector<Index> kept;
  for (Index i = 0; i < ev.size(); ++i)
    if (ev(i) > kWoottersRankTol) kept.push_back(i);
  ComplexMatrix x(4, static_cast<Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k)
    x.col(static_cast<Index>(k)) = eig.eigenvectors().col(kept[k]) * std::sqrt(ev(kept[k]));
  const ComplexMatrix tau = x.transpose() * flip * x;
  RealVector s = RealVector::Zero(4);
  if (tau.size() > 0) {
    const RealVector sv = Eigen::JacobiSVD<ComplexMatrix>(tau).singularValues();
    s.head(sv.size()) = sv;
  }
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

MeasureValue ctq_from_concurrence(double concurrence, double q) {
  require(std::isfinite(q) && q >= 2.0 && q <= 4.0, ErrorCode::ExponentOutsideTheoremRange,
          "the concurrence relation is established only for 2 <= q <= 4");
  require(std::isfinite(concurrence) && concurrence >= -kMeasureClamp && concurrence <= 1.0 + kMeasureClamp,
          ErrorCode::DomainError, "qubit-qudit concurrence must lie in [0, 1]");
  return MeasureValue{h_q(std::clamp(concurrence, 0.0, 1.0), q), MeasureParams::q_family(q, true), 2};
}

MeasureValue ctq_two_qubit_mixed(const DensityMatrix& rho, double q) {
  require(std::isfinite(q) && q >= 2.0 && q <= 4.0, ErrorCode::ExponentOutsideTheoremRange,
          "the concurrence relation is established only for 2 <= q <= 4");
  return ctq_from_concurrence(wootters_concurrence(rho), q);
}

}  // namespace ctq
