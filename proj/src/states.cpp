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

#include "ctq/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ctq {

namespace {

bool within_slack(double value, double target) {
  return std::abs(value - target) <= kInputSlack + 64 * std::numeric_limits<double>::epsilon();
}

double project_unit_interval(double x, ErrorCode code, const char* name) {
  require(std::isfinite(x) && x >= -kInputSlack && x <= 1.0 + kInputSlack, code,
          std::string(name) + " must lie in [0, 1]");
  return std::clamp(x, 0.0, 1.0);
}

ComplexVector gaussian_vector(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

ComplexMatrix gaussian_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

void require_normalized(const ComplexVector& amplitudes, const DimensionSignature& sig) {
  require(amplitudes.size() == sig.total(), ErrorCode::DimensionMismatch,
          "amplitude count does not match the signature");
  require(amplitudes.allFinite(), ErrorCode::NonFinite, "amplitudes must be finite");
  require(std::abs(amplitudes.squaredNorm() - 1.0) <= kStateTol, ErrorCode::NotNormalized,
          "state is not normalized");
}

ComplexVector renormalized(const ComplexVector& amplitudes, const DimensionSignature& sig) {
  require(amplitudes.size() == sig.total(), ErrorCode::DimensionMismatch,
          "amplitude count does not match the signature");
  require(amplitudes.allFinite(), ErrorCode::NonFinite, "amplitudes must be finite");
  const double norm = amplitudes.norm();
  require(norm > 0.0, ErrorCode::ZeroVector, "amplitude vector is zero");
  require(within_slack(norm, 1.0), ErrorCode::NotNormalized, "amplitude norm is not within 1e-6 of one");
  return amplitudes / norm;
}

ComplexVector basis_vector(Index n, Index k) {
  ComplexVector v = ComplexVector::Zero(n);
  v(k) = 1.0;
  return v;
}

ComplexMatrix swap_operator(Index d) {
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  return s;
}

}  // namespace

SchmidtSpectrum::SchmidtSpectrum(RealVector values) : values_(std::move(values)) {
  require(values_.size() >= 1, ErrorCode::BadDimension, "Schmidt spectrum is empty");
  require(values_.allFinite(), ErrorCode::NonFinite, "Schmidt spectrum must be finite");
  for (Index i = 0; i < values_.size(); ++i) {
    require(values_(i) >= 0.0, ErrorCode::NotADistribution, "Schmidt coefficients must be nonnegative");
    if (i > 0)
      require(values_(i) <= values_(i - 1), ErrorCode::NotADistribution, "Schmidt spectrum must be descending");
  }
  require(std::abs(values_.sum() - 1.0) <= kStateTol, ErrorCode::NotADistribution,
          "Schmidt coefficients must sum to one");
}

SchmidtSpectrum SchmidtSpectrum::padded(Index d) const {
  require(d >= 1, ErrorCode::BadDimension, "padding length must be positive");
  require(d >= rank(), ErrorCode::BadDimension, "cannot truncate nonzero Schmidt coefficients");
  RealVector out = RealVector::Zero(d);
  const Index n = std::min(d, size());
  out.head(n) = values_.head(n);
  return SchmidtSpectrum(std::move(out));
}

Index SchmidtSpectrum::rank() const { return (values_.array() > 0.0).count(); }

PureState::PureState(DimensionSignature sig, ComplexVector amplitudes)
    : sig_(std::move(sig)), amplitudes_(std::move(amplitudes)) {
  require(sig_.is_bipartite(), ErrorCode::DimensionMismatch, "pure state needs a bipartite signature");
  require_normalized(amplitudes_, sig_);
}

ComplexMatrix PureState::coefficient_matrix() const {
  // amplitudes are row-major over (a, b)
  return Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      amplitudes_.data(), dim_a(), dim_b());
}

MultipartiteState::MultipartiteState(DimensionSignature sig, ComplexVector amplitudes)
    : sig_(std::move(sig)), amplitudes_(std::move(amplitudes)) {
  require(sig_.parts() >= 3, ErrorCode::DimensionMismatch, "multipartite state needs at least three parties");
  require_normalized(amplitudes_, sig_);
}

ComplexMatrix MultipartiteState::reduced(std::span<const Index> keep) const {
  return partial_trace(density(), sig_, keep);
}

PureState MultipartiteState::bipartition(Index split) const { return PureState(sig_.grouped(split), amplitudes_); }

DensityMatrix::DensityMatrix(DimensionSignature sig, ComplexMatrix matrix)
    : sig_(std::move(sig)), matrix_(std::move(matrix)) {
  detail::require_square(matrix_);
  detail::require_dimension(matrix_.rows(), sig_);
  const RealVector eigenvalues = hermitian_spectrum(matrix_);
  require(eigenvalues.minCoeff() >= -kStateTol, ErrorCode::NotADensityMatrix, "matrix is not positive semidefinite");
  require(std::abs(matrix_.trace().real() - 1.0) <= kStateTol, ErrorCode::NotADensityMatrix,
          "matrix does not have unit trace");
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

PureState pure_from_amplitudes(const ComplexVector& amplitudes, const DimensionSignature& sig) {
  require(sig.is_bipartite(), ErrorCode::DimensionMismatch, "pure state needs a bipartite signature");
  return PureState(sig, renormalized(amplitudes, sig));
}

MultipartiteState multipartite_from_amplitudes(const ComplexVector& amplitudes, const DimensionSignature& sig) {
  require(sig.parts() >= 3, ErrorCode::DimensionMismatch, "multipartite state needs at least three parties");
  return MultipartiteState(sig, renormalized(amplitudes, sig));
}

SchmidtSpectrum schmidt_spectrum(const PureState& psi) {
  const RealVector s = singular_values(psi.coefficient_matrix());
  RealVector lambda = clamp_probabilities(s.array().square().matrix());
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  // Singular values have length min(dA, dB) already; remove round-off from the sum.
  lambda /= lambda.sum();
  return SchmidtSpectrum(std::move(lambda));
}

PureState maximally_entangled(Index d) {
  require(d >= 1, ErrorCode::BadDimension, "dimension must be positive");
  ComplexVector v = ComplexVector::Zero(d * d);
  for (Index k = 0; k < d; ++k) v(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
  return PureState(DimensionSignature{d, d}, v);
}

PureState product_basis_state(Index dA, Index dB, Index a, Index b) {
  require(a >= 0 && a < dA && b >= 0 && b < dB, ErrorCode::DimensionMismatch, "basis label out of range");
  return PureState(DimensionSignature{dA, dB}, basis_vector(dA * dB, a * dB + b));
}

DensityMatrix isotropic(double fidelity, Index d) {
  require(d >= 2, ErrorCode::BadDimension, "isotropic states need d >= 2");
  const double f = project_unit_interval(fidelity, ErrorCode::FidelityOutOfRange, "fidelity");
  const ComplexMatrix phi = maximally_entangled(d).density();
  const double n = static_cast<double>(d * d);
  const ComplexMatrix identity = ComplexMatrix::Identity(d * d, d * d);
  ComplexMatrix rho = (1.0 - f) / (n - 1.0) * (identity - phi) + f * phi;
  return DensityMatrix(DimensionSignature{d, d}, std::move(rho));
}

DensityMatrix werner(double w, Index d) {
  require(d >= 2, ErrorCode::BadDimension, "Werner states need d >= 2");
  const double weight = project_unit_interval(w, ErrorCode::ParameterOutOfRange, "Werner parameter");
  const double dd = static_cast<double>(d);
  const Index n = d * d;
  ComplexMatrix symmetric = ComplexMatrix::Zero(n, n);
  ComplexMatrix antisymmetric = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < d; ++i) {
    const ComplexVector ii = basis_vector(n, i * d + i);
    symmetric += ii * ii.adjoint();
  }
  for (Index l = 0; l < d; ++l)
    for (Index k = l + 1; k < d; ++k) {
      const ComplexVector lk = basis_vector(n, l * d + k);
      const ComplexVector kl = basis_vector(n, k * d + l);
      const ComplexVector plus = (lk + kl) / std::numbers::sqrt2;
      const ComplexVector minus = (lk - kl) / std::numbers::sqrt2;
      symmetric += plus * plus.adjoint();
      antisymmetric += minus * minus.adjoint();
    }
  ComplexMatrix rho =
      2.0 * (1.0 - weight) / (dd * (dd + 1.0)) * symmetric + 2.0 * weight / (dd * (dd - 1.0)) * antisymmetric;
  return DensityMatrix(DimensionSignature{d, d}, std::move(rho));
}

double antisymmetric_weight(const ComplexMatrix& rho, Index d) {
  detail::require_dimension(rho.rows(), DimensionSignature{d, d});
  const ComplexMatrix projector = (ComplexMatrix::Identity(d * d, d * d) - swap_operator(d)) / 2.0;
  return (rho * projector).trace().real();
}

double maximally_entangled_fidelity(const ComplexMatrix& rho, Index d) {
  detail::require_dimension(rho.rows(), DimensionSignature{d, d});
  const ComplexVector phi = maximally_entangled(d).amplitudes();
  return (phi.adjoint() * rho * phi)(0, 0).real();
}

MultipartiteState chain_state(double theta) {
  const double a = std::cos(theta) / std::numbers::sqrt2;
  const double b = std::sin(theta) / std::numbers::sqrt2;
  const DimensionSignature sig{4, 2, 2};
  ComplexVector v = ComplexVector::Zero(16);
  auto at = [](Index x, Index y, Index z) { return x * 4 + y * 2 + z; };
  v(at(0, 0, 0)) = a;
  v(at(1, 1, 0)) = b;
  v(at(2, 0, 1)) = a;
  v(at(3, 1, 1)) = b;
  return MultipartiteState(sig, v);
}

MultipartiteState gen_schmidt_3qubit(const std::array<double, 5>& nu, double phi) {
  double norm2 = 0.0;
  for (double x : nu) {
    require(std::isfinite(x) && x >= 0.0, ErrorCode::ParameterOutOfRange, "coefficients must be nonnegative");
    norm2 += x * x;
  }
  require(within_slack(norm2, 1.0), ErrorCode::NotNormalized, "sum of squared coefficients must be one");
  const double scale = 1.0 / std::sqrt(norm2);
  ComplexVector v = ComplexVector::Zero(8);
  v(0b000) = nu[0] * scale;
  v(0b100) = std::polar(nu[1] * scale, phi);
  v(0b101) = nu[2] * scale;
  v(0b110) = nu[3] * scale;
  v(0b111) = nu[4] * scale;
  return MultipartiteState(DimensionSignature{2, 2, 2}, v);
}

MultipartiteState ghz_state(Index qubits) {
  require(qubits >= 3, ErrorCode::BadDimension, "GHZ state needs at least three qubits");
  const Index n = Index{1} << qubits;
  ComplexVector v = ComplexVector::Zero(n);
  v(0) = v(n - 1) = 1.0 / std::numbers::sqrt2;
  return MultipartiteState(DimensionSignature(std::vector<Index>(static_cast<std::size_t>(qubits), 2)), v);
}

MultipartiteState w_state(Index qubits) {
  require(qubits >= 3, ErrorCode::BadDimension, "W state needs at least three qubits");
  const Index n = Index{1} << qubits;
  ComplexVector v = ComplexVector::Zero(n);
  for (Index k = 0; k < qubits; ++k) v(Index{1} << k) = 1.0 / std::sqrt(static_cast<double>(qubits));
  return MultipartiteState(DimensionSignature(std::vector<Index>(static_cast<std::size_t>(qubits), 2)), v);
}

PureState random_pure(const DimensionSignature& sig, std::mt19937_64& rng) {
  ComplexVector v = gaussian_vector(sig.total(), rng);
  return PureState(sig, v / v.norm());
}

PureState random_pure(const DimensionSignature& sig, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure(sig, rng);
}

MultipartiteState random_multipartite(const DimensionSignature& sig, std::mt19937_64& rng) {
  ComplexVector v = gaussian_vector(sig.total(), rng);
  return MultipartiteState(sig, v / v.norm());
}

DensityMatrix random_density(const DimensionSignature& sig, Index rank, std::mt19937_64& rng) {
  const Index n = sig.total();
  require(rank >= 1, ErrorCode::RankTooLarge, "rank must be positive");
  require(rank <= n, ErrorCode::RankTooLarge, "rank exceeds the state dimension");
  const ComplexMatrix g = gaussian_matrix(n, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix(sig, std::move(rho));
}

DensityMatrix random_density(const DimensionSignature& sig, Index rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_density(sig, rank, rng);
}

ComplexMatrix random_unitary(Index n, std::mt19937_64& rng) {
  const ComplexMatrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

}  // namespace ctq
