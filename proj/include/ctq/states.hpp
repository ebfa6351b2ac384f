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

#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "ctq/qlinalg.hpp"

namespace ctq {

/// Slack accepted on user-supplied norms and family parameters before they
/// are projected back onto the exact domain.
inline constexpr double kInputSlack = 1e-6;
/// Tolerance of the normalization / trace invariants on constructed states.
inline constexpr double kStateTol = 1e-10;

/// Squared Schmidt coefficients, descending, summing to one.
class SchmidtSpectrum {
 public:
  explicit SchmidtSpectrum(RealVector values);

  const RealVector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  double operator[](Index i) const { return values_(i); }

  /// Same spectrum zero-padded (or stripped of trailing zeros) to length d.
  SchmidtSpectrum padded(Index d) const;

  /// Number of nonzero coefficients.
  Index rank() const;

 private:
  RealVector values_;
};

/// Normalized bipartite amplitude vector, row-major over (a, b).
class PureState {
 public:
  PureState(DimensionSignature sig, ComplexVector amplitudes);

  const DimensionSignature& signature() const noexcept { return sig_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Index dim_a() const { return sig_[0]; }
  Index dim_b() const { return sig_[1]; }
  /// min(dA, dB): the d used for normalization.
  Index effective_dim() const { return std::min(dim_a(), dim_b()); }

  /// dA x dB coefficient matrix.
  ComplexMatrix coefficient_matrix() const;
  ComplexMatrix density() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  DimensionSignature sig_;
  ComplexVector amplitudes_;
};

/// Normalized pure state on three or more parties.
class MultipartiteState {
 public:
  MultipartiteState(DimensionSignature sig, ComplexVector amplitudes);

  const DimensionSignature& signature() const noexcept { return sig_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Index parties() const noexcept { return sig_.parts(); }

  ComplexMatrix density() const { return amplitudes_ * amplitudes_.adjoint(); }
  /// Reduced density matrix on the kept parties.
  ComplexMatrix reduced(std::span<const Index> keep) const;
  ComplexMatrix reduced(std::initializer_list<Index> keep) const {
    return reduced(std::span<const Index>(keep.begin(), keep.size()));
  }
  /// The same vector viewed across the cut parties [0, split) | [split, n).
  PureState bipartition(Index split = 1) const;

 private:
  DimensionSignature sig_;
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  DensityMatrix(DimensionSignature sig, ComplexMatrix matrix);

  const DimensionSignature& signature() const noexcept { return sig_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

  /// tr rho^2
  double purity() const;

 private:
  DimensionSignature sig_;
  ComplexMatrix matrix_;
};

/// Accepts a vector whose norm is within kInputSlack of one and renormalizes it.
PureState pure_from_amplitudes(const ComplexVector& amplitudes, const DimensionSignature& sig);
MultipartiteState multipartite_from_amplitudes(const ComplexVector& amplitudes, const DimensionSignature& sig);

SchmidtSpectrum schmidt_spectrum(const PureState& psi);

/// |Phi+> = sum_k |kk> / sqrt(d)
PureState maximally_entangled(Index d);
/// |a>|b> in the computational basis of (dA, dB).
PureState product_basis_state(Index dA, Index dB, Index a = 0, Index b = 0);

DensityMatrix isotropic(double fidelity, Index d);
DensityMatrix werner(double w, Index d);

/// Weight of rho on the antisymmetric subspace, tr(rho P_-).
double antisymmetric_weight(const ComplexMatrix& rho, Index d);
/// <Phi+| rho |Phi+>
double maximally_entangled_fidelity(const ComplexMatrix& rho, Index d);

/// (a|000> + b|110> + a|201> + b|311>)/sqrt(2) on (4,2,2), a = cos(theta), b = sin(theta).
MultipartiteState chain_state(double theta);

/// nu0|000> + nu1 e^{i phi}|100> + nu2|101> + nu3|110> + nu4|111>.
MultipartiteState gen_schmidt_3qubit(const std::array<double, 5>& nu, double phi);

MultipartiteState ghz_state(Index qubits);
MultipartiteState w_state(Index qubits);

/// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure(const DimensionSignature& sig, std::mt19937_64& rng);
PureState random_pure(const DimensionSignature& sig, std::uint64_t seed);
MultipartiteState random_multipartite(const DimensionSignature& sig, std::mt19937_64& rng);

/// Normalized Wishart matrix G G^dagger / tr with G of shape n x rank.
DensityMatrix random_density(const DimensionSignature& sig, Index rank, std::mt19937_64& rng);
DensityMatrix random_density(const DimensionSignature& sig, Index rank, std::uint64_t seed);

/// Haar-random unitary via QR of a Ginibre matrix with phase correction.
ComplexMatrix random_unitary(Index n, std::mt19937_64& rng);

}  // namespace ctq
