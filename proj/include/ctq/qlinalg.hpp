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

// Dense complex-matrix primitives shared by every other module: spectra,
// trace norm, partial trace, partial transpose and realignment.
//
// The reshuffling operations are written against Eigen::MatrixBase and
// templated on the scalar so that real test matrices and complex states go
// through the same code.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "ctq/error.hpp"

namespace ctq {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = Matrix<Complex>;
using ComplexVector = Vector<Complex>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Maximum entrywise |M - M^dagger| accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalue magnitudes below this are treated as exact zeros.
inline constexpr double kSpectrumClip = 1e-12;

/// Ordered subsystem dimensions, e.g. (dA, dB) or (4, 2, 2).
class DimensionSignature {
 public:
  DimensionSignature() = default;
  DimensionSignature(std::initializer_list<Index> dims) : DimensionSignature(std::vector<Index>(dims)) {}
  explicit DimensionSignature(std::vector<Index> dims) : dims_(std::move(dims)) {
    require(!dims_.empty(), ErrorCode::BadDimension, "dimension signature is empty");
    for (Index d : dims_) require(d >= 1, ErrorCode::BadDimension, "subsystem dimensions must be positive");
  }

  Index parts() const noexcept { return static_cast<Index>(dims_.size()); }
  Index operator[](Index i) const { return dims_.at(static_cast<std::size_t>(i)); }
  const std::vector<Index>& dims() const noexcept { return dims_; }
  bool is_bipartite() const noexcept { return dims_.size() == 2; }

  Index total() const noexcept {
    return std::accumulate(dims_.begin(), dims_.end(), Index{1}, std::multiplies<>());
  }

  /// Signature obtained by keeping only the listed subsystems (in ascending order).
  DimensionSignature restricted(std::span<const Index> keep) const;

  /// Two-part signature grouping subsystems [0, split) against [split, parts()).
  DimensionSignature grouped(Index split) const;

  bool operator==(const DimensionSignature&) const = default;

 private:
  std::vector<Index> dims_;
};

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m) {
  require(m.rows() == m.cols(), ErrorCode::NonSquare, "matrix is not square");
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m) {
  require(m.allFinite(), ErrorCode::NonFinite, "matrix has NaN or infinite entries");
}

inline void require_dimension(Index n, const DimensionSignature& sig) {
  require(n == sig.total(), ErrorCode::DimensionMismatch,
          "matrix dimension " + std::to_string(n) + " does not match signature product " +
              std::to_string(sig.total()));
}

}  // namespace detail

/// Largest entrywise deviation |M - M^dagger|.
template <typename Derived>
double hermitian_deviation(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m);
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Real eigenvalues of a Hermitian matrix, sorted descending.
///
/// The input is symmetrized to (M + M^dagger)/2 before diagonalization;
/// deviations above kHermitianTol are rejected.
template <typename Derived>
RealVector hermitian_spectrum(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m);
  detail::require_finite(m);
  require(hermitian_deviation(m) <= kHermitianTol, ErrorCode::NotHermitian,
          "matrix deviates from Hermitian by more than 1e-10");
  const Matrix<Scalar> sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(sym, Eigen::EigenvaluesOnly);
  RealVector values = solver.eigenvalues().reverse();
  return values;
}

/// Zero out |x| < kSpectrumClip and clamp the rest into [0, 1].
inline RealVector clamp_probabilities(RealVector values) {
  for (double& v : values) {
    if (std::abs(v) < kSpectrumClip) v = 0.0;
    v = std::clamp(v, 0.0, 1.0);
  }
  return values;
}

/// Singular values, descending.
template <typename Derived>
RealVector singular_values(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_finite(m);
  Eigen::JacobiSVD<Matrix<Scalar>> svd(m.eval());
  return svd.singularValues();
}

/// ||M||_1 = tr sqrt(M^dagger M), the sum of singular values.
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m).sum();
}

/// Transpose of subsystem B: entry (i dB + l, k dB + j) <- (i dB + j, k dB + l).
template <typename Derived>
Matrix<typename Derived::Scalar> partial_transpose(const Eigen::MatrixBase<Derived>& rho,
                                                   const DimensionSignature& sig) {
  require(sig.is_bipartite(), ErrorCode::DimensionMismatch, "partial transpose needs a bipartite signature");
  detail::require_square(rho);
  detail::require_dimension(rho.rows(), sig);
  const Index dA = sig[0];
  const Index dB = sig[1];
  Matrix<typename Derived::Scalar> out(rho.rows(), rho.cols());
  for (Index i = 0; i < dA; ++i)
    for (Index j = 0; j < dB; ++j)
      for (Index k = 0; k < dA; ++k)
        for (Index l = 0; l < dB; ++l) out(i * dB + l, k * dB + j) = rho(i * dB + j, k * dB + l);
  return out;
}

/// Realignment R(rho): entry (i dA + k, j dB + l) <- (i dB + j, k dB + l), shape dA^2 x dB^2.
template <typename Derived>
Matrix<typename Derived::Scalar> realign(const Eigen::MatrixBase<Derived>& rho, const DimensionSignature& sig) {
  require(sig.is_bipartite(), ErrorCode::DimensionMismatch, "realignment needs a bipartite signature");
  detail::require_square(rho);
  detail::require_dimension(rho.rows(), sig);
  const Index dA = sig[0];
  const Index dB = sig[1];
  Matrix<typename Derived::Scalar> out(dA * dA, dB * dB);
  for (Index i = 0; i < dA; ++i)
    for (Index j = 0; j < dB; ++j)
      for (Index k = 0; k < dA; ++k)
        for (Index l = 0; l < dB; ++l) out(i * dA + k, j * dB + l) = rho(i * dB + j, k * dB + l);
  return out;
}

/// Inverse of realign: rebuilds the dA dB x dA dB operator.
template <typename Derived>
Matrix<typename Derived::Scalar> unrealign(const Eigen::MatrixBase<Derived>& r, const DimensionSignature& sig) {
  require(sig.is_bipartite(), ErrorCode::DimensionMismatch, "realignment needs a bipartite signature");
  const Index dA = sig[0];
  const Index dB = sig[1];
  require(r.rows() == dA * dA && r.cols() == dB * dB, ErrorCode::DimensionMismatch,
          "realigned matrix must be dA^2 x dB^2");
  Matrix<typename Derived::Scalar> out(dA * dB, dA * dB);
  for (Index i = 0; i < dA; ++i)
    for (Index j = 0; j < dB; ++j)
      for (Index k = 0; k < dA; ++k)
        for (Index l = 0; l < dB; ++l) out(i * dB + j, k * dB + l) = r(i * dA + k, j * dB + l);
  return out;
}

/// Trace over every subsystem not listed in `keep`. Kept subsystems retain
/// their relative order.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& rho, const DimensionSignature& sig,
                                               std::span<const Index> keep) {
  using Scalar = typename Derived::Scalar;
  require(!keep.empty(), ErrorCode::EmptyKeepSet, "partial trace needs at least one kept subsystem");
  detail::require_square(rho);
  detail::require_dimension(rho.rows(), sig);

  std::vector<bool> kept(static_cast<std::size_t>(sig.parts()), false);
  for (Index k : keep) {
    require(k >= 0 && k < sig.parts(), ErrorCode::DimensionMismatch, "kept subsystem index out of range");
    kept[static_cast<std::size_t>(k)] = true;
  }

  // Split every global index into its (kept, traced) mixed-radix parts.
  const Index n = sig.total();
  std::vector<Index> keep_part(static_cast<std::size_t>(n));
  std::vector<Index> trace_part(static_cast<std::size_t>(n));
  Index keep_dim = 1;
  for (Index p = 0; p < sig.parts(); ++p)
    if (kept[static_cast<std::size_t>(p)]) keep_dim *= sig[p];
  for (Index idx = 0; idx < n; ++idx) {
    Index rest = idx;
    Index kp = 0, kstride = 1, tp = 0, tstride = 1;
    for (Index p = sig.parts() - 1; p >= 0; --p) {
      const Index digit = rest % sig[p];
      rest /= sig[p];
      if (kept[static_cast<std::size_t>(p)]) {
        kp += digit * kstride;
        kstride *= sig[p];
      } else {
        tp += digit * tstride;
        tstride *= sig[p];
      }
    }
    keep_part[static_cast<std::size_t>(idx)] = kp;
    trace_part[static_cast<std::size_t>(idx)] = tp;
  }

  Matrix<Scalar> out = Matrix<Scalar>::Zero(keep_dim, keep_dim);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      if (trace_part[static_cast<std::size_t>(r)] == trace_part[static_cast<std::size_t>(c)])
        out(keep_part[static_cast<std::size_t>(r)], keep_part[static_cast<std::size_t>(c)]) += rho(r, c);
  return out;
}

template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& rho, const DimensionSignature& sig,
                                               std::initializer_list<Index> keep) {
  return partial_trace(rho, sig, std::span<const Index>(keep.begin(), keep.size()));
}

/// Kronecker product a (x) b.
template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Matrix<typename DerivedA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace ctq
