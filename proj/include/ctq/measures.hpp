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

// Total concurrence C^t_q (q >= 2) and its dual C^t_alpha (0 <= alpha <= 1/2)
// on pure states, plus the qubit-qudit reduction through h_q.
//
// Spectral forms, with lambda the Schmidt vector padded to length d:
//
//   C_q      = 1 - sum lambda^q
//   C^t_q    = d - sum lambda^q - sum (1 - lambda)^q           in [0, mu(d,q)]
//   mu(d,q)  = d - d^{1-q} (1 + (d-1)^q)
//   C^t_alpha = sum lambda^alpha - 1 + sum (1 - lambda)^alpha - (d - 1)
//
// Zero coefficients contribute nothing to the alpha sums (0^0 := 0).

#include "ctq/states.hpp"

namespace ctq {

/// Outputs in [-kMeasureClamp, 0) are reported as exact zeros.
inline constexpr double kMeasureClamp = 1e-12;

enum class Family { Q, Alpha };

struct MeasureParams {
  Family family = Family::Q;
  double exponent = 2.0;
  bool normalized = true;

  /// Throws BadExponent unless q >= 2.
  static MeasureParams q_family(double q, bool normalized = true);
  /// Throws BadExponent unless 0 <= alpha <= 1/2.
  static MeasureParams alpha_family(double alpha);
};

struct MeasureValue {
  double value = 0.0;
  MeasureParams params;
  Index effective_dim = 0;
};

/// Maximal total concurrence, attained by maximally entangled states.
double mu(Index d, double q);

double q_concurrence_pure(const SchmidtSpectrum& lambda, double q);

/// Unnormalized C^t_q; the spectrum is padded to length d.
double total_concurrence_pure(const SchmidtSpectrum& lambda, double q, Index d);

/// Gradient of the unnormalized C^t_q with respect to each lambda_i:
/// q (1 - lambda_i)^{q-1} - q lambda_i^{q-1}.
RealVector total_concurrence_gradient(const RealVector& lambda, double q);

/// F^t_q(rho) = sum_i [1 - x_i^q - (1 - x_i)^q] over the eigenvalues of a
/// Hermitian matrix with spectrum in [0, 1].
double total_concurrence_functional(const ComplexMatrix& rho, double q);
double total_concurrence_functional(const RealVector& eigenvalues, double q);

/// Normalized C^t_q of a bipartite pure state, d = min(dA, dB).
MeasureValue ctq_pure(const PureState& psi, double q);
/// Unnormalized C^t_q in the same MeasureValue wrapper.
MeasureValue ctq_pure_raw(const PureState& psi, double q);

double ct_alpha_pure(const PureState& psi, double alpha);
double ct_alpha_spectrum(const SchmidtSpectrum& lambda, double alpha, Index d);

/// sum_i 2 p_i (1 - p_i), the classical total 2-concurrence.
double classical_total_c2(const RealVector& p);

/// [1 - ((1+s)/2)^q - ((1-s)/2)^q] / (1 - 2^{1-q}), s = sqrt(1 - x^2).
double h_q(double x, double q);

/// sqrt(2 (1 - tr rho_A^2))
double concurrence_pure(const PureState& psi);

/// Hill-Wootters concurrence of a two-qubit density matrix.
double wootters_concurrence(const DensityMatrix& rho);

/// h_q(C(rho)) for a two-qubit rho, 2 <= q <= 4.
MeasureValue ctq_two_qubit_mixed(const DensityMatrix& rho, double q);

/// h_q(C) for a qubit-qudit state whose concurrence C is supplied by the caller.
MeasureValue ctq_from_concurrence(double concurrence, double q);

}  // namespace ctq
