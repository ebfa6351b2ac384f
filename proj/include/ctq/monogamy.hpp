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

// Monogamy of C^t_q on multi-qubit pure states, the generalized-Schmidt
// three-qubit example, and residual entanglement of the two-EPR chain state.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "ctq/states.hpp"

namespace ctq {

struct MonogamyReport {
  /// Measure across the A1 | A2...Ak cut.
  double lhs = 0.0;
  /// Measure on each two-qubit marginal rho_{A1 Ai}, i = 2..k.
  std::vector<double> pairwise;
  /// lhs^gamma - sum pairwise^gamma
  double residual = 0.0;
  double q = 0.0;
  double gamma = 1.0;
  /// Set only when the sign of the residual is a theorem: 2 <= q <= 3, gamma = 1.
  bool guaranteed = false;
};

/// h_q-based monogamy for an all-qubit pure state with at least 3 parties.
/// q must lie in [2, 4]; outside [2, 3] the report is computed but not guaranteed.
MonogamyReport monogamy_check(const MultipartiteState& psi, double q, double gamma = 1.0);

/// Same layout with squared concurrences: C^2(A1 | rest) - sum C^2(rho_{A1 Ai}).
MonogamyReport squared_concurrence_check(const MultipartiteState& psi);

struct Example2Result {
  double k1 = 0.0;
  double k2 = 0.0;
  double c_a_bc = 0.0;
  double c_ab = 0.0;
  double c_ac = 0.0;
};

/// K1 = h_q(C_{A|BC})^a, K2 = h_q(C_AB)^a + h_q(C_AC)^a with
/// C_{A|BC} = 2 nu0 sqrt(nu2^2 + nu3^2 + nu4^2), C_AB = 2 nu0 nu2, C_AC = 2 nu0 nu3.
/// For gen_schmidt_3qubit(nu, phi) the qubit carrying nu2 is C, so the two
/// pairwise values appear swapped relative to the computed marginals.
Example2Result example2_K(const std::array<double, 5>& nu, double q, double exponent);

struct ChainValues {
  double a_bc = 0.0;
  double ab = 0.0;
  double ac = 0.0;
};

/// Normalized C^t_q of the chain state from its closed forms.
ChainValues chain_ctq(double theta, double q);
/// A|BC value recomputed from the state vector.
double chain_ctq_from_state(double theta, double q);
/// Concurrences sqrt(2 - a^4 - b^4), sqrt(2 - 2a^4 - 2b^4), 1 with a = cos, b = sin.
ChainValues chain_concurrences(double theta);

enum class ResidualKind { CTQ, Concurrence };

/// lhs^gamma - ab^gamma - ac^gamma for the chain state.
double residual_tau(double theta, double q, double gamma, ResidualKind which);

struct SurfaceRow {
  double x = 0.0;
  double gamma = 0.0;
  double value = 0.0;
};

/// Header "<x_name>,gamma,value".
void write_surface_csv(std::ostream& out, const std::vector<SurfaceRow>& rows, const std::string& x_name);

}  // namespace ctq
