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

// Computable lower bounds on C^t_q for mixed states from the PPT and
// realignment trace norms. Bounds are reported in normalized units:
//
//   (N - 1)^2 / (d - 1)^2              q >= 2, d >= 3   or   q >= 4, d = 2
//   (N - 1)^2 / (2 (1 - 2^{1-s}))      s <= q < 4, d = 2
//
// with N = max(||rho^Gamma||_1, ||R(rho)||_1). Multiply by mu(d, q) for the
// unnormalized value.

#include "ctq/states.hpp"

namespace ctq {

inline constexpr double kEntanglementWitnessTol = 1e-9;

struct BoundReport {
  double ppt_norm = 1.0;
  double realign_norm = 1.0;
  double lower_bound = 0.0;
  double q = 0.0;
  Index d = 0;
  bool entangled_by_ppt = false;
  bool entangled_by_realignment = false;
};

/// Throws UnequalLocalDims when dA != dB and ExponentOutsideTheoremRange when
/// q is below 2 (d >= 3) or below s_threshold() (d = 2).
BoundReport lower_bound_thm2(const DensityMatrix& rho, double q);

/// True when lower_bound_thm2 accepts (q, d).
bool thm2_exponent_valid(double q, Index d);

/// [mu(d,q) / mu(d,h)] * ct_h. Throws ExponentOrderViolated when q < h.
double corollary1_bound(double ct_h, double q, double h, Index d);

/// Second derivative of the normalized stationary-point profile along the
/// simplex at lambda = 1/d. Its sign decides where the maximally mixed
/// spectrum stops being a local maximum of the rescaled measure.
double stationary_second_derivative(double q, Index d);

/// Root of stationary_second_derivative(., 2), bracketed in [3.0, 3.6].
double s_threshold();

}  // namespace ctq
