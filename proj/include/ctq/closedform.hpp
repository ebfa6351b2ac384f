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

// Exact C^t_q curves for the isotropic and two-qubit Werner families.
//
// Isotropic states: C^t_q(rho_F) is the greatest convex minorant of
//   zeta(F, q, d) = d - (chi^{2q} + (1 - chi^2)^q) - (d - 1)(sigma^{2q} + (1 - sigma^2)^q)
// with zeta = 0 on the separable plateau F <= 1/d. The envelope is built on a
// uniform grid and evaluated with the closed form wherever it touches zeta.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctq/qlinalg.hpp"

namespace ctq {

inline constexpr double kDefaultGridStep = 1e-4;
/// Envelope and raw curve are considered touching below this gap.
inline constexpr double kTouchTol = 1e-9;

struct ChiSigma {
  double chi = 1.0;
  double sigma = 0.0;
};

/// Throws FidelityBelowSeparableBoundary when F < 1/d.
ChiSigma chi_sigma(double fidelity, Index d);

/// 0 for F <= 1/d, divided by mu(d, q) when normalized.
double zeta_isotropic(double fidelity, double q, Index d, bool normalized = true);

struct Chord {
  Index from = 0;
  Index to = 0;
  double slope = 0.0;
  double intercept = 0.0;
};

class ConvexCurve {
 public:
  /// Greatest convex minorant of (grid, raw) by a monotone-chain lower hull.
  ConvexCurve(RealVector grid, RealVector raw);

  const RealVector& grid() const noexcept { return grid_; }
  const RealVector& raw() const noexcept { return raw_; }
  const RealVector& values() const noexcept { return values_; }
  /// Grid indices of the lower hull vertices, ascending.
  const std::vector<Index>& vertices() const noexcept { return vertices_; }
  /// Hull segments along which the envelope lies strictly below the raw curve.
  const std::vector<Chord>& chords() const noexcept { return chords_; }
  /// Last grid index touching the raw curve before each chord.
  std::vector<Index> breakpoints() const;

  /// Linear interpolation of the envelope.
  double evaluate(double x) const;
  /// The chord covering x, if any.
  std::optional<Chord> chord_at(double x) const;

 private:
  Index locate(double x) const;

  RealVector grid_;
  RealVector raw_;
  RealVector values_;
  std::vector<Index> vertices_;
  std::vector<Chord> chords_;
};

/// Throws GridTooCoarse for fewer than 3 points, DomainError when the grid is
/// not strictly ascending or the sizes differ.
ConvexCurve convex_envelope(const RealVector& grid, const RealVector& raw);

/// Uniform grid on [0, 1] with the last point pinned to 1.
RealVector unit_grid(double step);

/// Envelope of the normalized (or raw) zeta over unit_grid(step).
ConvexCurve isotropic_envelope(double q, Index d, double step = kDefaultGridStep, bool normalized = true);

/// Grid points where the discrete second difference of the raw curve changes
/// sign. Used to compare hull departure points with curvature changes.
std::vector<double> inflection_points(const ConvexCurve& curve);

/// co(zeta)(F). Off chords the closed form is returned directly.
double ctq_isotropic(double fidelity, double q, Index d, double step = kDefaultGridStep, bool normalized = true);
/// Same, reusing a normalized isotropic_envelope(q, d, step).
double ctq_isotropic(const ConvexCurve& envelope, double fidelity, double q, Index d, bool normalized = true);

/// Two-qubit Werner family, w the singlet weight.
double zeta_werner(double w, double q, bool normalized = true);
/// Envelope of the normalized zeta_werner over unit_grid(step). It has no
/// chords for 2 <= q <= 4; above that zeta_werner loses convexity near w = 1.
ConvexCurve werner_envelope(double q, double step = kDefaultGridStep);
/// co(zeta_werner)(w), evaluated like ctq_isotropic.
double ctq_werner(double w, double q, double step = kDefaultGridStep, bool normalized = true);
double ctq_werner(const ConvexCurve& envelope, double w, double q, bool normalized = true);
/// Entanglement of formation in ebits.
double eof_werner(double w);

/// Solutions of n chi + m sigma = sqrt(F d), n chi^2 + m sigma^2 = 1 for
/// real n >= 1, m > 0 inside the parallelogram 1 <= n <= F d <= n + m <= d.
ChiSigma two_level_profile(double n, double m, double fidelity, Index d);
/// n + m - n (chi^{2q} + (1 - chi^2)^q) - m (sigma^{2q} + (1 - sigma^2)^q)
double two_level_value(double n, double m, double fidelity, double q, Index d);

struct OracleOptions {
  int restarts = 100;
  int iterations = 400;
  std::uint64_t seed = 20260101;
};

/// Minimum of the unnormalized C^t_q over Schmidt vectors with
/// (sum sqrt(lambda))^2 = F d. Searches all integer two-level profiles and
/// refines with projected gradient descent from random feasible points.
/// Throws InfeasibleConstraint when F <= 1/d or F > 1, BadDimension for d > 5.
double oracle_min_schmidt(double fidelity, double q, Index d, const OracleOptions& options = {});

struct CurveRow {
  double x = 0.0;
  double raw = 0.0;
  double envelope = 0.0;
  std::optional<double> lower_bound;
  std::optional<double> eof;
};

/// Header "<x_name>,raw,envelope,lower_bound" plus ",eof" when any row carries it.
void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows, const std::string& x_name);

}  // namespace ctq
