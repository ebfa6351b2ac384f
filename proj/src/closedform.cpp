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

#include "ctq/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "ctq/measures.hpp"
#include "ctq/states.hpp"

namespace ctq {

namespace {

void require_q(double q) {
  require(std::isfinite(q) && q >= 2.0, ErrorCode::BadExponent, "q must satisfy q >= 2");
}

double project_unit(double x, ErrorCode code, const char* what) {
  require(std::isfinite(x) && x >= -kInputSlack && x <= 1.0 + kInputSlack, code, what);
  return std::clamp(x, 0.0, 1.0);
}

// 1 - x^{2q} - (1 - x^2)^q, the contribution of one Schmidt amplitude x.
double amplitude_term(double x, double q) {
  const double lambda = x * x;
  return 1.0 - std::pow(lambda, q) - std::pow(std::max(0.0, 1.0 - lambda), q);
}

double cross(double ox, double oy, double ax, double ay, double bx, double by) {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

}  // namespace

ChiSigma chi_sigma(double fidelity, Index d) {
  require(d >= 2, ErrorCode::BadDimension, "d must be at least 2");
  const double dd = static_cast<double>(d);
  const double f = project_unit(fidelity, ErrorCode::FidelityOutOfRange, "fidelity must lie in [0, 1]");
  require(f >= 1.0 / dd - 1e-15, ErrorCode::FidelityBelowSeparableBoundary, "fidelity is below 1/d");
  const double root_d = std::sqrt(dd);
  const double a = std::sqrt(f);
  const double b = std::sqrt(std::max(0.0, 1.0 - f));
  ChiSigma cs;
  cs.chi = std::min(1.0, (a + std::sqrt(dd - 1.0) * b) / root_d);
  cs.sigma = std::max(0.0, (a - b / std::sqrt(dd - 1.0)) / root_d);
  return cs;
}

double zeta_isotropic(double fidelity, double q, Index d, bool normalized) {
  require_q(q);
  const double f = project_unit(fidelity, ErrorCode::FidelityOutOfRange, "fidelity must lie in [0, 1]");
  const double dd = static_cast<double>(d);
  require(d >= 2, ErrorCode::BadDimension, "d must be at least 2");
  if (f <= 1.0 / dd) return 0.0;
  const ChiSigma cs = chi_sigma(f, d);
  // Zero amplitudes contribute nothing, so the d - 1 sigma entries suffice.
  double value = amplitude_term(cs.chi, q) + (dd - 1.0) * amplitude_term(cs.sigma, q);
  value = std::max(0.0, value);
  return normalized ? value / mu(d, q) : value;
}

ConvexCurve::ConvexCurve(RealVector grid, RealVector raw) : grid_(std::move(grid)), raw_(std::move(raw)) {
  const Index n = grid_.size();
  require(raw_.size() == n, ErrorCode::DomainError, "grid and values differ in length");
  require(n >= 3, ErrorCode::GridTooCoarse, "envelope needs at least 3 grid points");
  require(grid_.allFinite() && raw_.allFinite(), ErrorCode::NonFinite, "curve has NaN or infinite entries");
  for (Index i = 1; i < n; ++i)
    require(grid_(i) > grid_(i - 1), ErrorCode::DomainError, "grid must be strictly ascending");

  for (Index i = 0; i < n; ++i) {
    while (vertices_.size() >= 2) {
      const Index o = vertices_[vertices_.size() - 2];
      const Index a = vertices_.back();
      if (cross(grid_(o), raw_(o), grid_(a), raw_(a), grid_(i), raw_(i)) > 0.0) break;
      vertices_.pop_back();
    }
    vertices_.push_back(i);
  }

  values_ = raw_;
  for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
    const Index a = vertices_[k];
    const Index b = vertices_[k + 1];
    if (b == a + 1) continue;
    const double slope = (raw_(b) - raw_(a)) / (grid_(b) - grid_(a));
    const double intercept = raw_(a) - slope * grid_(a);
    double gap = 0.0;
    for (Index i = a + 1; i < b; ++i) {
      values_(i) = std::min(raw_(i), slope * grid_(i) + intercept);
      gap = std::max(gap, raw_(i) - values_(i));
    }
    if (gap > kTouchTol) chords_.push_back(Chord{a, b, slope, intercept});
  }
}

std::vector<Index> ConvexCurve::breakpoints() const {
  std::vector<Index> out;
  out.reserve(chords_.size());
  // A chord starts at a hull vertex, which is itself a touching point.
  for (const Chord& c : chords_) out.push_back(c.from);
  return out;
}

Index ConvexCurve::locate(double x) const {
  require(std::isfinite(x), ErrorCode::NonFinite, "evaluation point is not finite");
  require(x >= grid_(0) - 1e-12 && x <= grid_(grid_.size() - 1) + 1e-12, ErrorCode::DomainError,
          "evaluation point lies outside the grid");
  const double* begin = grid_.data();
  const double* end = begin + grid_.size();
  Index i = static_cast<Index>(std::upper_bound(begin, end, x) - begin) - 1;
  return std::clamp<Index>(i, 0, grid_.size() - 2);
}

double ConvexCurve::evaluate(double x) const {
  const Index i = locate(x);
  const double t = std::clamp((x - grid_(i)) / (grid_(i + 1) - grid_(i)), 0.0, 1.0);
  return (1.0 - t) * values_(i) + t * values_(i + 1);
}

std::optional<Chord> ConvexCurve::chord_at(double x) const {
  const Index i = locate(x);
  for (const Chord& c : chords_)
    if (c.from <= i && i < c.to) return c;
  return std::nullopt;
}

ConvexCurve convex_envelope(const RealVector& grid, const RealVector& raw) { return ConvexCurve(grid, raw); }

RealVector unit_grid(double step) {
  require(std::isfinite(step) && step > 0.0 && step <= 0.5, ErrorCode::GridTooCoarse,
          "grid step must lie in (0, 0.5]");
  const auto intervals = static_cast<Index>(std::ceil(1.0 / step - 1e-9));
  RealVector grid(intervals + 1);
  for (Index i = 0; i <= intervals; ++i) grid(i) = std::min(1.0, static_cast<double>(i) * step);
  grid(intervals) = 1.0;
  return grid;
}

ConvexCurve isotropic_envelope(double q, Index d, double step, bool normalized) {
  require_q(q);
  RealVector grid = unit_grid(step);
  RealVector raw(grid.size());
  for (Index i = 0; i < grid.size(); ++i) raw(i) = zeta_isotropic(grid(i), q, d, normalized);
  return ConvexCurve(std::move(grid), std::move(raw));
}

std::vector<double> inflection_points(const ConvexCurve& curve) {
  const RealVector& x = curve.grid();
  const RealVector& y = curve.raw();
  std::vector<double> out;
  int previous = 0;
  for (Index i = 1; i + 1 < x.size(); ++i) {
    const double second = (y(i + 1) - y(i)) / (x(i + 1) - x(i)) - (y(i) - y(i - 1)) / (x(i) - x(i - 1));
    // Ignore curvature below rounding noise, e.g. on flat plateaus.
    if (std::abs(second) < 1e-12) continue;
    const int sign = second > 0.0 ? 1 : -1;
    if (previous != 0 && sign != previous) out.push_back(x(i));
    previous = sign;
  }
  return out;
}

double ctq_isotropic(const ConvexCurve& envelope, double fidelity, double q, Index d, bool normalized) {
  const double f = project_unit(fidelity, ErrorCode::FidelityOutOfRange, "fidelity must lie in [0, 1]");
  if (f <= 1.0 / static_cast<double>(d)) return 0.0;
  if (const auto chord = envelope.chord_at(f)) {
    const double value = std::max(0.0, chord->slope * f + chord->intercept);
    return normalized ? value : value * mu(d, q);
  }
  return zeta_isotropic(f, q, d, normalized);
}

ConvexCurve werner_envelope(double q, double step) {
  require_q(q);
  RealVector grid = unit_grid(step);
  RealVector raw(grid.size());
  for (Index i = 0; i < grid.size(); ++i) raw(i) = zeta_werner(grid(i), q, true);
  return ConvexCurve(std::move(grid), std::move(raw));
}

double ctq_werner(const ConvexCurve& envelope, double w, double q, bool normalized) {
  const double x = project_unit(w, ErrorCode::ParameterOutOfRange, "Werner weight must lie in [0, 1]");
  if (x <= 0.5) return 0.0;
  if (const auto chord = envelope.chord_at(x)) {
    const double value = std::max(0.0, chord->slope * x + chord->intercept);
    return normalized ? value : value * mu(2, q);
  }
  return zeta_werner(x, q, normalized);
}

double ctq_werner(double w, double q, double step, bool normalized) {
  return ctq_werner(werner_envelope(q, step), w, q, normalized);
}

double ctq_isotropic(double fidelity, double q, Index d, double step, bool normalized) {
  const ConvexCurve envelope = isotropic_envelope(q, d, step, true);
  return ctq_isotropic(envelope, fidelity, q, d, normalized);
}

double zeta_werner(double w, double q, bool normalized) {
  require_q(q);
  const double x = project_unit(w, ErrorCode::ParameterOutOfRange, "Werner weight must lie in [0, 1]");
  if (x <= 0.5) return 0.0;
  const double g = 2.0 * std::sqrt(x * (1.0 - x));
  const double value = 2.0 * (1.0 - std::pow((1.0 + g) / 2.0, q) - std::pow((1.0 - g) / 2.0, q));
  return normalized ? value / mu(2, q) : value;
}

double eof_werner(double w) {
  const double x = project_unit(w, ErrorCode::ParameterOutOfRange, "Werner weight must lie in [0, 1]");
  if (x <= 0.5) return 0.0;
  const double c = 2.0 * x - 1.0;
  const double p = (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0;
  auto plogp = [](double v) { return v <= 0.0 ? 0.0 : v * std::log2(v); };
  return -plogp(p) - plogp(1.0 - p);
}

ChiSigma two_level_profile(double n, double m, double fidelity, Index d) {
  const double fd = fidelity * static_cast<double>(d);
  require(n >= 1.0 && m > 0.0, ErrorCode::InfeasibleConstraint, "profile needs n >= 1 and m > 0");
  require(fd >= n - 1e-12 && n + m >= fd - 1e-12 && n + m <= static_cast<double>(d) + 1e-12,
          ErrorCode::InfeasibleConstraint, "profile lies outside 1 <= n <= Fd <= n + m <= d");
  const double root = std::sqrt(std::max(0.0, n * m * (n + m - fd)));
  const double s = std::sqrt(fd);
  ChiSigma cs;
  cs.chi = (n * s + root) / (n * (n + m));
  cs.sigma = std::max(0.0, (m * s - root) / (m * (n + m)));
  return cs;
}

double two_level_value(double n, double m, double fidelity, double q, Index d) {
  const ChiSigma cs = two_level_profile(n, m, fidelity, d);
  return n * amplitude_term(cs.chi, q) + m * amplitude_term(cs.sigma, q);
}

double oracle_min_schmidt(double fidelity, double q, Index d, const OracleOptions& options) {
  require_q(q);
  require(d >= 2 && d <= 5, ErrorCode::BadDimension, "oracle supports 2 <= d <= 5");
  const double dd = static_cast<double>(d);
  require(std::isfinite(fidelity) && fidelity > 1.0 / dd && fidelity <= 1.0 + kInputSlack,
          ErrorCode::InfeasibleConstraint, "no Schmidt vector reaches this fidelity");
  const double fd = std::min(fidelity, 1.0) * dd;
  const double c = std::sqrt(fd);

  double best = std::numeric_limits<double>::infinity();
  const auto n_max = static_cast<Index>(std::floor(fd + 1e-12));
  for (Index n = 1; n <= n_max; ++n) {
    const auto m_min = std::max<Index>(1, static_cast<Index>(std::ceil(fd - static_cast<double>(n) - 1e-12)));
    for (Index m = m_min; n + m <= d; ++m)
      best = std::min(best, two_level_value(static_cast<double>(n), static_cast<double>(m), fd / dd, q, d));
  }

  // Local search on amplitudes x = sqrt(lambda): sum x = c, sum x^2 = 1, x >= 0.
  const double radius = std::sqrt(std::max(0.0, 1.0 - c * c / dd));
  const double center = c / dd;
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  auto project = [&](RealVector& x) {
    for (int it = 0; it < 100; ++it) {
      x.array() += (c - x.sum()) / dd;
      RealVector y = x.array() - center;
      double norm = y.norm();
      if (norm < 1e-14) {
        for (Index i = 0; i < d; ++i) y(i) = normal(rng);
        y.array() -= y.mean();
        norm = y.norm();
      }
      x = (center + (radius / norm) * y.array()).matrix();
      if ((x.array() >= 0.0).all()) return true;
      x = x.cwiseMax(0.0);
    }
    return false;
  };
  auto feasible = [&](const RealVector& x) {
    return (x.array() >= 0.0).all() && std::abs(x.sum() - c) < 1e-10 && std::abs(x.squaredNorm() - 1.0) < 1e-10;
  };
  auto objective = [&](const RealVector& x) {
    double v = 0.0;
    for (double xi : x) v += amplitude_term(xi, q);
    return v;
  };

  for (int r = 0; r < options.restarts; ++r) {
    RealVector x(d);
    for (Index i = 0; i < d; ++i) x(i) = uniform(rng);
    if (!project(x)) continue;
    double step = 0.05;
    for (int it = 0; it < options.iterations; ++it) {
      if (feasible(x)) best = std::min(best, objective(x));
      RealVector grad(d);
      for (Index i = 0; i < d; ++i) {
        const double l = x(i) * x(i);
        grad(i) = -2.0 * q * std::pow(x(i), 2.0 * q - 1.0) + 2.0 * q * x(i) * std::pow(std::max(0.0, 1.0 - l), q - 1.0);
      }
      RealVector next = x - step * grad;
      if (!project(next)) {
        step *= 0.5;
        continue;
      }
      x = next;
    }
    if (feasible(x)) best = std::min(best, objective(x));
  }
  return std::max(0.0, best);
}

void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows, const std::string& x_name) {
  const bool with_eof = std::any_of(rows.begin(), rows.end(), [](const CurveRow& r) { return r.eof.has_value(); });
  out << x_name << ",raw,envelope,lower_bound" << (with_eof ? ",eof" : "") << '\n';
  const auto old_precision = out.precision(15);
  for (const CurveRow& r : rows) {
    out << r.x << ',' << r.raw << ',' << r.envelope << ',';
    if (r.lower_bound) out << *r.lower_bound;
    if (with_eof) {
      out << ',';
      if (r.eof) out << *r.eof;
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace ctq
