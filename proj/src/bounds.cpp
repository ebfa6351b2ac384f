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

#include "ctq/bounds.hpp"

#include <cmath>

#include "ctq/measures.hpp"

namespace ctq {

namespace {

constexpr double kBracketLow = 3.0;
constexpr double kBracketHigh = 3.6;

}  // namespace

double stationary_second_derivative(double q, Index d) {
  require(std::isfinite(q) && q > 1.0, ErrorCode::BadExponent, "q must exceed 1");
  require(d >= 2, ErrorCode::BadDimension, "d must be at least 2");
  const double dd = static_cast<double>(d);
  const double x = 1.0 / dd;
  const double y = 1.0 - x;
  const double a = std::pow(dd, q) - std::pow(dd - 1.0, q) - 1.0;
  const double b = std::pow(dd, 1.0 - q) * (std::pow(dd - 1.0, q) * std::log(dd / (dd - 1.0)) + std::log(dd));
  const double px = std::pow(x, q - 2.0);
  const double py = std::pow(y, q - 2.0);
  const double curvature = q * (q - 1.0) * (px * std::log(x) + py * std::log(y)) + (2.0 * q - 1.0) * (px + py);
  return -a * curvature + b * q * (q - 1.0) * (px + py);
}

double s_threshold() {
  static const double root = [] {
    double lo = kBracketLow;
    double hi = kBracketHigh;
    double flo = stationary_second_derivative(lo, 2);
    const double fhi = stationary_second_derivative(hi, 2);
    require(flo < 0.0 && fhi > 0.0, ErrorCode::RootNotBracketed, "no sign change in [3.0, 3.6]");
    // Run to machine precision; the tolerance on the root is far looser.
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = stationary_second_derivative(mid, 2);
      if (fm == 0.0) return mid;
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

bool thm2_exponent_valid(double q, Index d) {
  if (!std::isfinite(q)) return false;
  if (d >= 3) return q >= 2.0;
  return d == 2 && q >= s_threshold();
}

BoundReport lower_bound_thm2(const DensityMatrix& rho, double q) {
  const DimensionSignature& sig = rho.signature();
  require(sig.is_bipartite(), ErrorCode::DimensionMismatch, "bound needs a bipartite state");
  require(sig[0] == sig[1], ErrorCode::UnequalLocalDims, "bound is established only for dA = dB");
  const Index d = sig[0];
  require(d >= 2, ErrorCode::BadDimension, "local dimension must be at least 2");
  require(thm2_exponent_valid(q, d), ErrorCode::ExponentOutsideTheoremRange,
          d == 2 ? "d = 2 needs q >= s" : "d >= 3 needs q >= 2");

  BoundReport report;
  report.q = q;
  report.d = d;
  report.ppt_norm = trace_norm(partial_transpose(rho.matrix(), sig));
  report.realign_norm = trace_norm(realign(rho.matrix(), sig));
  report.entangled_by_ppt = report.ppt_norm > 1.0 + kEntanglementWitnessTol;
  report.entangled_by_realignment = report.realign_norm > 1.0 + kEntanglementWitnessTol;

  const double excess = std::max(0.0, std::max(report.ppt_norm, report.realign_norm) - 1.0);
  const double dm1 = static_cast<double>(d - 1);
  if (d == 2 && q < 4.0) {
    report.lower_bound = excess * excess / (2.0 * (1.0 - std::pow(2.0, 1.0 - s_threshold())));
  } else {
    report.lower_bound = excess * excess / (dm1 * dm1);
  }
  return report;
}

double corollary1_bound(double ct_h, double q, double h, Index d) {
  require(std::isfinite(q) && std::isfinite(h) && q >= h, ErrorCode::ExponentOrderViolated, "corollary needs q >= h");
  require(h >= 2.0, ErrorCode::BadExponent, "h must be at least 2");
  if (q == h) return ct_h;
  return mu(d, q) / mu(d, h) * ct_h;
}

}  // namespace ctq
