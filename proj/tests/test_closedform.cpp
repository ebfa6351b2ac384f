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

#include <doctest.h>

#include <sstream>

#include "ctq/bounds.hpp"
#include "ctq/closedform.hpp"
#include "ctq/measures.hpp"
#include "ctq/states.hpp"

using namespace ctq;

namespace {

// Greatest convex minorant by brute force: at each i, the minimum over all
// chords (a, b) with a <= i <= b. O(n^3), fine for small grids.
RealVector brute_minorant(const RealVector& x, const RealVector& y) {
  const Index n = x.size();
  RealVector out = y;
  for (Index i = 0; i < n; ++i)
    for (Index a = 0; a <= i; ++a)
      for (Index b = i; b < n; ++b) {
        if (a == b) continue;
        const double t = (x(i) - x(a)) / (x(b) - x(a));
        out(i) = std::min(out(i), (1 - t) * y(a) + t * y(b));
      }
  return out;
}

}  // namespace

TEST_SUITE("closedform") {
  TEST_CASE("chi and sigma") {
    const ChiSigma one = chi_sigma(1.0, 3);
    CHECK(one.chi == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(one.sigma == doctest::Approx(1.0 / std::sqrt(3.0)));
    const ChiSigma edge = chi_sigma(0.25, 4);
    CHECK(edge.chi == doctest::Approx(1.0));
    CHECK(edge.sigma == doctest::Approx(0.0));
    const ChiSigma mid = chi_sigma(0.8, 2);
    CHECK(mid.chi == doctest::Approx((std::sqrt(0.8) + std::sqrt(0.2)) / std::sqrt(2.0)));
    CHECK(mid.chi * mid.chi + mid.sigma * mid.sigma == doctest::Approx(1.0).epsilon(1e-12));
    for (Index d : {2, 3, 5})
      for (double f : {0.6, 0.75, 0.99}) {
        const ChiSigma cs = chi_sigma(f, d);
        const double dm1 = static_cast<double>(d - 1);
        CHECK(std::abs(cs.chi * cs.chi + dm1 * cs.sigma * cs.sigma - 1.0) < 1e-10);
        CHECK(std::abs(cs.chi + dm1 * cs.sigma - std::sqrt(f * d)) < 1e-10);
        CHECK(cs.sigma <= cs.chi);
      }
    CHECK_THROWS_AS(chi_sigma(0.2, 3), Error);
  }

  TEST_CASE("zeta closed forms") {
    for (double f = 0.51; f <= 1.0; f += 0.01) {
      const double s = 2 * f - 1;
      CHECK(zeta_isotropic(f, 3.0, 2) == doctest::Approx(s * s).epsilon(1e-12));
      CHECK(zeta_isotropic(f, 4.0, 2) == doctest::Approx((7 + 4 * f * (1 - f)) / 7 * s * s).epsilon(1e-12));
    }
    CHECK(zeta_isotropic(1.0, 3.0, 4, false) == doctest::Approx(mu(4, 3.0)));
    CHECK(zeta_isotropic(0.3, 3.0, 3) == 0.0);
    CHECK_THROWS_AS(zeta_isotropic(0.5, 1.5, 3), Error);
  }

  TEST_CASE("zeta at F equals the measure of the (1, d-1) Schmidt vector") {
    for (Index d : {2, 3, 4})
      for (double f : {0.6, 0.8, 0.95}) {
        const ChiSigma cs = chi_sigma(f, d);
        RealVector lambda = RealVector::Constant(d, cs.sigma * cs.sigma);
        lambda(0) = cs.chi * cs.chi;
        lambda /= lambda.sum();
        std::sort(lambda.data(), lambda.data() + d, std::greater<>());
        CHECK(total_concurrence_pure(SchmidtSpectrum(lambda), 3.0, d) ==
              doctest::Approx(zeta_isotropic(f, 3.0, d, false)).epsilon(1e-10));
      }
  }

  TEST_CASE("envelope matches the brute-force minorant") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
      const Index size = 40;
      RealVector x = RealVector::LinSpaced(size, 0.0, 1.0);
      RealVector y(size);
      for (Index i = 0; i < size; ++i) y(i) = n(rng);
      const ConvexCurve c = convex_envelope(x, y);
      CHECK((c.values() - brute_minorant(x, y)).cwiseAbs().maxCoeff() < 1e-12);
      for (Index i = 1; i + 1 < size; ++i) CHECK(c.values()(i + 1) - 2 * c.values()(i) + c.values()(i - 1) >= -1e-9);
      CHECK(((c.values() - c.raw()).array() <= 1e-12).all());
    }
  }

  TEST_CASE("already convex input is unchanged and idempotent") {
    const RealVector x = RealVector::LinSpaced(101, 0.0, 1.0);
    const RealVector y = x.array().square();
    const ConvexCurve c = convex_envelope(x, y);
    CHECK((c.values() - y).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(c.chords().empty());
    CHECK(c.breakpoints().empty());
    const ConvexCurve again = convex_envelope(x, isotropic_envelope(3.0, 3, 1e-3).values().head(101));
    const ConvexCurve twice = convex_envelope(x, again.values());
    CHECK((twice.values() - again.values()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(convex_envelope(RealVector::LinSpaced(2, 0, 1), RealVector::Zero(2)), Error);
  }

  TEST_CASE("isotropic envelope idempotence on the full grid") {
    const ConvexCurve c = isotropic_envelope(4.0, 3, 1e-3);
    const ConvexCurve twice = convex_envelope(c.grid(), c.values());
    CHECK((twice.values() - c.values()).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("isotropic measure examples") {
    CHECK(ctq_isotropic(0.75, 3.0, 2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(ctq_isotropic(1.0 / 3.0, 3.0, 3) == 0.0);
    CHECK(ctq_isotropic(1.0, 4.0, 3) == doctest::Approx(1.0).epsilon(1e-12));
    // Chord value near the top of the d = 3, q = 3 curve.
    CHECK(std::abs(ctq_isotropic(0.97, 3.0, 3) - (2.23 * 0.97 - 1.23)) < 5e-3);
    CHECK(ctq_isotropic(0.9, 3.0, 3, kDefaultGridStep, false) ==
          doctest::Approx(ctq_isotropic(0.9, 3.0, 3) * mu(3, 3.0)).epsilon(1e-12));
  }

  TEST_CASE("d = 2 envelopes touch the raw curve for q <= 4 only") {
    for (double q : {2.0, 3.0, 3.5, 4.0}) {
      CHECK(isotropic_envelope(q, 2).chords().empty());
      CHECK(werner_envelope(q).chords().empty());
    }
    // h_q(2F - 1) loses convexity near F = 1 once q is around 5.
    for (double q : {6.0, 8.0}) {
      const ConvexCurve iso = isotropic_envelope(q, 2);
      const ConvexCurve wer = werner_envelope(q);
      REQUIRE(iso.chords().size() == 1);
      CHECK(wer.chords().size() == 1);
      CHECK(iso.grid()(iso.chords()[0].to) == 1.0);
      const double mid = 0.5 * (iso.grid()(iso.chords()[0].from) + 1.0);
      CHECK(ctq_isotropic(iso, mid, q, 2) < zeta_isotropic(mid, q, 2));
      CHECK(ctq_werner(wer, mid, q) == doctest::Approx(ctq_isotropic(iso, mid, q, 2)).epsilon(1e-9));
    }
  }

  TEST_CASE("d = 3 chord geometry") {
    const ConvexCurve c3 = isotropic_envelope(3.0, 3);
    REQUIRE(c3.chords().size() == 1);
    CHECK(c3.chords()[0].slope == doctest::Approx(2.25).epsilon(1e-3));
    CHECK(c3.grid()(c3.chords()[0].to) == 1.0);
    const ConvexCurve c4 = isotropic_envelope(4.0, 3);
    REQUIRE(c4.chords().size() == 1);
    CHECK(std::abs(c4.evaluate(0.95) - (2.0658 * 0.95 - 1.06566)) < 2e-3);
    // The curvature of zeta changes sign where the published chords start.
    const auto i3 = inflection_points(c3);
    const auto i4 = inflection_points(c4);
    REQUIRE(!i3.empty());
    REQUIRE(!i4.empty());
    CHECK(i3.back() == doctest::Approx(0.936).epsilon(2e-3));
    CHECK(i4.back() == doctest::Approx(0.904).epsilon(2e-3));
  }

  TEST_CASE("published breakpoint for d = 3, q = 3 lies at the hull departure" * doctest::should_fail()) {
    const ConvexCurve c3 = isotropic_envelope(3.0, 3);
    const double f = c3.grid()(c3.breakpoints().at(0));
    CHECK(f >= 0.93);
    CHECK(f <= 0.95);
  }

  TEST_CASE("zeta is increasing above the separable boundary") {
    for (double q : {3.0, 4.0}) {
      double prev = 0.0;
      for (double f = 1.0 / 3.0 + 1e-3; f <= 1.0; f += 1e-3) {
        const double v = zeta_isotropic(f, q, 3);
        CHECK(v - prev > -1e-10);
        prev = v;
      }
    }
  }

  TEST_CASE("lower bound stays below the envelope") {
    for (double q : {3.0, 4.0}) {
      const ConvexCurve env = isotropic_envelope(q, 3);
      for (double f = 0.34; f <= 1.0; f += 0.01)
        CHECK(lower_bound_thm2(isotropic(f, 3), q).lower_bound <= ctq_isotropic(env, f, q, 3) + 1e-9);
    }
    const ConvexCurve env = isotropic_envelope(4.0, 2);
    for (double f = 0.5; f <= 1.0; f += 0.01)
      CHECK(lower_bound_thm2(isotropic(f, 2), 4.0).lower_bound <= ctq_isotropic(env, f, 4.0, 2) + 1e-9);
  }

  TEST_CASE("grid refinement is stable") {
    for (Index d : {2, 3, 4}) {
      const ConvexCurve coarse = isotropic_envelope(3.0, d, 0.1);
      const ConvexCurve fine = isotropic_envelope(3.0, d, 1e-3);
      for (Index i = 0; i < coarse.grid().size(); ++i)
        CHECK(std::abs(coarse.values()(i) - fine.evaluate(coarse.grid()(i))) < 5e-3);
    }
  }

  TEST_CASE("werner closed form") {
    for (double q : {2.0, 3.0, 5.5, 8.0}) {
      CHECK(zeta_werner(1.0, q) == doctest::Approx(1.0));
      CHECK(zeta_werner(1.0, q, false) == doctest::Approx(mu(2, q)));
      CHECK(zeta_werner(0.5, q) == 0.0);
      for (double w = 0.55; w <= 1.0; w += 0.05)
        CHECK(std::abs(zeta_werner(w, q) - h_q(2 * w - 1, q)) < 1e-12);
    }
    for (double w = 0.55; w <= 1.0; w += 0.05) {
      CHECK(std::abs(zeta_werner(w, 3.0) - (2 * w - 1) * (2 * w - 1)) < 1e-12);
      CHECK(std::abs(ctq_werner(w, 3.0) - ctq_two_qubit_mixed(werner(w, 2), 3.0).value) < 1e-10);
    }
  }

  TEST_CASE("entanglement of formation for Werner states") {
    CHECK(eof_werner(1.0) == doctest::Approx(1.0));
    CHECK(eof_werner(0.5) == 0.0);
    const double e = eof_werner(0.85);
    CHECK(e >= ctq_werner(0.85, 2.0));
    CHECK(e <= ctq_werner(0.85, 8.0));
    const ConvexCurve env = werner_envelope(8.0);
    for (double w = 0.62; w <= 1.0; w += 0.01) CHECK(eof_werner(w) <= ctq_werner(env, w, 8.0) + 1e-12);
  }

  // Near w = 1/2 the entanglement of formation scales as C^2 log(1/C) while
  // the q = 8 value scales as C^2; they cross at w = 0.61293.
  TEST_CASE("entanglement of formation below the q = 8 value for every w > 1/2" * doctest::should_fail()) {
    const ConvexCurve env = werner_envelope(8.0);
    for (double w = 0.51; w <= 1.0; w += 0.01) CHECK(eof_werner(w) <= ctq_werner(env, w, 8.0) + 1e-12);
  }

  TEST_CASE("two-level profile reproduces (chi, sigma) at (1, d-1)") {
    for (Index d : {2, 3, 4})
      for (double f : {0.6, 0.9}) {
        const ChiSigma a = two_level_profile(1.0, static_cast<double>(d - 1), f, d);
        const ChiSigma b = chi_sigma(f, d);
        CHECK(a.chi == doctest::Approx(b.chi).epsilon(1e-12));
        CHECK(a.sigma == doctest::Approx(b.sigma).epsilon(1e-12));
      }
  }

  TEST_CASE("derivative signs over the feasible parallelogram") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double h = 1e-6;
    int samples = 0;
    while (samples < 3000) {
      const Index d = 2 + static_cast<Index>(u(rng) * 4);
      const double q = 2.0 + 3.0 * u(rng);
      const double f = 1.0 / d + (1.0 - 1.0 / d) * u(rng);
      const double fd = f * d;
      const double n = 1.0 + (fd - 1.0) * u(rng);
      const double v = fd + (d - fd) * u(rng);
      const double m = v - n;
      if (fd - n < 1e-3 || v - fd < 1e-3 || m < 1e-2 || d - v < 1e-3 || n - 1.0 < 1e-3) continue;
      const double dm = (two_level_value(n, m + h, f, q, d) - two_level_value(n, m - h, f, q, d)) / (2 * h);
      const double du = (two_level_value(n - h / 2, m + h / 2, f, q, d) - two_level_value(n + h / 2, m - h / 2, f, q, d)) /
                        (2 * h);
      CHECK(dm <= 1e-9);
      CHECK(du <= 1e-6);
      ++samples;
    }
  }

  TEST_CASE("oracle agrees with zeta on a grid") {
    for (Index d : {2, 3, 4})
      for (double q : {2.0, 3.0, 4.0})
        for (int i = 1; i <= 10; ++i) {
          const double f = 1.0 / d + (1.0 - 1.0 / d) * i / 10.0;
          CHECK(std::abs(oracle_min_schmidt(f, q, d, {20, 200, 5}) - zeta_isotropic(f, q, d, false)) < 1e-6);
        }
    CHECK_THROWS_AS(oracle_min_schmidt(0.3, 3.0, 3), Error);
    CHECK(oracle_min_schmidt(1.0, 3.0, 3) == doctest::Approx(mu(3, 3.0)).epsilon(1e-9));
    CHECK(oracle_min_schmidt(1.0 / 3.0 + 1e-9, 3.0, 3) < 1e-6);
  }

  TEST_CASE("curve CSV layout") {
    std::ostringstream s;
    write_curve_csv(s, {CurveRow{0.5, 0.1, 0.1, 0.05, std::nullopt}, CurveRow{1.0, 1.0, 1.0, std::nullopt, 1.0}}, "w");
    CHECK(s.str() == "w,raw,envelope,lower_bound,eof\n0.5,0.1,0.1,0.05,\n1,1,1,,1\n");
  }
}
