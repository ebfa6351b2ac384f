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

#include "ctq/bounds.hpp"
#include "ctq/measures.hpp"
#include "helpers.hpp"

using namespace ctq;

TEST_SUITE("bounds") {
  TEST_CASE("separable input gives a zero bound") {
    const PureState prod = product_basis_state(3, 3, 1, 2);
    const BoundReport b = lower_bound_thm2(DensityMatrix(DimensionSignature{3, 3}, prod.density()), 2.0);
    CHECK(b.lower_bound == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(b.entangled_by_ppt);
    CHECK_FALSE(b.entangled_by_realignment);
  }

  TEST_CASE("isotropic bound forms") {
    for (double f : {0.5, 0.7, 0.9, 1.0}) {
      const BoundReport b = lower_bound_thm2(isotropic(f, 2), 4.0);
      CHECK(b.lower_bound == doctest::Approx((2 * f - 1) * (2 * f - 1)).epsilon(1e-12));
    }
    for (double f : {0.4, 0.8, 1.0}) {
      const BoundReport b = lower_bound_thm2(isotropic(f, 3), 3.0);
      CHECK(b.lower_bound == doctest::Approx((3 * f - 1) * (3 * f - 1) / 4.0).epsilon(1e-12));
      CHECK(b.entangled_by_ppt);
    }
  }

  TEST_CASE("domain errors") {
    try {
      lower_bound_thm2(isotropic(0.8, 2), 3.0);
      FAIL("q below s accepted for d = 2");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ExponentOutsideTheoremRange);
    }
    std::mt19937_64 rng(31);
    try {
      lower_bound_thm2(random_density(DimensionSignature{2, 3}, 3, rng), 3.0);
      FAIL("unequal dimensions accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnequalLocalDims);
    }
    CHECK_THROWS_AS(lower_bound_thm2(isotropic(0.8, 3), 1.9), Error);
  }

  TEST_CASE("bound holds for random pure states") {
    std::mt19937_64 rng(32);
    for (Index d : {2, 3, 4}) {
      const std::vector<double> qs = d == 2 ? std::vector<double>{s_threshold(), 3.6, 4.0, 5.0}
                                            : std::vector<double>{2.0, 3.0, 4.0};
      for (double q : qs)
        for (int i = 0; i < 1000; ++i) {
          const PureState psi = random_pure(DimensionSignature{d, d}, rng);
          const BoundReport b = lower_bound_thm2(DensityMatrix(DimensionSignature{d, d}, psi.density()), q);
          CHECK(b.lower_bound <= ctq_pure(psi, q).value + 1e-9);
        }
    }
  }

  TEST_CASE("threshold s") {
    const double s = s_threshold();
    CHECK(s >= 3.338);
    CHECK(s <= 3.340);
    CHECK(std::abs(stationary_second_derivative(s, 2)) <= 1e-8);
    CHECK(stationary_second_derivative(s + 0.01, 2) > 0.0);
    CHECK(stationary_second_derivative(3.0, 2) < 0.0);
    CHECK(stationary_second_derivative(4.0, 2) > 0.0);
  }

  // The value at (q = 2, d = 3) is about -8.34, so the expected sign does not hold.
  TEST_CASE("second derivative nonnegative at d = 3, q = 2" * doctest::should_fail()) {
    CHECK(stationary_second_derivative(2.0, 3) >= 0.0);
  }

  TEST_CASE("corollary factor") {
    CHECK(corollary1_bound(0.7, 3.0, 3.0, 3) == 0.7);
    CHECK(corollary1_bound(1.0, 3.0, 2.0, 2) == doctest::Approx(1.5));
    CHECK_THROWS_AS(corollary1_bound(1.0, 2.0, 3.0, 2), Error);
    // Exact for d = 2 pure states: C^t_3 = (3/2) C^t_2.
    std::mt19937_64 rng(33);
    for (int i = 0; i < 50; ++i) {
      const PureState psi = random_pure(DimensionSignature{2, 2}, rng);
      CHECK(corollary1_bound(ctq_pure_raw(psi, 2.0).value, 3.0, 2.0, 2) ==
            doctest::Approx(ctq_pure_raw(psi, 3.0).value).epsilon(1e-12));
    }
  }

  TEST_CASE("normalized measure is nondecreasing in q for d = 2, q >= s") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 500; ++i) {
      const PureState psi = random_pure(DimensionSignature{2, 2}, rng);
      double prev = ctq_pure(psi, s_threshold()).value;
      for (double q = 3.4; q <= 8.0; q += 0.2) {
        const double cur = ctq_pure(psi, q).value;
        CHECK(cur >= prev - 1e-10);
        prev = cur;
      }
    }
  }

  // lambda = (1/2, 1/2, 0) gives 0.75 at q = 2 and 0.723 at q = 5.
  TEST_CASE("normalized measure is nondecreasing in q for d = 3" * doctest::should_fail()) {
    RealVector lambda(3);
    lambda << 0.5, 0.5, 0.0;
    const PureState psi = test::product_from_lambda(lambda, 3, 3);
    CHECK(ctq_pure(psi, 5.0).value >= ctq_pure(psi, 2.0).value - 1e-10);
  }

  TEST_CASE("corollary bound below exact value for d = 3, h = 2, q = 5" * doctest::should_fail()) {
    std::mt19937_64 rng(35);
    bool all = true;
    for (int i = 0; i < 500; ++i) {
      const PureState psi = random_pure(DimensionSignature{3, 3}, rng);
      all = all && corollary1_bound(ctq_pure_raw(psi, 2.0).value, 5.0, 2.0, 3) <= ctq_pure_raw(psi, 5.0).value + 1e-10;
    }
    CHECK(all);
  }
}
