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

#include <cmath>
#include <random>

#include "ctq/states.hpp"

namespace ctq::test {

inline ComplexMatrix local_unitary(Index da, Index db, std::mt19937_64& rng) {
  return kron(random_unitary(da, rng), random_unitary(db, rng));
}

inline PureState product_from_lambda(const RealVector& lambda, Index da, Index db) {
  ComplexVector amps = ComplexVector::Zero(da * db);
  for (Index i = 0; i < lambda.size(); ++i) amps(i * db + i) = std::sqrt(lambda(i));
  return pure_from_amplitudes(amps, DimensionSignature{da, db});
}

inline RealVector random_simplex(Index n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  RealVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = e(rng);
  v /= v.sum();
  std::sort(v.data(), v.data() + n, std::greater<>());
  return v;
}

}  // namespace ctq::test
