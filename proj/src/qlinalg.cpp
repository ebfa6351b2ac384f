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

#include "ctq/qlinalg.hpp"

namespace ctq {

DimensionSignature DimensionSignature::restricted(std::span<const Index> keep) const {
  std::vector<Index> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Index> dims;
  dims.reserve(sorted.size());
  for (Index k : sorted) {
    require(k >= 0 && k < parts(), ErrorCode::DimensionMismatch, "subsystem index out of range");
    dims.push_back(dims_[static_cast<std::size_t>(k)]);
  }
  return DimensionSignature(std::move(dims));
}

DimensionSignature DimensionSignature::grouped(Index split) const {
  require(split >= 1 && split < parts(), ErrorCode::DimensionMismatch, "split must leave both sides non-empty");
  const auto mid = dims_.begin() + split;
  const Index left = std::accumulate(dims_.begin(), mid, Index{1}, std::multiplies<>());
  const Index right = std::accumulate(mid, dims_.end(), Index{1}, std::multiplies<>());
  return DimensionSignature{left, right};
}

}  // namespace ctq
