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

// State files: {"dims": [...], "kind": "pure" | "density", "re": [...], "im": [...]}
// Amplitude vectors for pure states, row-major matrix entries for densities.
// "im" may be omitted for real data.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "ctq/states.hpp"

namespace ctq {

/// Pure states on two parties are PureState, on three or more MultipartiteState.
using AnyState = std::variant<PureState, MultipartiteState, DensityMatrix>;

/// Throws ParseError on malformed JSON or schema violations; state
/// validation errors propagate with their own codes.
AnyState parse_state(std::string_view text);
AnyState read_state(const std::filesystem::path& path);

std::string state_to_json(const AnyState& state);
void write_state(const std::filesystem::path& path, const AnyState& state);

/// Writes to a sibling temporary file and renames it over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Density matrix of any state variant.
ComplexMatrix density_of(const AnyState& state);
const DimensionSignature& signature_of(const AnyState& state);

}  // namespace ctq
