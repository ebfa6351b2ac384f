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

// Acceptance suite. Each criterion collects named sub-checks with the measured
// value and the expected condition; a criterion passes when all of them do.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctq/closedform.hpp"

namespace ctq {

struct SubCheck {
  std::string label;
  double measured = 0.0;
  std::string expected;
  bool ok = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<SubCheck> checks;
  double seconds = 0.0;

  bool passed() const;
  /// Labels of failing sub-checks joined by commas.
  std::string failing_labels() const;
};

struct AcceptanceOptions {
  std::uint64_t seed = 7;
  double grid_step = kDefaultGridStep;
  /// Command that runs the acceptance suite against a library with a
  /// perturbed normalization. Criterion 13 is skipped when unset.
  std::optional<std::string> mutant_command;
  /// Restrict the run to these ids; empty runs everything.
  std::vector<int> only;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "[PASS] 1 name | label=value (expected ...) ..." one line per criterion.
void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);
std::string acceptance_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace ctq
