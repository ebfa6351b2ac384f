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

// Acceptance runner: prints one PASS/FAIL line per criterion.

#include <iostream>
#include <string>

#include "ctq/acceptance.hpp"

int main() {
  ctq::AcceptanceOptions options;
  options.mutant_command = std::string("\"") + CTQ_MUTANT_CLI + "\" accept";
  const auto results = ctq::run_acceptance(options);
  ctq::print_acceptance(std::cout, results);
  int failed = 0;
  for (const auto& r : results) failed += r.passed() ? 0 : 1;
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
