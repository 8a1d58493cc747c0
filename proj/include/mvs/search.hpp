// Copyright 2026 The Authors.
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


// Random instances and an auditor comparing the inclusion-exclusion
// dimension sum against the greedy basis cardinality.

#ifndef MVS_SEARCH_HPP
#define MVS_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mvs/multispace.hpp"

namespace mvs {

struct GeneratorConfig {
  std::vector<std::uint64_t> primes{2, 3};
  std::size_t max_ambient_dim = 4;
  std::size_t max_components = 4;
  /// Instances draw between 1 and this many ambients.
  std::size_t max_ambients = 2;
  OperationPolicy policy = OperationPolicy::kTotal;
  std::uint64_t seed = 0;
};

/// Throws kInvalidArgument for empty/non-prime prime lists or zero caps.
void validate(const GeneratorConfig& cfg);

/// Deterministic in (cfg, draw). Ambient dimensions are uniform in
/// [1, max_ambient_dim]; each component is the span of a uniformly random
/// generator matrix with a uniform row count in [0, max_ambient_dim].
MultiVectorSpace random_instance(const GeneratorConfig& cfg, std::uint64_t draw);

struct DiscrepancyReport {
  MultiVectorSpace instance;
  std::int64_t ie_value = 0;
  std::size_t greedy_value = 0;
  std::uint64_t seed = 0;
  /// Position in the trial sequence; injected instances come first.
  std::size_t trial = 0;
};

/// Evaluates `injected` as trials 0..m-1, then random draws 0..trials-1 as
/// trials m..m+trials-1, and returns every disagreement in trial order.
std::vector<DiscrepancyReport> find_formula_discrepancies(
    const GeneratorConfig& cfg, std::size_t trials,
    std::span<const MultiVectorSpace> injected = {}, const Limits& limits = {});

/// Drops components and deletes ambient coordinates while the disagreement
/// persists; the result admits no further single reduction.
DiscrepancyReport minimize_counterexample(const DiscrepancyReport& report,
                                          const Limits& limits = {});

}  // namespace mvs

#endif  // MVS_SEARCH_HPP
