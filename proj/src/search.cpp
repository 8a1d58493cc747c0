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


#include "mvs/search.hpp"

#include <optional>
#include <string>
#include <utility>

#include "mvs/error.hpp"
#include "mvs/random.hpp"

namespace mvs {

void validate(const GeneratorConfig& cfg) {
  if (cfg.primes.empty()) throw Error(ErrorKind::kInvalidArgument, "no primes configured");
  for (std::uint64_t p : cfg.primes) (void)Prime(p);
  if (cfg.max_ambient_dim == 0 || cfg.max_components == 0 || cfg.max_ambients == 0) {
    throw Error(ErrorKind::kInvalidArgument, "generator caps must be positive");
  }
}

MultiVectorSpace random_instance(const GeneratorConfig& cfg, std::uint64_t draw) {
  validate(cfg);
  Rng rng(cfg.seed, draw);
  std::vector<AmbientId> ambients;
  const std::size_t ambient_count = rng.uniform(1, cfg.max_ambients);
  for (std::size_t i = 0; i < ambient_count; ++i) {
    const Prime p(cfg.primes[rng.index(cfg.primes.size())]);
    const std::size_t n = rng.uniform(1, cfg.max_ambient_dim);
    ambients.push_back({"A" + std::to_string(i), p, n});
  }
  std::vector<Subspace> components;
  const std::size_t k = rng.uniform(1, cfg.max_components);
  for (std::size_t c = 0; c < k; ++c) {
    const AmbientId& amb = ambients[rng.index(ambients.size())];
    const std::size_t rows = rng.uniform(0, cfg.max_ambient_dim);
    FpMatrix gens(amb.p, rows, amb.n);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t j = 0; j < amb.n; ++j) {
        gens.at(r, j) = static_cast<Residue>(rng.uniform(0, amb.p.value() - 1));
      }
    }
    components.push_back(span(amb, gens));
  }
  return MultiVectorSpace(std::move(components), cfg.policy);
}

namespace {

struct Comparison {
  std::int64_t ie;
  std::size_t greedy;
  bool disagree() const { return ie != static_cast<std::int64_t>(greedy); }
};

Comparison compare(const MultiVectorSpace& m, const Limits& limits) {
  return {dim_inclusion_exclusion(m, limits), dim_greedy(m, limits)};
}

std::optional<MultiVectorSpace> without_component(const MultiVectorSpace& m, std::size_t i) {
  if (m.size() <= 1) return std::nullopt;
  std::vector<Subspace> parts = m.components();
  parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
  return MultiVectorSpace(std::move(parts), m.policy());
}

// Deletes coordinate `coord` of `ambient` from every component living there.
std::optional<MultiVectorSpace> without_coordinate(const MultiVectorSpace& m,
                                                   const AmbientId& ambient, std::size_t coord) {
  if (ambient.n <= 1) return std::nullopt;
  const AmbientId smaller{ambient.label, ambient.p, ambient.n - 1};
  std::vector<Subspace> parts;
  for (const Subspace& s : m.components()) {
    if (s.ambient() != ambient) {
      parts.push_back(s);
      continue;
    }
    FpMatrix gens(ambient.p, 0, smaller.n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
      Vec row = s.basis_row(r);
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(coord));
      gens.append_row(row);
    }
    parts.push_back(span(smaller, gens));
  }
  return MultiVectorSpace(std::move(parts), m.policy());
}

}  // namespace

std::vector<DiscrepancyReport> find_formula_discrepancies(
    const GeneratorConfig& cfg, std::size_t trials, std::span<const MultiVectorSpace> injected,
    const Limits& limits) {
  validate(cfg);
  std::vector<DiscrepancyReport> out;
  auto audit = [&](const MultiVectorSpace& m, std::size_t trial) {
    const Comparison c = compare(m, limits);
    if (c.disagree()) out.push_back({m, c.ie, c.greedy, cfg.seed, trial});
  };
  for (std::size_t i = 0; i < injected.size(); ++i) audit(injected[i], i);
  for (std::size_t d = 0; d < trials; ++d) {
    audit(random_instance(cfg, d), injected.size() + d);
  }
  return out;
}

DiscrepancyReport minimize_counterexample(const DiscrepancyReport& report,
                                          const Limits& limits) {
  DiscrepancyReport best = report;
  auto try_accept = [&](const std::optional<MultiVectorSpace>& smaller) {
    if (!smaller) return false;
    const Comparison c = compare(*smaller, limits);
    if (!c.disagree()) return false;
    best.instance = *smaller;
    best.ie_value = c.ie;
    best.greedy_value = c.greedy;
    return true;
  };

  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (std::size_t i = 0; i < best.instance.size() && !reduced; ++i) {
      reduced = try_accept(without_component(best.instance, i));
    }
    for (const AmbientId& amb : best.instance.ambients()) {
      for (std::size_t j = 0; j < amb.n && !reduced; ++j) {
        reduced = try_accept(without_coordinate(best.instance, amb, j));
      }
      if (reduced) break;
    }
  }
  return best;
}

}  // namespace mvs
