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


#include "mvs/oracle.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvs/error.hpp"

namespace mvs::oracle {
namespace {

void require_caps(const OracleConfig& cfg) {
  if (cfg.enumeration_cap == 0 || cfg.coefficient_cap == 0) {
    throw Error(ErrorKind::kInvalidArgument, "oracle caps must be positive");
  }
}

// Enumerated components and the existence rules evaluated by set lookup.
class Table {
 public:
  Table(const MultiVectorSpace& m, std::size_t cap) : policy_(m.policy()) {
    for (const Subspace& s : m.components()) {
      auto listed = enumerate(s, cap);
      parts_.push_back({s.ambient(), std::set<Vec>(listed.begin(), listed.end())});
    }
  }

  bool holds(std::size_t i, const TaggedVector& v) const {
    return parts_[i].ambient == v.ambient && parts_[i].elements.contains(v.coords);
  }

  bool in_union(const TaggedVector& v) const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (holds(i, v)) return true;
    }
    return false;
  }

  bool hosts(const AmbientId& ambient) const {
    for (const auto& part : parts_) {
      if (part.ambient == ambient) return true;
    }
    return false;
  }

  bool scalar_exists(const TaggedVector& v) const {
    return policy_ == OperationPolicy::kTotal ? hosts(v.ambient) : in_union(v);
  }

  bool sum_exists(const TaggedVector& x, const TaggedVector& y) const {
    if (x.ambient != y.ambient) return false;
    if (policy_ == OperationPolicy::kTotal) return hosts(x.ambient);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (holds(i, x) && holds(i, y)) return true;
    }
    return false;
  }

 private:
  struct Part {
    AmbientId ambient;
    std::set<Vec> elements;
  };

  OperationPolicy policy_;
  std::vector<Part> parts_;
};

TaggedVector times(Residue a, const TaggedVector& v) {
  TaggedVector out = v;
  for (Residue& e : out.coords) e = v.ambient.p.mul(a, e);
  return out;
}

TaggedVector plus(const TaggedVector& x, const TaggedVector& y) {
  TaggedVector out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = x.ambient.p.add(x.coords[i], y.coords[i]);
  }
  return out;
}

std::optional<TaggedVector> chain_value(const Table& table,
                                        std::span<const TaggedVector> vectors,
                                        const Vec& coeffs) {
  std::optional<TaggedVector> acc;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!table.scalar_exists(vectors[i])) return std::nullopt;
    TaggedVector term = times(coeffs[i], vectors[i]);
    if (!acc) {
      acc = std::move(term);
    } else if (table.sum_exists(*acc, term)) {
      acc = plus(*acc, term);
    } else {
      return std::nullopt;
    }
  }
  return acc;
}

bool all_zero(const Vec& v) {
  for (Residue e : v) {
    if (e != 0) return false;
  }
  return true;
}

}  // namespace

VectorSet brute_span(const MultiVectorSpace& m, std::span<const TaggedVector> generators,
                     const OracleConfig& cfg) {
  require_caps(cfg);
  const Table table(m, cfg.enumeration_cap);
  VectorSet reached;
  for (;;) {
    VectorSet next = reached;
    for (const TaggedVector& g : generators) {
      if (!table.scalar_exists(g)) continue;
      for (Residue a = 0; a < g.ambient.p.value(); ++a) {
        const TaggedVector term = times(a, g);
        next.insert(term);
        for (const TaggedVector& r : reached) {
          if (table.sum_exists(r, term)) next.insert(plus(r, term));
        }
      }
    }
    if (next.size() > cfg.enumeration_cap) {
      throw Error(ErrorKind::kEnumerationTooLarge,
                  "span exceeds " + std::to_string(cfg.enumeration_cap) + " vectors");
    }
    if (next == reached) break;
    reached = std::move(next);
  }
  VectorSet out;
  for (const TaggedVector& v : reached) {
    if (table.in_union(v)) out.insert(v);
  }
  return out;
}

DependenceResult brute_dependent(const MultiVectorSpace& m,
                                 std::span<const TaggedVector> vectors,
                                 const OracleConfig& cfg) {
  require_caps(cfg);
  std::size_t tuples = 1;
  for (const TaggedVector& v : vectors) {
    tuples *= v.ambient.p.value();
    if (tuples > cfg.coefficient_cap) {
      throw Error(ErrorKind::kSearchTooLarge,
                  "more than " + std::to_string(cfg.coefficient_cap) + " coefficient tuples");
    }
  }
  const Table table(m, cfg.enumeration_cap);
  Vec coeffs(vectors.size(), 0);
  for (std::size_t t = 0; t < tuples; ++t) {
    if (!all_zero(coeffs)) {
      auto value = chain_value(table, vectors, coeffs);
      if (value && all_zero(value->coords)) return {true, coeffs};
    }
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (++coeffs[i] < vectors[i].ambient.p.value()) break;
      coeffs[i] = 0;
    }
  }
  return {};
}

std::set<Vec> brute_intersection(const Subspace& a, const Subspace& b,
                                 const OracleConfig& cfg) {
  require_caps(cfg);
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorKind::kAmbientMismatch, "subspaces live in different ambients");
  }
  const auto left = enumerate(a, cfg.enumeration_cap);
  const auto right = enumerate(b, cfg.enumeration_cap);
  const std::set<Vec> right_set(right.begin(), right.end());
  std::set<Vec> out;
  for (const Vec& v : left) {
    if (right_set.contains(v)) out.insert(v);
  }
  return out;
}

bool brute_subspace_check(const VectorSet& candidate, const MultiVectorSpace& parent,
                          const OracleConfig& cfg) {
  require_caps(cfg);
  if (candidate.size() > cfg.enumeration_cap) {
    throw Error(ErrorKind::kEnumerationTooLarge, "candidate exceeds the enumeration cap");
  }
  const Table table(parent, cfg.enumeration_cap);
  for (const TaggedVector& v : candidate) {
    if (!table.in_union(v)) return false;
  }
  for (const TaggedVector& a : candidate) {
    if (!table.scalar_exists(a)) continue;
    for (Residue alpha = 0; alpha < a.ambient.p.value(); ++alpha) {
      const TaggedVector scaled = times(alpha, a);
      for (const TaggedVector& b : candidate) {
        if (!table.sum_exists(scaled, b)) continue;
        if (!candidate.contains(plus(scaled, b))) return false;
      }
    }
  }
  return true;
}

bool brute_subspace_check(const MultiVectorSpace& candidate, const MultiVectorSpace& parent,
                          const OracleConfig& cfg) {
  require_caps(cfg);
  VectorSet elements;
  for (const Subspace& s : candidate.components()) {
    for (Vec& v : enumerate(s, cfg.enumeration_cap)) elements.insert({s.ambient(), std::move(v)});
  }
  return brute_subspace_check(elements, parent, cfg);
}

}  // namespace mvs::oracle
