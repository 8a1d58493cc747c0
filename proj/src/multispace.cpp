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


#include "mvs/multispace.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "mvs/error.hpp"
#include "mvs/random.hpp"

namespace mvs {

const char* to_string(OperationPolicy policy) {
  return policy == OperationPolicy::kTotal ? "TOTAL" : "CLOSED";
}

OperationPolicy parse_policy(const std::string& text) {
  if (text == "TOTAL") return OperationPolicy::kTotal;
  if (text == "CLOSED") return OperationPolicy::kClosed;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown policy '" + text + "' (expected TOTAL or CLOSED)");
}

TaggedVector zero_vector(const AmbientId& ambient) {
  return TaggedVector{ambient, Vec(ambient.n, 0)};
}

bool is_zero(const TaggedVector& v) {
  return std::all_of(v.coords.begin(), v.coords.end(), [](Residue e) { return e == 0; });
}

std::string to_string(const TaggedVector& v) {
  std::ostringstream out;
  out << v.ambient.label << " ";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i != 0) out << ",";
    out << v.coords[i];
  }
  return out.str();
}

MultiVectorSpace::MultiVectorSpace(std::vector<Subspace> components, OperationPolicy policy)
    : components_(std::move(components)), policy_(policy) {
  if (components_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "a multi-vector space needs a component");
  }
  std::map<std::string, AmbientId> seen;
  for (const Subspace& s : components_) {
    auto [it, inserted] = seen.emplace(s.ambient().label, s.ambient());
    if (!inserted && it->second != s.ambient()) {
      throw Error(ErrorKind::kAmbientMismatch,
                  "ambient label '" + s.ambient().label +
                      "' used with different prime or dimension");
    }
  }
}

MultiVectorSpace MultiVectorSpace::empty(OperationPolicy policy) {
  return MultiVectorSpace(policy);
}

std::vector<AmbientId> MultiVectorSpace::ambients() const {
  std::vector<AmbientId> out;
  for (const Subspace& s : components_) {
    if (std::find(out.begin(), out.end(), s.ambient()) == out.end()) {
      out.push_back(s.ambient());
    }
  }
  return out;
}

bool MultiVectorSpace::hosts(const AmbientId& ambient) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const Subspace& s) { return s.ambient() == ambient; });
}

MultiVectorSpace MultiVectorSpace::with_policy(OperationPolicy policy) const {
  MultiVectorSpace out = *this;
  out.policy_ = policy;
  return out;
}

std::vector<TaggedVector> tagged_basis(const Subspace& s) {
  std::vector<TaggedVector> out;
  out.reserve(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back({s.ambient(), s.basis_row(r)});
  return out;
}

std::vector<TaggedVector> concatenated_bases(const MultiVectorSpace& m) {
  std::vector<TaggedVector> out;
  for (const Subspace& s : m.components()) {
    auto part = tagged_basis(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

VectorSet enumerate_union(const MultiVectorSpace& m, std::size_t cap) {
  VectorSet out;
  for (const Subspace& s : m.components()) {
    for (Vec& v : enumerate(s, cap)) out.insert({s.ambient(), std::move(v)});
    if (out.size() > cap) {
      throw Error(ErrorKind::kEnumerationTooLarge,
                  "union has more than " + std::to_string(cap) + " elements");
    }
  }
  return out;
}

namespace {

void require_shape(const TaggedVector& v) {
  if (v.coords.size() != v.ambient.n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "vector of length " + std::to_string(v.coords.size()) + " tagged with " +
                    to_string(v.ambient));
  }
}

Vec scaled(Prime p, Residue a, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = p.mul(a, v[i]);
  return out;
}

Vec added(Prime p, const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = p.add(x[i], y[i]);
  return out;
}

// Memoized "which components contain v" for the existence rules.
class Holders {
 public:
  explicit Holders(const MultiVectorSpace& m) : m_(m) {}

  const std::vector<std::size_t>& of(const TaggedVector& v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    require_shape(v);
    std::vector<std::size_t> found;
    for (std::size_t i = 0; i < m_.size(); ++i) {
      const Subspace& s = m_.components()[i];
      if (s.ambient() == v.ambient && contains(s, v.coords)) found.push_back(i);
    }
    return cache_.emplace(v, std::move(found)).first->second;
  }

  bool in_union(const TaggedVector& v) { return !of(v).empty(); }

  bool scalar_exists(const TaggedVector& v) {
    if (m_.policy() == OperationPolicy::kTotal) return m_.hosts(v.ambient);
    return in_union(v);
  }

  bool sum_exists(const TaggedVector& x, const TaggedVector& y) {
    if (x.ambient != y.ambient) return false;
    if (m_.policy() == OperationPolicy::kTotal) return m_.hosts(x.ambient);
    const auto& hx = of(x);
    const auto& hy = of(y);
    std::vector<std::size_t> common;
    std::set_intersection(hx.begin(), hx.end(), hy.begin(), hy.end(),
                          std::back_inserter(common));
    return !common.empty();
  }

 private:
  const MultiVectorSpace& m_;
  std::map<TaggedVector, std::vector<std::size_t>> cache_;
};

bool same_ambient(std::span<const TaggedVector> vectors) {
  return std::all_of(vectors.begin(), vectors.end(), [&](const TaggedVector& v) {
    return v.ambient == vectors.front().ambient;
  });
}

bool rank_shortcut_applies(const MultiVectorSpace& m, std::span<const TaggedVector> vectors) {
  return m.policy() == OperationPolicy::kTotal && same_ambient(vectors) &&
         m.hosts(vectors.front().ambient);
}

std::size_t rank_of(Prime p, std::size_t n, std::span<const TaggedVector> vectors,
                    std::size_t skip = SIZE_MAX) {
  FpMatrix rows(p, 0, n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (i != skip) rows.append_row(vectors[i].coords);
  }
  return rref(rows).rank;
}

// Coefficients of `target` over the independent columns `columns`.
Vec express(Prime p, std::span<const TaggedVector> columns, const Vec& target) {
  const std::size_t n = target.size();
  const std::size_t j = columns.size();
  FpMatrix system(p, n, j + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < j; ++c) system.at(r, c) = columns[c].coords[r];
    system.at(r, j) = target[r];
  }
  RrefResult red = rref(system);
  Vec coeffs(j, 0);
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] < j) coeffs[red.pivots[r]] = red.reduced.at(r, j);
  }
  return coeffs;
}

DependenceResult rank_dependence(std::span<const TaggedVector> vectors) {
  const Prime p = vectors.front().ambient.p;
  const std::size_t n = vectors.front().ambient.n;
  FpMatrix prefix(p, 0, n);
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    prefix.append_row(vectors[j].coords);
    if (rref(prefix).rank == j + 1) continue;
    // vectors[0..j) are independent and vectors[j] lies in their span.
    const Vec coeffs = express(p, vectors.first(j), vectors[j].coords);
    Vec witness(vectors.size(), 0);
    for (std::size_t i = 0; i < j; ++i) witness[i] = p.neg(coeffs[i]);
    witness[j] = 1;
    return {true, std::move(witness)};
  }
  return {false, std::nullopt};
}

// Layered search over the partial values of the chain. A state is a partial
// value plus flags recording whether some coefficient so far is nonzero and
// whether the coefficient on `target` is nonzero. Returns a witness whose
// chain exists and ends at zero; when `target` is set, the witness must also
// be nonzero at `target`.
std::optional<Vec> layered_search(const MultiVectorSpace& m,
                                  std::span<const TaggedVector> vectors,
                                  std::optional<std::size_t> target, const Limits& limits) {
  constexpr unsigned kAnyNonzero = 1;
  constexpr unsigned kTargetNonzero = 2;
  struct State {
    TaggedVector value;
    unsigned flags;
    std::size_t parent;
    Residue coeff;
  };

  if (!same_ambient(vectors)) return std::nullopt;
  const Prime p = vectors.front().ambient.p;
  Holders holders(m);

  std::vector<std::vector<State>> layers;
  std::size_t work = 0;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const TaggedVector& a = vectors[j];
    if (!holders.scalar_exists(a)) return std::nullopt;
    const std::size_t parents = j == 0 ? 1 : layers.back().size();
    work += parents * p.value();
    if (work > limits.search_cap) {
      throw Error(ErrorKind::kSearchTooLarge,
                  "dependence search exceeds " + std::to_string(limits.search_cap) +
                      " steps");
    }

    std::vector<State> next;
    std::map<std::pair<Vec, unsigned>, std::size_t> index;
    for (std::size_t s = 0; s < parents; ++s) {
      for (Residue alpha = 0; alpha < p.value(); ++alpha) {
        TaggedVector term{a.ambient, scaled(p, alpha, a.coords)};
        unsigned flags = j == 0 ? 0 : layers.back()[s].flags;
        if (alpha != 0) {
          flags |= kAnyNonzero;
          if (target && *target == j) flags |= kTargetNonzero;
        }
        TaggedVector value = std::move(term);
        if (j != 0) {
          const TaggedVector& prev = layers.back()[s].value;
          if (!holders.sum_exists(prev, value)) continue;
          value.coords = added(p, prev.coords, value.coords);
        }
        auto key = std::make_pair(value.coords, flags);
        if (index.contains(key)) continue;
        index.emplace(std::move(key), next.size());
        next.push_back({std::move(value), flags, s, alpha});
      }
    }
    if (next.empty()) return std::nullopt;
    layers.push_back(std::move(next));
  }

  const unsigned need = target ? (kAnyNonzero | kTargetNonzero) : kAnyNonzero;
  const auto& last = layers.back();
  for (std::size_t s = 0; s < last.size(); ++s) {
    if ((last[s].flags & need) != need || !is_zero(last[s].value)) continue;
    Vec witness(vectors.size(), 0);
    std::size_t at = s;
    for (std::size_t j = layers.size(); j-- > 0;) {
      witness[j] = layers[j][at].coeff;
      at = layers[j][at].parent;
    }
    return witness;
  }
  return std::nullopt;
}

}  // namespace

bool union_contains(const MultiVectorSpace& m, const TaggedVector& v) {
  return Holders(m).in_union(v);
}

bool scalar_multiple_exists(const MultiVectorSpace& m, const TaggedVector& v) {
  return Holders(m).scalar_exists(v);
}

bool sum_exists(const MultiVectorSpace& m, const TaggedVector& x, const TaggedVector& y) {
  return Holders(m).sum_exists(x, y);
}

std::optional<TaggedVector> evaluate_chain(const MultiVectorSpace& m,
                                           std::span<const ChainTerm> terms) {
  if (terms.empty()) throw Error(ErrorKind::kEmptyChain, "chain has no terms");
  Holders holders(m);
  std::optional<TaggedVector> acc;
  for (const ChainTerm& term : terms) {
    const TaggedVector& a = term.vector;
    require_shape(a);
    if (term.scalar.prime() != a.ambient.p) {
      throw Error(ErrorKind::kInvalidArgument,
                  "scalar field does not match the field of " + to_string(a.ambient));
    }
    if (!holders.scalar_exists(a)) return std::nullopt;
    TaggedVector product{a.ambient, scaled(a.ambient.p, term.scalar.value(), a.coords)};
    if (!acc) {
      acc = std::move(product);
      continue;
    }
    if (!holders.sum_exists(*acc, product)) return std::nullopt;
    acc->coords = added(a.ambient.p, acc->coords, product.coords);
  }
  return acc;
}

// ---------------------------------------------------------------------------

AxiomReport validate_axioms(const MultiVectorSpace& m, const Limits& limits) {
  AxiomReport report;
  auto violation = [&](std::string axiom, std::string detail) {
    report.violations.push_back({std::move(axiom), std::move(detail)});
  };

  std::vector<std::set<Vec>> elements;
  for (const Subspace& s : m.components()) {
    auto listed = enumerate(s, limits.enumeration_cap);
    elements.emplace_back(listed.begin(), listed.end());
  }

  // Each component is closed under a·x + y.
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Prime p = m.components()[i].ambient().p;
    for (const Vec& x : elements[i]) {
      for (const Vec& y : elements[i]) {
        for (Residue a = 0; a < p.value(); ++a) {
          ++report.closure_checks;
          Vec r = added(p, scaled(p, a, x), y);
          if (!elements[i].contains(r)) {
            violation("closure", "component " + std::to_string(i + 1) +
                                     " not closed under a·x + y");
          }
        }
      }
    }
  }

  auto check_triple = [&](Prime p, const Vec& a, const Vec& b, const Vec& c) {
    ++report.associativity_checks;
    if (added(p, added(p, a, b), c) != added(p, a, added(p, b, c))) {
      violation("associativity", "(a + b) + c differs from a + (b + c)");
    }
  };
  auto check_distributive = [&](Prime p, const Vec& a) {
    for (Residue k1 = 0; k1 < p.value(); ++k1) {
      for (Residue k2 = 0; k2 < p.value(); ++k2) {
        ++report.distributivity_checks;
        if (scaled(p, p.add(k1, k2), a) != added(p, scaled(p, k1, a), scaled(p, k2, a))) {
          violation("distributivity", "(k1 + k2)·a differs from k1·a + k2·a");
        }
      }
    }
  };

  if (m.policy() == OperationPolicy::kTotal) {
    // Every component of an ambient carries the same total operation, so one
    // pass per ambient over the distinct union elements covers all pairs.
    const VectorSet all = enumerate_union(m, limits.enumeration_cap);
    for (const AmbientId& amb : m.ambients()) {
      std::vector<Vec> local;
      for (const TaggedVector& v : all) {
        if (v.ambient == amb) local.push_back(v.coords);
      }
      for (const Vec& a : local) {
        for (const Vec& b : local) {
          for (const Vec& c : local) check_triple(amb.p, a, b, c);
        }
        check_distributive(amb.p, a);
      }
    }
    return report;
  }

  for (std::size_t i = 0; i < m.size(); ++i) {
    const Prime p = m.components()[i].ambient().p;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.components()[i].ambient() != m.components()[j].ambient()) continue;
      for (const Vec& b : elements[i]) {
        if (!elements[j].contains(b)) continue;
        for (const Vec& a : elements[i]) {
          const Vec ab = added(p, a, b);
          if (!elements[j].contains(ab)) continue;
          for (const Vec& c : elements[j]) {
            if (!elements[i].contains(added(p, b, c))) continue;
            check_triple(p, a, b, c);
          }
        }
      }
    }
    for (const Vec& a : elements[i]) check_distributive(p, a);
  }
  return report;
}

// ---------------------------------------------------------------------------

DependenceResult linearly_dependent(const MultiVectorSpace& m,
                                    std::span<const TaggedVector> vectors,
                                    const Limits& limits) {
  if (vectors.empty()) return {};
  for (const TaggedVector& v : vectors) require_shape(v);
  if (rank_shortcut_applies(m, vectors)) return rank_dependence(vectors);
  auto witness = layered_search(m, vectors, std::nullopt, limits);
  if (!witness) return {};
  return {true, std::move(witness)};
}

std::vector<std::size_t> removable_vectors(const MultiVectorSpace& m,
                                           std::span<const TaggedVector> vectors,
                                           const Limits& limits) {
  std::vector<std::size_t> out;
  if (vectors.empty()) return out;
  for (const TaggedVector& v : vectors) require_shape(v);
  if (rank_shortcut_applies(m, vectors)) {
    const Prime p = vectors.front().ambient.p;
    const std::size_t n = vectors.front().ambient.n;
    const std::size_t full = rank_of(p, n, vectors);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (rank_of(p, n, vectors, i) == full) out.push_back(i);
    }
    return out;
  }
  if (!layered_search(m, vectors, std::nullopt, limits)) return out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (layered_search(m, vectors, i, limits)) out.push_back(i);
  }
  return out;
}

VectorSet linear_span(const MultiVectorSpace& m, std::span<const TaggedVector> generators,
                      const Limits& limits) {
  Holders holders(m);
  VectorSet reached;
  std::vector<TaggedVector> frontier;
  auto reach = [&](TaggedVector v) {
    if (reached.contains(v)) return;
    if (reached.size() == limits.enumeration_cap) {
      throw Error(ErrorKind::kEnumerationTooLarge,
                  "span exceeds " + std::to_string(limits.enumeration_cap) + " vectors");
    }
    reached.insert(v);
    frontier.push_back(std::move(v));
  };

  // Products usable as a chain step, one entry per (generator, scalar).
  std::vector<TaggedVector> steps;
  for (const TaggedVector& g : generators) {
    require_shape(g);
    if (!holders.scalar_exists(g)) continue;
    for (Residue a = 0; a < g.ambient.p.value(); ++a) {
      steps.push_back({g.ambient, scaled(g.ambient.p, a, g.coords)});
    }
  }
  for (const TaggedVector& s : steps) reach(s);
  while (!frontier.empty()) {
    TaggedVector x = std::move(frontier.back());
    frontier.pop_back();
    for (const TaggedVector& s : steps) {
      if (!holders.sum_exists(x, s)) continue;
      reach({x.ambient, added(x.ambient.p, x.coords, s.coords)});
    }
  }

  VectorSet out;
  for (const TaggedVector& v : reached) {
    if (holders.in_union(v)) out.insert(v);
  }
  return out;
}

std::vector<TaggedVector> greedy_basis(const MultiVectorSpace& m,
                                       const std::optional<std::vector<std::size_t>>& removal_order,
                                       const Limits& limits) {
  const std::vector<TaggedVector> delta = concatenated_bases(m);
  std::vector<std::size_t> priority(delta.size());
  std::iota(priority.begin(), priority.end(), 0);
  if (removal_order) {
    if (removal_order->size() != delta.size()) {
      throw Error(ErrorKind::kInvalidArgument, "removal order has the wrong length");
    }
    std::vector<bool> used(delta.size(), false);
    for (std::size_t pos = 0; pos < removal_order->size(); ++pos) {
      const std::size_t idx = (*removal_order)[pos];
      if (idx >= delta.size() || used[idx]) {
        throw Error(ErrorKind::kInvalidArgument, "removal order is not a permutation");
      }
      used[idx] = true;
      priority[idx] = pos;
    }
  }

  std::vector<std::size_t> kept(delta.size());
  std::iota(kept.begin(), kept.end(), 0);
  auto current = [&] {
    std::vector<TaggedVector> out;
    out.reserve(kept.size());
    for (std::size_t i : kept) out.push_back(delta[i]);
    return out;
  };

  for (;;) {
    const std::vector<TaggedVector> list = current();
    const std::vector<std::size_t> removable = removable_vectors(m, list, limits);
    if (removable.empty()) return list;
    const std::size_t drop = *std::min_element(
        removable.begin(), removable.end(),
        [&](std::size_t a, std::size_t b) { return priority[kept[a]] < priority[kept[b]]; });
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(drop));
  }
}

std::size_t dim_greedy(const MultiVectorSpace& m, const Limits& limits) {
  return greedy_basis(m, std::nullopt, limits).size();
}

InvarianceReport basis_invariance_check(const MultiVectorSpace& m, std::size_t trials,
                                        std::uint64_t seed, const Limits& limits) {
  InvarianceReport report;
  report.policy = m.policy();
  report.seed = seed;
  const std::size_t count = concatenated_bases(m).size();
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    report.cardinalities.push_back(greedy_basis(m, order, limits).size());
  }
  report.all_agree = std::adjacent_find(report.cardinalities.begin(), report.cardinalities.end(),
                                        std::not_equal_to<>()) == report.cardinalities.end();
  return report;
}

// ---------------------------------------------------------------------------

bool is_multi_subspace(const VectorSet& candidate, const MultiVectorSpace& parent) {
  Holders holders(parent);
  for (const TaggedVector& v : candidate) {
    if (!holders.in_union(v)) return false;
  }

  // The combinations a·x + y that exist split into independent domains: one
  // per ambient under kTotal, one per component under kClosed. A nonempty
  // finite set closed under a·x + y is exactly a subspace, i.e. a set whose
  // size equals p^rank of its span.
  std::vector<std::pair<AmbientId, std::vector<Vec>>> domains;
  if (parent.policy() == OperationPolicy::kTotal) {
    for (const AmbientId& amb : parent.ambients()) {
      std::vector<Vec> members;
      for (const TaggedVector& v : candidate) {
        if (v.ambient == amb) members.push_back(v.coords);
      }
      domains.emplace_back(amb, std::move(members));
    }
  } else {
    for (std::size_t i = 0; i < parent.size(); ++i) {
      std::vector<Vec> members;
      for (const TaggedVector& v : candidate) {
        const auto& h = holders.of(v);
        if (std::find(h.begin(), h.end(), i) != h.end()) members.push_back(v.coords);
      }
      domains.emplace_back(parent.components()[i].ambient(), std::move(members));
    }
  }

  for (const auto& [amb, members] : domains) {
    if (members.empty()) continue;
    const Subspace closure = span(amb, members);
    if (cardinality(closure) != members.size()) return false;
  }
  return true;
}

bool is_multi_subspace(const MultiVectorSpace& candidate, const MultiVectorSpace& parent,
                       const Limits& limits) {
  return is_multi_subspace(enumerate_union(candidate, limits.enumeration_cap), parent);
}

MultiVectorSpace intersect_multispaces(const MultiVectorSpace& a, const MultiVectorSpace& b) {
  if (a.policy() != b.policy()) {
    throw Error(ErrorKind::kPolicyMismatch, "instances use different operation policies");
  }
  std::vector<Subspace> parts;
  for (const Subspace& s : a.components()) {
    for (const Subspace& t : b.components()) {
      if (s.ambient() != t.ambient()) continue;
      Subspace both = intersect(s, t);
      if (std::none_of(parts.begin(), parts.end(),
                       [&](const Subspace& q) { return equal(q, both); })) {
        parts.push_back(std::move(both));
      }
    }
  }
  if (parts.empty()) return MultiVectorSpace::empty(a.policy());
  return MultiVectorSpace(std::move(parts), a.policy());
}

std::int64_t dim_inclusion_exclusion(const MultiVectorSpace& m, const Limits& limits) {
  const std::size_t k = m.size();
  if (k > limits.subset_cap) {
    throw Error(ErrorKind::kTooManyComponents,
                std::to_string(k) + " components exceed the subset cap " +
                    std::to_string(limits.subset_cap));
  }
  // meet[mask] is the intersection over the components in mask, or empty
  // when they do not all share one ambient.
  const std::size_t subsets = std::size_t{1} << k;
  std::vector<std::optional<Subspace>> meet(subsets);
  std::int64_t total = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    const Subspace& comp = m.components()[low];
    if (rest == 0) {
      meet[mask] = comp;
    } else if (meet[rest] && meet[rest]->ambient() == comp.ambient()) {
      meet[mask] = intersect(*meet[rest], comp);
    }
    if (!meet[mask]) continue;
    const auto d = static_cast<std::int64_t>(meet[mask]->dim());
    total += (std::popcount(mask) % 2 == 1) ? d : -d;
  }
  return total;
}

MultiVectorSpace concatenate(const MultiVectorSpace& a, const MultiVectorSpace& b) {
  if (a.policy() != b.policy()) {
    throw Error(ErrorKind::kPolicyMismatch, "instances use different operation policies");
  }
  std::vector<Subspace> parts = a.components();
  parts.insert(parts.end(), b.components().begin(), b.components().end());
  if (parts.empty()) return MultiVectorSpace::empty(a.policy());
  return MultiVectorSpace(std::move(parts), a.policy());
}

AdditiveReport additive_formula_check(const MultiVectorSpace& a, const MultiVectorSpace& b,
                                      const Limits& limits) {
  AdditiveReport r;
  r.union_dim = dim_greedy(concatenate(a, b), limits);
  r.first_dim = dim_greedy(a, limits);
  r.second_dim = dim_greedy(b, limits);
  r.intersection_dim = dim_greedy(intersect_multispaces(a, b), limits);
  r.right_side = static_cast<std::int64_t>(r.first_dim + r.second_dim) -
                 static_cast<std::int64_t>(r.intersection_dim);
  r.agree = static_cast<std::int64_t>(r.union_dim) == r.right_side;
  return r;
}

}  // namespace mvs
