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


// Unions of subspaces with partial vector operations.
//
// A MultiVectorSpace is an ordered list of component subspaces V1..Vk. Its
// elements are the set union of the components; vectors carry the identity of
// their ambient space, so components from different ambients never share
// elements. Which sums and scalar multiples "exist" is fixed by the
// OperationPolicy:
//
//   kTotal   x + y exists iff x and y lie in the same ambient and that ambient
//            hosts some component; a·x exists iff x's ambient hosts a
//            component.
//   kClosed  x + y exists iff one component contains both x and y; a·x exists
//            iff some component contains x.
//
// Results are always the ambient-induced sum and scalar multiple.

#ifndef MVS_MULTISPACE_HPP
#define MVS_MULTISPACE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mvs/field.hpp"
#include "mvs/subspace.hpp"

namespace mvs {

enum class OperationPolicy { kTotal, kClosed };

const char* to_string(OperationPolicy policy);
OperationPolicy parse_policy(const std::string& text);

/// Size limits shared by the operations below.
struct Limits {
  /// Largest set of vectors any operation may materialize.
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  /// Work bound for dependence searches that cannot use the rank shortcut.
  std::size_t search_cap = 1'000'000;
  /// Largest component count accepted by the inclusion-exclusion sum.
  std::size_t subset_cap = 12;
};

struct TaggedVector {
  AmbientId ambient;
  Vec coords;

  friend bool operator==(const TaggedVector&, const TaggedVector&) = default;
  friend auto operator<=>(const TaggedVector&, const TaggedVector&) = default;
};

TaggedVector zero_vector(const AmbientId& ambient);
bool is_zero(const TaggedVector& v);
std::string to_string(const TaggedVector& v);

using VectorSet = std::set<TaggedVector>;

/// One term `scalar · vector` of a left-to-right combination chain.
struct ChainTerm {
  FpScalar scalar;
  TaggedVector vector;
};

class MultiVectorSpace {
 public:
  /// Requires at least one component; components that share an ambient
  /// label must agree on p and n.
  MultiVectorSpace(std::vector<Subspace> components,
                   OperationPolicy policy = OperationPolicy::kTotal);

  /// The instance with no components (the intersection of instances over
  /// disjoint ambients).
  static MultiVectorSpace empty(OperationPolicy policy);

  const std::vector<Subspace>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  OperationPolicy policy() const { return policy_; }

  /// Distinct ambients in order of first appearance.
  std::vector<AmbientId> ambients() const;
  bool hosts(const AmbientId& ambient) const;

  MultiVectorSpace with_policy(OperationPolicy policy) const;

 private:
  MultiVectorSpace(OperationPolicy policy) : policy_(policy) {}

  std::vector<Subspace> components_;
  OperationPolicy policy_;
};

/// Vectors of a single component, tagged with its ambient.
std::vector<TaggedVector> tagged_basis(const Subspace& s);

/// Concatenation of all component bases, component order then row order.
std::vector<TaggedVector> concatenated_bases(const MultiVectorSpace& m);

/// All elements of the union, materialized. Throws kEnumerationTooLarge when
/// any component or the union exceeds `cap`.
VectorSet enumerate_union(const MultiVectorSpace& m,
                          std::size_t cap = kDefaultEnumerationCap);

bool union_contains(const MultiVectorSpace& m, const TaggedVector& v);

bool scalar_multiple_exists(const MultiVectorSpace& m, const TaggedVector& v);
bool sum_exists(const MultiVectorSpace& m, const TaggedVector& x, const TaggedVector& y);

/// Evaluates a chain strictly left to right. Returns nullopt the first time
/// a scalar multiple or a sum does not exist under the policy.
std::optional<TaggedVector> evaluate_chain(const MultiVectorSpace& m,
                                           std::span<const ChainTerm> terms);

// ---------------------------------------------------------------------------
// Axiom validation

struct AxiomViolation {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  std::size_t closure_checks = 0;
  std::size_t associativity_checks = 0;
  std::size_t distributivity_checks = 0;
  std::vector<AxiomViolation> violations;

  bool valid() const { return violations.empty(); }
};

/// Exhaustively re-verifies that every component is closed under a·x + y,
/// that (a +_i b) +_j c = a +_i (b +_j c) wherever all four sums exist, and
/// that (k1 + k2)·a = k1·a + k2·a wherever the right side exists. The printed
/// form of the third axiom adds a scalar to a vector and is checked in this
/// distributive reading.
AxiomReport validate_axioms(const MultiVectorSpace& m, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Dependence, span and bases

struct DependenceResult {
  bool dependent = false;
  /// Coefficients aligned with the input vectors, each reduced mod the prime
  /// of its vector. Present iff `dependent`.
  std::optional<Vec> witness;
};

/// Whether some not-all-zero coefficient tuple makes the chain over
/// `vectors` (in the given order) exist and evaluate to the zero vector of
/// its ambient.
///
/// Under kTotal with every vector in one hosted ambient this is a rank test;
/// the witness then puts coefficient 1 on the first vector that lies in the
/// span of its predecessors. Otherwise a layered search over reachable
/// partial values is run, bounded by `limits.search_cap`.
DependenceResult linearly_dependent(const MultiVectorSpace& m,
                                    std::span<const TaggedVector> vectors,
                                    const Limits& limits = {});

/// Indices of the vectors that carry a nonzero coefficient in at least one
/// dependence witness.
std::vector<std::size_t> removable_vectors(const MultiVectorSpace& m,
                                           std::span<const TaggedVector> vectors,
                                           const Limits& limits = {});

/// Every union element reachable as the value of an existing chain over
/// elements of `generators` (any length, repetition allowed).
VectorSet linear_span(const MultiVectorSpace& m, std::span<const TaggedVector> generators,
                      const Limits& limits = {});

/// Starts from the concatenated component bases and, while the current list
/// is dependent, drops one removable vector: the first in list order by
/// default, or the first in `removal_order` (a permutation of the indices of
/// concatenated_bases(m)).
std::vector<TaggedVector> greedy_basis(
    const MultiVectorSpace& m,
    const std::optional<std::vector<std::size_t>>& removal_order = std::nullopt,
    const Limits& limits = {});

std::size_t dim_greedy(const MultiVectorSpace& m, const Limits& limits = {});

struct InvarianceReport {
  OperationPolicy policy = OperationPolicy::kTotal;
  std::uint64_t seed = 0;
  std::vector<std::size_t> cardinalities;  // one per trial, in trial order
  bool all_agree = true;
};

InvarianceReport basis_invariance_check(const MultiVectorSpace& m, std::size_t trials,
                                        std::uint64_t seed, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Sub-multispaces, intersections and dimension formulas

/// Whether `candidate` is contained in the union of `parent` and closed under
/// every a·x + y that exists under the parent's policy.
bool is_multi_subspace(const VectorSet& candidate, const MultiVectorSpace& parent);
bool is_multi_subspace(const MultiVectorSpace& candidate, const MultiVectorSpace& parent,
                       const Limits& limits = {});

/// Pairwise intersections of components sharing an ambient, deduplicated.
MultiVectorSpace intersect_multispaces(const MultiVectorSpace& a, const MultiVectorSpace& b);

/// Alternating sum over all nonempty component subsets of the dimension of
/// the subset's intersection. Subsets spanning several ambients contribute 0.
std::int64_t dim_inclusion_exclusion(const MultiVectorSpace& m, const Limits& limits = {});

struct AdditiveReport {
  std::size_t union_dim = 0;         // dim_greedy of the concatenated instance
  std::size_t first_dim = 0;
  std::size_t second_dim = 0;
  std::size_t intersection_dim = 0;  // dim_greedy of intersect_multispaces
  std::int64_t right_side = 0;
  bool agree = false;
};

AdditiveReport additive_formula_check(const MultiVectorSpace& a, const MultiVectorSpace& b,
                                      const Limits& limits = {});

/// Components of `a` followed by components of `b`; policies must agree.
MultiVectorSpace concatenate(const MultiVectorSpace& a, const MultiVectorSpace& b);

}  // namespace mvs

#endif  // MVS_MULTISPACE_HPP
