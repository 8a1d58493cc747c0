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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "mvs/error.hpp"
#include "mvs/multispace.hpp"
#include "mvs/search.hpp"
#include "expect_error.hpp"
#include "test_support.hpp"

namespace mvs {
namespace {

using testing::ambient;
using testing::combinations;
using testing::kind_of;
using testing::span_of;
using testing::tagged;
using testing::three_lines;
using testing::union_by_combination;

constexpr auto kTotal = OperationPolicy::kTotal;
constexpr auto kClosed = OperationPolicy::kClosed;

std::vector<ChainTerm> chain(const std::vector<TaggedVector>& vectors, const Vec& coeffs) {
  std::vector<ChainTerm> terms;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    terms.push_back({FpScalar(coeffs[i], vectors[i].ambient.p), vectors[i]});
  }
  return terms;
}

void expect_valid_witness(const MultiVectorSpace& m, const std::vector<TaggedVector>& vectors,
                          const DependenceResult& r) {
  ASSERT_TRUE(r.dependent);
  ASSERT_TRUE(r.witness.has_value());
  ASSERT_EQ(r.witness->size(), vectors.size());
  EXPECT_TRUE(std::any_of(r.witness->begin(), r.witness->end(), [](Residue c) { return c != 0; }));
  const auto value = evaluate_chain(m, chain(vectors, *r.witness));
  ASSERT_TRUE(value.has_value());
  EXPECT_TRUE(is_zero(*value));
}

TEST(MultiVectorSpaceTest, ConstructionInvariants) {
  EXPECT_EQ(kind_of([] { MultiVectorSpace({}, kTotal); }), ErrorKind::kInvalidArgument);
  const Subspace x(ambient("A", 2, 2));
  const Subspace y(ambient("A", 3, 2));
  EXPECT_EQ(kind_of([&] { MultiVectorSpace({x, y}); }), ErrorKind::kAmbientMismatch);
  const MultiVectorSpace m({x, Subspace(ambient("B", 3, 1)), x});
  EXPECT_EQ(m.ambients().size(), 2u);
  EXPECT_EQ(m.ambients()[0].label, "A");
  EXPECT_EQ(MultiVectorSpace::empty(kClosed).size(), 0u);
}

TEST(UnionContainsTest, Examples) {
  const AmbientId a = ambient("A", 2, 2);
  const AmbientId b = ambient("B", 3, 1);
  const MultiVectorSpace m({span_of(a, {{0, 1}}), span_of(b, {{1}})});
  EXPECT_TRUE(union_contains(m, zero_vector(a)));
  EXPECT_TRUE(union_contains(m, zero_vector(b)));
  EXPECT_FALSE(union_contains(m, tagged(a, {1, 0})));
  for (const TaggedVector& v : concatenated_bases(m)) EXPECT_TRUE(union_contains(m, v));
  // Same coordinates in an ambient the instance does not use.
  EXPECT_FALSE(union_contains(m, tagged(ambient("C", 2, 2), {0, 1})));
}

TEST(UnionContainsTest, AgreesWithEnumeratedUnion) {
  GeneratorConfig cfg;
  cfg.seed = 4;
  for (std::uint64_t draw = 0; draw < 60; ++draw) {
    const MultiVectorSpace m = random_instance(cfg, draw);
    const VectorSet elements = union_by_combination(m);
    EXPECT_EQ(enumerate_union(m), elements);
    for (const AmbientId& a : m.ambients()) {
      for (const Vec& v : testing::all_vectors(a.p, a.n)) {
        EXPECT_EQ(union_contains(m, {a, v}), elements.contains({a, v}));
      }
    }
  }
}

TEST(EvaluateChainTest, Examples) {
  const AmbientId a = ambient("A", 2, 2);
  const MultiVectorSpace lines({span_of(a, {{1, 0}}), span_of(a, {{0, 1}})}, kTotal);
  const TaggedVector e1 = tagged(a, {1, 0});
  const TaggedVector e2 = tagged(a, {0, 1});

  EXPECT_EQ(evaluate_chain(lines, chain({e1}, {1})), e1);
  EXPECT_EQ(evaluate_chain(lines, chain({e1, e2}, {1, 1})), tagged(a, {1, 1}));
  EXPECT_FALSE(evaluate_chain(lines.with_policy(kClosed), chain({e1, e2}, {1, 1})).has_value());
  // Under kClosed a zero term can always be absorbed by the component of the
  // running value.
  EXPECT_EQ(evaluate_chain(lines.with_policy(kClosed), chain({e1, e2}, {1, 0})), e1);

  EXPECT_EQ(kind_of([&] { evaluate_chain(lines, std::vector<ChainTerm>{}); }),
            ErrorKind::kEmptyChain);
  const std::vector<ChainTerm> mixed{{FpScalar(1, Prime(3)), e1}};
  EXPECT_EQ(kind_of([&] { evaluate_chain(lines, mixed); }), ErrorKind::kInvalidArgument);
}

TEST(EvaluateChainTest, CrossAmbientStepsNeverExist) {
  const AmbientId a = ambient("A", 2, 1);
  const AmbientId b = ambient("B", 2, 1);
  const MultiVectorSpace m({full_space(a), full_space(b)}, kTotal);
  EXPECT_FALSE(evaluate_chain(m, chain({tagged(a, {1}), tagged(b, {1})}, {0, 0})).has_value());
  // Vectors of an ambient that hosts no component cannot be scaled.
  EXPECT_FALSE(evaluate_chain(m, chain({tagged(ambient("C", 2, 1), {1})}, {1})).has_value());
}

TEST(LinearlyDependentTest, Examples) {
  const AmbientId a = ambient("A", 2, 2);
  const MultiVectorSpace plane({full_space(a)}, kTotal);

  const std::vector<TaggedVector> with_zero{tagged(a, {1, 0}), zero_vector(a)};
  const DependenceResult z = linearly_dependent(plane, with_zero);
  expect_valid_witness(plane, with_zero, z);
  EXPECT_EQ(z.witness, (Vec{0, 1}));

  // Brute force over the three nonzero coefficient pairs.
  const std::vector<TaggedVector> axes{tagged(a, {1, 0}), tagged(a, {0, 1})};
  for (const Vec& c : std::vector<Vec>{{0, 1}, {1, 0}, {1, 1}}) {
    EXPECT_FALSE(is_zero(*evaluate_chain(plane, chain(axes, c))));
  }
  EXPECT_FALSE(linearly_dependent(plane, axes).dependent);

  const std::vector<TaggedVector> twice{tagged(a, {1, 0}), tagged(a, {1, 0})};
  const DependenceResult d = linearly_dependent(plane, twice);
  expect_valid_witness(plane, twice, d);
  EXPECT_EQ(d.witness, (Vec{1, 1}));

  EXPECT_FALSE(linearly_dependent(plane, std::vector<TaggedVector>{}).dependent);
}

TEST(LinearlyDependentTest, RankWitnessOverGf5) {
  const AmbientId a = ambient("A", 5, 3);
  const MultiVectorSpace m({full_space(a)}, kTotal);
  // 2·(1,2,0) + 3·(0,1,4) = (2,2,2). The witness puts 1 on the first vector
  // in the span of its predecessors: 3·v0 + 2·v1 + 1·v2 = 0.
  const std::vector<TaggedVector> vs{tagged(a, {1, 2, 0}), tagged(a, {0, 1, 4}),
                                     tagged(a, {2, 2, 2}), tagged(a, {0, 0, 1})};
  const DependenceResult r = linearly_dependent(m, vs);
  expect_valid_witness(m, vs, r);
  EXPECT_EQ(r.witness, (Vec{3, 2, 1, 0}));
}

TEST(LinearlyDependentTest, ClosedPolicyUsesExistingChainsOnly) {
  // Three lines under kClosed: no chain with two nonzero terms from distinct
  // lines exists, so the concatenated bases are independent.
  const MultiVectorSpace m = three_lines(kClosed);
  EXPECT_FALSE(linearly_dependent(m, concatenated_bases(m)).dependent);
  EXPECT_TRUE(linearly_dependent(three_lines(kTotal), concatenated_bases(m)).dependent);

  // Inside one component kClosed behaves classically.
  const AmbientId a = ambient("A", 3, 2);
  const MultiVectorSpace plane({full_space(a)}, kClosed);
  const std::vector<TaggedVector> vs{tagged(a, {1, 2}), tagged(a, {2, 1})};
  const DependenceResult r = linearly_dependent(plane, vs);
  expect_valid_witness(plane, vs, r);
}

TEST(LinearlyDependentTest, MixedAmbientsAreIndependent) {
  const AmbientId a = ambient("A", 2, 1);
  const AmbientId b = ambient("B", 2, 1);
  for (auto policy : {kTotal, kClosed}) {
    const MultiVectorSpace m({full_space(a), full_space(b)}, policy);
    const std::vector<TaggedVector> vs{zero_vector(a), zero_vector(b)};
    EXPECT_FALSE(linearly_dependent(m, vs).dependent);
  }
}

TEST(LinearlyDependentTest, SearchCap) {
  const AmbientId a = ambient("A", 3, 2);
  const MultiVectorSpace m({full_space(a)}, kClosed);
  std::vector<TaggedVector> vs(6, tagged(a, {1, 0}));
  Limits tight;
  tight.search_cap = 10;
  EXPECT_EQ(kind_of([&] { linearly_dependent(m, vs, tight); }), ErrorKind::kSearchTooLarge);
  EXPECT_TRUE(linearly_dependent(m, vs).dependent);
}

TEST(RemovableVectorsTest, OnlyWitnessParticipants) {
  const AmbientId a = ambient("A", 2, 3);
  const std::vector<TaggedVector> vs{tagged(a, {1, 0, 0}), tagged(a, {0, 1, 0}),
                                     tagged(a, {1, 1, 0}), tagged(a, {0, 0, 1})};
  for (auto policy : {kTotal, kClosed}) {
    const MultiVectorSpace m({full_space(a)}, policy);
    EXPECT_EQ(removable_vectors(m, vs), (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(LinearSpanTest, Examples) {
  const AmbientId a = ambient("A", 2, 3);
  const MultiVectorSpace m({span_of(a, {{1, 0, 0}}), span_of(a, {{0, 1, 1}})}, kTotal);
  // The closure reaches the whole sum; elements outside the union are dropped.
  const VectorSet spanned = linear_span(m, concatenated_bases(m));
  VectorSet expected;
  for (const Vec& v : enumerate(sum(m.components()[0], m.components()[1]))) {
    if (union_contains(m, {a, v})) expected.insert({a, v});
  }
  EXPECT_EQ(spanned, expected);
  EXPECT_EQ(spanned, enumerate_union(m));

  EXPECT_TRUE(linear_span(m, std::vector<TaggedVector>{}).empty());

  const AmbientId b = ambient("B", 3, 2);
  const MultiVectorSpace plane({full_space(b)});
  const std::vector<TaggedVector> v{tagged(b, {1, 2})};
  EXPECT_EQ(linear_span(plane, v),
            (VectorSet{tagged(b, {0, 0}), tagged(b, {1, 2}), tagged(b, {2, 1})}));
}

TEST(LinearSpanTest, SumSpaceWhenUnionIsASubspace) {
  const AmbientId a = ambient("A", 2, 2);
  const MultiVectorSpace m({span_of(a, {{1, 0}}), span_of(a, {{0, 1}}), full_space(a)}, kTotal);
  const VectorSet spanned = linear_span(m, concatenated_bases(m));
  EXPECT_EQ(spanned.size(), 4u);
}

TEST(LinearSpanTest, Cap) {
  const AmbientId a = ambient("A", 3, 7);
  const MultiVectorSpace m({full_space(a)});
  EXPECT_EQ(kind_of([&] { linear_span(m, concatenated_bases(m)); }),
            ErrorKind::kEnumerationTooLarge);
}

TEST(GreedyBasisTest, Examples) {
  const AmbientId a = ambient("A", 3, 3);
  const Subspace s = span_of(a, {{1, 2, 0}, {0, 1, 1}});
  EXPECT_EQ(greedy_basis(MultiVectorSpace({s})), tagged_basis(s));

  const AmbientId a2 = ambient("A", 2, 2);
  const MultiVectorSpace two({span_of(a2, {{1, 0}}), span_of(a2, {{0, 1}})});
  EXPECT_EQ(greedy_basis(two), (std::vector<TaggedVector>{tagged(a2, {1, 0}), tagged(a2, {0, 1})}));

  // Every pair of the three lines is independent and all three are not, so
  // the first witness participant, (1,0), is dropped.
  const MultiVectorSpace lines = three_lines();
  const auto bases = concatenated_bases(lines);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<TaggedVector> pair;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) pair.push_back(bases[j]);
    }
    EXPECT_FALSE(linearly_dependent(lines, pair).dependent);
  }
  EXPECT_EQ(greedy_basis(lines),
            (std::vector<TaggedVector>{tagged(a2, {0, 1}), tagged(a2, {1, 1})}));
  EXPECT_EQ(greedy_basis(lines, std::vector<std::size_t>{2, 0, 1}),
            (std::vector<TaggedVector>{tagged(a2, {1, 0}), tagged(a2, {0, 1})}));
}

TEST(GreedyBasisTest, RejectsBadRemovalOrder) {
  const MultiVectorSpace lines = three_lines();
  EXPECT_EQ(kind_of([&] { greedy_basis(lines, std::vector<std::size_t>{0, 1}); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([&] { greedy_basis(lines, std::vector<std::size_t>{0, 1, 1}); }),
            ErrorKind::kInvalidArgument);
}

TEST(DimGreedyTest, Examples) {
  const AmbientId a = ambient("A", 5, 4);
  EXPECT_EQ(dim_greedy(MultiVectorSpace({span_of(a, {{1, 0, 0, 0}, {0, 1, 0, 3}, {0, 0, 1, 1}})})),
            3u);
  const AmbientId a2 = ambient("A", 2, 2);
  EXPECT_EQ(dim_greedy(MultiVectorSpace({span_of(a2, {{1, 0}}), span_of(a2, {{0, 1}})})), 2u);
  EXPECT_EQ(dim_greedy(three_lines()), 2u);
  EXPECT_EQ(dim_greedy(three_lines(kClosed)), 3u);
  EXPECT_EQ(dim_greedy(MultiVectorSpace::empty(kTotal)), 0u);
}

TEST(DimGreedyTest, EqualsRankOfSumUnderTotalInOneAmbient) {
  GeneratorConfig cfg;
  cfg.max_ambients = 1;
  cfg.seed = 19;
  for (std::uint64_t draw = 0; draw < 200; ++draw) {
    const MultiVectorSpace m = random_instance(cfg, draw);
    Subspace total(m.components()[0].ambient());
    for (const Subspace& s : m.components()) total = sum(total, s);
    EXPECT_EQ(dim_greedy(m), total.dim()) << "draw " << draw;
  }
}

TEST(BasisInvarianceTest, Examples) {
  const AmbientId a = ambient("A", 3, 3);
  const MultiVectorSpace single({span_of(a, {{1, 0, 2}, {0, 1, 1}})});
  const InvarianceReport r = basis_invariance_check(single, 5, 1);
  EXPECT_EQ(r.cardinalities, (std::vector<std::size_t>(5, 2)));
  EXPECT_TRUE(r.all_agree);

  const InvarianceReport lines = basis_invariance_check(three_lines(), 20, 9);
  EXPECT_EQ(lines.cardinalities, (std::vector<std::size_t>(20, 2)));
  EXPECT_TRUE(lines.all_agree);

  const InvarianceReport one = basis_invariance_check(three_lines(kClosed), 1, 3);
  EXPECT_EQ(one.cardinalities.size(), 1u);
  EXPECT_TRUE(one.all_agree);
  EXPECT_EQ(one.policy, kClosed);
}

TEST(BasisInvarianceTest, DeterministicInSeed) {
  GeneratorConfig cfg;
  cfg.seed = 2;
  const MultiVectorSpace m = random_instance(cfg, 5);
  EXPECT_EQ(basis_invariance_check(m, 10, 77).cardinalities,
            basis_invariance_check(m, 10, 77).cardinalities);
}

TEST(IsMultiSubspaceTest, Examples) {
  const AmbientId a = ambient("A", 2, 2);
  const AmbientId b = ambient("B", 3, 1);
  const MultiVectorSpace parent({full_space(a), span_of(a, {{1, 1}}), full_space(b)});
  EXPECT_TRUE(is_multi_subspace(parent, parent));
  EXPECT_TRUE(is_multi_subspace(MultiVectorSpace({Subspace(a), Subspace(b)}), parent));
  EXPECT_FALSE(is_multi_subspace(VectorSet{tagged(a, {1, 0})}, parent));
  EXPECT_TRUE(is_multi_subspace(MultiVectorSpace({span_of(a, {{1, 1}})}), parent));
  // Not contained in the parent union.
  EXPECT_FALSE(is_multi_subspace(VectorSet{tagged(ambient("C", 2, 1), {0})}, parent));
}

TEST(IsMultiSubspaceTest, PolicyDecidesWhichSumsMustClose) {
  const AmbientId a = ambient("A", 2, 2);
  const MultiVectorSpace lines({span_of(a, {{1, 0}}), span_of(a, {{0, 1}})}, kTotal);
  // Under kTotal (1,0) + (0,1) exists and leaves the union.
  EXPECT_FALSE(is_multi_subspace(lines, lines));
  EXPECT_TRUE(is_multi_subspace(lines, lines.with_policy(kClosed)));
}

TEST(IntersectMultispacesTest, Examples) {
  const AmbientId a = ambient("A", 2, 2);
  const MultiVectorSpace m = three_lines();
  EXPECT_EQ(enumerate_union(intersect_multispaces(m, m)), enumerate_union(m));

  const MultiVectorSpace x({span_of(a, {{1, 0}})});
  const MultiVectorSpace y({span_of(a, {{0, 1}})});
  const MultiVectorSpace both = intersect_multispaces(x, y);
  EXPECT_EQ(both.size(), 1u);
  EXPECT_EQ(enumerate_union(both), (VectorSet{zero_vector(a)}));

  const MultiVectorSpace other({full_space(ambient("B", 2, 2))});
  const MultiVectorSpace none = intersect_multispaces(x, other);
  EXPECT_EQ(none.size(), 0u);
  EXPECT_TRUE(enumerate_union(none).empty());

  EXPECT_EQ(kind_of([&] { intersect_multispaces(x, y.with_policy(kClosed)); }),
            ErrorKind::kPolicyMismatch);
}

TEST(IntersectMultispacesTest, UnionIsSetIntersection) {
  GeneratorConfig cfg;
  cfg.seed = 31;
  for (std::uint64_t draw = 0; draw < 100; draw += 2) {
    const MultiVectorSpace m1 = random_instance(cfg, draw);
    const MultiVectorSpace m2 = random_instance(cfg, draw + 1);
    const VectorSet u1 = union_by_combination(m1);
    const VectorSet u2 = union_by_combination(m2);
    VectorSet expected;
    std::set_intersection(u1.begin(), u1.end(), u2.begin(), u2.end(),
                          std::inserter(expected, expected.begin()));
    const MultiVectorSpace both = intersect_multispaces(m1, m2);
    EXPECT_EQ(enumerate_union(both), expected);
    for (std::size_t i = 0; i < both.size(); ++i) {
      for (std::size_t j = i + 1; j < both.size(); ++j) {
        EXPECT_FALSE(equal(both.components()[i], both.components()[j]));
      }
    }
  }
}

TEST(DimInclusionExclusionTest, Examples) {
  const AmbientId a = ambient("A", 3, 3);
  const Subspace v1 = span_of(a, {{1, 0, 0}, {0, 1, 2}});
  const Subspace v2 = span_of(a, {{0, 1, 2}, {0, 0, 1}});
  EXPECT_EQ(dim_inclusion_exclusion(MultiVectorSpace({v1})), 2);
  EXPECT_EQ(dim_inclusion_exclusion(MultiVectorSpace({v1, v2})),
            static_cast<std::int64_t>(v1.dim() + v2.dim() - intersect(v1, v2).dim()));
  EXPECT_EQ(intersect(v1, v2).dim(), 1u);
  EXPECT_EQ(dim_inclusion_exclusion(three_lines()), 3);
  // Cross-ambient subsets contribute nothing.
  const MultiVectorSpace split({v1, full_space(ambient("B", 2, 2))});
  EXPECT_EQ(dim_inclusion_exclusion(split), 4);
  EXPECT_EQ(dim_inclusion_exclusion(MultiVectorSpace::empty(kTotal)), 0);
}

TEST(DimInclusionExclusionTest, SubsetCap) {
  const AmbientId a = ambient("A", 2, 1);
  const MultiVectorSpace many(std::vector<Subspace>(13, full_space(a)));
  EXPECT_EQ(kind_of([&] { dim_inclusion_exclusion(many); }), ErrorKind::kTooManyComponents);
  // 12 copies of a line: sum over j of (-1)^(j-1) C(12, j) = 1.
  EXPECT_EQ(dim_inclusion_exclusion(MultiVectorSpace(std::vector<Subspace>(12, full_space(a)))),
            1);
}

TEST(DimInclusionExclusionTest, PermutationInvariant) {
  GeneratorConfig cfg;
  cfg.seed = 12;
  cfg.max_components = 5;
  Rng rng(99);
  for (std::uint64_t draw = 0; draw < 100; ++draw) {
    const MultiVectorSpace m = random_instance(cfg, draw);
    std::vector<Subspace> parts = m.components();
    rng.shuffle(parts);
    EXPECT_EQ(dim_inclusion_exclusion(m),
              dim_inclusion_exclusion(MultiVectorSpace(parts, m.policy())));
  }
}

TEST(DimInclusionExclusionTest, ModularLawForTwoComponents) {
  GeneratorConfig cfg;
  cfg.seed = 13;
  cfg.max_components = 2;
  cfg.max_ambients = 1;
  cfg.max_ambient_dim = 5;
  for (std::uint64_t draw = 0; draw < 300; ++draw) {
    const MultiVectorSpace m = random_instance(cfg, draw);
    EXPECT_EQ(dim_inclusion_exclusion(m), static_cast<std::int64_t>(dim_greedy(m)));
  }
}

TEST(AdditiveFormulaTest, Examples) {
  const MultiVectorSpace m = three_lines();
  const AdditiveReport same = additive_formula_check(m, m);
  EXPECT_EQ(same.union_dim, 2u);
  EXPECT_EQ(same.right_side, 2);
  EXPECT_TRUE(same.agree);

  const AmbientId a = ambient("A", 2, 2);
  const AdditiveReport lines = additive_formula_check(MultiVectorSpace({span_of(a, {{1, 0}})}),
                                                      MultiVectorSpace({span_of(a, {{0, 1}})}));
  EXPECT_EQ(lines.union_dim, 2u);
  EXPECT_EQ(lines.first_dim, 1u);
  EXPECT_EQ(lines.second_dim, 1u);
  EXPECT_EQ(lines.intersection_dim, 0u);
  EXPECT_TRUE(lines.agree);

  const MultiVectorSpace p({full_space(ambient("P", 2, 2))}, kClosed);
  const MultiVectorSpace q({full_space(ambient("Q", 3, 3))}, kClosed);
  const AdditiveReport disjoint = additive_formula_check(p, q);
  EXPECT_EQ(disjoint.union_dim, 5u);
  EXPECT_EQ(disjoint.intersection_dim, 0u);
  EXPECT_EQ(disjoint.right_side, 5);
  EXPECT_TRUE(disjoint.agree);

  EXPECT_EQ(kind_of([&] { additive_formula_check(p, q.with_policy(kTotal)); }),
            ErrorKind::kPolicyMismatch);
}

TEST(ValidateAxiomsTest, Examples) {
  const AmbientId a = ambient("A", 3, 2);
  const AxiomReport single = validate_axioms(MultiVectorSpace({span_of(a, {{1, 2}})}));
  EXPECT_TRUE(single.valid());
  EXPECT_GT(single.closure_checks, 0u);

  const AmbientId a2 = ambient("A", 2, 2);
  const AxiomReport pair =
      validate_axioms(MultiVectorSpace({span_of(a2, {{1, 0}}), span_of(a2, {{1, 1}})}, kTotal));
  EXPECT_TRUE(pair.valid());
  // Three distinct union elements, every triple checked once.
  EXPECT_EQ(pair.associativity_checks, 27u);

  const AxiomReport split = validate_axioms(
      MultiVectorSpace({full_space(a2), full_space(ambient("B", 3, 1))}, kClosed));
  EXPECT_TRUE(split.valid());
}

TEST(ValidateAxiomsTest, RandomInstancesAreValid) {
  for (auto policy : {kTotal, kClosed}) {
    GeneratorConfig cfg;
    cfg.seed = 17;
    cfg.policy = policy;
    for (std::uint64_t draw = 0; draw < 100; ++draw) {
      EXPECT_TRUE(validate_axioms(random_instance(cfg, draw)).valid()) << draw;
    }
  }
}

TEST(ValidateAxiomsTest, EnumerationCap) {
  const MultiVectorSpace m({full_space(ambient("A", 3, 7))});
  EXPECT_EQ(kind_of([&] { validate_axioms(m); }), ErrorKind::kEnumerationTooLarge);
}

}  // namespace
}  // namespace mvs
