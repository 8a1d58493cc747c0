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


// Exhaustive-enumeration ground truth for the fast paths in subspace and
// multispace. Nothing here performs elimination: component membership is a
// lookup in the enumerated element sets, and every search is a plain scan.

#ifndef MVS_ORACLE_HPP
#define MVS_ORACLE_HPP

#include <cstddef>
#include <set>
#include <span>

#include "mvs/multispace.hpp"

namespace mvs::oracle {

struct OracleConfig {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t coefficient_cap = 1'000'000;
};

VectorSet brute_span(const MultiVectorSpace& m, std::span<const TaggedVector> generators,
                     const OracleConfig& cfg = {});

DependenceResult brute_dependent(const MultiVectorSpace& m,
                                 std::span<const TaggedVector> vectors,
                                 const OracleConfig& cfg = {});

std::set<Vec> brute_intersection(const Subspace& a, const Subspace& b,
                                 const OracleConfig& cfg = {});

bool brute_subspace_check(const VectorSet& candidate, const MultiVectorSpace& parent,
                          const OracleConfig& cfg = {});
bool brute_subspace_check(const MultiVectorSpace& candidate, const MultiVectorSpace& parent,
                          const OracleConfig& cfg = {});

}  // namespace mvs::oracle

#endif  // MVS_ORACLE_HPP
