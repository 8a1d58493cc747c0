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


// Canonical subspaces of a labelled ambient space GF(p)^n.

#ifndef MVS_SUBSPACE_HPP
#define MVS_SUBSPACE_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mvs/field.hpp"

namespace mvs {

inline constexpr std::size_t kDefaultEnumerationCap = 729;

/// Identity of a coordinate space GF(p)^n. Vectors from ambients that differ
/// in any field are distinct elements, even when their coordinates agree.
struct AmbientId {
  std::string label;
  Prime p;
  std::size_t n;

  friend bool operator==(const AmbientId&, const AmbientId&) = default;
  friend auto operator<=>(const AmbientId&, const AmbientId&) = default;
};

std::string to_string(const AmbientId& ambient);

class Subspace {
 public:
  /// The zero subspace of `ambient`.
  explicit Subspace(AmbientId ambient);

  const AmbientId& ambient() const { return ambient_; }
  /// RREF basis without zero rows; rows() == dim(), cols() == ambient().n.
  const FpMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  Vec basis_row(std::size_t i) const { return basis_.row_vec(i); }

  friend Subspace span(const AmbientId& ambient, const FpMatrix& generators);

 private:
  Subspace(AmbientId ambient, FpMatrix basis);

  AmbientId ambient_;
  FpMatrix basis_;
};

Subspace span(const AmbientId& ambient, const FpMatrix& generators);
Subspace span(const AmbientId& ambient, std::span<const Vec> generators);
Subspace full_space(const AmbientId& ambient);

bool contains(const Subspace& s, std::span<const Residue> v);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

struct SumIntersection {
  Subspace sum;
  Subspace intersection;
};

/// Zassenhaus reduction: one elimination of the stacked matrix
/// [[A | A], [B | 0]] yields bases of both A + B and A ∩ B.
SumIntersection zassenhaus(const Subspace& a, const Subspace& b);

bool equal(const Subspace& a, const Subspace& b);
inline bool operator==(const Subspace& a, const Subspace& b) { return equal(a, b); }

/// All p^dim vectors of `s`, ordered lexicographically by their coefficient
/// tuple over the canonical basis. Throws kEnumerationTooLarge above `cap`.
std::vector<Vec> enumerate(const Subspace& s, std::size_t cap = kDefaultEnumerationCap);

/// Number of elements p^dim, saturated at SIZE_MAX.
std::size_t cardinality(const Subspace& s);

}  // namespace mvs

#endif  // MVS_SUBSPACE_HPP
