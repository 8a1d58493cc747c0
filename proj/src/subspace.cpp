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


#include "mvs/subspace.hpp"

#include <limits>
#include <utility>

#include "mvs/error.hpp"

namespace mvs {

std::string to_string(const AmbientId& ambient) {
  return ambient.label + "(p=" + std::to_string(ambient.p.value()) +
         ", n=" + std::to_string(ambient.n) + ")";
}

Subspace::Subspace(AmbientId ambient)
    : ambient_(std::move(ambient)), basis_(ambient_.p, 0, ambient_.n) {}

Subspace::Subspace(AmbientId ambient, FpMatrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorKind::kAmbientMismatch,
                "subspaces of " + to_string(a.ambient()) + " and " +
                    to_string(b.ambient()));
  }
}

FpMatrix leading_rows(const FpMatrix& m, std::size_t count, std::size_t col_begin,
                      std::size_t col_count) {
  FpMatrix out(m.prime(), 0, col_count);
  for (std::size_t r = 0; r < count; ++r) {
    out.append_row(m.row(r).subspan(col_begin, col_count));
  }
  return out;
}

}  // namespace

Subspace span(const AmbientId& ambient, const FpMatrix& generators) {
  if (generators.cols() != ambient.n || generators.prime() != ambient.p) {
    throw Error(ErrorKind::kDimensionMismatch,
                "generators do not live in " + to_string(ambient));
  }
  RrefResult r = rref(generators);
  return Subspace(ambient, leading_rows(r.reduced, r.rank, 0, ambient.n));
}

Subspace span(const AmbientId& ambient, std::span<const Vec> generators) {
  for (const Vec& g : generators) {
    if (g.size() != ambient.n) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "generator of length " + std::to_string(g.size()) + " in " +
                      to_string(ambient));
    }
  }
  return span(ambient, FpMatrix::from_rows(ambient.p, ambient.n, generators));
}

Subspace full_space(const AmbientId& ambient) {
  FpMatrix id(ambient.p, ambient.n, ambient.n);
  for (std::size_t i = 0; i < ambient.n; ++i) id.at(i, i) = 1;
  return span(ambient, id);
}

bool contains(const Subspace& s, std::span<const Residue> v) {
  return solve_membership(s.basis(), v).has_value();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  FpMatrix stacked = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.basis().row(r));
  return span(a.ambient(), stacked);
}

SumIntersection zassenhaus(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient().n;
  const Prime p = a.ambient().p;
  FpMatrix block(p, 0, 2 * n);
  Vec row(2 * n, 0);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto src = a.basis().row(r);
    std::copy(src.begin(), src.end(), row.begin());
    std::copy(src.begin(), src.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    block.append_row(row);
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    auto src = b.basis().row(r);
    std::copy(src.begin(), src.end(), row.begin());
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(n), row.end(), 0);
    block.append_row(row);
  }
  RrefResult red = rref(block);

  // Nonzero rows with a pivot in the left half span the sum; the remaining
  // nonzero rows have a zero left half and their right halves span the
  // intersection.
  std::size_t sum_rows = 0;
  while (sum_rows < red.rank && red.pivots[sum_rows] < n) ++sum_rows;
  FpMatrix sum_basis = leading_rows(red.reduced, sum_rows, 0, n);
  FpMatrix inter_gens(p, 0, n);
  for (std::size_t r = sum_rows; r < red.rank; ++r) {
    inter_gens.append_row(red.reduced.row(r).subspan(n, n));
  }
  return SumIntersection{span(a.ambient(), sum_basis), span(a.ambient(), inter_gens)};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  return zassenhaus(a, b).intersection;
}

bool equal(const Subspace& a, const Subspace& b) {
  return a.ambient() == b.ambient() && a.basis() == b.basis();
}

std::size_t cardinality(const Subspace& s) {
  const std::size_t p = s.ambient().p.value();
  std::size_t total = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / p) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= p;
  }
  return total;
}

std::vector<Vec> enumerate(const Subspace& s, std::size_t cap) {
  const std::size_t count = cardinality(s);
  if (count > cap) {
    throw Error(ErrorKind::kEnumerationTooLarge,
                "subspace of dimension " + std::to_string(s.dim()) + " over GF(" +
                    std::to_string(s.ambient().p.value()) + ") exceeds cap " +
                    std::to_string(cap));
  }
  const Prime p = s.ambient().p;
  const std::size_t n = s.ambient().n;
  const std::size_t d = s.dim();
  std::vector<Vec> out;
  out.reserve(count);
  Vec coeffs(d, 0);
  for (std::size_t k = 0; k < count; ++k) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (coeffs[i] == 0) continue;
      auto row = s.basis().row(i);
      for (std::size_t j = 0; j < n; ++j) v[j] = p.add(v[j], p.mul(coeffs[i], row[j]));
    }
    out.push_back(std::move(v));
    // Odometer with the first coefficient most significant.
    for (std::size_t i = d; i-- > 0;) {
      if (++coeffs[i] < p.value()) break;
      coeffs[i] = 0;
    }
  }
  return out;
}

}  // namespace mvs
