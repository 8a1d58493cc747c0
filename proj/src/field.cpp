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


#include "mvs/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mvs/error.hpp"

namespace mvs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) {
  if (p > kMax || !is_prime(p)) {
    throw Error(ErrorKind::kInvalidArgument,
                "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<Residue>(p);
}

Residue Prime::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorKind::kZeroInverse, "zero has no inverse");
  // a^(p-2) mod p
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint64_t e = p_ - 2;
  while (e != 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue Prime::reduce(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

FpScalar::FpScalar(Residue value, Prime p) : value_(value), p_(p) {
  if (value >= p.value()) {
    throw Error(ErrorKind::kInvalidArgument,
                "residue " + std::to_string(value) + " not reduced mod " +
                    std::to_string(p.value()));
  }
}

namespace {

Prime common_prime(FpScalar a, FpScalar b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorKind::kInvalidArgument, "scalars from different prime fields");
  }
  return a.prime();
}

}  // namespace

FpScalar operator+(FpScalar a, FpScalar b) {
  Prime p = common_prime(a, b);
  return {p.add(a.value(), b.value()), p};
}

FpScalar operator-(FpScalar a, FpScalar b) {
  Prime p = common_prime(a, b);
  return {p.sub(a.value(), b.value()), p};
}

FpScalar operator*(FpScalar a, FpScalar b) {
  Prime p = common_prime(a, b);
  return {p.mul(a.value(), b.value()), p};
}

FpScalar fp_inv(FpScalar a) { return {a.prime().inv(a.value()), a.prime()}; }

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols,
                   std::vector<Residue> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::kDimensionMismatch, "entry count does not match shape");
  }
  for (Residue e : entries_) {
    if (e >= p.value()) {
      throw Error(ErrorKind::kInvalidArgument, "matrix entry not reduced mod p");
    }
  }
}

FpMatrix FpMatrix::from_rows(Prime p, std::size_t cols, std::span<const Vec> rows) {
  FpMatrix m(p, 0, cols);
  for (const Vec& r : rows) m.append_row(r);
  return m;
}

Vec FpMatrix::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

void FpMatrix::append_row(std::span<const Residue> row) {
  if (row.size() != cols_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "row of length " + std::to_string(row.size()) + ", expected " +
                    std::to_string(cols_));
  }
  for (Residue e : row) {
    if (e >= p_.value()) {
      throw Error(ErrorKind::kInvalidArgument, "matrix entry not reduced mod p");
    }
  }
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

void FpMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

bool FpMatrix::is_zero_row(std::size_t r) const {
  auto s = row(r);
  return std::all_of(s.begin(), s.end(), [](Residue e) { return e == 0; });
}

std::string to_string(const FpMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out << ",";
      out << m.at(r, c);
    }
    out << "]";
  }
  out << "] mod " << m.prime().value();
  return out.str();
}

RrefResult rref(const FpMatrix& m) {
  const Prime p = m.prime();
  FpMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Topmost nonzero candidate at or below the current row.
    std::size_t pick = row;
    while (pick < a.rows() && a.at(pick, col) == 0) ++pick;
    if (pick == a.rows()) continue;
    a.swap_rows(row, pick);

    const Residue scale = p.inv(a.at(row, col));
    for (Residue& e : a.row(row)) e = p.mul(e, scale);

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const Residue factor = a.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) {
        a.at(r, c) = p.sub(a.at(r, c), p.mul(factor, a.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

std::optional<Vec> solve_membership(const FpMatrix& basis_rows,
                                    std::span<const Residue> v) {
  if (v.size() != basis_rows.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "vector of length " + std::to_string(v.size()) + ", expected " +
                    std::to_string(basis_rows.cols()));
  }
  const Prime p = basis_rows.prime();
  // In RREF the coefficient of each row is read off at its pivot column.
  Vec coeffs(basis_rows.rows(), 0);
  Vec residual(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_rows.rows(); ++r) {
    auto row = basis_rows.row(r);
    auto lead = std::find_if(row.begin(), row.end(), [](Residue e) { return e != 0; });
    if (lead == row.end()) {
      throw Error(ErrorKind::kInvalidArgument, "basis contains a zero row");
    }
    const std::size_t pivot = static_cast<std::size_t>(lead - row.begin());
    const Residue c = residual[pivot];
    coeffs[r] = c;
    if (c == 0) continue;
    for (std::size_t j = pivot; j < row.size(); ++j) {
      residual[j] = p.sub(residual[j], p.mul(c, row[j]));
    }
  }
  if (std::any_of(residual.begin(), residual.end(), [](Residue e) { return e != 0; })) {
    return std::nullopt;
  }
  return coeffs;
}

}  // namespace mvs
