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


// Prime-field scalars and dense matrices over GF(p).
//
// Residues are stored as 32-bit values; products are formed in 64-bit
// intermediates, so any prime below 2^31 is supported without overflow.

#ifndef MVS_FIELD_HPP
#define MVS_FIELD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mvs {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

bool is_prime(std::uint64_t n);

/// A validated prime modulus p with 2 <= p < 2^31.
class Prime {
 public:
  static constexpr std::uint64_t kMax = (std::uint64_t{1} << 31) - 1;

  explicit Prime(std::uint64_t p);

  Residue value() const { return p_; }

  Residue add(Residue a, Residue b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  /// Multiplicative inverse via Fermat; throws kZeroInverse for a == 0.
  Residue inv(Residue a) const;
  Residue reduce(std::int64_t x) const;

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  Residue p_;
};

/// An element of GF(p) carrying its modulus.
class FpScalar {
 public:
  /// Requires 0 <= value < p.
  FpScalar(Residue value, Prime p);

  Residue value() const { return value_; }
  Prime prime() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  friend FpScalar operator+(FpScalar a, FpScalar b);
  friend FpScalar operator-(FpScalar a, FpScalar b);
  friend FpScalar operator*(FpScalar a, FpScalar b);
  FpScalar operator-() const { return {p_.neg(value_), p_}; }

  friend bool operator==(FpScalar, FpScalar) = default;

 private:
  Residue value_;
  Prime p_;
};

FpScalar fp_inv(FpScalar a);

/// Dense row-major matrix of residues mod p.
class FpMatrix {
 public:
  FpMatrix(Prime p, std::size_t rows, std::size_t cols);
  FpMatrix(Prime p, std::size_t rows, std::size_t cols, std::vector<Residue> entries);
  /// Builds a matrix from explicit rows; every row must have length `cols`.
  static FpMatrix from_rows(Prime p, std::size_t cols, std::span<const Vec> rows);

  Prime prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Residue> entries() const { return entries_; }

  Residue at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Residue& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const {
    return std::span<const Residue>(entries_).subspan(r * cols_, cols_);
  }
  std::span<Residue> row(std::size_t r) {
    return std::span<Residue>(entries_).subspan(r * cols_, cols_);
  }
  Vec row_vec(std::size_t r) const;

  void append_row(std::span<const Residue> row);
  void swap_rows(std::size_t a, std::size_t b);
  bool is_zero_row(std::size_t r) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  Prime p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

std::string to_string(const FpMatrix& m);

struct RrefResult {
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. The result has the same shape as the input,
/// with the `rank` nonzero rows first; each pivot is 1 and is the only
/// nonzero entry of its column.
RrefResult rref(const FpMatrix& m);

/// Coefficients c with c * basis_rows == v, or nullopt when v is outside the
/// row space. `basis_rows` must be in RREF with no zero rows.
std::optional<Vec> solve_membership(const FpMatrix& basis_rows,
                                    std::span<const Residue> v);

}  // namespace mvs

#endif  // MVS_FIELD_HPP
