#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ortho/error.hpp"

namespace ortho {

using Int = std::int64_t;
// Double-width intermediate for products of two Int values.
__extension__ typedef __int128 Wide;

// Checked 64-bit arithmetic. Every overflow throws Error(Errc::Overflow).
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int checked_pow(Int base, unsigned exp);
Int narrow(Wide v);

// Floor of the square root for n >= 0.
Int isqrt(Int n);
std::optional<Int> exact_sqrt(Int n);

class IntVector {
 public:
  explicit IntVector(std::vector<Int> coords);
  IntVector(std::initializer_list<Int> coords);

  static IntVector zeros(std::size_t dim);
  static IntVector unit(std::size_t dim, std::size_t j);

  std::size_t dim() const noexcept { return coords_.size(); }
  Int operator[](std::size_t j) const { return coords_[j]; }
  Int at(std::size_t j) const;
  std::span<const Int> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  Int squared_norm() const;
  // gcd of the absolute coordinates; 0 for the zero vector.
  Int content() const;
  bool is_zero() const noexcept;
  bool divisible_by(Int k) const;

  IntVector scaled(Int k) const;
  // Throws InvalidArgument if some coordinate is not a multiple of k.
  IntVector divided_exact(Int k) const;

  IntVector operator-() const;
  friend IntVector operator+(const IntVector& a, const IntVector& b);
  friend IntVector operator-(const IntVector& a, const IntVector& b);

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector& a, const IntVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Int> coords_;
};

Int dot(const IntVector& u, const IntVector& v);
std::string to_string(const IntVector& v);

class IntMatrix {
 public:
  explicit IntMatrix(std::vector<IntVector> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return rows_.front().dim(); }
  bool is_square() const noexcept { return rows() == cols(); }
  const IntVector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<IntVector>& row_vectors() const noexcept { return rows_; }
  Int at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  // M * v, with v read as a column.
  IntVector apply(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  // M * M^T.
  IntMatrix gram() const;
  // True iff the matrix equals n * I.
  bool is_scalar(Int n) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::vector<IntVector> rows_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Int determinant(const IntMatrix& m);

// Removes column j (0-based); row order is preserved.
IntMatrix delete_column(const IntMatrix& m, std::size_t j);

// A nonempty set of pairwise-orthogonal integer vectors sharing one squared
// norm. Only obtainable through verify_ortho_set, so the invariant always holds.
class OrthoSet {
 public:
  const std::vector<IntVector>& vectors() const noexcept { return vectors_; }
  const IntVector& operator[](std::size_t i) const { return vectors_[i]; }
  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return vectors_.front().dim(); }
  Int squared_norm() const noexcept { return squared_norm_; }
  IntMatrix as_matrix() const { return IntMatrix(vectors_); }

  friend bool operator==(const OrthoSet&, const OrthoSet&) = default;

 private:
  friend OrthoSet verify_ortho_set(std::vector<IntVector> vectors);
  OrthoSet(std::vector<IntVector> v, Int n) : vectors_(std::move(v)), squared_norm_(n) {}

  std::vector<IntVector> vectors_;
  Int squared_norm_ = 0;
};

// Validates orthogonality and equal norms, reporting the first violation:
// NormMismatch(i) against vector 0, then NotOrthogonal(i, j) in (i, j) order.
OrthoSet verify_ortho_set(std::vector<IntVector> vectors);

// Absolute values sorted ascending: the normal form under signed permutations.
IntVector canonicalize_signed_perm(const IntVector& v);

}  // namespace ortho
