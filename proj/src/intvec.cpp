#include "ortho/intvec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

namespace ortho {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Overflow: return "Overflow";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotSquareMatrix: return "NotSquareMatrix";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NormMismatch: return "NormMismatch";
    case Errc::TooManyVectors: return "TooManyVectors";
    case Errc::NotPerfectSquareNorm: return "NotPerfectSquareNorm";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InternalFailure: return "InternalFailure";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

void internal_failure(const std::string& what) {
  throw Error(Errc::InternalFailure, "internal failure: " + what);
}

namespace {

[[noreturn]] void overflow(const char* op) {
  throw Error(Errc::Overflow, std::string("integer overflow in ") + op);
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) overflow("neg");
  return -a;
}

Int checked_pow(Int base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    overflow("narrow");
  }
  return static_cast<Int>(v);
}

Int isqrt(Int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "isqrt of a negative number");
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<Wide>(r) * r > n) --r;
  while (static_cast<Wide>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<Int> exact_sqrt(Int n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

IntVector::IntVector(std::vector<Int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(Errc::InvalidArgument, "vector dimension must be positive");
}

IntVector::IntVector(std::initializer_list<Int> coords) : IntVector(std::vector<Int>(coords)) {}

IntVector IntVector::zeros(std::size_t dim) { return IntVector(std::vector<Int>(dim, 0)); }

IntVector IntVector::unit(std::size_t dim, std::size_t j) {
  if (j >= dim) throw Error(Errc::IndexOutOfRange, "unit vector index out of range");
  std::vector<Int> c(dim, 0);
  c[j] = 1;
  return IntVector(std::move(c));
}

Int IntVector::at(std::size_t j) const {
  if (j >= coords_.size()) throw Error(Errc::IndexOutOfRange, "coordinate index out of range");
  return coords_[j];
}

Int IntVector::squared_norm() const { return dot(*this, *this); }

Int IntVector::content() const {
  Int g = 0;
  for (Int c : coords_) g = std::gcd(g, c);
  return g;
}

bool IntVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

bool IntVector::divisible_by(Int k) const {
  if (k == 0) throw Error(Errc::DivisionByZero, "divisibility test by zero");
  return std::all_of(coords_.begin(), coords_.end(), [k](Int c) { return c % k == 0; });
}

IntVector IntVector::scaled(Int k) const {
  std::vector<Int> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_mul(coords_[j], k);
  return IntVector(std::move(c));
}

IntVector IntVector::divided_exact(Int k) const {
  if (!divisible_by(k)) {
    throw Error(Errc::InvalidArgument, to_string(*this) + " is not divisible by " + std::to_string(k));
  }
  std::vector<Int> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = coords_[j] / k;
  return IntVector(std::move(c));
}

IntVector IntVector::operator-() const {
  std::vector<Int> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_neg(coords_[j]);
  return IntVector(std::move(c));
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "vector sum: dimension mismatch");
  std::vector<Int> c(a.dim());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_add(a[j], b[j]);
  return IntVector(std::move(c));
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "vector difference: dimension mismatch");
  std::vector<Int> c(a.dim());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_sub(a[j], b[j]);
  return IntVector(std::move(c));
}

Int dot(const IntVector& u, const IntVector& v) {
  if (u.dim() != v.dim()) {
    throw Error(Errc::DimensionMismatch, "dot: dimensions " + std::to_string(u.dim()) + " and " +
                                             std::to_string(v.dim()));
  }
  Int s = 0;
  for (std::size_t j = 0; j < u.dim(); ++j) s = checked_add(s, checked_mul(u[j], v[j]));
  return s;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < v.dim(); ++j) os << (j ? "," : "") << v[j];
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::vector<IntVector> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(Errc::EmptyInput, "matrix needs at least one row");
  for (const auto& r : rows_) {
    if (r.dim() != rows_.front().dim()) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<IntVector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(IntVector::unit(n, i));
  return IntMatrix(std::move(rows));
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  return IntMatrix(columns).transpose();
}

IntVector IntMatrix::column(std::size_t j) const {
  if (j >= cols()) throw Error(Errc::IndexOutOfRange, "column index out of range");
  std::vector<Int> c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
  return IntVector(std::move(c));
}

IntMatrix IntMatrix::transpose() const {
  std::vector<IntVector> t;
  t.reserve(cols());
  for (std::size_t j = 0; j < cols(); ++j) t.push_back(column(j));
  return IntMatrix(std::move(t));
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.dim() != cols()) throw Error(Errc::DimensionMismatch, "matrix-vector product: dimension mismatch");
  std::vector<Int> out(rows());
  for (std::size_t i = 0; i < rows(); ++i) out[i] = dot(rows_[i], v);
  return IntVector(std::move(out));
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols() != other.rows()) throw Error(Errc::DimensionMismatch, "matrix product: dimension mismatch");
  IntMatrix t = other.transpose();
  std::vector<IntVector> out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(t.apply(r));
  return IntMatrix(std::move(out));
}

IntMatrix IntMatrix::gram() const { return *this * transpose(); }

bool IntMatrix::is_scalar(Int n) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (rows_[i][j] != (i == j ? n : 0)) return false;
    }
  }
  return true;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) {
    throw Error(Errc::NotSquareMatrix, "determinant of a " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }
  // Bareiss: after step k every entry a[i][j] (i, j > k) is a (k+2)-minor of
  // the input, so the division by the previous pivot is exact.
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Wide num = static_cast<Wide>(a[i][j]) * a[k][k] -
                       static_cast<Wide>(a[i][k]) * a[k][j];
        a[i][j] = narrow(num / prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign == 1 ? a[n - 1][n - 1] : checked_neg(a[n - 1][n - 1]);
}

IntMatrix delete_column(const IntMatrix& m, std::size_t j) {
  if (j >= m.cols()) {
    throw Error(Errc::IndexOutOfRange, "column " + std::to_string(j) + " out of range for " +
                                           std::to_string(m.cols()) + " columns");
  }
  if (m.cols() == 1) throw Error(Errc::InvalidArgument, "cannot delete the only column");
  std::vector<IntVector> rows;
  rows.reserve(m.rows());
  for (const auto& r : m.row_vectors()) {
    std::vector<Int> c;
    c.reserve(r.dim() - 1);
    for (std::size_t k = 0; k < r.dim(); ++k) {
      if (k != j) c.push_back(r[k]);
    }
    rows.emplace_back(std::move(c));
  }
  return IntMatrix(std::move(rows));
}

OrthoSet verify_ortho_set(std::vector<IntVector> vectors) {
  if (vectors.empty()) throw Error(Errc::EmptyInput, "empty vector set");
  const std::size_t d = vectors.front().dim();
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].dim() != d) {
      throw Error(Errc::DimensionMismatch, "vector " + std::to_string(i) + " has dimension " +
                                               std::to_string(vectors[i].dim()) + ", expected " +
                                               std::to_string(d), i);
    }
  }
  const Int n = vectors.front().squared_norm();
  if (n == 0) throw Error(Errc::ZeroInput, "zero vector in set", 0);
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].squared_norm() != n) {
      throw Error(Errc::NormMismatch, "vector " + std::to_string(i) + " has squared norm " +
                                          std::to_string(vectors[i].squared_norm()) + ", expected " +
                                          std::to_string(n), i);
    }
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (dot(vectors[i], vectors[j]) != 0) {
        throw Error(Errc::NotOrthogonal, "vectors " + std::to_string(i) + " and " + std::to_string(j) +
                                             " are not orthogonal", i, j);
      }
    }
  }
  // Unreachable for nonzero orthogonal vectors, kept as the stated invariant.
  if (vectors.size() > d) throw Error(Errc::TooManyVectors, "more vectors than the dimension");
  return OrthoSet(std::move(vectors), n);
}

IntVector canonicalize_signed_perm(const IntVector& v) {
  std::vector<Int> c(v.begin(), v.end());
  for (auto& x : c) {
    if (x < 0) x = checked_neg(x);
  }
  std::sort(c.begin(), c.end());
  return IntVector(std::move(c));
}

}  // namespace ortho
