#include "ortho/octonion.hpp"

#include <string>
#include <utility>

namespace ortho {

namespace {

struct Entry {
  int index;
  int sign;
};

// Entry (r, c) of C(x) is sign * x[index].
constexpr Entry kCayleyTable[8][8] = {
    {{0, +1}, {1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1}},
    {{1, +1}, {0, +1}, {4, -1}, {7, -1}, {2, +1}, {6, -1}, {5, +1}, {3, +1}},
    {{2, +1}, {4, +1}, {0, +1}, {5, -1}, {1, -1}, {3, +1}, {7, -1}, {6, +1}},
    {{3, +1}, {7, +1}, {5, +1}, {0, +1}, {6, -1}, {2, -1}, {4, +1}, {1, -1}},
    {{4, +1}, {2, -1}, {1, +1}, {6, +1}, {0, +1}, {7, -1}, {3, -1}, {5, +1}},
    {{5, +1}, {6, +1}, {3, -1}, {2, +1}, {7, +1}, {0, +1}, {1, -1}, {4, -1}},
    {{6, +1}, {5, -1}, {7, +1}, {4, -1}, {3, +1}, {1, +1}, {0, +1}, {2, -1}},
    {{7, +1}, {3, -1}, {6, -1}, {1, +1}, {5, -1}, {4, +1}, {2, +1}, {0, +1}},
};

void require_dim(const IntVector& v, std::size_t d, const char* what) {
  if (v.dim() != d) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": expected dimension " + std::to_string(d) +
                                             ", got " + std::to_string(v.dim()));
  }
}

void require_positive(Int k, const char* name) {
  if (k <= 0) throw Error(Errc::PreconditionFailed, std::string(name) + " must be positive");
}

void require_divides(Int k, const IntVector& v, const char* what) {
  if (!v.divisible_by(k)) {
    throw Error(Errc::PreconditionFailed, std::string(what) + ": " + std::to_string(k) + " does not divide " +
                                              to_string(v));
  }
}

IntVector prepend_zero(const IntVector& v) {
  std::vector<Int> c;
  c.reserve(v.dim() + 1);
  c.push_back(0);
  c.insert(c.end(), v.begin(), v.end());
  return IntVector(std::move(c));
}

void check_extension(const std::vector<IntVector>& inputs, const IntVector& added, Int n, const char* what) {
  for (const auto& v : inputs) {
    if (dot(v, added) != 0) internal_failure(std::string(what) + ": result is not orthogonal to the inputs");
  }
  if (added.squared_norm() != n) internal_failure(std::string(what) + ": result has the wrong norm");
}

}  // namespace

Octonion Octonion::from_vector(const IntVector& v) {
  require_dim(v, 8, "octonion");
  Octonion o;
  for (std::size_t j = 0; j < 8; ++j) o.x[j] = v[j];
  return o;
}

IntVector Octonion::to_vector() const { return IntVector(std::vector<Int>(x.begin(), x.end())); }

Octonion Octonion::conj() const {
  Octonion o = *this;
  for (std::size_t j = 1; j < 8; ++j) o.x[j] = checked_neg(o.x[j]);
  return o;
}

IntMatrix cayley_matrix(const Octonion& x) {
  std::vector<IntVector> rows;
  rows.reserve(8);
  for (const auto& table_row : kCayleyTable) {
    std::vector<Int> r(8);
    for (std::size_t c = 0; c < 8; ++c) {
      const Int v = x.x[table_row[c].index];
      r[c] = table_row[c].sign > 0 ? v : checked_neg(v);
    }
    rows.emplace_back(std::move(r));
  }
  return IntMatrix(std::move(rows));
}

Octonion cayley_mul(const Octonion& x, const Octonion& y) {
  return Octonion::from_vector(cayley_matrix(x).apply(y.to_vector()));
}

IntVector cross7(const IntVector& v, const IntVector& w) {
  require_dim(v, 7, "cross7");
  require_dim(w, 7, "cross7");
  const IntVector product = cayley_matrix(Octonion::from_vector(prepend_zero(v))).apply(prepend_zero(w));
  return IntVector(std::vector<Int>(product.begin() + 1, product.end()));
}

IntVector cross8_ternary(const IntVector& x, const IntVector& y, const IntVector& z) {
  require_dim(x, 8, "cross8_ternary");
  require_dim(y, 8, "cross8_ternary");
  require_dim(z, 8, "cross8_ternary");
  const IntVector cyz = cayley_matrix(Octonion::from_vector(y).conj()).apply(z);
  const IntVector term = cayley_matrix(Octonion::from_vector(x)).apply(cyz);
  return -term + x.scaled(dot(y, z)) - y.scaled(dot(z, x)) + z.scaled(dot(x, y));
}

IntVector complete_d7_pair(const IntVector& v, const IntVector& w, Int k1, Int k2) {
  require_dim(v, 7, "complete_d7_pair");
  require_dim(w, 7, "complete_d7_pair");
  require_positive(k1, "K1");
  require_positive(k2, "K2");
  const OrthoSet s = verify_ortho_set({v, w});
  const Int k12 = checked_mul(k1, k2);
  if (s.squared_norm() != checked_mul(k12, k12)) {
    throw Error(Errc::PreconditionFailed, "squared norm " + std::to_string(s.squared_norm()) +
                                              " is not K1^2 K2^2 = " + std::to_string(k12 * k12));
  }
  require_divides(k1, v, "K1 | v");
  require_divides(k2, w, "K2 | w");
  IntVector u = cross7(v.divided_exact(k1), w.divided_exact(k2));
  check_extension({v, w}, u, s.squared_norm(), "complete_d7_pair");
  return u;
}

std::optional<IntVector> complete_d7_by_chance(const IntVector& v, const IntVector& w) {
  require_dim(v, 7, "complete_d7_by_chance");
  require_dim(w, 7, "complete_d7_by_chance");
  const OrthoSet s = verify_ortho_set({v, w});
  const auto root = exact_sqrt(s.squared_norm());
  if (!root) return std::nullopt;
  const IntVector c = cross7(v, w);
  if (!c.divisible_by(*root)) return std::nullopt;
  IntVector u = c.divided_exact(*root);
  check_extension({v, w}, u, s.squared_norm(), "complete_d7_by_chance");
  return u;
}

IntVector complete_d8_triple(const IntVector& v1, const IntVector& v2, const IntVector& v3, Int k1,
                             Int k2, Int k3) {
  require_dim(v1, 8, "complete_d8_triple");
  require_dim(v2, 8, "complete_d8_triple");
  require_dim(v3, 8, "complete_d8_triple");
  require_positive(k1, "K1");
  require_positive(k2, "K2");
  require_positive(k3, "K3");
  const OrthoSet s = verify_ortho_set({v1, v2, v3});
  const Int k123 = checked_mul(checked_mul(k1, k2), k3);
  if (s.squared_norm() != k123) {
    throw Error(Errc::PreconditionFailed, "squared norm " + std::to_string(s.squared_norm()) +
                                              " is not K1 K2 K3 = " + std::to_string(k123));
  }
  require_divides(k1, v1, "K1 | v1");
  require_divides(k2, v2, "K2 | v2");
  require_divides(k3, v3, "K3 | v3");
  IntVector w = cross8_ternary(v1.divided_exact(k1), v2.divided_exact(k2), v3.divided_exact(k3));
  check_extension({v1, v2, v3}, w, s.squared_norm(), "complete_d8_triple");
  return w;
}

}  // namespace ortho
