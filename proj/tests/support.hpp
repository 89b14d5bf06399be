#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ortho/intvec.hpp"
#include "ortho/quaternion.hpp"

namespace ortho::testing {

// Deterministic generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 20240611) : rng_(seed) {}

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }

  IntVector vector(std::size_t d, Int bound) {
    std::vector<Int> c(d);
    for (auto& x : c) x = uniform(-bound, bound);
    return IntVector(std::move(c));
  }

  IntVector nonzero_vector(std::size_t d, Int bound) {
    for (;;) {
      IntVector v = vector(d, bound);
      if (!v.is_zero()) return v;
    }
  }

  Quaternion quaternion(Int bound) {
    return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)};
  }

  Quaternion nonzero_quaternion(Int bound) {
    for (;;) {
      Quaternion q = quaternion(bound);
      if (!q.is_zero()) return q;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Determinant by Laplace expansion along the first row; an oracle independent
// of the elimination code.
inline Int cofactor_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Int term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

inline std::vector<std::vector<Int>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : m.row_vectors()) out.emplace_back(r.begin(), r.end());
  return out;
}

// True iff every pair is orthogonal and every squared norm equals n.
inline bool is_scaled_orthogonal(const std::vector<IntVector>& vs, Int n) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Int s = 0;
    for (Int c : vs[i]) s += c * c;
    if (s != n) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Int d = 0;
      for (std::size_t k = 0; k < vs[i].dim(); ++k) d += vs[i][k] * vs[j][k];
      if (d != 0) return false;
    }
  }
  return true;
}

// A full orthogonal equal-norm frame of Z^d for d = 3 (q i q*, q j q*, q k q*)
// or d = 4 (q, iq, jq, kq) from a random nonzero quaternion.
inline std::vector<IntVector> random_frame(Gen& gen, std::size_t d, Int bound) {
  const Quaternion q = gen.nonzero_quaternion(bound);
  if (d == 3) return unit_frame(q).vectors();
  return {q.to_vector(), (Quaternion::i() * q).to_vector(), (Quaternion::j() * q).to_vector(),
          (Quaternion::k() * q).to_vector()};
}

}  // namespace ortho::testing
