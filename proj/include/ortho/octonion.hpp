#pragma once

#include <array>
#include <optional>

#include "ortho/intvec.hpp"

namespace ortho {

// Integral Cayley number sum x_j u_j over the units u_0 = 1, u_1, ..., u_7.
struct Octonion {
  std::array<Int, 8> x{};

  static Octonion from_vector(const IntVector& v);
  IntVector to_vector() const;

  // (x_0, -x_1, ..., -x_7)
  Octonion conj() const;
  Int squared_norm() const { return to_vector().squared_norm(); }

  friend bool operator==(const Octonion&, const Octonion&) = default;
};

// Left-multiplication matrix: cayley_matrix(x).apply(y) is the product x*y.
// This table fixes the multiplication convention of the whole module.
IntMatrix cayley_matrix(const Octonion& x);

Octonion cayley_mul(const Octonion& x, const Octonion& y);

// v x w = P(v) w, where P(v) is C((0, v)) without its first row and column.
IntVector cross7(const IntVector& v, const IntVector& w);

// x × y × z = -C(x) C(y*) z + (y.z) x - (z.x) y + (x.y) z.
IntVector cross8_ternary(const IntVector& x, const IntVector& y, const IntVector& z);

// Third vector for an orthogonal pair in Z^7 of squared norm K1^2 K2^2 with
// K1 | v and K2 | w: cross7(v/K1, w/K2).
IntVector complete_d7_pair(const IntVector& v, const IntVector& w, Int k1, Int k2);

// cross7(v, w) / sqrt(N) when N is a square and the division is exact.
std::optional<IntVector> complete_d7_by_chance(const IntVector& v, const IntVector& w);

// Fourth vector for an orthogonal triple in Z^8 of squared norm K1 K2 K3 with
// K_j | v_j: cross8_ternary(v1/K1, v2/K2, v3/K3).
IntVector complete_d8_triple(const IntVector& v1, const IntVector& v2, const IntVector& v3, Int k1,
                             Int k2, Int k3);

}  // namespace ortho
