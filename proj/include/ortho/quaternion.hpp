#pragma once

#include <array>
#include <string>

#include "ortho/intvec.hpp"

namespace ortho {

// Lipschitz quaternion a0 + a1 i + a2 j + a3 k with integer coefficients.
struct Quaternion {
  Int a0 = 0;
  Int a1 = 0;
  Int a2 = 0;
  Int a3 = 0;

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  // Coordinates (a0, a1, a2, a3) as a vector of Z^4.
  static Quaternion from_vector(const IntVector& v);
  IntVector to_vector() const { return IntVector{a0, a1, a2, a3}; }

  Quaternion conj() const;
  Int squared_norm() const;
  Int content() const;
  bool is_zero() const noexcept { return a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0; }

  Quaternion operator-() const;
  friend Quaternion operator+(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator*(Int s, const Quaternion& q);

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

std::string to_string(const Quaternion& q);

enum class PureUnit { I, J, K };

constexpr std::array<PureUnit, 3> kPureUnits{PureUnit::I, PureUnit::J, PureUnit::K};

Quaternion as_quaternion(PureUnit u);
char unit_name(PureUnit u);

// Hamilton product under i^2 = j^2 = k^2 = ijk = -1.
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);

// (a1, a2, a3) -> a1 i + a2 j + a3 k.
Quaternion embed_vec3(const IntVector& a);

// The (i, j, k) coefficients of a pure quaternion. InternalFailure if the real
// part is nonzero.
IntVector pure_part(const Quaternion& q);

struct DotCross {
  Int dot;
  IntVector cross;
};

// Reads dot and cross products off q_a q_b = -(a.b) + q_{a x b}.
DotCross dot_cross(const IntVector& a, const IntVector& b);

// b with q_b = q q_a conj(q); |b|^2 = |q|^4 |a|^2.
IntVector rotate_vec(const Quaternion& q, const IntVector& a);

// The vectors of q i conj(q), q j conj(q), q k conj(q), in that order.
OrthoSet unit_frame(const Quaternion& q);

struct PythagoreanParam {
  Quaternion q;
  PureUnit unit;
};

// Finds q, u with q u conj(q) = q_a for a primitive a whose norm is an integer
// n. Quaternions of squared norm n are scanned with a0, a1, a2 descending from
// their largest admissible value (a3 takes +r before -r), units in i, j, k
// order; the first hit is returned.
PythagoreanParam pythagorean_param(const IntVector& a);

struct Bezout {
  Quaternion q1;
  Quaternion q2;
};

// q1 q + q2 q u = 2 whenever q u conj(q) is primitive.
Bezout quat_bezout(const Quaternion& q, PureUnit u);

// Automorphism induced by i -> j -> k -> i, and its inverse.
Quaternion cyclic_permute(const Quaternion& q);
Quaternion cyclic_permute_inverse(const Quaternion& q);

}  // namespace ortho
