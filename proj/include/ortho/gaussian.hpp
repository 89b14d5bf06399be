#pragma once

#include "ortho/intvec.hpp"

namespace ortho {

// An element re + im*i of Z[i].
struct GaussianInt {
  Int re = 0;
  Int im = 0;

  Int norm() const;
  GaussianInt conj() const { return {re, checked_neg(im)}; }
  bool is_zero() const noexcept { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt gauss_add(GaussianInt x, GaussianInt y);
GaussianInt gauss_sub(GaussianInt x, GaussianInt y);
GaussianInt gauss_mul(GaussianInt x, GaussianInt y);

struct GaussianDivMod {
  GaussianInt quotient;
  GaussianInt remainder;
};

// x = q*y + r with norm(r) <= norm(y)/2. Each coordinate of x/y is rounded to
// the nearest integer, ties toward -infinity.
GaussianDivMod gauss_divmod(GaussianInt x, GaussianInt y);

struct GaussianGcd {
  GaussianInt g;
  GaussianInt s;
  GaussianInt t;
};

// s*x + t*y = g with g a (non-normalized) gcd of x and y.
GaussianGcd gauss_ext_gcd(GaussianInt x, GaussianInt y);

}  // namespace ortho
