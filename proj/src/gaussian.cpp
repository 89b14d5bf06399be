#include "ortho/gaussian.hpp"

namespace ortho {

namespace {

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nearest integer to num/den (den > 0); an exact half rounds down.
Int round_half_down(Wide num, Wide den) {
  // ceil((2*num - den) / (2*den)) == -floor((den - 2*num) / (2*den))
  return narrow(-floor_div(den - 2 * num, 2 * den));
}

}  // namespace

Int GaussianInt::norm() const { return checked_add(checked_mul(re, re), checked_mul(im, im)); }

GaussianInt gauss_add(GaussianInt x, GaussianInt y) {
  return {checked_add(x.re, y.re), checked_add(x.im, y.im)};
}

GaussianInt gauss_sub(GaussianInt x, GaussianInt y) {
  return {checked_sub(x.re, y.re), checked_sub(x.im, y.im)};
}

GaussianInt gauss_mul(GaussianInt x, GaussianInt y) {
  return {checked_sub(checked_mul(x.re, y.re), checked_mul(x.im, y.im)),
          checked_add(checked_mul(x.re, y.im), checked_mul(x.im, y.re))};
}

GaussianDivMod gauss_divmod(GaussianInt x, GaussianInt y) {
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "Gaussian division by zero");
  // x / y = x * conj(y) / norm(y)
  const Wide den = static_cast<Wide>(y.re) * y.re + static_cast<Wide>(y.im) * y.im;
  const Wide num_re = static_cast<Wide>(x.re) * y.re + static_cast<Wide>(x.im) * y.im;
  const Wide num_im = static_cast<Wide>(x.im) * y.re - static_cast<Wide>(x.re) * y.im;
  GaussianInt q{round_half_down(num_re, den), round_half_down(num_im, den)};
  GaussianInt r = gauss_sub(x, gauss_mul(q, y));
  return {q, r};
}

GaussianGcd gauss_ext_gcd(GaussianInt x, GaussianInt y) {
  if (x.is_zero() && y.is_zero()) throw Error(Errc::InvalidArgument, "gcd of two zeros");
  GaussianInt r0 = x, r1 = y;
  GaussianInt s0{1, 0}, s1{0, 0};
  GaussianInt t0{0, 0}, t1{1, 0};
  while (!r1.is_zero()) {
    auto [q, r] = gauss_divmod(r0, r1);
    GaussianInt s2 = gauss_sub(s0, gauss_mul(q, s1));
    GaussianInt t2 = gauss_sub(t0, gauss_mul(q, t1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  return {r0, s0, t0};
}

}  // namespace ortho
