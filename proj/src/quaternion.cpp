#include "ortho/quaternion.hpp"

#include <numeric>
#include <sstream>

#include "ortho/gaussian.hpp"

namespace ortho {

namespace {

void require_dim3(const IntVector& a, const char* what) {
  if (a.dim() != 3) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": expected a vector of Z^3, got dimension " +
                                             std::to_string(a.dim()));
  }
}

Quaternion from_gaussian(GaussianInt g) { return {g.re, g.im, 0, 0}; }

Quaternion sandwich(const Quaternion& q, const Quaternion& x) { return q * x * q.conj(); }

}  // namespace

Quaternion Quaternion::from_vector(const IntVector& v) {
  if (v.dim() != 4) throw Error(Errc::DimensionMismatch, "quaternion from a vector of dimension " + std::to_string(v.dim()));
  return {v[0], v[1], v[2], v[3]};
}

Quaternion Quaternion::conj() const { return {a0, checked_neg(a1), checked_neg(a2), checked_neg(a3)}; }

Int Quaternion::squared_norm() const { return to_vector().squared_norm(); }

Int Quaternion::content() const { return to_vector().content(); }

Quaternion Quaternion::operator-() const {
  return {checked_neg(a0), checked_neg(a1), checked_neg(a2), checked_neg(a3)};
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {checked_add(p.a0, q.a0), checked_add(p.a1, q.a1), checked_add(p.a2, q.a2), checked_add(p.a3, q.a3)};
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {checked_sub(p.a0, q.a0), checked_sub(p.a1, q.a1), checked_sub(p.a2, q.a2), checked_sub(p.a3, q.a3)};
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  auto m = [](Int x, Int y) { return static_cast<Wide>(x) * y; };
  return {narrow(m(p.a0, q.a0) - m(p.a1, q.a1) - m(p.a2, q.a2) - m(p.a3, q.a3)),
          narrow(m(p.a0, q.a1) + m(p.a1, q.a0) + m(p.a2, q.a3) - m(p.a3, q.a2)),
          narrow(m(p.a0, q.a2) - m(p.a1, q.a3) + m(p.a2, q.a0) + m(p.a3, q.a1)),
          narrow(m(p.a0, q.a3) + m(p.a1, q.a2) - m(p.a2, q.a1) + m(p.a3, q.a0))};
}

Quaternion operator*(Int s, const Quaternion& q) {
  return {checked_mul(s, q.a0), checked_mul(s, q.a1), checked_mul(s, q.a2), checked_mul(s, q.a3)};
}

std::string to_string(const Quaternion& q) {
  std::ostringstream os;
  os << q.a0 << (q.a1 < 0 ? "" : "+") << q.a1 << "i" << (q.a2 < 0 ? "" : "+") << q.a2 << "j"
     << (q.a3 < 0 ? "" : "+") << q.a3 << "k";
  return os.str();
}

Quaternion as_quaternion(PureUnit u) {
  switch (u) {
    case PureUnit::I: return Quaternion::i();
    case PureUnit::J: return Quaternion::j();
    case PureUnit::K: return Quaternion::k();
  }
  return Quaternion::i();
}

char unit_name(PureUnit u) {
  switch (u) {
    case PureUnit::I: return 'i';
    case PureUnit::J: return 'j';
    case PureUnit::K: return 'k';
  }
  return '?';
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

Quaternion embed_vec3(const IntVector& a) {
  require_dim3(a, "embed_vec3");
  return {0, a[0], a[1], a[2]};
}

IntVector pure_part(const Quaternion& q) {
  if (q.a0 != 0) internal_failure("expected a pure quaternion, got " + to_string(q));
  return IntVector{q.a1, q.a2, q.a3};
}

DotCross dot_cross(const IntVector& a, const IntVector& b) {
  require_dim3(a, "dot_cross");
  require_dim3(b, "dot_cross");
  Quaternion p = embed_vec3(a) * embed_vec3(b);
  return {checked_neg(p.a0), IntVector{p.a1, p.a2, p.a3}};
}

IntVector rotate_vec(const Quaternion& q, const IntVector& a) {
  require_dim3(a, "rotate_vec");
  return pure_part(sandwich(q, embed_vec3(a)));
}

OrthoSet unit_frame(const Quaternion& q) {
  if (q.is_zero()) throw Error(Errc::ZeroInput, "unit_frame of the zero quaternion");
  std::vector<IntVector> frame;
  frame.reserve(3);
  for (PureUnit u : kPureUnits) frame.push_back(pure_part(sandwich(q, as_quaternion(u))));
  return verify_ortho_set(std::move(frame));
}

PythagoreanParam pythagorean_param(const IntVector& a) {
  require_dim3(a, "pythagorean_param");
  const Int norm = a.squared_norm();
  const auto n = exact_sqrt(norm);
  if (!n) {
    throw Error(Errc::NotPerfectSquareNorm, "squared norm " + std::to_string(norm) + " of " + to_string(a) +
                                                " is not a perfect square");
  }
  if (a.content() != 1) throw Error(Errc::NotPrimitive, to_string(a) + " is not primitive");

  const Quaternion target = embed_vec3(a);
  const Int r0 = isqrt(*n);
  for (Int a0 = r0; a0 >= -r0; --a0) {
    const Int rem0 = *n - a0 * a0;
    const Int r1 = isqrt(rem0);
    for (Int a1 = r1; a1 >= -r1; --a1) {
      const Int rem1 = rem0 - a1 * a1;
      const Int r2 = isqrt(rem1);
      for (Int a2 = r2; a2 >= -r2; --a2) {
        const auto a3 = exact_sqrt(rem1 - a2 * a2);
        if (!a3) continue;
        for (Int s : {Int{1}, Int{-1}}) {
          if (s == -1 && *a3 == 0) break;
          const Quaternion q{a0, a1, a2, s * *a3};
          for (PureUnit u : kPureUnits) {
            if (sandwich(q, as_quaternion(u)) == target) return {q, u};
          }
        }
      }
    }
  }
  throw Error(Errc::SearchExhausted, "no quaternion parametrizes " + to_string(a));
}

Quaternion cyclic_permute(const Quaternion& q) { return {q.a0, q.a3, q.a1, q.a2}; }

Quaternion cyclic_permute_inverse(const Quaternion& q) { return {q.a0, q.a2, q.a3, q.a1}; }

namespace {

Bezout bezout_for_i(const Quaternion& q) {
  // q - i q i = 2(a + b i) and -j q + k q i = 2(c - d i).
  const GaussianInt x{q.a0, q.a1};
  const GaussianInt y{q.a2, checked_neg(q.a3)};
  const GaussianGcd eg = gauss_ext_gcd(x, y);
  if (!eg.g.is_unit()) {
    internal_failure("a+bi and c-di share a Gaussian factor although q i conj(q) is primitive");
  }
  const GaussianInt g_inv = eg.g.conj();
  const Quaternion ab = from_gaussian(gauss_mul(eg.s, g_inv));  // A + B i
  const Quaternion cd = from_gaussian(gauss_mul(eg.t, g_inv));  // C - D i
  return {ab - cd * Quaternion::j(), ab * (-Quaternion::i()) + cd * Quaternion::k()};
}

}  // namespace

Bezout quat_bezout(const Quaternion& q, PureUnit u) {
  const Quaternion image = sandwich(q, as_quaternion(u));
  if (image.content() != 1) {
    throw Error(Errc::NotPrimitive, "q " + std::string(1, unit_name(u)) + " conj(q) = " + to_string(image) +
                                        " is not primitive");
  }
  Bezout b;
  switch (u) {
    case PureUnit::I:
      b = bezout_for_i(q);
      break;
    case PureUnit::J: {
      Bezout r = bezout_for_i(cyclic_permute_inverse(q));
      b = {cyclic_permute(r.q1), cyclic_permute(r.q2)};
      break;
    }
    case PureUnit::K: {
      Bezout r = bezout_for_i(cyclic_permute_inverse(cyclic_permute_inverse(q)));
      b = {cyclic_permute(cyclic_permute(r.q1)), cyclic_permute(cyclic_permute(r.q2))};
      break;
    }
  }
  if (b.q1 * q + b.q2 * q * as_quaternion(u) != Quaternion{2, 0, 0, 0}) {
    internal_failure("Bezout identity q1 q + q2 q u = 2 does not hold for q = " + to_string(q));
  }
  return b;
}

}  // namespace ortho
