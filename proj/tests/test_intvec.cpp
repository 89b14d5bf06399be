#include <algorithm>
#include <limits>

#include "doctest.h"
#include "ortho/intvec.hpp"
#include "support.hpp"

using namespace ortho;
using ortho::testing::Gen;

namespace {

Errc error_code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ortho::Error");
  return Errc::InternalFailure;
}

}  // namespace

TEST_CASE("checked arithmetic detects overflow") {
  constexpr Int max = std::numeric_limits<Int>::max();
  constexpr Int min = std::numeric_limits<Int>::min();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 6) == -24);
  CHECK(checked_pow(3, 4) == 81);
  CHECK(checked_pow(7, 0) == 1);
  CHECK(error_code_of([] { checked_add(max, 1); }) == Errc::Overflow);
  CHECK(error_code_of([] { checked_sub(min, 1); }) == Errc::Overflow);
  CHECK(error_code_of([] { checked_mul(max / 2 + 1, 2); }) == Errc::Overflow);
  CHECK(error_code_of([] { checked_neg(min); }) == Errc::Overflow);
  CHECK(error_code_of([] { checked_pow(10, 19); }) == Errc::Overflow);
  CHECK(error_code_of([] { narrow(static_cast<Wide>(max) + 1); }) == Errc::Overflow);
  CHECK(error_code_of([] { IntVector{max, 1}.squared_norm(); }) == Errc::Overflow);
}

TEST_CASE("integer square roots") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(std::numeric_limits<Int>::max()) == 3037000499);
  CHECK(exact_sqrt(49) == 7);
  CHECK_FALSE(exact_sqrt(117).has_value());
  for (Int n = 0; n < 5000; ++n) {
    const Int r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("vector basics") {
  const IntVector v{4, 5, 6, 7};
  CHECK(v.dim() == 4);
  CHECK(v.squared_norm() == 126);
  CHECK(IntVector{6, -9, 12}.content() == 3);
  CHECK(IntVector::zeros(3).content() == 0);
  CHECK(IntVector{8, 8, 24}.divided_exact(8) == IntVector{1, 1, 3});
  CHECK(error_code_of([] { IntVector{8, 9}.divided_exact(8); }) == Errc::InvalidArgument);
  CHECK(IntVector::unit(3, 1) == IntVector{0, 1, 0});
  CHECK(v - v == IntVector::zeros(4));
  CHECK(-v + v == IntVector::zeros(4));
  CHECK(v.scaled(2) == IntVector{8, 10, 12, 14});
  CHECK(to_string(IntVector{1, -2}) == "(1,-2)");
  CHECK(error_code_of([] { IntVector(std::vector<Int>{}); }) == Errc::InvalidArgument);
  CHECK(error_code_of([&] { v.at(4); }) == Errc::IndexOutOfRange);
}

TEST_CASE("dot product") {
  CHECK(dot({2, 3, 6}, {3, -6, 2}) == 0);
  CHECK(dot({1, 0, 0}, {1, 0, 0}) == 1);
  CHECK(dot({1, 4, 10}, {-8, 7, -2}) == 0);
  CHECK(error_code_of([] { dot({1, 2}, {1, 2, 3}); }) == Errc::DimensionMismatch);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK(determinant(IntMatrix({IntVector{-5}})) == -5);
  const IntMatrix m({IntVector{3, -6, 2}, IntVector{6, 2, -3}});
  CHECK(determinant(delete_column(m, 0)) == 14);
  // A zero leading pivot forces a row exchange.
  CHECK(determinant(IntMatrix({IntVector{0, 1}, IntVector{1, 0}})) == -1);
  CHECK(determinant(IntMatrix({IntVector{1, 2}, IntVector{2, 4}})) == 0);
  CHECK(error_code_of([&] { determinant(m); }) == Errc::NotSquareMatrix);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  Gen gen(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<IntVector> rows;
      for (std::size_t i = 0; i < n; ++i) rows.push_back(gen.vector(n, trial % 3 == 0 ? 1 : 9));
      const IntMatrix m(rows);
      REQUIRE(determinant(m) == testing::cofactor_det(testing::to_rows(m)));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<IntVector> a, b;
    for (int i = 0; i < 4; ++i) {
      a.push_back(gen.vector(4, 6));
      b.push_back(gen.vector(4, 6));
    }
    const IntMatrix ma(a), mb(b);
    REQUIRE(determinant(ma * mb) == determinant(ma) * determinant(mb));
  }
}

TEST_CASE("delete_column") {
  CHECK(delete_column(IntMatrix({IntVector{1, 2, 3}}), 1) == IntMatrix({IntVector{1, 3}}));
  CHECK(delete_column(IntMatrix({IntVector{7, 9}}), 0) == IntMatrix({IntVector{9}}));
  const IntMatrix m({IntVector{4, 5, 6, 7}, IntVector{-7, -2, -3, 8}, IntVector{-5, -4, 9, -2}});
  CHECK(delete_column(m, 0) == IntMatrix({IntVector{5, 6, 7}, IntVector{-2, -3, 8}, IntVector{-4, 9, -2}}));
  CHECK(error_code_of([&] { delete_column(m, 4); }) == Errc::IndexOutOfRange);
  CHECK(error_code_of([] { delete_column(IntMatrix({IntVector{1}}), 0); }) == Errc::InvalidArgument);
}

TEST_CASE("matrix helpers") {
  const IntMatrix m({IntVector{1, 2, 3}, IntVector{4, 5, 6}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.transpose().transpose() == m);
  CHECK(m.column(1) == IntVector{2, 5});
  CHECK(m.apply(IntVector{1, 0, -1}) == IntVector{-2, -2});
  CHECK(IntMatrix::from_columns({IntVector{1, 4}, IntVector{2, 5}, IntVector{3, 6}}) == m);
  CHECK(m.gram() == IntMatrix({IntVector{14, 32}, IntVector{32, 77}}));
  CHECK(IntMatrix({IntVector{4, 5, 6, 7}, IntVector{-7, -2, -3, 8}}).gram().is_scalar(126));
}

TEST_CASE("verify_ortho_set") {
  const OrthoSet s = verify_ortho_set({{4, 5, 6, 7}, {-7, -2, -3, 8}});
  CHECK(s.squared_norm() == 126);
  CHECK(s.size() == 2);
  CHECK(s.dim() == 4);
  CHECK(verify_ortho_set({{1, 0}, {0, 1}}).squared_norm() == 1);

  try {
    verify_ortho_set({{1, 1}, {1, -1}, {1, 0}});
    FAIL("expected NormMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NormMismatch);
    CHECK(e.first() == 2);
  }
  try {
    verify_ortho_set({{1, 0, 0}, {0, 1, 0}, {0, 1, 0}});
    FAIL("expected NotOrthogonal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotOrthogonal);
    CHECK(e.first() == 1);
    CHECK(e.second() == 2);
  }
  CHECK(error_code_of([] { verify_ortho_set({{1, 1}, {1, 0}}); }) == Errc::NormMismatch);
  CHECK(error_code_of([] { verify_ortho_set({{1, 0}, {1, 0}}); }) == Errc::NotOrthogonal);
  CHECK(error_code_of([] { verify_ortho_set({}); }) == Errc::EmptyInput);
  CHECK(error_code_of([] { verify_ortho_set({{1, 0}, {0, 1, 0}}); }) == Errc::DimensionMismatch);
  CHECK(error_code_of([] { verify_ortho_set({{0, 0}}); }) == Errc::ZeroInput);
  CHECK(error_code_of([] { verify_ortho_set({{1, 0}, {0, 1}, {0, 0}}); }) == Errc::NormMismatch);
}

TEST_CASE("canonicalize_signed_perm") {
  CHECK(canonicalize_signed_perm({-8, 7, -2}) == IntVector{2, 7, 8});
  CHECK(canonicalize_signed_perm({0, 3, -3}) == IntVector{0, 3, 3});
  CHECK(canonicalize_signed_perm({6, 2, -3}) == IntVector{2, 3, 6});

  Gen gen(13);
  for (int trial = 0; trial < 500; ++trial) {
    const IntVector v = gen.vector(5, 20);
    const IntVector c = canonicalize_signed_perm(v);
    REQUIRE(canonicalize_signed_perm(c) == c);
    std::vector<Int> moved(v.begin(), v.end());
    std::shuffle(moved.begin(), moved.end(), gen.engine());
    for (auto& x : moved) {
      if (gen.uniform(0, 1)) x = -x;
    }
    REQUIRE(canonicalize_signed_perm(IntVector(moved)) == c);
  }
}

TEST_CASE("column norm identity of orthogonal rows") {
  // det(M_(j))^2 = N^(d-2) (N - |c_j|^2) for d-1 orthogonal rows of norm N.
  Gen gen(14);
  for (std::size_t d : {3u, 4u}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto frame = testing::random_frame(gen, d, 5);
      frame.erase(frame.begin() + gen.uniform(0, static_cast<Int>(d) - 1));
      const OrthoSet s = verify_ortho_set(frame);
      const IntMatrix m = s.as_matrix();
      const Int n = s.squared_norm();
      for (std::size_t j = 0; j < d; ++j) {
        const Int det = determinant(delete_column(m, j));
        REQUIRE(det * det == checked_pow(n, static_cast<unsigned>(d - 2)) * (n - m.column(j).squared_norm()));
      }
    }
  }
}
