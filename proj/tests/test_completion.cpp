#include <algorithm>

#include "doctest.h"
#include "ortho/census.hpp"
#include "ortho/completion.hpp"
#include "ortho/octonion.hpp"
#include "support.hpp"

using namespace ortho;
using ortho::testing::Gen;

namespace {

// w_j = (-1)^j det(M_(j)) / N^((d-2)/2) with 1-based j, from cofactor
// expansion: an oracle independent of the elimination code.
IntVector codim1_oracle(const std::vector<IntVector>& rows, Int divisor) {
  const std::size_t d = rows.front().dim();
  std::vector<Int> w(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::vector<Int>> minor;
    for (const auto& r : rows) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) row.push_back(r[k]);
      minor.push_back(row);
    }
    const Int det = testing::cofactor_det(minor);
    REQUIRE(det % divisor == 0);
    w[j] = (j % 2 == 0 ? -det : det) / divisor;
  }
  return IntVector(w);
}

std::vector<IntVector> with_added(const OrthoSet& s, const CompletionResult& r) {
  std::vector<IntVector> all = s.vectors();
  all.insert(all.end(), r.added.begin(), r.added.end());
  return all;
}

// Applies the same random signed permutation of coordinates to every row.
std::vector<IntVector> shuffle_coordinates(Gen& gen, std::vector<IntVector> rows) {
  const std::size_t d = rows.front().dim();
  std::vector<std::size_t> perm(d);
  for (std::size_t j = 0; j < d; ++j) perm[j] = j;
  std::shuffle(perm.begin(), perm.end(), gen.engine());
  std::vector<Int> sign(d);
  for (auto& s : sign) s = gen.uniform(0, 1) ? 1 : -1;
  for (auto& r : rows) {
    std::vector<Int> c(d);
    for (std::size_t j = 0; j < d; ++j) c[j] = sign[j] * r[perm[j]];
    r = IntVector(c);
  }
  return rows;
}

// An orthogonal frame of Z^d, d in {2, 4, 6, 8}, all of squared norm N.
std::vector<IntVector> random_even_frame(Gen& gen, std::size_t d) {
  if (d == 8) {
    IntVector x = gen.nonzero_vector(8, 4);
    const IntMatrix c = cayley_matrix(Octonion::from_vector(x));
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < 8; ++j) cols.push_back(c.column(j));
    return shuffle_coordinates(gen, cols);
  }
  if (d == 4) return shuffle_coordinates(gen, testing::random_frame(gen, 4, 6));
  // Blocks (a, b), (-b, a) repeated.
  const IntVector ab = gen.nonzero_vector(2, 12);
  std::vector<IntVector> rows;
  for (std::size_t off = 0; off < d; off += 2) {
    std::vector<Int> r1(d, 0), r2(d, 0);
    r1[off] = ab[0];
    r1[off + 1] = ab[1];
    r2[off] = -ab[1];
    r2[off + 1] = ab[0];
    rows.emplace_back(r1);
    rows.emplace_back(r2);
  }
  return shuffle_coordinates(gen, rows);
}

}  // namespace

TEST_CASE("codimension-one examples") {
  const auto a = codim1_complete(verify_ortho_set({{3, 4}}));
  CHECK(a.status == CompletionStatus::Completed);
  CHECK(a.added == std::vector<IntVector>{{-4, 3}});

  const std::vector<IntVector> rows{{4, 5, 6, 7}, {-7, -2, -3, 8}, {-5, -4, 9, -2}};
  const auto b = codim1_complete(verify_ortho_set(rows));
  CHECK(b.status == CompletionStatus::Completed);
  REQUIRE(b.added.size() == 1);
  CHECK((b.added[0] == IntVector{-6, 9, 0, -3} || b.added[0] == IntVector{6, -9, 0, 3}));
  CHECK(b.added[0] == codim1_oracle(rows, 126));

  const auto c = codim1_complete(verify_ortho_set({{2, 3, 6}, {3, -6, 2}}));
  CHECK(c.status == CompletionStatus::Completed);
  REQUIRE(c.added.size() == 1);
  CHECK((c.added[0] == IntVector{6, 2, -3} || c.added[0] == IntVector{-6, -2, 3}));

  const auto d = codim1_complete(verify_ortho_set({{1, 4, 10}, {-8, 7, -2}}));
  CHECK(d.status == CompletionStatus::Impossible);
  CHECK(d.reason == CompletionReason::NonSquareNormOddDim);
  CHECK(d.added.empty());

  CHECK_THROWS_AS(codim1_complete(verify_ortho_set({{1, 0, 0}})), Error);
}

TEST_CASE("codimension-one completion of random even-dimensional frames") {
  Gen gen(61);
  for (std::size_t d : {2u, 4u, 6u, 8u}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto frame = random_even_frame(gen, d);
      const IntVector dropped = frame[static_cast<std::size_t>(gen.uniform(0, static_cast<Int>(d) - 1))];
      frame.erase(std::find(frame.begin(), frame.end(), dropped));
      const OrthoSet s = verify_ortho_set(frame);
      const auto r = codim1_complete(s);
      REQUIRE(r.status == CompletionStatus::Completed);
      REQUIRE(r.added.size() == 1);
      REQUIRE((r.added[0] == dropped || r.added[0] == -dropped));
      REQUIRE(IntMatrix(with_added(s, r)).gram().is_scalar(s.squared_norm()));
      if (d <= 6) REQUIRE(r.added[0] == codim1_oracle(frame, checked_pow(s.squared_norm(), (d - 2) / 2)));
    }
  }
}

TEST_CASE("odd dimension with a non-square norm is impossible") {
  Gen gen(62);
  for (int trial = 0; trial < 50; ++trial) {
    // unit_frame norms are |q|^4; (v + w, v - w) has the non-square norm 2|q|^4.
    const auto frame = testing::random_frame(gen, 3, 4);
    const OrthoSet s3 = verify_ortho_set({frame[0] + frame[1], frame[0] - frame[1]});
    REQUIRE_FALSE(exact_sqrt(s3.squared_norm()).has_value());
    const auto r3 = codim1_complete(s3);
    REQUIRE(r3.status == CompletionStatus::Impossible);
    REQUIRE(r3.reason == CompletionReason::NonSquareNormOddDim);

    // Four vectors of Z^5 from a quaternion frame whose norm is not a square.
    auto four = testing::random_frame(gen, 4, 6);
    if (exact_sqrt(four[0].squared_norm())) continue;
    std::vector<IntVector> rows;
    for (const auto& v : four) rows.push_back(IntVector{v[0], v[1], v[2], v[3], 0});
    const auto r5 = codim1_complete(verify_ortho_set(rows));
    REQUIRE(r5.status == CompletionStatus::Impossible);
  }
}

TEST_CASE("three-dimensional completion") {
  const auto a = complete_d3({2, 3, 6});
  CHECK(a.status == CompletionStatus::Completed);
  REQUIRE(a.added.size() == 2);
  // Same frame as {(3,-6,2), (6,2,-3)} up to sign and order.
  for (const auto& v : a.added) {
    const bool match = v == IntVector{3, -6, 2} || v == IntVector{-3, 6, -2} || v == IntVector{6, 2, -3} ||
                       v == IntVector{-6, -2, 3};
    CHECK(match);
  }
  CHECK(a.added[0] != a.added[1]);
  CHECK(a.added[0] != -a.added[1]);

  const auto b = complete_d3({1, 3, 5});
  CHECK(b.status == CompletionStatus::Impossible);
  CHECK(b.reason == CompletionReason::NonSquareNormOddDim);

  const auto c = complete_d3({4, 6, 12});
  CHECK(c.status == CompletionStatus::Completed);
  CHECK(IntMatrix({IntVector{4, 6, 12}, c.added[0], c.added[1]}).gram().is_scalar(196));

  CHECK_THROWS_AS(complete_d3({0, 0, 0}), Error);
  CHECK_THROWS_AS(complete_d3({1, 2}), Error);
}

TEST_CASE("three-dimensional completion agrees with exhaustive search") {
  for (Int n = 1; n <= 400; ++n) {
    for (const auto& rep : enumerate_reps(n, 3)) {
      if (rep.is_zero()) continue;
      const auto r = complete_d3(rep);
      const bool exhaustive = exhaustive_basis_d3(rep).has_value();
      REQUIRE(exhaustive == (r.status == CompletionStatus::Completed));
      if (exhaustive) REQUIRE(IntMatrix({rep, r.added[0], r.added[1]}).gram().is_scalar(n));
    }
  }
}

TEST_CASE("four-dimensional completion of the 126 example") {
  const OrthoSet s = verify_ortho_set({{4, 5, 6, 7}, {-7, -2, -3, 8}});
  const auto r = complete_d4(s);
  CHECK(r.status == CompletionStatus::Completed);
  REQUIRE(r.added.size() == 2);
  CHECK(IntMatrix(with_added(s, r)).gram().is_scalar(126));

  const auto step = extend_pair_d4(s[0], s[1]);
  CHECK(step.ell.squared_norm() == step.q_denominator * step.q_denominator);
  CHECK(step.q_denominator % 2 == 1);
  CHECK(step.unit != step.other_unit);
  CHECK(dot(step.third, s[0]) == 0);
  CHECK(dot(step.third, s[1]) == 0);
  CHECK(step.third.squared_norm() == 126);
}

TEST_CASE("four-dimensional completion of every small orthogonal pair") {
  // Exhaustive over canonical first vectors and every orthogonal partner.
  int pairs = 0;
  for (Int n = 1; n <= 40; ++n) {
    for (const auto& v : enumerate_reps(n, 4)) {
      for (const auto& w : orthogonal_extensions({v}, n)) {
        const OrthoSet s = verify_ortho_set({v, w});
        const auto r = complete_d4(s);
        REQUIRE(r.status == CompletionStatus::Completed);
        REQUIRE(r.added.size() == 2);
        REQUIRE(IntMatrix(with_added(s, r)).gram().is_scalar(n));
        ++pairs;
      }
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("four-dimensional completion from one and three vectors") {
  Gen gen(63);
  for (int trial = 0; trial < 200; ++trial) {
    const IntVector v = gen.nonzero_vector(4, 30);
    const OrthoSet one = verify_ortho_set({v});
    const auto r1 = complete_d4(one);
    REQUIRE(r1.status == CompletionStatus::Completed);
    REQUIRE(IntMatrix(with_added(one, r1)).gram().is_scalar(v.squared_norm()));

    auto frame = testing::random_frame(gen, 4, 8);
    frame.pop_back();
    const OrthoSet three = verify_ortho_set(frame);
    const auto r3 = complete_d4(three);
    REQUIRE(r3.status == CompletionStatus::Completed);
    REQUIRE(r3.added.size() == 1);
  }
}

TEST_CASE("block constructions") {
  const OrthoSet four = extend_blocks(12, 7, BlockWidth::Four);
  CHECK(four.size() == 4);
  CHECK(four.dim() == 12);
  CHECK(four.squared_norm() == 7);

  const OrthoSet eight = extend_blocks(16, 11, BlockWidth::Eight, IntVector{1, 1, 3, 0, 0, 0, 0, 0});
  CHECK(eight.size() == 8);
  CHECK(eight.squared_norm() == 11);

  CHECK_THROWS_AS(extend_blocks(10, 7, BlockWidth::Four), Error);
  CHECK_THROWS_AS(extend_blocks(8, 7, BlockWidth::Four, IntVector{1, 1, 1, 1}), Error);
}

TEST_CASE("two-square obstruction in dimension 4k+2") {
  for (std::size_t d : {6u, 10u}) {
    for (Int n = 1; n <= 30; ++n) {
      const OrthoSet blocking = blocking_set_d4kplus2(d, n);
      REQUIRE(blocking.size() == d - 2);
      REQUIRE(blocking.squared_norm() == n);
      const auto obstruction = obstruction_d4kplus2(d, n);
      REQUIRE(obstruction.has_value() == !sum_two_squares(n));
      if (d == 6 && n <= 12) {
        // Exhaustive: no vector of Z^6 extends the blocking set when N is not a
        // sum of two squares.
        REQUIRE(orthogonal_extensions(blocking.vectors(), n).empty() == !sum_two_squares(n));
      }
    }
  }
  CHECK_THROWS_AS(blocking_set_d4kplus2(8, 3), Error);
}

TEST_CASE("dispatcher") {
  SUBCASE("already complete") {
    const auto r = complete(verify_ortho_set({{1, 0}, {0, 1}}));
    CHECK(r.status == CompletionStatus::Completed);
    CHECK(r.reason == CompletionReason::AlreadyComplete);
    CHECK(r.added.empty());
  }
  SUBCASE("odd dimension, non-square norm") {
    const auto r = complete(verify_ortho_set({{1, 4, 10}, {-8, 7, -2}}));
    CHECK(r.status == CompletionStatus::Impossible);
    CHECK(r.reason == CompletionReason::NonSquareNormOddDim);
    const auto r5 = complete(verify_ortho_set({{1, 1, 0, 0, 0}}));
    CHECK(r5.status == CompletionStatus::Impossible);
  }
  SUBCASE("dimension 3 and 4") {
    CHECK(complete(verify_ortho_set({{2, 3, 6}})).added.size() == 2);
    CHECK(complete(verify_ortho_set({{4, 5, 6, 7}, {-7, -2, -3, 8}})).added.size() == 2);
  }
  SUBCASE("dimension 8 from one vector") {
    const OrthoSet s = verify_ortho_set({{1, 2, 3, 4, 5, 6, 7, 8}});
    const auto r = complete(s);
    CHECK(r.status == CompletionStatus::Completed);
    CHECK(r.added.size() == 7);
    CHECK(IntMatrix(with_added(s, r)).gram().is_scalar(204));
  }
  SUBCASE("dimension 7 pairs") {
    const OrthoSet s = verify_ortho_set({{8, 8, 24, 64, 8, 8, 16}, {-9, 9, 9, -18, 18, 63, 18}});
    const auto r = complete(s);
    CHECK(r.status == CompletionStatus::PartiallyExtended);
    REQUIRE(r.added.size() == 1);
    CHECK(IntMatrix(with_added(s, r)).gram().is_scalar(5184));

    const OrthoSet chance = verify_ortho_set({{1, 1, 8, 17, 1, 1, 2}, {3, -1, -3, -1, -1, 4, 18}});
    const auto rc = complete(chance);
    CHECK(rc.status == CompletionStatus::PartiallyExtended);
    CHECK(rc.added == std::vector<IntVector>{{9, 3, 3, -1, -16, 1, -2}});
  }
  SUBCASE("dimension 8 triples") {
    const OrthoSet s = verify_ortho_set({{12, -24, -12, 12, -24, 24, -36, 12},
                                         {30, 15, -15, -15, -15, -30, 0, 30},
                                         {40, 20, 20, 20, 20, 20, 0, 0}});
    const auto r = complete(s);
    CHECK(r.status == CompletionStatus::PartiallyExtended);
    CHECK(r.added == std::vector<IntVector>{{2, 0, -33, -27, 26, 30, 9, 11}});
  }
  SUBCASE("multiples of four from one vector") {
    const OrthoSet s = verify_ortho_set({{1, 2, 3, 4, 1, 0, 0, 1, 2, 2, 0, 0}});
    const auto r = complete(s);
    CHECK(r.status == CompletionStatus::PartiallyExtended);
    CHECK(r.added.size() == 3);
    const OrthoSet s16 = verify_ortho_set({IntVector(std::vector<Int>(16, 1))});
    CHECK(complete(s16).added.size() == 7);
  }
  SUBCASE("unsupported") {
    const auto r = complete(verify_ortho_set({{1, 2, 3, 4, 5, 6}}));
    CHECK(r.status == CompletionStatus::NotSupported);
    CHECK(r.reason == CompletionReason::NoConstruction);
  }
  CHECK(status_name(CompletionStatus::PartiallyExtended) == "partially_extended");
  CHECK(reason_name(CompletionReason::TwoSquareObstruction) == "TwoSquareObstruction");
}
