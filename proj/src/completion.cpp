#include "ortho/completion.hpp"

#include "ortho/census.hpp"
#include "ortho/octonion.hpp"

namespace ortho {

std::string_view status_name(CompletionStatus s) noexcept {
  switch (s) {
    case CompletionStatus::Completed: return "completed";
    case CompletionStatus::PartiallyExtended: return "partially_extended";
    case CompletionStatus::Impossible: return "impossible";
    case CompletionStatus::NotSupported: return "not_supported";
  }
  return "unknown";
}

std::string_view reason_name(CompletionReason r) noexcept {
  switch (r) {
    case CompletionReason::None: return "None";
    case CompletionReason::AlreadyComplete: return "AlreadyComplete";
    case CompletionReason::NonSquareNormOddDim: return "NonSquareNormOddDim";
    case CompletionReason::TwoSquareObstruction: return "TwoSquareObstruction";
    case CompletionReason::NoConstruction: return "NoConstruction";
  }
  return "Unknown";
}

namespace {

// Re-validates input + added and packages the result.
CompletionResult extended(const OrthoSet& s, std::vector<IntVector> added, CompletionStatus status,
                          CompletionReason reason = CompletionReason::None) {
  std::vector<IntVector> all = s.vectors();
  all.insert(all.end(), added.begin(), added.end());
  try {
    const OrthoSet check = verify_ortho_set(std::move(all));
    if (check.squared_norm() != s.squared_norm()) internal_failure("extension changed the norm");
    if (status == CompletionStatus::Completed && check.size() != s.dim()) {
      internal_failure("completed set does not have full cardinality");
    }
  } catch (const Error& e) {
    if (e.code() == Errc::InternalFailure) throw;
    internal_failure(std::string("constructed extension is not an orthogonal set: ") + e.what());
  }
  return {status, std::move(added), reason, {}};
}

CompletionResult impossible_odd(const OrthoSet& s) {
  return {CompletionStatus::Impossible, {}, CompletionReason::NonSquareNormOddDim,
          "dimension " + std::to_string(s.dim()) + " is odd and N = " + std::to_string(s.squared_norm()) +
              " is not a perfect square"};
}

CompletionResult not_supported(const OrthoSet& s) {
  return {CompletionStatus::NotSupported, {}, CompletionReason::NoConstruction,
          "no construction for " + std::to_string(s.size()) + " vectors in dimension " +
              std::to_string(s.dim())};
}

IntVector embed_block(const IntVector& block, std::size_t d, std::size_t offset) {
  std::vector<Int> c(d, 0);
  for (std::size_t j = 0; j < block.dim(); ++j) c[offset + j] = block[j];
  return IntVector(std::move(c));
}

IntVector slice(const IntVector& v, std::size_t offset, std::size_t len) {
  return IntVector(std::vector<Int>(v.begin() + static_cast<std::ptrdiff_t>(offset),
                                    v.begin() + static_cast<std::ptrdiff_t>(offset + len)));
}

// Frames of a single vector built blockwise: the j-th output applies the j-th
// unit (quaternion left units or octonion columns) to every block of v.
std::vector<IntVector> blockwise_frame(const IntVector& v, BlockWidth width) {
  const auto w = static_cast<std::size_t>(width);
  const std::size_t d = v.dim();
  std::vector<std::vector<Int>> out(w, std::vector<Int>(d, 0));
  for (std::size_t off = 0; off < d; off += w) {
    const IntVector block = slice(v, off, w);
    std::vector<IntVector> frame;
    if (width == BlockWidth::Four) {
      frame.push_back(block);
      for (auto& u : left_unit_frame_d4(block)) frame.push_back(u);
    } else {
      const IntMatrix c = cayley_matrix(Octonion::from_vector(block));
      for (std::size_t j = 0; j < 8; ++j) frame.push_back(c.column(j));
    }
    for (std::size_t k = 0; k < w; ++k) {
      for (std::size_t j = 0; j < w; ++j) out[k][off + j] = frame[k][j];
    }
  }
  std::vector<IntVector> vecs;
  for (auto& c : out) vecs.emplace_back(std::move(c));
  return vecs;
}

std::vector<Int> divisors(Int m) {
  std::vector<Int> small, large;
  for (Int k = 1; k * k <= m; ++k) {
    if (m % k == 0) {
      small.push_back(k);
      if (k != m / k) large.push_back(m / k);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<IntVector> try_d7_pair(const OrthoSet& s) {
  const auto m = exact_sqrt(s.squared_norm());
  if (!m) return std::nullopt;
  const Int c1 = s[0].content();
  const Int c2 = s[1].content();
  for (Int k1 : divisors(*m)) {
    const Int k2 = *m / k1;
    if (c1 % k1 == 0 && c2 % k2 == 0) return complete_d7_pair(s[0], s[1], k1, k2);
  }
  return complete_d7_by_chance(s[0], s[1]);
}

std::optional<IntVector> try_d8_triple(const OrthoSet& s) {
  const Int n = s.squared_norm();
  const Int c1 = s[0].content(), c2 = s[1].content(), c3 = s[2].content();
  for (Int k1 : divisors(n)) {
    if (c1 % k1 != 0) continue;
    for (Int k2 : divisors(n / k1)) {
      const Int k3 = n / k1 / k2;
      if (c2 % k2 == 0 && c3 % k3 == 0) return complete_d8_triple(s[0], s[1], s[2], k1, k2, k3);
    }
  }
  return std::nullopt;
}

}  // namespace

CompletionResult codim1_complete(const OrthoSet& s) {
  const std::size_t d = s.dim();
  if (s.size() + 1 != d) {
    throw Error(Errc::InvalidArgument, "codim1_complete needs d-1 = " + std::to_string(d - 1) + " vectors, got " +
                                           std::to_string(s.size()));
  }
  const Int n = s.squared_norm();
  Int divisor;
  if (d % 2 == 0) {
    divisor = checked_pow(n, static_cast<unsigned>((d - 2) / 2));
  } else {
    const auto root = exact_sqrt(n);
    if (!root) return impossible_odd(s);
    divisor = checked_pow(*root, static_cast<unsigned>(d - 2));
  }
  const IntMatrix m = s.as_matrix();
  std::vector<Int> w(d);
  for (std::size_t j = 0; j < d; ++j) {
    const Int minor = determinant(delete_column(m, j));
    if (minor % divisor != 0) {
      internal_failure("maximal minor " + std::to_string(minor) + " is not divisible by N^((d-2)/2) = " +
                       std::to_string(divisor));
    }
    const Int q = minor / divisor;
    w[j] = (j % 2 == 0) ? checked_neg(q) : q;  // (-1)^j with 1-based j
  }
  return extended(s, {IntVector(std::move(w))}, CompletionStatus::Completed);
}

CompletionResult complete_d3(const IntVector& v) {
  if (v.dim() != 3) throw Error(Errc::DimensionMismatch, "complete_d3 needs a vector of Z^3");
  if (v.is_zero()) throw Error(Errc::ZeroInput, "complete_d3 of the zero vector");
  const OrthoSet s = verify_ortho_set({v});
  if (!exact_sqrt(s.squared_norm())) return impossible_odd(s);

  const Int g = v.content();
  const IntVector primitive = v.divided_exact(g);
  const auto [q, unit] = pythagorean_param(primitive);
  const OrthoSet frame = unit_frame(q);
  std::vector<IntVector> added;
  for (std::size_t k = 0; k < 3; ++k) {
    if (kPureUnits[k] == unit) {
      if (frame[k] != primitive) internal_failure("quaternion frame does not contain the input direction");
    } else {
      added.push_back(frame[k].scaled(g));
    }
  }
  return extended(s, std::move(added), CompletionStatus::Completed);
}

std::vector<IntVector> left_unit_frame_d4(const IntVector& v) {
  const Quaternion q = Quaternion::from_vector(v);
  return {(Quaternion::i() * q).to_vector(), (Quaternion::j() * q).to_vector(),
          (Quaternion::k() * q).to_vector()};
}

D4PairStep extend_pair_d4(const IntVector& v, const IntVector& w) {
  const OrthoSet s = verify_ortho_set({v, w});
  if (s.dim() != 4) throw Error(Errc::DimensionMismatch, "extend_pair_d4 works in Z^4");
  const Int n = s.squared_norm();
  const auto frame = left_unit_frame_d4(v);

  // w = sum_j (w . f_j / N) f_j since {v, iv, jv, kv} is an orthogonal basis.
  const IntVector raw{dot(w, frame[0]), dot(w, frame[1]), dot(w, frame[2])};
  const Int g = raw.content();
  if (g == 0 || n % g != 0) internal_failure("frame coordinates of w are inconsistent with its norm");
  const IntVector ell = raw.divided_exact(g);
  const Int q_den = n / g;
  if (ell.squared_norm() != checked_mul(q_den, q_den)) {
    internal_failure("frame coordinates of w do not satisfy l1^2 + l2^2 + l3^2 = Q^2");
  }
  if (q_den % 2 == 0) internal_failure("denominator Q is even for a primitive l");

  const auto [q, unit] = pythagorean_param(ell);
  PureUnit other = PureUnit::I;
  for (PureUnit u : kPureUnits) {
    if (u != unit) {
      other = u;
      break;
    }
  }
  const IntVector k = pure_part(q * as_quaternion(other) * q.conj());
  const IntVector numerator = frame[0].scaled(k[0]) + frame[1].scaled(k[1]) + frame[2].scaled(k[2]);
  if (!numerator.divisible_by(q_den)) {
    internal_failure("(k1 a + k2 b + k3 c) is not divisible by Q; the Bezout divisibility argument failed");
  }
  return {ell, q_den, q, unit, other, numerator.divided_exact(q_den)};
}

CompletionResult complete_d4(const OrthoSet& s) {
  if (s.dim() != 4) throw Error(Errc::DimensionMismatch, "complete_d4 needs vectors of Z^4");
  switch (s.size()) {
    case 1:
      return extended(s, left_unit_frame_d4(s[0]), CompletionStatus::Completed);
    case 2: {
      const IntVector third = extend_pair_d4(s[0], s[1]).third;
      const OrthoSet three = verify_ortho_set({s[0], s[1], third});
      CompletionResult last = codim1_complete(three);
      return extended(s, {third, last.added.front()}, CompletionStatus::Completed);
    }
    case 3:
      return codim1_complete(s);
    default:
      return {CompletionStatus::Completed, {}, CompletionReason::AlreadyComplete, "already a basis"};
  }
}

OrthoSet extend_blocks(std::size_t d, Int n, BlockWidth width, std::optional<IntVector> seed) {
  const auto w = static_cast<std::size_t>(width);
  if (d == 0 || d % w != 0) {
    throw Error(Errc::InvalidArgument, "dimension " + std::to_string(d) + " is not a multiple of " +
                                           std::to_string(w));
  }
  if (n <= 0) throw Error(Errc::InvalidArgument, "squared norm must be positive");
  if (!seed) {
    const auto reps = enumerate_reps(n, w);
    if (reps.empty()) {
      throw Error(Errc::PreconditionFailed, std::to_string(n) + " is not a sum of " + std::to_string(w) + " squares");
    }
    seed = reps.front();
  }
  if (seed->dim() != w || seed->squared_norm() != n) {
    throw Error(Errc::InvalidArgument, "seed " + to_string(*seed) + " does not have dimension " +
                                           std::to_string(w) + " and squared norm " + std::to_string(n));
  }
  std::vector<IntVector> out;
  for (const auto& f : blockwise_frame(*seed, width)) out.push_back(embed_block(f, d, 0));
  return verify_ortho_set(std::move(out));
}

OrthoSet blocking_set_d4kplus2(std::size_t d, Int n) {
  if (d < 6 || d % 4 != 2) throw Error(Errc::InvalidArgument, "dimension must be 4k+2 with k >= 1");
  if (n <= 0) throw Error(Errc::InvalidArgument, "squared norm must be positive");
  const auto reps = enumerate_reps(n, 4);
  if (reps.empty()) internal_failure("no four-square representation of " + std::to_string(n));
  std::vector<IntVector> frame{reps.front()};
  for (auto& u : left_unit_frame_d4(reps.front())) frame.push_back(u);
  std::vector<IntVector> out;
  for (std::size_t off = 0; off + 2 < d; off += 4) {
    for (const auto& f : frame) out.push_back(embed_block(f, d, off));
  }
  return verify_ortho_set(std::move(out));
}

std::optional<OrthoSet> obstruction_d4kplus2(std::size_t d, Int n) {
  OrthoSet blocking = blocking_set_d4kplus2(d, n);
  if (sum_two_squares(n)) return std::nullopt;
  return blocking;
}

CompletionResult complete(const OrthoSet& s) {
  const std::size_t d = s.dim();
  const std::size_t n1 = s.size();
  if (n1 == d) return {CompletionStatus::Completed, {}, CompletionReason::AlreadyComplete, "already a basis"};
  if (d % 2 == 1 && !exact_sqrt(s.squared_norm())) return impossible_odd(s);
  if (n1 + 1 == d) return codim1_complete(s);
  if (d == 3) return complete_d3(s[0]);
  if (d == 4) return complete_d4(s);
  if (d == 8 && n1 == 1) {
    auto frame = blockwise_frame(s[0], BlockWidth::Eight);
    frame.erase(frame.begin());
    return extended(s, std::move(frame), CompletionStatus::Completed);
  }
  if (d == 7 && n1 == 2) {
    if (auto u = try_d7_pair(s)) return extended(s, {*u}, CompletionStatus::PartiallyExtended);
    return not_supported(s);
  }
  if (d == 8 && n1 == 3) {
    if (auto w = try_d8_triple(s)) return extended(s, {*w}, CompletionStatus::PartiallyExtended);
    return not_supported(s);
  }
  if (n1 == 1 && d % 4 == 0) {
    auto frame = blockwise_frame(s[0], d % 8 == 0 ? BlockWidth::Eight : BlockWidth::Four);
    frame.erase(frame.begin());
    return extended(s, std::move(frame), CompletionStatus::PartiallyExtended);
  }
  return not_supported(s);
}

}  // namespace ortho
