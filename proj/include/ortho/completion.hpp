#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ortho/intvec.hpp"
#include "ortho/quaternion.hpp"

namespace ortho {

enum class CompletionStatus { Completed, PartiallyExtended, Impossible, NotSupported };

enum class CompletionReason {
  None,
  AlreadyComplete,
  NonSquareNormOddDim,   // an odd-dimensional full basis needs a square norm
  TwoSquareObstruction,  // d = 4k+2 blocking set and N not a sum of two squares
  NoConstruction,        // no constructive result covers this input
};

std::string_view status_name(CompletionStatus s) noexcept;
std::string_view reason_name(CompletionReason r) noexcept;

struct CompletionResult {
  CompletionStatus status = CompletionStatus::NotSupported;
  std::vector<IntVector> added;
  CompletionReason reason = CompletionReason::None;
  std::string detail;
};

// Completes d-1 vectors by w_j = (-1)^j N^((2-d)/2) det(M_(j)) (1-based j).
// Odd d needs a square N; otherwise the result is Impossible.
CompletionResult codim1_complete(const OrthoSet& s);

// Extends a nonzero v in Z^3 to a basis through the quaternion frame of its
// primitive part; Impossible when |v|^2 is not a square.
CompletionResult complete_d3(const IntVector& v);

// The coordinates of i v, j v, k v for v = v1 + v2 i + v3 j + v4 k.
std::vector<IntVector> left_unit_frame_d4(const IntVector& v);

// Intermediate data of the two-vector step in Z^4, exposed for testing.
struct D4PairStep {
  IntVector ell;  // primitive coordinates of w in the frame (iv, jv, kv), times Q
  Int q_denominator;
  Quaternion q;
  PureUnit unit;
  PureUnit other_unit;
  IntVector third;  // new vector orthogonal to v and w
};

D4PairStep extend_pair_d4(const IntVector& v, const IntVector& w);

// Always Completed for 1, 2 or 3 input vectors in Z^4.
CompletionResult complete_d4(const OrthoSet& s);

enum class BlockWidth { Four = 4, Eight = 8 };

// An OrthoSet of `width` vectors in Z^d supported on the first block, built
// from a seed of squared norm N (quaternion left units or octonion columns).
// Without a seed the first canonical representation of N is used.
OrthoSet extend_blocks(std::size_t d, Int n, BlockWidth width, std::optional<IntVector> seed = std::nullopt);

// The d-2 vectors for d = 4k+2 made of k four-dimensional frames of norm N on
// the leading coordinates; their orthogonal complement is the last two axes.
OrthoSet blocking_set_d4kplus2(std::size_t d, Int n);

// The blocking set when it certifies N is not in C_d(d-2, d-1), i.e. when N is
// not a sum of two squares; nullopt otherwise.
std::optional<OrthoSet> obstruction_d4kplus2(std::size_t d, Int n);

// Dispatches on dimension and cardinality to the constructions above.
CompletionResult complete(const OrthoSet& s);

}  // namespace ortho
