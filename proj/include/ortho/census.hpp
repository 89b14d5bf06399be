#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ortho/intvec.hpp"

namespace ortho {

// Search caps. Any request above them throws Errc::BudgetExceeded.
struct CensusBudget {
  Int max_norm = 5000;        // d <= 8 enumeration and d = 3 classification
  Int max_probe_norm = 1000;  // partner search in d = 7 probes
};

// Largest N not divisible by 4 with exactly one canonical three-square
// representation.
constexpr Int kLargestSingleRepresentation = 427;

// Canonical representatives (nonnegative, ascending) of all x in Z^d with
// |x|^2 = N, in ascending lexicographic order.
std::vector<IntVector> enumerate_reps(Int n, std::size_t d, const CensusBudget& budget = {});

// Every vector of Z^d with |x|^2 = N (all signs and orders), sorted.
std::vector<IntVector> all_vectors_of_norm(Int n, std::size_t d, const CensusBudget& budget = {});

// Some w in Z^3 with w.v = 0 and |w| = |v|, or nullopt after an exhaustive scan.
std::optional<IntVector> find_partner(const IntVector& v, const CensusBudget& budget = {});

// Exhaustive search for an equal-norm orthogonal basis {v, w, x} of Z^3. Used
// as an oracle independent of the quaternion construction.
std::optional<std::array<IntVector, 2>> exhaustive_basis_d3(const IntVector& v,
                                                            const CensusBudget& budget = {});

// Every vector of Z^d with norm N orthogonal to all of `set` (exhaustive).
std::vector<IntVector> orthogonal_extensions(const std::vector<IntVector>& set, Int n,
                                             const CensusBudget& budget = {});

struct CensusWitness {
  std::optional<IntVector> partner;                  // nullopt: exhaustively none
  std::optional<std::array<IntVector, 2>> completion;  // only for square N
};

struct CensusReport {
  Int n = 0;
  std::size_t dim = 3;
  std::vector<IntVector> reps_canonical;
  bool in_c3_12 = false;
  bool in_c3_13 = false;
  std::map<IntVector, CensusWitness> witnesses;
  bool trivial = false;  // at most one canonical representation
};

struct ClassifyOptions {
  CensusBudget budget{};
  // Also run exhaustive_basis_d3 on every representative and require it to
  // agree with the constructive answer (InternalFailure otherwise).
  bool cross_check = false;
};

CensusReport classify_n_d3(Int n, const ClassifyOptions& options = {});

// Non-trivial N < limit lying in C3(1,2) but not in C3(1,3), ascending. The
// result does not depend on `threads`.
std::vector<Int> difference_set_d3(Int limit, const CensusBudget& budget = {}, unsigned threads = 1);

// Trial-division test: no prime q = 3 mod 4 divides N to an odd power.
bool sum_two_squares(Int n);

struct CuriousReport {
  Int limit = 0;
  std::size_t norms_with_pairs = 0;     // N with a nonempty O3(N, 2)
  std::vector<Int> violations;          // such N that are not a sum of two squares
  std::size_t obstructed_norms = 0;     // N with a prime 4k+3 to an odd power
  std::vector<Int> obstructed_with_pairs;  // such N that still have a pair
};

// Checks, for every 1 <= N < limit, that an orthogonal equal-norm pair in Z^3
// forces N to be a sum of two squares.
CuriousReport verify_curious(Int limit, const CensusBudget& budget = {}, unsigned threads = 1);

// Does O3(N, 2) contain a set? Decided by exhaustive partner search.
bool has_orthogonal_pair_d3(Int n, const CensusBudget& budget = {});

}  // namespace ortho
