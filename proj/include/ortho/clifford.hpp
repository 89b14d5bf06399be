#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ortho/intvec.hpp"

namespace ortho {

constexpr unsigned kMaxCliffordN = 12;

// A vector of F_2^n. Coordinate v_j (1-based) is bit j-1 of the word, so the
// numeric order of words is the basis order used for coordinates.
class BitVec {
 public:
  BitVec(unsigned n, std::uint32_t bits);
  // Coordinates (v_1, ..., v_n), each 0 or 1.
  static BitVec from_coords(std::initializer_list<int> coords);
  static BitVec from_coords(const std::vector<int>& coords);

  unsigned n() const noexcept { return n_; }
  std::uint32_t bits() const noexcept { return bits_; }
  int coord(unsigned j) const { return static_cast<int>((bits_ >> j) & 1u); }
  unsigned weight() const noexcept;
  bool is_even() const noexcept { return weight() % 2 == 0; }

  friend BitVec operator+(const BitVec& a, const BitVec& b);
  // Standard inner product mod 2.
  friend int dot_mod2(const BitVec& a, const BitVec& b);

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec& a, const BitVec& b) = default;

 private:
  unsigned n_;
  std::uint32_t bits_;
};

std::string to_string(const BitVec& v);

// The even-weight subspace V of F_2^n in numeric order; |V| = 2^(n-1).
std::vector<BitVec> even_subspace(unsigned n);

// Position of an even-weight word in even_subspace(n).
std::size_t basis_index(const BitVec& v);

// Element of the even subalgebra E_n: dense integer coordinates over the
// basis {e_a : a in V} in even_subspace order.
class CliffordElement {
 public:
  CliffordElement(unsigned n, std::vector<Int> coeffs);
  static CliffordElement basis(const BitVec& a);
  static CliffordElement one(unsigned n);

  unsigned n() const noexcept { return n_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  Int coeff(const BitVec& a) const { return coeffs_.at(basis_index(a)); }
  bool is_zero() const noexcept;
  IntVector to_vector() const { return IntVector(coeffs_); }

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  unsigned n_;
  std::vector<Int> coeffs_;
};

// (weight / 2) mod 2 for an even-weight v.
int s_parity(const BitVec& v);

// (-1)^(sum_j sum_{k<=j} a_j b_k).
int sign_S(const BitVec& a, const BitVec& b);

// Bilinear extension of e_a e_b = S(a, b) e_{a+b}.
CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y);

// s(u) + s(v) + u.v is odd.
bool v0_condition(const BitVec& u, const BitVec& v);

// Coordinate vectors of e e_v for v in V0, as a validated OrthoSet with
// N = |e|^2.
OrthoSet orthogonal_family(const CliffordElement& e, const std::vector<BitVec>& v0);

// Lexicographically smallest maximum-cardinality V0 for 3 <= n <= 12.
std::vector<BitVec> search_max_v0(unsigned n);

}  // namespace ortho
