#include "ortho/clifford.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace ortho {

namespace {

void require_n(unsigned n) {
  if (n < 1 || n > kMaxCliffordN) {
    throw Error(Errc::InvalidArgument, "Clifford index n = " + std::to_string(n) + " outside [1, " +
                                           std::to_string(kMaxCliffordN) + "]");
  }
}

void require_same_n(const BitVec& a, const BitVec& b) {
  if (a.n() != b.n()) throw Error(Errc::DimensionMismatch, "bit vectors of different lengths");
}

void require_even(const BitVec& v) {
  if (!v.is_even()) throw Error(Errc::InvalidArgument, to_string(v) + " has odd weight");
}

BitVec even_word(unsigned n, std::size_t index) {
  const auto w = static_cast<std::uint32_t>(index << 1);
  return BitVec(n, w | static_cast<std::uint32_t>(std::popcount(w) & 1));
}

}  // namespace

BitVec::BitVec(unsigned n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n == 0 || n > 31) throw Error(Errc::InvalidArgument, "bit vector length must be in [1, 31]");
  if (bits >> n) throw Error(Errc::InvalidArgument, "bits set beyond the vector length");
}

BitVec BitVec::from_coords(std::initializer_list<int> coords) {
  return from_coords(std::vector<int>(coords));
}

BitVec BitVec::from_coords(const std::vector<int>& coords) {
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] != 0 && coords[j] != 1) throw Error(Errc::InvalidArgument, "bit coordinates must be 0 or 1");
    bits |= static_cast<std::uint32_t>(coords[j]) << j;
  }
  return BitVec(static_cast<unsigned>(coords.size()), bits);
}

unsigned BitVec::weight() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }

BitVec operator+(const BitVec& a, const BitVec& b) {
  require_same_n(a, b);
  return BitVec(a.n_, a.bits_ ^ b.bits_);
}

int dot_mod2(const BitVec& a, const BitVec& b) {
  require_same_n(a, b);
  return std::popcount(a.bits_ & b.bits_) & 1;
}

std::string to_string(const BitVec& v) {
  std::string s(v.n(), '0');
  for (unsigned j = 0; j < v.n(); ++j) s[j] = v.coord(j) ? '1' : '0';
  return s;
}

std::vector<BitVec> even_subspace(unsigned n) {
  require_n(n);
  std::vector<BitVec> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (std::size_t idx = 0; idx < (std::size_t{1} << (n - 1)); ++idx) out.push_back(even_word(n, idx));
  return out;
}

// Among the words 2m and 2m+1 exactly one has even weight.
std::size_t basis_index(const BitVec& v) {
  require_even(v);
  return v.bits() >> 1;
}

CliffordElement::CliffordElement(unsigned n, std::vector<Int> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  require_n(n);
  if (coeffs_.size() != (std::size_t{1} << (n - 1))) {
    throw Error(Errc::DimensionMismatch, "E_" + std::to_string(n) + " has dimension " +
                                             std::to_string(std::size_t{1} << (n - 1)));
  }
}

CliffordElement CliffordElement::basis(const BitVec& a) {
  require_n(a.n());
  std::vector<Int> c(std::size_t{1} << (a.n() - 1), 0);
  c[basis_index(a)] = 1;
  return CliffordElement(a.n(), std::move(c));
}

CliffordElement CliffordElement::one(unsigned n) { return basis(BitVec(n, 0)); }

bool CliffordElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

int s_parity(const BitVec& v) {
  require_even(v);
  return static_cast<int>((v.weight() / 2) % 2);
}

int sign_S(const BitVec& a, const BitVec& b) {
  require_same_n(a, b);
  unsigned parity = 0;
  for (unsigned j = 0; j < a.n(); ++j) {
    if (a.coord(j)) {
      const std::uint32_t prefix = (j == 31) ? ~0u : ((1u << (j + 1)) - 1);
      parity ^= static_cast<unsigned>(std::popcount(b.bits() & prefix)) & 1u;
    }
  }
  return parity ? -1 : 1;
}

CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y) {
  if (x.n() != y.n()) throw Error(Errc::DimensionMismatch, "Clifford elements of different n");
  const unsigned n = x.n();
  std::vector<Int> out(x.coeffs().size(), 0);
  for (std::size_t ia = 0; ia < x.coeffs().size(); ++ia) {
    const Int xa = x.coeffs()[ia];
    if (xa == 0) continue;
    const BitVec a = even_word(n, ia);
    for (std::size_t ib = 0; ib < y.coeffs().size(); ++ib) {
      const Int yb = y.coeffs()[ib];
      if (yb == 0) continue;
      const BitVec b = even_word(n, ib);
      const Int term = checked_mul(xa, yb);
      auto& slot = out[basis_index(a + b)];
      slot = sign_S(a, b) > 0 ? checked_add(slot, term) : checked_sub(slot, term);
    }
  }
  return CliffordElement(n, std::move(out));
}

bool v0_condition(const BitVec& u, const BitVec& v) {
  require_same_n(u, v);
  if (u == v) throw Error(Errc::InvalidArgument, "V0 condition needs distinct vectors, got " + to_string(u) + " twice");
  return ((s_parity(u) + s_parity(v) + dot_mod2(u, v)) & 1) == 1;
}

OrthoSet orthogonal_family(const CliffordElement& e, const std::vector<BitVec>& v0) {
  if (v0.empty()) throw Error(Errc::EmptyInput, "empty V0");
  if (e.is_zero()) throw Error(Errc::ZeroInput, "orthogonal_family of the zero element");
  for (std::size_t i = 0; i < v0.size(); ++i) {
    if (v0[i].n() != e.n()) throw Error(Errc::DimensionMismatch, "V0 member of the wrong length");
    require_even(v0[i]);
    for (std::size_t j = i + 1; j < v0.size(); ++j) {
      if (v0[i] == v0[j] || !v0_condition(v0[i], v0[j])) {
        throw Error(Errc::InvalidArgument, "V0 pair " + to_string(v0[i]) + ", " + to_string(v0[j]) +
                                               " violates the parity condition", i, j);
      }
    }
  }
  std::vector<IntVector> rows;
  rows.reserve(v0.size());
  for (const auto& v : v0) rows.push_back(clifford_mul(e, CliffordElement::basis(v)).to_vector());
  return verify_ortho_set(std::move(rows));
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::vector<bool>> adj) : adj_(std::move(adj)) {}

  std::size_t max_size() {
    std::vector<int> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    best_ = 0;
    std::vector<int> current;
    expand(current, all);
    return best_;
  }

  // First clique of the given size in lexicographic order of sorted vertex lists.
  std::vector<int> lex_first(std::size_t size) {
    std::vector<int> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> current;
    if (!find_first(current, all, size)) internal_failure("clique of the reported maximum size not found");
    return current;
  }

 private:
  // Greedy sequential coloring; returns vertices ordered by color with the
  // color count of each prefix (the usual MCQ bound).
  void color_sort(const std::vector<int>& p, std::vector<int>& order, std::vector<std::size_t>& bound) const {
    std::vector<std::vector<int>> classes;
    for (int v : p) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int u : classes[c]) {
          if (adj_[v][u]) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    order.clear();
    bound.clear();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        order.push_back(v);
        bound.push_back(c + 1);
      }
    }
  }

  std::size_t color_count(const std::vector<int>& p) const {
    std::vector<int> order;
    std::vector<std::size_t> bound;
    color_sort(p, order, bound);
    return bound.empty() ? 0 : bound.back();
  }

  std::vector<int> neighbours_in(int v, const std::vector<int>& p) const {
    std::vector<int> out;
    for (int u : p) {
      if (adj_[v][u]) out.push_back(u);
    }
    return out;
  }

  void expand(std::vector<int>& r, std::vector<int> p) {
    std::vector<int> order;
    std::vector<std::size_t> bound;
    color_sort(p, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (r.size() + bound[idx] <= best_) return;
      const int v = order[idx];
      r.push_back(v);
      std::vector<int> rest(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(idx));
      std::vector<int> next = neighbours_in(v, rest);
      if (next.empty()) {
        best_ = std::max(best_, r.size());
      } else {
        expand(r, std::move(next));
      }
      r.pop_back();
    }
  }

  bool find_first(std::vector<int>& r, const std::vector<int>& p, std::size_t target) {
    if (r.size() == target) return true;
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
      if (r.size() + (p.size() - idx) < target) return false;
      const int v = p[idx];
      std::vector<int> later(p.begin() + static_cast<std::ptrdiff_t>(idx) + 1, p.end());
      std::vector<int> next = neighbours_in(v, later);
      if (r.size() + 1 + color_count(next) < target) continue;
      r.push_back(v);
      if (find_first(r, next, target)) return true;
      r.pop_back();
    }
    return false;
  }

  std::vector<std::vector<bool>> adj_;
  std::size_t best_ = 0;
};

}  // namespace

std::vector<BitVec> search_max_v0(unsigned n) {
  if (n < 3 || n > kMaxCliffordN) {
    throw Error(Errc::InvalidArgument, "search_max_v0 supports 3 <= n <= " + std::to_string(kMaxCliffordN));
  }
  // The condition is invariant under translation v -> v + w inside V, so some
  // maximum V0 contains 0, and the lexicographically smallest one always does.
  // Searching the neighbourhood of 0 is therefore exhaustive.
  const BitVec zero(n, 0);
  std::vector<BitVec> candidates;
  for (const auto& v : even_subspace(n)) {
    if (v != zero && v0_condition(zero, v)) candidates.push_back(v);
  }
  std::vector<std::vector<bool>> adj(candidates.size(), std::vector<bool>(candidates.size(), false));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      adj[i][j] = adj[j][i] = v0_condition(candidates[i], candidates[j]);
    }
  }
  CliqueSearch search(std::move(adj));
  const std::size_t size = search.max_size();
  std::vector<BitVec> out{zero};
  if (size > 0) {
    for (int idx : search.lex_first(size)) out.push_back(candidates[static_cast<std::size_t>(idx)]);
  }
  return out;
}

}  // namespace ortho
