#include "ortho/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "ortho/completion.hpp"

namespace ortho {

namespace {

void check_budget(Int n, Int cap, const char* what) {
  if (n < 0) throw Error(Errc::InvalidArgument, std::string(what) + ": negative norm");
  if (n > cap) {
    throw Error(Errc::BudgetExceeded, std::string(what) + ": N = " + std::to_string(n) + " exceeds the budget " +
                                          std::to_string(cap));
  }
}

void collect_reps(Int rem, std::size_t slots, Int floor, std::vector<Int>& prefix, std::vector<IntVector>& out) {
  if (slots == 0) {
    if (rem == 0) out.emplace_back(prefix);
    return;
  }
  if (slots == 1) {
    const auto r = exact_sqrt(rem);
    if (r && *r >= floor) {
      prefix.push_back(*r);
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (Int c = floor; static_cast<Int>(slots) * c * c <= rem; ++c) {
    prefix.push_back(c);
    collect_reps(rem - c * c, slots - 1, c, prefix, out);
    prefix.pop_back();
  }
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<IntVector> enumerate_reps(Int n, std::size_t d, const CensusBudget& budget) {
  if (d < 1 || d > 8) throw Error(Errc::InvalidArgument, "enumerate_reps supports 1 <= d <= 8");
  check_budget(n, budget.max_norm, "enumerate_reps");
  std::vector<IntVector> out;
  std::vector<Int> prefix;
  collect_reps(n, d, 0, prefix, out);
  return out;
}

std::vector<IntVector> all_vectors_of_norm(Int n, std::size_t d, const CensusBudget& budget) {
  std::set<IntVector> seen;
  for (const auto& rep : enumerate_reps(n, d, budget)) {
    std::vector<Int> c(rep.begin(), rep.end());
    do {
      const std::size_t nonzero = static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Int x) { return x != 0; }));
      for (std::uint32_t mask = 0; mask < (1u << nonzero); ++mask) {
        std::vector<Int> s = c;
        std::size_t bit = 0;
        for (auto& x : s) {
          if (x != 0) {
            if (mask >> bit & 1u) x = -x;
            ++bit;
          }
        }
        seen.emplace(std::move(s));
      }
    } while (std::next_permutation(c.begin(), c.end()));
  }
  return {seen.begin(), seen.end()};
}

std::optional<IntVector> find_partner(const IntVector& v, const CensusBudget& budget) {
  if (v.dim() != 3) throw Error(Errc::DimensionMismatch, "find_partner works in Z^3");
  if (v.is_zero()) throw Error(Errc::ZeroInput, "find_partner of the zero vector");
  const Int n = v.squared_norm();
  check_budget(n, budget.max_norm, "find_partner");
  const Int m = isqrt(n);
  for (Int x = -m; x <= m; ++x) {
    const Int rx = n - x * x;
    const Int my = isqrt(rx);
    for (Int y = -my; y <= my; ++y) {
      const auto z = exact_sqrt(rx - y * y);
      if (!z) continue;
      for (Int zz : {*z, -*z}) {
        if (v[0] * x + v[1] * y + v[2] * zz == 0) return IntVector{x, y, zz};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<IntVector, 2>> exhaustive_basis_d3(const IntVector& v, const CensusBudget& budget) {
  if (v.dim() != 3) throw Error(Errc::DimensionMismatch, "exhaustive_basis_d3 works in Z^3");
  if (v.is_zero()) throw Error(Errc::ZeroInput, "exhaustive_basis_d3 of the zero vector");
  const auto all = all_vectors_of_norm(v.squared_norm(), 3, budget);
  std::vector<IntVector> orth;
  for (const auto& w : all) {
    if (dot(v, w) == 0) orth.push_back(w);
  }
  for (std::size_t i = 0; i < orth.size(); ++i) {
    for (std::size_t j = i + 1; j < orth.size(); ++j) {
      if (dot(orth[i], orth[j]) == 0) return std::array<IntVector, 2>{orth[i], orth[j]};
    }
  }
  return std::nullopt;
}

std::vector<IntVector> orthogonal_extensions(const std::vector<IntVector>& set, Int n, const CensusBudget& budget) {
  if (set.empty()) throw Error(Errc::EmptyInput, "orthogonal_extensions of an empty set");
  std::vector<IntVector> out;
  for (const auto& x : all_vectors_of_norm(n, set.front().dim(), budget)) {
    if (std::all_of(set.begin(), set.end(), [&](const IntVector& s) { return dot(s, x) == 0; })) out.push_back(x);
  }
  return out;
}

CensusReport classify_n_d3(Int n, const ClassifyOptions& options) {
  if (n < 1) throw Error(Errc::InvalidArgument, "classify_n_d3 needs N >= 1");
  check_budget(n, options.budget.max_norm, "classify_n_d3");
  CensusReport report;
  report.n = n;
  report.dim = 3;
  report.reps_canonical = enumerate_reps(n, 3, options.budget);
  report.trivial = report.reps_canonical.size() <= 1;
  const bool square = exact_sqrt(n).has_value();

  bool all_partners = true;
  bool all_complete = square;
  for (const auto& rep : report.reps_canonical) {
    CensusWitness w;
    w.partner = find_partner(rep, options.budget);
    all_partners = all_partners && w.partner.has_value();
    if (square) {
      const CompletionResult r = complete_d3(rep);
      if (r.status == CompletionStatus::Completed && r.added.size() == 2) {
        w.completion = std::array<IntVector, 2>{r.added[0], r.added[1]};
      } else {
        all_complete = false;
      }
      if (!w.partner) internal_failure("square norm " + std::to_string(n) + " completed but no partner was found");
    }
    if (options.cross_check) {
      const bool exhaustive = exhaustive_basis_d3(rep, options.budget).has_value();
      if (exhaustive != w.completion.has_value()) {
        internal_failure("exhaustive basis search disagrees with the quaternion construction at " + to_string(rep));
      }
    }
    report.witnesses.emplace(rep, std::move(w));
  }
  report.in_c3_12 = all_partners;
  report.in_c3_13 = square && all_complete && all_partners;
  return report;
}

std::vector<Int> difference_set_d3(Int limit, const CensusBudget& budget, unsigned threads) {
  if (limit <= 1) return {};
  check_budget(limit - 1, budget.max_norm, "difference_set_d3");
  const auto count = static_cast<std::size_t>(limit - 1);
  std::vector<char> member(count, 0);
  ClassifyOptions options;
  options.budget = budget;
  parallel_for(count, threads, [&](std::size_t i) {
    const CensusReport r = classify_n_d3(static_cast<Int>(i) + 1, options);
    member[i] = !r.trivial && r.in_c3_12 && !r.in_c3_13;
  });
  std::vector<Int> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (member[i]) out.push_back(static_cast<Int>(i) + 1);
  }
  return out;
}

bool sum_two_squares(Int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "sum_two_squares of a negative number");
  if (n == 0) return true;
  Int m = n;
  for (Int p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (p % 4 == 3 && e % 2 == 1) return false;
  }
  return !(m > 1 && m % 4 == 3);
}

bool has_orthogonal_pair_d3(Int n, const CensusBudget& budget) {
  for (const auto& rep : enumerate_reps(n, 3, budget)) {
    if (find_partner(rep, budget)) return true;
  }
  return false;
}

CuriousReport verify_curious(Int limit, const CensusBudget& budget, unsigned threads) {
  CuriousReport report;
  report.limit = limit;
  if (limit <= 1) return report;
  check_budget(limit - 1, budget.max_norm, "verify_curious");
  const auto count = static_cast<std::size_t>(limit - 1);
  std::vector<char> has_pair(count, 0);
  parallel_for(count, threads, [&](std::size_t i) {
    has_pair[i] = has_orthogonal_pair_d3(static_cast<Int>(i) + 1, budget);
  });
  for (std::size_t i = 0; i < count; ++i) {
    const Int n = static_cast<Int>(i) + 1;
    const bool two = sum_two_squares(n);
    if (has_pair[i]) {
      ++report.norms_with_pairs;
      if (!two) report.violations.push_back(n);
    }
    if (!two) {
      ++report.obstructed_norms;
      if (has_pair[i]) report.obstructed_with_pairs.push_back(n);
    }
  }
  return report;
}

}  // namespace ortho
