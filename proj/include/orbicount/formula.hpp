#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbicount/arith.hpp"
#include "orbicount/series.hpp"
#include "orbicount/wreath.hpp"

namespace orbicount {

// Per-degree exponents of the commuting-tuple Euler product for C_i Wr S_n
// and tuple length m:
//   E(d) = i^{m-1} * sum over ordered factorizations i_1 ... i_{m-1} = d
//          of i_1^{m-2} i_2^{m-3} ... i_{m-2}
// (the inner product is empty when m = 2). exponents[d-1] holds E(d).
struct ExponentTable {
  int m = 2;
  int base = 1;
  int order = 0;
  std::vector<Int> exponents;

  const Int& at(int d) const {
    if (d < 1 || d > order) throw std::out_of_range("ExponentTable: degree out of range");
    return exponents[static_cast<std::size_t>(d - 1)];
  }
};

// Collects the multi-index product into per-degree exponents by iterated
// Dirichlet convolution of the power functions d^{m-2}, d^{m-3}, ..., d^0,
// then scales by i^{m-1}. Each convolution is an O(N log N) sieve.
inline ExponentTable exponent_table(int m, int i, int N) {
  if (m < 2) throw std::invalid_argument("exponent_table: m must be >= 2 (m = 1 has no product form)");
  if (i < 1 || N < 0) throw std::invalid_argument("exponent_table: need i >= 1, N >= 0");

  std::vector<Int> cur(static_cast<std::size_t>(N) + 1);
  for (int d = 1; d <= N; ++d)
    cur[static_cast<std::size_t>(d)] = int_pow(Int(d), static_cast<unsigned long>(m - 2));
  for (int k = m - 3; k >= 0; --k) {
    std::vector<Int> pw(static_cast<std::size_t>(N) + 1), next(static_cast<std::size_t>(N) + 1);
    for (int b = 1; b <= N; ++b) pw[static_cast<std::size_t>(b)] = int_pow(Int(b), static_cast<unsigned long>(k));
    for (int a = 1; a <= N; ++a) {
      if (cur[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 1; a * b <= N; ++b)
        next[static_cast<std::size_t>(a * b)] += cur[static_cast<std::size_t>(a)] * pw[static_cast<std::size_t>(b)];
    }
    cur = std::move(next);
  }

  ExponentTable t;
  t.m = m;
  t.base = i;
  t.order = N;
  const Int scale = int_pow(Int(i), static_cast<unsigned long>(m - 1));
  t.exponents.reserve(static_cast<std::size_t>(N));
  for (int d = 1; d <= N; ++d) t.exponents.push_back(scale * cur[static_cast<std::size_t>(d)]);
  return t;
}

// prod_{d=1}^{N} (1 - u^d)^{-chi * E(d)}, truncated at the table's order.
// Instantiated over Int for counting (the coefficients are integers by
// construction) and over Rat when a cross-check in the rational field is
// wanted.
template <class Coeff = Int>
TruncatedSeries<Coeff> euler_product(const ExponentTable& t, const Int& chi) {
  auto s = series_one<Coeff>(t.order);
  if (chi.is_zero()) return s;
  for (int d = 1; d <= t.order; ++d) multiply_by_binomial_factor(s, d, -(chi * t.at(d)));
  return s;
}

// Generating function sum over n of chi_m(M^n, S_n) u^n for a manifold with
// Euler characteristic chi. For m >= 2 this is the Euler product over
// exponent_table(m, 1, N); m = 1 is the classical (1 - u)^{-chi}.
template <class Coeff = Int>
TruncatedSeries<Coeff> sym_series(int m, long long chi, int N) {
  if (m < 1) throw std::invalid_argument("sym_series: m must be >= 1");
  if (N < 0) throw std::invalid_argument("sym_series: order must be >= 0");
  if (m == 1) return binomial_factor<Coeff>(1, Int(-chi), N);
  return euler_product<Coeff>(exponent_table(m, 1, N), Int(chi));
}

// Generating function sum over n of |Com(C_i Wr S_n, m)| / |C_i Wr S_n| u^n.
template <class Coeff = Int>
TruncatedSeries<Coeff> wreath_series(int i, int m, int N) {
  if (m < 2) throw std::invalid_argument("wreath_series: m must be >= 2");
  if (i < 1 || N < 0) throw std::invalid_argument("wreath_series: need i >= 1, N >= 0");
  return euler_product<Coeff>(exponent_table(m, i, N), Int(1));
}

// |Com(S_n, m)| = n! * [u^n] sym_series(m, 1, .). The series is evaluated on
// the integer coefficient ring, so integrality holds by construction rather
// than by a posteriori assertion; the rational-path agreement is covered by
// the acceptance suite. N_hint >= n requests a larger truncation order (the
// extra coefficients are future rows of the same table).
inline Int com_count(int m, int n, int N_hint = -1) {
  if (m < 1 || n < 0) throw std::invalid_argument("com_count: need m >= 1, n >= 0");
  const int N = N_hint > n ? N_hint : n;
  return factorial(n) * sym_series<Int>(m, 1, N).coeff(n);
}

// |Com(C_i Wr S_n, m)| = i^n * n! * [u^n] wreath_series(i, m, .).
inline Int wreath_com_count(int i, int m, int n) {
  if (m < 2) throw std::invalid_argument("wreath_com_count: m must be >= 2 (m = 1 is the group order)");
  if (i < 1 || n < 0) throw std::invalid_argument("wreath_com_count: need i >= 1, n >= 0");
  return int_pow(Int(i), static_cast<unsigned long>(n)) * factorial(n) * wreath_series<Int>(i, m, n).coeff(n);
}

// n-th orbifold Euler characteristic of the symmetric product: the u^n
// coefficient of sym_series(m, chi, n). Always an integer, for negative chi
// as well, since the binomial factor rows are integers.
inline Int orbifold_chi(int m, long long chi, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("orbifold_chi: need m >= 1, n >= 0");
  return sym_series<Int>(m, chi, n).coeff(n);
}

// p(0..N) by the pentagonal-number recurrence. Independent of every series
// routine above; used as an oracle for the m = 2 column.
inline std::vector<Int> partition_numbers(int N) {
  if (N < 0) throw std::invalid_argument("partition_numbers: order must be >= 0");
  std::vector<Int> p(static_cast<std::size_t>(N) + 1);
  p[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Int acc = 0;
    for (int k = 1;; ++k) {
      const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > n) break;
      Int term = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

inline constexpr long long kDefaultNodeBudget = 10000000;

namespace detail {

// Streaming form of enumerate_class_data in the same pinned order; the
// visitor returns false to abort. Returns false iff aborted.
template <class Visitor>
bool for_each_class_data(int i, int n, Visitor&& visit) {
  std::vector<std::pair<int, int>> cells;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= i; ++j) cells.emplace_back(k, j);
  std::map<std::pair<int, int>, int> counts;
  auto dfs = [&](auto&& self, std::size_t idx, int rem) -> bool {
    if (rem == 0) return visit(counts);
    if (idx == cells.size()) return true;
    const auto [k, j] = cells[idx];
    if (k > rem) return true;
    if (!self(self, idx + 1, rem)) return false;
    bool ok = true;
    for (int mult = 1; mult * k <= rem && ok; ++mult) {
      counts[{j, k}] = mult;
      ok = self(self, idx + 1, rem - mult * k);
    }
    counts.erase({j, k});
    return ok;
  };
  return dfs(dfs, 0, n);
}

struct RecursionMemo {
  std::mutex mu;
  std::map<std::tuple<int, int, int>, Int> table;
};

inline RecursionMemo& recursion_memo() {
  static RecursionMemo memo;
  return memo;
}

// W(i, n, m) = |Com(C_i Wr S_n, m)| / |C_i Wr S_n| via the class recursion
//   W(i, n, m) = sum over classes (M_{j,k}) of prod W(i*k, M_{j,k}, m-1),
// base W(., ., 1) = 1. Budget is decremented once per enumerated class;
// exhaustion throws. Keys already memoized cost no budget, so the guard is a
// per-call resource bound, not a global one.
inline Int recursion_weight(int i, int n, int m, long long& budget) {
  if (m == 1 || n == 0) return 1;
  const auto key = std::make_tuple(i, n, m);
  auto& memo = recursion_memo();
  {
    std::scoped_lock lock(memo.mu);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
  }
  Int total = 0;
  const bool completed = for_each_class_data(i, n, [&](const std::map<std::pair<int, int>, int>& counts) {
    if (--budget < 0) return false;
    Int term = 1;
    for (const auto& [jk, mult] : counts) term *= recursion_weight(i * jk.second, mult, m - 1, budget);
    total += term;
    return true;
  });
  if (!completed)
    throw GuardExceeded("com_count_recursive: class enumeration for (i=" + std::to_string(i) + ", n=" +
                        std::to_string(n) + ", m=" + std::to_string(m) + ") exceeds the node budget");
  std::scoped_lock lock(memo.mu);
  return memo.table.emplace(key, std::move(total)).first->second;
}

}  // namespace detail

// |Com(C_i Wr S_n, m)| by the centralizer-structure recursion alone: no
// series, no raw enumeration. Third independent computation path.
inline Int com_count_recursive(int i, int n, int m, long long node_budget = kDefaultNodeBudget) {
  if (i < 1 || n < 0 || m < 1) throw std::invalid_argument("com_count_recursive: need i >= 1, n >= 0, m >= 1");
  long long budget = node_budget;
  return detail::recursion_weight(i, n, m, budget) * wr_group_order(i, n);
}

// A column of counts for n = 0..order; base 1 is the symmetric family.
struct CountTable {
  int base = 1;
  int m = 1;
  std::vector<Int> counts;  // counts[n] = |Com(., m)|

  int order() const { return static_cast<int>(counts.size()) - 1; }
};

inline CountTable com_count_table(int m, int N) {
  if (m < 1 || N < 0) throw std::invalid_argument("com_count_table: need m >= 1, N >= 0");
  const auto s = sym_series<Int>(m, 1, N);
  CountTable t;
  t.base = 1;
  t.m = m;
  t.counts.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) t.counts.push_back(factorial(n) * s.coeff(n));
  return t;
}

inline CountTable wreath_com_count_table(int i, int m, int N) {
  if (i < 1 || m < 1 || N < 0) throw std::invalid_argument("wreath_com_count_table: need i >= 1, m >= 1, N >= 0");
  CountTable t;
  t.base = i;
  t.m = m;
  t.counts.reserve(static_cast<std::size_t>(N) + 1);
  if (m == 1) {
    for (int n = 0; n <= N; ++n) t.counts.push_back(wr_group_order(i, n));  // |Com(G, 1)| = |G|
    return t;
  }
  const auto s = wreath_series<Int>(i, m, N);
  for (int n = 0; n <= N; ++n)
    t.counts.push_back(int_pow(Int(i), static_cast<unsigned long>(n)) * factorial(n) * s.coeff(n));
  return t;
}

}  // namespace orbicount
