#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbicount/arith.hpp"

namespace orbicount {

// Default combinatorial-explosion guards. Raw enumeration of S_n is allowed
// up to degree 8; tuple counting (which walks nested centralizers) up to
// degree 6 and tuple length 4. All are overridable per call.
inline constexpr int kMaxEnumDegree = 8;
inline constexpr int kMaxTupleDegree = 6;
inline constexpr int kMaxTupleLength = 4;

// A permutation of {0,...,n-1} in one-line notation: images()[t] is the image
// of point t. Points are 0-based everywhere; 1-based cycle notation exists
// only in to_cycle_string for display.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Permutation: images must be a bijection of {0..n-1}");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative degree");
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int t) const { return images_[static_cast<std::size_t>(t)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int t = 0; t < degree(); ++t)
      if (images_[static_cast<std::size_t>(t)] != t) return false;
    return true;
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

namespace detail {
inline void require_same_degree(const Permutation& p, const Permutation& q, const char* who) {
  if (p.degree() != q.degree()) throw std::invalid_argument(std::string(who) + ": degree mismatch");
}
}  // namespace detail

// Composition order is fixed globally as "apply p, then q".
inline Permutation compose(const Permutation& p, const Permutation& q) {
  detail::require_same_degree(p, q, "compose");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int t = 0; t < p.degree(); ++t) images[static_cast<std::size_t>(t)] = q.image(p.image(t));
  return Permutation(std::move(images));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int t = 0; t < p.degree(); ++t) images[static_cast<std::size_t>(p.image(t))] = t;
  return Permutation(std::move(images));
}

inline bool commutes(const Permutation& p, const Permutation& q) {
  detail::require_same_degree(p, q, "commutes");
  for (int t = 0; t < p.degree(); ++t)
    if (q.image(p.image(t)) != p.image(q.image(t))) return false;
  return true;
}

// Cycles in order of smallest starting point, fixed points included.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int t = start; !seen[static_cast<std::size_t>(t)]; t = p.image(t)) {
      seen[static_cast<std::size_t>(t)] = 1;
      cyc.push_back(t);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

inline int cycle_count(const Permutation& p) {
  return static_cast<int>(cycles(p).size());
}

// 1-based cycle notation for display, fixed points omitted; identity is "()".
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cyc : cycles(p)) {
    if (cyc.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k != 0) out += ' ';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace detail {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1), count(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    --count;
  }

  std::vector<int> parent;
  std::vector<int> size;
  int count;
};

}  // namespace detail

// Number of connected components of the graph on {0..n-1} with an edge
// t -- p(t) for every permutation p in the tuple and every point t. For a
// single permutation this is its number of cycles. Union by size with path
// compression; the result does not depend on edge insertion order.
inline int components(const std::vector<Permutation>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("components: empty tuple");
  const int n = tuple.front().degree();
  if (n < 1) throw std::invalid_argument("components: degree must be >= 1");
  for (const auto& p : tuple)
    if (p.degree() != n) throw std::invalid_argument("components: mixed degrees");
  detail::UnionFind uf(n);
  for (const auto& p : tuple)
    for (int t = 0; t < n; ++t) uf.unite(t, p.image(t));
  return uf.count;
}

// All n! permutations of degree n, each exactly once, in lexicographic order
// of the one-line notation.
inline std::vector<Permutation> enumerate_sn(int n, int max_degree = kMaxEnumDegree) {
  if (n < 0) throw std::invalid_argument("enumerate_sn: negative degree");
  if (n > max_degree)
    throw GuardExceeded("enumerate_sn: degree " + std::to_string(n) + " exceeds guard " + std::to_string(max_degree));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace detail {

// Subsets of an explicitly enumerated group, as bit vectors over element
// indices. The commutation bit matrix makes centralizer intersection a few
// word ANDs, which is all the tuple-counting recursion needs.
using Subset = std::vector<std::uint64_t>;

inline Subset full_subset(std::size_t n) {
  Subset s((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0 && !s.empty()) s.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

inline Subset intersect(const Subset& a, const Subset& b) {
  Subset r(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) r[w] = a[w] & b[w];
  return r;
}

inline std::size_t popcount(const Subset& s) {
  std::size_t c = 0;
  for (std::uint64_t w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

template <class F>
void for_each_member(const Subset& s, F&& f) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    std::uint64_t bits = s[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      f(w * 64 + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
}

// rows[i] = bit set of elements commuting with element i (i included).
template <class Elem, class Mul>
std::vector<Subset> commute_rows(const std::vector<Elem>& els, Mul&& mul) {
  const std::size_t n = els.size();
  std::vector<Subset> rows(n, Subset((n + 63) / 64, 0));
  auto set_bit = [&](std::size_t r, std::size_t c) { rows[r][c / 64] |= std::uint64_t{1} << (c % 64); };
  for (std::size_t i = 0; i < n; ++i) {
    set_bit(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (mul(els[i], els[j]) == mul(els[j], els[i])) {
        set_bit(i, j);
        set_bit(j, i);
      }
    }
  }
  return rows;
}

// |Com(S, m)| for the subgroup S of the enumerated group: the recursion
// |Com(G, m)| = sum over g in G of |Com(C_G(g), m-1)|, base |Com(G, 1)| = |G|.
// Uses nothing but explicit centralizer subgroups.
inline Int count_commuting_tuples(const std::vector<Subset>& rows, const Subset& subgroup, int m) {
  if (m == 1) return Int(popcount(subgroup));
  Int total = 0;
  for_each_member(subgroup, [&](std::size_t i) { total += count_commuting_tuples(rows, intersect(subgroup, rows[i]), m - 1); });
  return total;
}

}  // namespace detail

// Exact |Com(S_n, m)| by exhaustive enumeration and the centralizer-subgroup
// recursion. Deliberately formula-free: this is the independent oracle the
// generating-function paths are checked against.
inline Int brute_force_com(int n, int m, int max_degree = kMaxTupleDegree, int max_tuple_len = kMaxTupleLength) {
  if (m < 1) throw std::invalid_argument("brute_force_com: m must be >= 1");
  if (n > max_degree || m > max_tuple_len)
    throw GuardExceeded("brute_force_com: (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ") exceeds guard");
  const auto els = enumerate_sn(n, std::max(n, kMaxEnumDegree));
  const auto rows = detail::commute_rows(els, [](const Permutation& a, const Permutation& b) { return compose(a, b); });
  return detail::count_commuting_tuples(rows, detail::full_subset(els.size()), m);
}

// Exact sum of chi^{components(tuple)} over all mutually commuting m-tuples
// of S_n, by exhaustive tuple enumeration. chi may be negative or zero.
inline Int chi_weighted_sum(int n, int m, long long chi, int max_degree = kMaxTupleDegree,
                            int max_tuple_len = kMaxTupleLength) {
  if (m < 1) throw std::invalid_argument("chi_weighted_sum: m must be >= 1");
  if (n > max_degree || m > max_tuple_len)
    throw GuardExceeded("chi_weighted_sum: (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ") exceeds guard");
  if (n == 0) return 1;  // one empty tuple, zero components, chi^0 = 1

  const auto els = enumerate_sn(n, std::max(n, kMaxEnumDegree));
  const auto rows = detail::commute_rows(els, [](const Permutation& a, const Permutation& b) { return compose(a, b); });

  std::vector<Int> chi_pow(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) chi_pow[static_cast<std::size_t>(k)] = int_pow(Int(chi), static_cast<unsigned long>(k));

  Int total = 0;
  std::vector<Permutation> tuple;
  tuple.reserve(static_cast<std::size_t>(m));
  auto dfs = [&](auto&& self, const detail::Subset& allowed, int remaining) -> void {
    detail::for_each_member(allowed, [&](std::size_t i) {
      tuple.push_back(els[i]);
      if (remaining == 1)
        total += chi_pow[static_cast<std::size_t>(components(tuple))];
      else
        self(self, detail::intersect(allowed, rows[i]), remaining - 1);
      tuple.pop_back();
    });
  };
  dfs(dfs, detail::full_subset(els.size()), m);
  return total;
}

}  // namespace orbicount
