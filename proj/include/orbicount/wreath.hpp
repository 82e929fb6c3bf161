#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbicount/arith.hpp"
#include "orbicount/perm.hpp"

namespace orbicount {

// Element (g_1,...,g_n; pi) of C_i Wr S_n. The cyclic base group is written
// additively: residues[t] in {0,...,i-1} is the copy of C_i sitting over
// point t.
struct WreathElement {
  std::vector<int> residues;
  Permutation perm;
  int base_order = 1;

  WreathElement() = default;

  WreathElement(std::vector<int> res, Permutation p, int i)
      : residues(std::move(res)), perm(std::move(p)), base_order(i) {
    if (base_order < 1) throw std::invalid_argument("WreathElement: base_order must be >= 1");
    if (static_cast<int>(residues.size()) != perm.degree())
      throw std::invalid_argument("WreathElement: residues length must equal perm degree");
    for (int r : residues)
      if (r < 0 || r >= base_order) throw std::invalid_argument("WreathElement: residue out of range");
  }

  int degree() const { return perm.degree(); }

  bool operator==(const WreathElement&) const = default;
};

inline WreathElement wr_identity(int i, int n) {
  return WreathElement(std::vector<int>(static_cast<std::size_t>(n), 0), Permutation::identity(n), i);
}

// Product in C_i Wr S_n. With permutations acting on the right (compose(p, q)
// = "apply p, then q") the semidirect-product law reads
//   (g; pi) (h; tau) = (g^tau + h; compose(pi, tau)),
// where (g^tau)[t] = g[tau^{-1}(t)] carries the residue over point s to point
// tau(s). Associativity and class invariance of class_data pin this form.
inline WreathElement wr_multiply(const WreathElement& a, const WreathElement& b) {
  if (a.base_order != b.base_order) throw std::invalid_argument("wr_multiply: base_order mismatch");
  if (a.degree() != b.degree()) throw std::invalid_argument("wr_multiply: degree mismatch");
  const Permutation binv = inverse(b.perm);
  std::vector<int> res(static_cast<std::size_t>(a.degree()));
  for (int t = 0; t < a.degree(); ++t)
    res[static_cast<std::size_t>(t)] =
        (a.residues[static_cast<std::size_t>(binv.image(t))] + b.residues[static_cast<std::size_t>(t)]) % a.base_order;
  return WreathElement(std::move(res), compose(a.perm, b.perm), a.base_order);
}

inline WreathElement wr_inverse(const WreathElement& a) {
  std::vector<int> res(static_cast<std::size_t>(a.degree()));
  for (int t = 0; t < a.degree(); ++t)
    res[static_cast<std::size_t>(t)] = (a.base_order - a.residues[static_cast<std::size_t>(a.perm.image(t))]) % a.base_order;
  return WreathElement(std::move(res), inverse(a.perm), a.base_order);
}

// Conjugacy-class label for C_i Wr S_n: counts[(j, k)] = M_{j,k} is the
// number of k-cycles of the permutation part whose residue sum along the
// cycle equals j-1 mod i (1 <= j <= i, 1 <= k <= n). Only positive
// multiplicities are stored; the weighted sum of k * M_{j,k} must equal n.
struct ClassData {
  int base_order = 1;
  int degree = 0;
  std::map<std::pair<int, int>, int> counts;  // (j, k) -> M_{j,k} > 0

  ClassData() = default;

  ClassData(int i, int n, std::map<std::pair<int, int>, int> m)
      : base_order(i), degree(n), counts(std::move(m)) {
    if (base_order < 1 || degree < 0) throw std::invalid_argument("ClassData: bad base_order or degree");
    long long weight = 0;
    for (const auto& [jk, mult] : counts) {
      const auto [j, k] = jk;
      if (j < 1 || j > base_order || k < 1 || k > degree)
        throw std::invalid_argument("ClassData: index (j, k) out of range");
      if (mult <= 0) throw std::invalid_argument("ClassData: stored multiplicities must be positive");
      weight += static_cast<long long>(k) * mult;
    }
    if (weight != degree) throw std::invalid_argument("ClassData: weighted cycle sum must equal degree");
  }

  bool operator==(const ClassData&) const = default;
};

inline std::string to_string(const ClassData& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [jk, mult] : d.counts) {
    if (!first) out += ", ";
    first = false;
    out += "M[" + std::to_string(jk.first) + "," + std::to_string(jk.second) + "]=" + std::to_string(mult);
  }
  return out + "}";
}

// The label of the class containing a. Residue sums are taken additively, so
// cycle traversal order is immaterial.
inline ClassData class_data(const WreathElement& a) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& cyc : cycles(a.perm)) {
    int sum = 0;
    for (int t : cyc) sum = (sum + a.residues[static_cast<std::size_t>(t)]) % a.base_order;
    counts[{sum + 1, static_cast<int>(cyc.size())}] += 1;
  }
  return ClassData(a.base_order, a.degree(), std::move(counts));
}

// All class labels of C_i Wr S_n, each exactly once. Order: depth-first over
// the cells (j, k) sorted by (k, j) ascending, trying multiplicities
// 0, 1, 2, ... at each cell; a label is emitted as soon as the remaining
// weight hits zero. Pinned by golden tests.
inline std::vector<ClassData> enumerate_class_data(int i, int n) {
  if (i < 1 || n < 0) throw std::invalid_argument("enumerate_class_data: need i >= 1, n >= 0");
  std::vector<std::pair<int, int>> cells;  // (k, j), ascending
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= i; ++j) cells.emplace_back(k, j);

  std::vector<ClassData> out;
  std::map<std::pair<int, int>, int> counts;
  auto dfs = [&](auto&& self, std::size_t idx, int rem) -> void {
    if (rem == 0) {
      out.push_back(ClassData(i, n, counts));
      return;
    }
    if (idx == cells.size()) return;
    const auto [k, j] = cells[idx];
    if (k > rem) return;  // cells are sorted by k; nothing later fits either
    self(self, idx + 1, rem);
    for (int mult = 1; mult * k <= rem; ++mult) {
      counts[{j, k}] = mult;
      self(self, idx + 1, rem - mult * k);
    }
    counts.erase({j, k});
  };
  dfs(dfs, 0, n);
  return out;
}

// An explicit element of the class labelled d: consecutive points form the
// prescribed cycles, and a type-j cycle carries residue j-1 on its first
// point and 0 elsewhere.
inline WreathElement class_representative(const ClassData& d) {
  const int n = d.degree;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<int> residues(static_cast<std::size_t>(n), 0);
  int next = 0;
  for (const auto& [jk, mult] : d.counts) {
    const auto [j, k] = jk;
    for (int c = 0; c < mult; ++c) {
      residues[static_cast<std::size_t>(next)] = j - 1;
      for (int s = 0; s < k - 1; ++s) images[static_cast<std::size_t>(next + s)] = next + s + 1;
      images[static_cast<std::size_t>(next + k - 1)] = next;
      next += k;
    }
  }
  return WreathElement(std::move(residues), Permutation(std::move(images)), d.base_order);
}

// Order of the centralizer of any element in class d: the centralizer is a
// direct product over cells, one factor C_{ik} Wr S_{M_{j,k}} per cell, so
// the order is the product of (i k)^{M_{j,k}} * M_{j,k}!.
inline Int centralizer_order(const ClassData& d) {
  Int order = 1;
  for (const auto& [jk, mult] : d.counts) {
    order *= int_pow(Int(d.base_order) * jk.second, static_cast<unsigned long>(mult));
    order *= factorial(mult);
  }
  return order;
}

inline Int wr_group_order(int i, int n) {
  if (i < 1 || n < 0) throw std::invalid_argument("wr_group_order: need i >= 1, n >= 0");
  return int_pow(Int(i), static_cast<unsigned long>(n)) * factorial(n);
}

// Guard for explicit wreath-group enumeration (element count).
inline constexpr long long kMaxWreathEnumOrder = 100000;
// Tighter default for tuple counting inside the enumerated group.
inline constexpr long long kMaxWreathTupleOrder = 200;

// Every element of C_i Wr S_n exactly once: permutations in lexicographic
// order, and for each permutation all residue vectors as a base-i odometer
// with the last coordinate fastest.
inline std::vector<WreathElement> enumerate_wreath_group(int i, int n, long long max_order = kMaxWreathEnumOrder) {
  const Int order = wr_group_order(i, n);
  if (order > max_order)
    throw GuardExceeded("enumerate_wreath_group: |C_" + std::to_string(i) + " Wr S_" + std::to_string(n) +
                        "| = " + order.str() + " exceeds guard " + std::to_string(max_order));
  std::vector<WreathElement> out;
  out.reserve(static_cast<std::size_t>(order));
  for (const auto& p : enumerate_sn(n, std::max(n, kMaxEnumDegree))) {
    std::vector<int> res(static_cast<std::size_t>(n), 0);
    while (true) {
      out.push_back(WreathElement(res, p, i));
      int t = n - 1;
      while (t >= 0 && res[static_cast<std::size_t>(t)] == i - 1) res[static_cast<std::size_t>(t--)] = 0;
      if (t < 0) break;
      ++res[static_cast<std::size_t>(t)];
    }
  }
  return out;
}

// Exact |Com(C_i Wr S_n, m)| by the same formula-free centralizer-subgroup
// recursion as brute_force_com, inside the explicitly enumerated group.
inline Int wr_brute_force_com(int i, int n, int m, long long max_order = kMaxWreathTupleOrder) {
  if (m < 1) throw std::invalid_argument("wr_brute_force_com: m must be >= 1");
  const Int order = wr_group_order(i, n);
  if (order > max_order)
    throw GuardExceeded("wr_brute_force_com: group order " + order.str() + " exceeds guard " +
                        std::to_string(max_order));
  const auto els = enumerate_wreath_group(i, n, std::max(max_order, kMaxWreathEnumOrder));
  const auto rows = detail::commute_rows(els, [](const WreathElement& a, const WreathElement& b) { return wr_multiply(a, b); });
  return detail::count_commuting_tuples(rows, detail::full_subset(els.size()), m);
}

}  // namespace orbicount
