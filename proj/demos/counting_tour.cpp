// A short tour: counts commuting tuples three ways, then prints a few
// orbifold Euler characteristic columns.

#include <cstdio>

#include <orbicount/orbicount.hpp>

using namespace orbicount;

int main() {
  std::printf("Commuting pairs in S_n, three ways (n <= 5):\n");
  std::printf("%4s %14s %14s %14s\n", "n", "series", "recursion", "brute force");
  for (int n = 0; n <= 5; ++n) {
    const Int a = com_count(2, n);
    const Int b = com_count_recursive(1, n, 2);
    const Int c = brute_force_com(n, 2);
    std::printf("%4d %14s %14s %14s\n", n, a.str().c_str(), b.str().c_str(), c.str().c_str());
  }

  std::printf("\nCommuting pairs in C_2 Wr S_n (hyperoctahedral tower):\n");
  const auto wr = wreath_com_count_table(2, 2, 6);
  for (int n = 0; n <= 6; ++n)
    std::printf("  n=%d: %s\n", n, wr.counts[static_cast<std::size_t>(n)].str().c_str());

  std::printf("\nConjugacy classes of C_2 Wr S_3:\n");
  for (const auto& d : enumerate_class_data(2, 3))
    std::printf("  %-28s centralizer order %s\n", to_string(d).c_str(),
                centralizer_order(d).str().c_str());

  std::printf("\nchi_2(M^n, S_n) for chi(M) = 2 (n <= 8):\n ");
  for (int n = 0; n <= 8; ++n) std::printf(" %s", orbifold_chi(2, 2, n).str().c_str());
  std::printf("\n\nA large exact value: |Com(S_30, 3)| = %s\n", com_count(3, 30).str().c_str());
  return 0;
}
