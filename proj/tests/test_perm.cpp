#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <orbicount/perm.hpp>

using orbicount::GuardExceeded;
using orbicount::Int;
using orbicount::Permutation;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("permutation construction validates bijectivity", "[perm]") {
  REQUIRE_NOTHROW(Permutation({2, 0, 1}));
  REQUIRE_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation({-1, 0, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation::identity(-1), std::invalid_argument);
  REQUIRE(Permutation::identity(0).degree() == 0);
  REQUIRE(Permutation::identity(4).is_identity());
  REQUIRE_FALSE(Permutation({1, 0}).is_identity());
}

TEST_CASE("composition applies left factor first", "[perm]") {
  const Permutation p({1, 0, 2});  // (0 1)
  const Permutation q({0, 2, 1});  // (1 2)
  REQUIRE(compose(p, q) == Permutation({2, 0, 1}));
  REQUIRE(compose(q, p) == Permutation({1, 2, 0}));
  REQUIRE(compose(p, Permutation::identity(3)) == p);
  REQUIRE(compose(Permutation::identity(3), p) == p);
  REQUIRE_THROWS_AS(compose(p, Permutation::identity(2)), std::invalid_argument);
}

TEST_CASE("inverse and commutes", "[perm]") {
  const Permutation p({2, 0, 1});
  REQUIRE(inverse(p) == Permutation({1, 2, 0}));
  REQUIRE(compose(p, inverse(p)).is_identity());
  REQUIRE(compose(inverse(p), p).is_identity());

  // disjoint transpositions commute, overlapping ones do not
  REQUIRE(commutes(Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})));
  REQUIRE_FALSE(commutes(Permutation({1, 0, 2}), Permutation({0, 2, 1})));

  // exhaustive cross-check against the definition on S_3
  const auto els = orbicount::enumerate_sn(3);
  for (const auto& a : els)
    for (const auto& b : els) REQUIRE(commutes(a, b) == (compose(a, b) == compose(b, a)));
}

TEST_CASE("associativity on random samples", "[perm]") {
  std::mt19937 rng(20260819);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_perm(6, rng), b = random_perm(6, rng), c = random_perm(6, rng);
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("cycle structure and display", "[perm]") {
  const Permutation p({1, 0, 2});
  REQUIRE(cycles(p) == std::vector<std::vector<int>>{{0, 1}, {2}});
  REQUIRE(orbicount::cycle_count(p) == 2);
  REQUIRE(orbicount::to_cycle_string(p) == "(1 2)");
  REQUIRE(orbicount::to_cycle_string(Permutation::identity(3)) == "()");
  REQUIRE(orbicount::to_cycle_string(Permutation({2, 0, 1, 4, 3})) == "(1 3 2)(4 5)");
}

TEST_CASE("components of a tuple", "[perm]") {
  using orbicount::components;
  // a single permutation contributes exactly its cycles
  for (const auto& p : orbicount::enumerate_sn(4)) REQUIRE(components({p}) == orbicount::cycle_count(p));
  // two disjoint transpositions: two components
  REQUIRE(components({Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}) == 2);
  // together they connect everything a 4-cycle reaches
  REQUIRE(components({Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})}) == 1);
  // identities glue nothing
  REQUIRE(components({Permutation::identity(5), Permutation::identity(5)}) == 5);

  REQUIRE_THROWS_AS(components({}), std::invalid_argument);
  REQUIRE_THROWS_AS(components({Permutation::identity(0)}), std::invalid_argument);
  REQUIRE_THROWS_AS(components({Permutation::identity(2), Permutation::identity(3)}), std::invalid_argument);
}

TEST_CASE("symmetric group enumeration", "[perm]") {
  REQUIRE(orbicount::enumerate_sn(0).size() == 1);
  REQUIRE(orbicount::enumerate_sn(1).size() == 1);
  REQUIRE(orbicount::enumerate_sn(3).size() == 6);
  REQUIRE(orbicount::enumerate_sn(5).size() == 120);

  const auto els = orbicount::enumerate_sn(4);
  std::set<std::vector<int>> seen;
  for (const auto& p : els) seen.insert(p.images());
  REQUIRE(seen.size() == els.size());
  REQUIRE(els.front().is_identity());
  REQUIRE(els.back() == Permutation({3, 2, 1, 0}));

  REQUIRE_THROWS_AS(orbicount::enumerate_sn(9), GuardExceeded);
  REQUIRE_THROWS_AS(orbicount::enumerate_sn(-1), std::invalid_argument);
}

TEST_CASE("brute-force commuting tuple counts", "[perm]") {
  using orbicount::brute_force_com;
  for (int n = 0; n <= 5; ++n) REQUIRE(brute_force_com(n, 1) == orbicount::factorial(n));
  REQUIRE(brute_force_com(0, 3) == 1);
  REQUIRE(brute_force_com(2, 2) == 4);    // S_2 is abelian: all pairs commute
  REQUIRE(brute_force_com(3, 2) == 18);
  REQUIRE(brute_force_com(3, 3) == 48);
  REQUIRE(brute_force_com(4, 2) == 120);

  REQUIRE_THROWS_AS(brute_force_com(7, 2), GuardExceeded);
  REQUIRE_THROWS_AS(brute_force_com(3, 5), GuardExceeded);
  REQUIRE_THROWS_AS(brute_force_com(3, 0), std::invalid_argument);
  REQUIRE_NOTHROW(brute_force_com(7, 2, 7));  // guard is overridable
}

TEST_CASE("chi-weighted tuple sums", "[perm]") {
  using orbicount::chi_weighted_sum;
  REQUIRE(chi_weighted_sum(2, 2, 2) == 10);
  REQUIRE(chi_weighted_sum(0, 3, -7) == 1);   // single empty tuple
  REQUIRE(chi_weighted_sum(1, 1, -2) == -2);  // one element, one component
  REQUIRE(chi_weighted_sum(2, 1, -1) == 0);   // (-1)^2 + (-1)^1

  // chi = 1 collapses to the plain count
  for (int n = 0; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) REQUIRE(chi_weighted_sum(n, m, 1) == orbicount::brute_force_com(n, m));

  // chi = 0 kills every tuple for n >= 1
  for (int n = 1; n <= 4; ++n) REQUIRE(chi_weighted_sum(n, 2, 0) == 0);

  REQUIRE_THROWS_AS(chi_weighted_sum(7, 2, 1), GuardExceeded);
  REQUIRE_THROWS_AS(chi_weighted_sum(3, 5, 1), GuardExceeded);
  REQUIRE_THROWS_AS(chi_weighted_sum(3, 0, 1), std::invalid_argument);
}
