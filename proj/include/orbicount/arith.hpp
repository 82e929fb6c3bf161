#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace orbicount {

// All counting is exact. Int is an arbitrary-precision signed integer,
// Rat an arbitrary-precision rational; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a request exceeds a combinatorial-explosion guard
// (enumeration degree, group order, recursion node budget).
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// base^e by repeated squaring; 0^0 = 1 (empty product).
inline Int int_pow(Int base, unsigned long e) {
  Int r = 1;
  while (e != 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return r;
}

// C(n, k) for big n and small k, exact at every step.
inline Int binomial(const Int& n, unsigned long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (Int(k) > n) return 0;
  Int acc = 1;
  for (unsigned long t = 1; t <= k; ++t) {
    acc *= n - Int(k) + Int(t);
    acc /= t;  // exact: acc is C(n-k+t, t) here
  }
  return acc;
}

}  // namespace orbicount
