#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orbicount/arith.hpp"

namespace orbicount {

// Formal power series in one variable u, truncated at a fixed order N:
// exactly the coefficients of u^0..u^N are stored. Coeff is an exact ring
// (Int or Rat); arithmetic never leaves it. Truncation order is always
// explicit, never a global setting.
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}

  TruncatedSeries(int order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(check_order(order)) + 1)
      throw std::invalid_argument("TruncatedSeries: need order+1 coefficients");
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Coeff(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Coeff& coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("TruncatedSeries::coeff: degree out of range");
    return coeffs_[static_cast<std::size_t>(n)];
  }

  void set_coeff(int n, Coeff v) {
    if (n < 0 || n > order()) throw std::out_of_range("TruncatedSeries::set_coeff: degree out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(v);
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  bool operator==(const TruncatedSeries&) const = default;

  // Cauchy product truncated at min(order(), rhs.order()).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int p = 0; p <= n; ++p) {
      if (a.coeffs_[p] == Coeff(0)) continue;
      for (int q = 0; p + q <= n; ++q) r.coeffs_[p + q] += a.coeffs_[p] * b.coeffs_[q];
    }
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
    return order;
  }

  std::vector<Coeff> coeffs_;  // coeffs_[k] is the coefficient of u^k
};

template <class Coeff>
TruncatedSeries<Coeff> series_one(int order) {
  return TruncatedSeries<Coeff>::one(order);
}

template <class Coeff>
TruncatedSeries<Coeff> series_mul(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
  return a * b;
}

template <class Coeff>
const Coeff& series_coeff(const TruncatedSeries<Coeff>& s, int n) {
  return s.coeff(n);
}

namespace detail {

// Coefficients of (1 - u^d)^e at u^{dk}, k = 0, 1, ...: for e >= 0 the signed
// binomial row (-1)^k C(e,k), cut off at k = e; for e < 0 the negative
// binomial C(|e|+k-1, k). Only values with dk <= order are produced.
inline std::vector<Int> binomial_factor_values(int d, const Int& e, int order) {
  if (d < 1) throw std::invalid_argument("binomial factor: d must be >= 1");
  const long kmax_order = order / d;
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(kmax_order) + 1);
  v.emplace_back(1);
  if (e >= 0) {
    Int cur = 1;  // C(e, k)
    for (long k = 1; k <= kmax_order && Int(k) <= e; ++k) {
      cur *= e - Int(k - 1);
      cur /= k;
      v.push_back((k % 2 == 0) ? cur : -cur);
    }
  } else {
    const Int a = -e;
    Int cur = 1;  // C(a+k-1, k)
    for (long k = 1; k <= kmax_order; ++k) {
      cur *= a + Int(k - 1);
      cur /= k;
      v.push_back(cur);
    }
  }
  return v;
}

}  // namespace detail

// The series (1 - u^d)^e for signed integer exponent e, truncated at `order`.
// Nonzero coefficients sit only at multiples of d.
template <class Coeff>
TruncatedSeries<Coeff> binomial_factor(int d, const Int& e, int order) {
  const auto values = detail::binomial_factor_values(d, e, order);
  TruncatedSeries<Coeff> s(order);
  for (std::size_t k = 0; k < values.size(); ++k)
    s.set_coeff(static_cast<int>(k) * d, Coeff(values[k]));
  return s;
}

// In-place s *= (1 - u^d)^e, exploiting that the factor is supported on
// multiples of d with constant term 1: descending update, no allocation.
// Equivalent to s = series_mul(s, binomial_factor(d, e, s.order())).
template <class Coeff>
void multiply_by_binomial_factor(TruncatedSeries<Coeff>& s, int d, const Int& e) {
  const int order = s.order();
  const auto values = detail::binomial_factor_values(d, e, order);
  if (values.size() <= 1) return;
  std::vector<Coeff> f;
  f.reserve(values.size());
  for (const Int& v : values) f.emplace_back(v);
  for (int t = order; t >= d; --t) {
    Coeff acc = s.coeff(t);
    const long kmax = std::min<long>(t / d, static_cast<long>(f.size()) - 1);
    for (long k = 1; k <= kmax; ++k) acc += s.coeff(t - static_cast<int>(k) * d) * f[static_cast<std::size_t>(k)];
    s.set_coeff(t, std::move(acc));
  }
}

// s^e by repeated squaring; s^0 = 1 at the same order.
template <class Coeff>
TruncatedSeries<Coeff> series_pow(const TruncatedSeries<Coeff>& s, unsigned long e) {
  TruncatedSeries<Coeff> r = TruncatedSeries<Coeff>::one(s.order());
  if (e == 0) return r;
  TruncatedSeries<Coeff> base = s;
  while (true) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e == 0) break;
    base = base * base;
  }
  return r;
}

}  // namespace orbicount
