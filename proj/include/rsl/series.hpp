#pragma once

// Truncated power series, multisection (by evaluation and by coefficient
// extraction), and certified summation of infinite series.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rsl/errors.hpp"
#include "rsl/exact.hpp"
#include "rsl/numerics.hpp"

namespace rsl {

/// Coefficients c_0..c_order of a series truncated at degree `order`.
/// The coefficient type is fixed at construction; an exact series only
/// becomes numeric through an explicit evaluate().
template <class C>
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(checked_size(order)) {}
  explicit PowerSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("power series needs at least one coefficient");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int n) const { return coeffs_.at(static_cast<size_t>(n)); }
  C& operator[](int n) { return coeffs_.at(static_cast<size_t>(n)); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  PowerSeries truncated(int order) const {
    if (order > this->order()) throw DomainError("cannot extend a truncated series");
    return PowerSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static size_t checked_size(int order) {
    if (order < 0) throw DomainError("power series order must be >= 0");
    return static_cast<size_t>(order) + 1;
  }

  std::vector<C> coeffs_;
};

/// Keeps coefficients with index congruent to q mod p, zeroes the rest.
template <class C>
PowerSeries<C> multisect_coeffs(const PowerSeries<C>& s, int p, int q) {
  if (p < 1 || q < 0 || q >= p) throw DomainError("multisection needs p >= 1 and 0 <= q < p");
  PowerSeries<C> out(s.order());
  for (int n = q; n <= s.order(); n += p) out[n] = s[n];
  return out;
}

/// Cauchy product truncated to min(a.order, b.order).
template <class C>
PowerSeries<C> ps_mul(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries<C> out(order);
  for (int n = 0; n <= order; ++n) {
    C acc{};
    for (int k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out[n] = std::move(acc);
  }
  return out;
}

/// Quotient q with ps_mul(q, b) == a to the common order. b[0] must be nonzero.
template <class C>
PowerSeries<C> ps_div(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  if (b[0] == C{}) throw DivisionError("series division by a series with zero constant term");
  const int order = std::min(a.order(), b.order());
  PowerSeries<C> out(order);
  for (int n = 0; n <= order; ++n) {
    C acc = a[n];
    for (int k = 1; k <= n; ++k) acc -= b[k] * out[n - k];
    out[n] = acc / b[0];
  }
  return out;
}

template <class C>
PowerSeries<C> ps_add(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries<C> out(order);
  for (int n = 0; n <= order; ++n) out[n] = a[n] + b[n];
  return out;
}

template <class C>
PowerSeries<C> ps_sub(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries<C> out(order);
  for (int n = 0; n <= order; ++n) out[n] = a[n] - b[n];
  return out;
}

template <class C, class S>
PowerSeries<C> ps_scale(const PowerSeries<C>& a, const S& factor) {
  PowerSeries<C> out(a.order());
  for (int n = 0; n <= a.order(); ++n) out[n] = a[n] * factor;
  return out;
}

/// Drops the first `shift` coefficients (division by z^shift of a series
/// known to vanish to that order). The order shrinks accordingly.
template <class C>
PowerSeries<C> ps_shift_down(const PowerSeries<C>& a, int shift) {
  if (shift < 0 || shift > a.order()) throw DomainError("invalid series shift");
  return PowerSeries<C>(std::vector<C>(a.coeffs().begin() + shift, a.coeffs().end()));
}

/// Horner evaluation of a numeric series at a Real or Complex point.
template <class T>
T evaluate(const PowerSeries<Real>& s, const T& x) {
  T acc = T(s[s.order()]);
  for (int n = s.order() - 1; n >= 0; --n) acc = acc * x + s[n];
  return acc;
}

Complex evaluate(const PowerSeries<Complex>& s, const Complex& z);
/// Numeric evaluation of an exact series; coefficients are converted here and nowhere earlier.
Complex evaluate(const PowerSeries<GaussianRational>& s, const Complex& z);

/// (1/p) * sum_k w^(-kq) f(z w^k), w = exp(2 pi i / p): the terms of f with
/// index congruent to q mod p. A SingularityError raised by f is rethrown
/// with the rotated point attached.
Complex multisect_eval(const std::function<Complex(const Complex&)>& f, int p, int q,
                       const Complex& z);

template <class T>
struct SumResult {
  T value;
  long terms_used = 0;
  double tail_bound = 0.0;
};

struct SumOptions {
  long first = 1;
  long hard_cap = 100'000'000;
};

/// Sums term(first..N) for the smallest N with tail_bound(N) <= tol, where
/// tail_bound(N) bounds |sum_{n>N} term(n)| and is non-increasing in N. A
/// bound may return +inf for N too small for it to apply.
template <class T>
SumResult<T> sum_adaptive(const std::function<T(long)>& term,
                          const std::function<double(long)>& tail_bound, double tol,
                          SumOptions opts = {}) {
  long n_last = opts.first - 1;
  if (!(tail_bound(n_last) <= tol)) {
    long lo = n_last;  // bound(lo) > tol
    long hi = std::max(opts.first, 1L);
    while (!(tail_bound(hi) <= tol)) {
      if (hi >= opts.hard_cap) {
        throw NonconvergenceError("series did not reach tolerance within " +
                                  std::to_string(opts.hard_cap) + " terms");
      }
      lo = hi;
      hi = std::min(hi * 2, opts.hard_cap);
    }
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      if (tail_bound(mid) <= tol) hi = mid;
      else lo = mid;
    }
    n_last = hi;
  }
  SumResult<T> result{T{}, 0, tail_bound(n_last)};
  for (long n = opts.first; n <= n_last; ++n) result.value += term(n);
  result.terms_used = std::max(0L, n_last - opts.first + 1);
  return result;
}

/// Sums an alternating series from k0 by consecutive (even, odd) pairs; an
/// odd k0 contributes its first term on its own. Stops once the first
/// omitted term is at most tol and no larger than its predecessor; that term
/// bounds the remainder. Same-sign consecutive nonzero terms are a
/// ContractError.
SumResult<Real> sum_alternating_paired(const std::function<Real(long)>& term, long k0, double tol,
                                       long hard_cap = 100'000'000);

}  // namespace rsl
