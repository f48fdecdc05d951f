#pragma once

// Bernoulli numbers, even zeta values, Ramanujan polynomials and the
// hyperbolic "double zeta" sums  sum_n coth(n pi) / n^s.

#include "rsl/exact.hpp"
#include "rsl/numerics.hpp"
#include "rsl/series.hpp"

namespace rsl {

/// Exact B_n with B_1 = -1/2 (coefficients of z/(e^z - 1)). Memoized; safe to
/// call from several threads.
BigRational bernoulli(long n);

/// zeta(m) for even m >= 0 from B_m; zeta(0) = -1/2. Odd m is a DomainError.
Real zeta_even(long m);

/// B~_n = sum_k C(n,k) i^k B_k B_{n-k}.
GaussianRational ramanujan_tilde_b(long n);

/// Taylor coefficients of (z/(e^z - 1)) (iz/(e^{iz} - 1)) through z^order,
/// obtained by exact series division and multiplication. Coefficient n is
/// B~_n / n!.
PowerSeries<GaussianRational> ramanujan_gf_coeffs(int order);

/// sum_{n>=1} coth(n pi)/n^(4p-1) from the finite even-zeta combination
/// (1/pi) sum_{k=0}^{2p} (-1)^(k-1) zeta(2k) zeta(4p-2k).
Real coth_zeta_sum(long p);

/// The same sum as -(2 pi)^(4p) / (4 pi (4p)!) * B~_{4p}.
Real coth_zeta_sum_ramanujan(long p);

/// zeta(s) + sum_n 2 / ((e^(2 pi n) - 1) n^s) for real s > 1. Non-even s uses
/// zeta_direct for the zeta term.
Real coth_zeta_sum_direct(const Real& s);

/// zeta(s), s > 1, by direct summation of n^-s to N with the integral-test
/// bracket [(N+1)^(1-s), N^(1-s)] / (s-1) for the remainder; the midpoint of
/// the bracket is added and the reported bound is its half-width.
SumResult<Real> zeta_direct(const Real& s, double tol);

}  // namespace rsl
