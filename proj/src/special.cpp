#include "rsl/special.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace rsl {

namespace {

std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_cache;  // guarded by bernoulli_mutex

}  // namespace

BigRational bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli: n must be >= 0");
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  auto& b = bernoulli_cache;
  if (b.empty()) b.emplace_back(1);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
  for (long m = static_cast<long>(b.size()); m <= n; ++m) {
    BigRational acc(0);
    BigInt c = 1;  // C(m+1, k)
    for (long k = 0; k < m; ++k) {
      if (b[static_cast<size_t>(k)] != 0) acc += BigRational(c) * b[static_cast<size_t>(k)];
      c = c * (m + 1 - k) / (k + 1);
    }
    b.push_back(-acc / BigRational(m + 1));
  }
  return b[static_cast<size_t>(n)];
}

Real zeta_even(long m) {
  if (m < 0 || m % 2 != 0) {
    throw DomainError("zeta_even: argument must be even and >= 0, got " + std::to_string(m));
  }
  if (m == 0) return Real(-0.5);
  const long half = m / 2;
  const Real two_pi_pow = boost::multiprecision::pow(2 * pi(), m);
  Real value = two_pi_pow * to_real(bernoulli(m)) / (2 * to_real(BigRational(factorial(m))));
  return (half % 2 == 1) ? value : Real(-value);
}

GaussianRational ramanujan_tilde_b(long n) {
  if (n < 0) throw DomainError("ramanujan_tilde_b: n must be >= 0");
  GaussianRational acc;
  for (long k = 0; k <= n; ++k) {
    const BigRational weight = BigRational(binomial(n, k)) * bernoulli(k) * bernoulli(n - k);
    if (weight != 0) acc += GaussianRational::i_pow(k) * GaussianRational(weight);
  }
  return acc;
}

PowerSeries<GaussianRational> ramanujan_gf_coeffs(int order) {
  if (order < 0) throw DomainError("ramanujan_gf_coeffs: order must be >= 0");
  // (e^z - 1)/z and (e^{iz} - 1)/(iz) have coefficients 1/(k+1)! and i^k/(k+1)!.
  PowerSeries<GaussianRational> one(order);
  PowerSeries<GaussianRational> real_den(order);
  PowerSeries<GaussianRational> imag_den(order);
  one[0] = GaussianRational(1);
  BigInt fact = 1;
  for (int k = 0; k <= order; ++k) {
    fact *= k + 1;
    const BigRational inv(BigInt(1), fact);
    real_den[k] = GaussianRational(inv);
    imag_den[k] = GaussianRational::i_pow(k) * GaussianRational(inv);
  }
  return ps_mul(ps_div(one, real_den), ps_div(one, imag_den));
}

Real coth_zeta_sum(long p) {
  if (p < 1) throw DomainError("coth_zeta_sum: p must be >= 1");
  Real acc(0);
  for (long k = 0; k <= 2 * p; ++k) {
    const Real term = zeta_even(2 * k) * zeta_even(4 * p - 2 * k);
    if (k % 2 == 1) acc += term;  // (-1)^(k-1)
    else acc -= term;
  }
  return acc / pi();
}

Real coth_zeta_sum_ramanujan(long p) {
  if (p < 1) throw DomainError("coth_zeta_sum_ramanujan: p must be >= 1");
  const GaussianRational tb = ramanujan_tilde_b(4 * p);
  if (!tb.is_real()) throw ContractError("B~_{4p} has a nonzero imaginary part");
  const Real two_pi = 2 * pi();
  return -boost::multiprecision::pow(two_pi, 4 * p) * to_real(tb.re) /
         (4 * pi() * to_real(BigRational(factorial(4 * p))));
}

SumResult<Real> zeta_direct(const Real& s, double tol) {
  if (s <= 1) throw DomainError("zeta_direct: s must be > 1 (series diverges)");
  if (!(tol > 0)) throw DomainError("zeta_direct: tol must be positive");
  const double sd = to_double(s);
  // Bracket half-width is below N^-s / 2.
  const double n_real = std::ceil(std::pow(2.0 * tol, -1.0 / sd));
  if (!(n_real < 1e8)) throw NonconvergenceError("zeta_direct: too many terms for this tolerance");
  const long n_last = std::max(1L, static_cast<long>(n_real));
  Real acc(0);
  for (long n = 1; n <= n_last; ++n) acc += boost::multiprecision::exp(-s * log(Real(n)));
  const Real upper = boost::multiprecision::pow(Real(n_last), 1 - s) / (s - 1);
  const Real lower = boost::multiprecision::pow(Real(n_last + 1), 1 - s) / (s - 1);
  SumResult<Real> r;
  r.value = acc + (upper + lower) / 2;
  r.terms_used = n_last;
  r.tail_bound = to_double((upper - lower) / 2);
  return r;
}

Real coth_zeta_sum_direct(const Real& s) {
  if (s <= 1) throw DomainError("coth_zeta_sum_direct: s must be > 1 (series diverges)");
  const double precision_tol = std::pow(10.0, -working_digits() - 2);
  Real zeta;
  const bool even_integer = s == boost::multiprecision::floor(s) && s.convert_to<long>() % 2 == 0;
  if (even_integer) {
    zeta = zeta_even(s.convert_to<long>());
  } else {
    // Relative accuracy well below 1e-12 for every s > 1 used here.
    zeta = zeta_direct(s, 1e-15).value;
  }
  const Real two_pi = 2 * pi();
  const double q = std::exp(-2 * M_PI);
  auto term = [&](long n) {
    return Real(2 / ((boost::multiprecision::exp(two_pi * n) - 1) *
                     boost::multiprecision::pow(Real(n), s)));
  };
  // 2/((e^{2 pi n}-1) n^s) <= 2.004 e^{-2 pi n} for n >= 1.
  auto bound = [&](long n) { return 2.004 * std::pow(q, static_cast<double>(n + 1)) / (1 - q); };
  const auto residual = sum_adaptive<Real>(term, bound, precision_tol);
  return zeta + residual.value;
}

}  // namespace rsl
