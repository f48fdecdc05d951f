#pragma once

// Exact rational and Gaussian-rational scalars. These are the coefficient
// types for every Bernoulli / Ramanujan-polynomial computation.

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "rsl/numerics.hpp"

namespace rsl {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
/// Always canonical: positive denominator, numerator and denominator coprime.
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

BigRational make_rational(long num, long den = 1);
BigInt binomial(long n, long k);
BigInt factorial(long n);
Real to_real(const BigRational& q);
std::string to_string(const BigRational& q);

/// re + i*im with exact rational parts.
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(BigRational r) : re(std::move(r)), im(0) {}  // NOLINT: implicit widening
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r), im(0) {}  // NOLINT

  static GaussianRational i_unit() { return {BigRational(0), BigRational(1)}; }
  /// i^k for any integer k.
  static GaussianRational i_pow(long k);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator*(GaussianRational a, const GaussianRational& b);
GaussianRational operator/(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
bool operator==(const GaussianRational& a, const GaussianRational& b);

Complex to_complex(const GaussianRational& q);
std::string to_string(const GaussianRational& q);

}  // namespace rsl
