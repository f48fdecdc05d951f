#include "rsl/exact.hpp"

namespace rsl {

BigRational make_rational(long num, long den) {
  if (den == 0) throw DivisionError("rational with zero denominator");
  return BigRational(BigInt(num), BigInt(den));
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

BigInt factorial(long n) {
  BigInt r = 1;
  for (long j = 2; j <= n; ++j) r *= j;
  return r;
}

Real to_real(const BigRational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

std::string to_string(const BigRational& q) { return q.str(); }

GaussianRational GaussianRational::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {BigRational(1), BigRational(0)};
    case 1: return {BigRational(0), BigRational(1)};
    case 2: return {BigRational(-1), BigRational(0)};
    default: return {BigRational(0), BigRational(-1)};
  }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionError("Gaussian-rational division by zero");
  BigRational d = o.re * o.re + o.im * o.im;
  BigRational r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

Complex to_complex(const GaussianRational& q) { return Complex(to_real(q.re), to_real(q.im)); }

std::string to_string(const GaussianRational& q) {
  if (q.im == 0) return q.re.str();
  return q.re.str() + (q.im < 0 ? " - " : " + ") + boost::multiprecision::abs(q.im).str() + "i";
}

}  // namespace rsl
