#include "rsl/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace rsl {

void WorkingPrecision::validate() const {
  if (decimal_digits < 15) {
    throw DomainError("working precision needs at least 15 decimal digits, got " +
                      std::to_string(decimal_digits));
  }
  if (!(tolerance_default >= std::pow(10.0, 3 - decimal_digits))) {
    throw DomainError("default tolerance is finer than the working precision supports");
  }
}

WorkingPrecision WorkingPrecision::from_env() {
  WorkingPrecision wp;
  if (const char* env = std::getenv("RSL_PRECISION"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long digits = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') {
      throw DomainError(std::string("RSL_PRECISION is not an integer: ") + env);
    }
    wp.decimal_digits = static_cast<int>(digits);
  }
  wp.validate();
  return wp;
}

PrecisionScope::PrecisionScope(const WorkingPrecision& wp) : previous_(Real::default_precision()) {
  wp.validate();
  Real::default_precision(static_cast<unsigned>(wp.decimal_digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

int working_digits() { return static_cast<int>(Real::default_precision()); }

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real pole_guard() { return boost::multiprecision::pow(Real(10), 4 - working_digits()); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.im == 0) {
    if (o.re == 0) throw SingularityError("complex division by zero");
    re /= o.re;
    im /= o.re;
    return *this;
  }
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }

Complex operator+(Complex a, const Real& b) {
  a.re += b;
  return a;
}
Complex operator-(Complex a, const Real& b) {
  a.re -= b;
  return a;
}
Complex operator*(Complex a, const Real& b) {
  a.re *= b;
  a.im *= b;
  return a;
}
Complex operator/(Complex a, const Real& b) {
  if (b == 0) throw SingularityError("complex division by zero");
  a.re /= b;
  a.im /= b;
  return a;
}
Complex operator+(const Real& a, const Complex& b) { return b + a; }
Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re, -b.im); }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  if (z.im == 0) return Complex(m);
  return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

Complex sin(const Complex& z) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  if (z.im == 0) return Complex(sin(z.re));
  return Complex(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}

Complex cos(const Complex& z) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  if (z.im == 0) return Complex(cos(z.re));
  return Complex(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im));
}

Complex sinh(const Complex& z) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  if (z.im == 0) return Complex(sinh(z.re));
  return Complex(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im));
}

Complex cosh(const Complex& z) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  if (z.im == 0) return Complex(cosh(z.re));
  return Complex(cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im));
}

Complex polar_unit(const Real& theta) {
  return Complex(boost::multiprecision::cos(theta), boost::multiprecision::sin(theta));
}

bool is_finite(const Real& x) { return boost::multiprecision::isfinite(x); }
bool is_finite(const Complex& z) { return is_finite(z.re) && is_finite(z.im); }

const Complex& require_finite(const Complex& z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string("non-finite value produced by ") + what);
  return z;
}

std::vector<Complex> roots_of_unity(int p) {
  if (p <= 0) throw DomainError("roots_of_unity: p must be >= 1, got " + std::to_string(p));
  std::vector<Complex> roots;
  roots.reserve(static_cast<size_t>(p));
  const Real two_pi = 2 * pi();
  for (int k = 0; k < p; ++k) {
    // Reduce k/p to lowest terms; exact values on the axes.
    const int g = std::gcd(k, p);
    const int num = k / g;
    const int den = p / g;
    if (den == 1) {
      roots.emplace_back(Real(1), Real(0));
    } else if (den == 2) {
      roots.emplace_back(Real(-1), Real(0));
    } else if (den == 4) {
      roots.emplace_back(Real(0), Real(num == 1 ? 1 : -1));
    } else {
      roots.push_back(polar_unit(two_pi * num / den));
    }
  }
  return roots;
}

Complex coth_split(const Real& x, const Real& y) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  const Real sh = sinh(x);
  const Real s = sin(y);
  const Real denom = 2 * (sh * sh + s * s);  // cosh 2x - cos 2y
  Complex num(2 * sh * cosh(x), -2 * s * cos(y));
  Real scale = abs(num);
  if (scale < 1) scale = 1;
  if (denom <= pole_guard() * scale) {
    throw SingularityError("coth evaluated at a pole (x=" + to_string(x, 12) +
                           ", y=" + to_string(y, 12) + ")");
  }
  return num / denom;
}

Complex coth(const Complex& w) { return coth_split(w.re, w.im); }

Real coth_npi(long n) {
  if (n <= 0) throw DomainError("coth_npi: n must be >= 1, got " + std::to_string(n));
  return 1 + 2 / (boost::multiprecision::exp(2 * pi() * n) - 1);
}

Complex pi_z_coth_pi_z(const Complex& w) {
  if (w.re == 0 && w.im == 0) return Complex(Real(1));
  const Real p = pi();
  return (p * w) * coth(w * p);
}

double to_double(const Real& x) { return x.convert_to<double>(); }

std::string to_string(const Real& x, int digits) {
  return x.str(static_cast<std::streamsize>(std::max(digits, 1) - 1), std::ios_base::scientific);
}

}  // namespace rsl
