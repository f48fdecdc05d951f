#pragma once

// Working-precision scalars and the trigonometric/hyperbolic building blocks
// shared by every identity in the library.

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "rsl/errors.hpp"

namespace rsl {

/// Arbitrary-precision real. Expression templates are off so that `auto` is
/// safe in generic code that runs over both Real and Complex.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct WorkingPrecision {
  int decimal_digits = 30;
  double tolerance_default = 1e-10;

  /// Throws DomainError unless decimal_digits >= 15 and
  /// tolerance_default >= 10^(3 - decimal_digits).
  void validate() const;

  /// Default precision, with RSL_PRECISION (decimal digits) applied when set.
  static WorkingPrecision from_env();
};

/// Sets the MPFR default precision for the lifetime of the scope and restores
/// the previous value afterwards. Values created inside the scope carry the
/// scope's precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(const WorkingPrecision& wp);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

/// Decimal digits of the precision currently in effect.
int working_digits();

Real pi();
/// 10^(4 - digits): denominators below this (relative) scale count as poles.
Real pole_guard();

/// Complex value at working precision.
struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit widening from Real
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im == 0; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator+(Complex a, const Real& b);
Complex operator-(Complex a, const Real& b);
Complex operator*(Complex a, const Real& b);
Complex operator/(Complex a, const Real& b);
Complex operator+(const Real& a, const Complex& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Real& a, const Complex& b);
Complex operator-(const Complex& a);
bool operator==(const Complex& a, const Complex& b);

Real abs(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
/// exp(i*theta).
Complex polar_unit(const Real& theta);

bool is_finite(const Real& x);
bool is_finite(const Complex& z);
/// Returns z unchanged; throws DomainError naming `what` if a component is not finite.
const Complex& require_finite(const Complex& z, const char* what);

/// [w^0, ..., w^(p-1)] with w = exp(2*pi*i/p). Each element is computed from
/// its own angle 2*pi*k/p; quarter turns are exact.
std::vector<Complex> roots_of_unity(int p);

/// coth(x + iy) as (sinh 2x - i sin 2y) / (cosh 2x - cos 2y). The denominator
/// is formed as 2(sinh^2 x + sin^2 y) so it never cancels.
Complex coth_split(const Real& x, const Real& y);
Complex coth(const Complex& w);

/// coth(n*pi) = 1 + 2/(e^(2*pi*n) - 1), n >= 1.
Real coth_npi(long n);

/// pi*w*coth(pi*w): the Mittag-Leffler base function.
Complex pi_z_coth_pi_z(const Complex& w);

double to_double(const Real& x);
/// Scientific notation with `digits` significant digits.
std::string to_string(const Real& x, int digits);

}  // namespace rsl
