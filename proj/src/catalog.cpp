#include "rsl/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <type_traits>

#include "rsl/series.hpp"
#include "rsl/special.hpp"

namespace rsl::catalog {

namespace {

namespace bmp = boost::multiprecision;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLaurentOrder = 44;

template <class T>
struct Part {
  T value;
  long terms = 0;
};

template <class T>
constexpr bool is_real_v = std::is_same_v<T, Real>;

double mag(const Real& x) { return to_double(bmp::abs(x)); }
double mag(const Complex& z) { return to_double(abs(z)); }

Real sqrt3() { return bmp::sqrt(Real(3)); }
Real pi2() { return pi() * pi(); }

double cube(long n) {
  const double d = static_cast<double>(n);
  return d * d * d;
}

// The Kummer remainders below are bounded once every omitted n satisfies n >= 2|z|.
bool past_kummer_start(long n_last, double r) { return static_cast<double>(n_last + 1) >= 2 * r; }

template <class T>
void check_pole(const T& den, const T& num) {
  const double scale = std::max(1.0, mag(num));
  if (mag(den) <= to_double(pole_guard()) * scale) {
    throw SingularityError("denominator vanishes (pole of the identity)");
  }
}

// cosh(2a) - cos(2b) as 2(sinh^2 a + sin^2 b).
template <class T>
T cosh_minus_cos_half(const T& a, const T& b) {
  const T sa = sinh(a);
  const T sb = sin(b);
  return 2 * (sa * sa + sb * sb);
}

template <class T>
T sum_value(const std::function<T(long)>& term, const std::function<double(long)>& bound,
            double tol, long& terms) {
  const SumResult<T> s = sum_adaptive<T>(term, bound, tol);
  terms += s.terms_used;
  return s.value;
}

/// sum_k coef(k) w^k until bound(K) (a bound on the tail after index K) is below tol.
template <class T>
Part<T> power_sum(const std::function<Real(long)>& coef, const T& w,
                  const std::function<double(long)>& bound, double tol) {
  constexpr long kMaxTerms = 10'000;
  Part<T> out{T(Real(0)), 0};
  T power = T(Real(1));
  for (long k = 0;; ++k) {
    out.value += coef(k) * power;
    out.terms = k + 1;
    if (bound(k) <= tol) return out;
    if (k >= kMaxTerms) throw NonconvergenceError("power series tail did not reach tolerance");
    power = power * w;
  }
}

double geometric_tail(double lead, double ratio, long k_last) {
  if (!(ratio < 1)) return kInf;
  return lead * std::pow(ratio, static_cast<double>(k_last + 1)) / (1 - ratio);
}

// ---------------------------------------------------------------------------
// Left sides, written as displayed with x = pi z.

template <class T>
Part<T> lhs_entry13(const T& z, double) {
  const T x = pi() * z;
  const T num = sinh(2 * x) + sin(2 * x);
  const T den = cosh_minus_cos_half(x, x);
  check_pole(den, num);
  return {pi() * num / (8 * z * z * z * den), 0};
}

template <class T>
T den_a(const T& x) {  // cosh x - cos(sqrt3 x)
  return cosh_minus_cos_half(T(x / 2), T(sqrt3() * x / 2));
}

template <class T>
T den_e(const T& x) {  // cosh(sqrt3 x) - cos x
  return cosh_minus_cos_half(T(sqrt3() * x / 2), T(x / 2));
}

template <class T>
Part<T> lhs_t1a(const T& z, double) {
  const T x = pi() * z;
  const T h = x / 2;
  const T s = sqrt3() * x / 2;
  const T num = sqrt3() * cosh(h) * sin(s) + cos(s) * sinh(h);
  const T den = den_a(x);
  check_pole(den, num);
  return {x * num / den, 0};
}

template <class T>
Part<T> lhs_t1b(const T& z, double) {
  const T x = pi() * z;
  const T num = cos(T(sqrt3() * x / 2)) * sinh(T(x / 2));
  const T den = den_a(x);
  check_pole(den, num);
  return {4 * x * num / den, 0};
}

template <class T>
Part<T> lhs_t1c(const T& z, double) {
  const T x = pi() * z;
  const T a = sqrt3() * x;
  // 1 - cos a cosh x = 2 sin^2(a/2) - 2 cos a sinh^2(x/2)
  const T sa = sin(T(a / 2));
  const T sh = sinh(T(x / 2));
  const T num = 2 * sa * sa - 2 * cos(a) * sh * sh;
  const T den = den_a(x);
  check_pole(den, num);
  return {4 * pi2() * num / (den * den), 0};
}

template <class T>
Part<T> lhs_t1d(const T& z, double) {
  const T x = pi() * z;
  const T num = sqrt3() * sin(T(sqrt3() * x)) + sinh(x);
  const T den = den_a(x);
  check_pole(den, num);
  return {x * num / (2 * den), 0};
}

template <class T>
Part<T> lhs_t1e(const T& z, double) {
  const T x = pi() * z;
  const T num = sinh(T(sqrt3() * x)) - sqrt3() * sin(x);
  const T den = den_e(x);
  check_pole(den, num);
  return {pi() * num / (2 * sqrt3() * z * den), 0};
}

template <class T>
Part<T> lhs_t1f(const T& z, double) {
  const T x = pi() * z;
  const T num = sinh(2 * x) - sin(2 * x);
  const T den = cosh_minus_cos_half(x, x);
  check_pole(den, num);
  return {pi() * num / (4 * z * den), 0};
}

template <class T>
Part<T> lhs_truly(const T& z, double) {
  const T x = pi() * z;
  const T y = sqrt3() * x;
  const T num = sin(x) * sin(y) + sinh(x) * sinh(y);
  // (cos y - cosh x)(cos x - cosh y): both factors are negated stable differences.
  const T den = den_a(x) * den_e(x);
  check_pole(den, num);
  return {pi() * num / (sqrt3() * z * z * den), 0};
}

template <class T>
Part<T> lhs_zgf1(const T& z, double tol) {
  const Part<T> full = lhs_entry13(z, tol);
  const T z2 = z * z;
  return {full.value - Real(1) / (8 * z2 * z2), 0};
}

template <class T>
Part<T> lhs_zgf3(const T& z, double) {
  const T x = pi() * z;
  const T num = sinh(T(sqrt3() * x)) - sqrt3() * sin(x);
  const T den = den_e(x);
  check_pole(den, num);
  return {pi() * num / (4 * z * den), 0};
}

template <class T>
Part<T> lhs_zgf4(const T& z, double) {
  const T x = pi() * z;
  const T num = sqrt3() * sin(T(sqrt3() * x)) + sinh(x);
  const T den = den_a(x);
  check_pole(den, num);
  return {x * num / den, 0};
}

template <class T>
Part<T> lhs_zgf5(const T& z, double tol) {
  const Part<T> full = lhs_truly(z, tol);
  const T z2 = z * z;
  return {full.value - Real(1) / (2 * pi() * z2 * z2), 0};
}

template <class T>
Part<T> lhs_mittag(const T& z, double) {
  if constexpr (is_real_v<T>) {
    if (z == 0) return {Real(1), 0};
    const Real x = pi() * z;
    return {x * bmp::cosh(x) / bmp::sinh(x), 0};
  } else {
    return {pi_z_coth_pi_z(z), 0};
  }
}

// ---------------------------------------------------------------------------
// Laurent expansions of the left sides in x = pi z, used below the Taylor threshold.

enum class Fn { sin, cos, sinh, cosh };

PowerSeries<Real> fn_series(Fn f, const Real& a, int order) {
  PowerSeries<Real> s(order);
  Real scaled(1);  // a^k / k!
  for (int k = 0; k <= order; ++k) {
    const bool odd = k % 2 == 1;
    switch (f) {
      case Fn::sin:
        if (odd) s[k] = ((k - 1) / 2) % 2 == 0 ? scaled : Real(-scaled);
        break;
      case Fn::cos:
        if (!odd) s[k] = (k / 2) % 2 == 0 ? scaled : Real(-scaled);
        break;
      case Fn::sinh:
        if (odd) s[k] = scaled;
        break;
      case Fn::cosh:
        if (!odd) s[k] = scaled;
        break;
    }
    scaled = scaled * a / (k + 1);
  }
  return s;
}

PowerSeries<Real> constant_series(const Real& c, int order) {
  PowerSeries<Real> s(order);
  s[0] = c;
  return s;
}

/// value(x) = sum_k c[k] x^(k + valuation).
struct Laurent {
  int valuation = 0;
  PowerSeries<Real> c{0};

  /// scale * x^power * N(x)/D(x) where N, D vanish to orders vn, vd at 0.
  static Laurent ratio(const Real& scale, int power, const PowerSeries<Real>& n, int vn,
                       const PowerSeries<Real>& d, int vd) {
    Laurent out;
    out.valuation = power + vn - vd;
    out.c = ps_scale(ps_div(ps_shift_down(n, vn), ps_shift_down(d, vd)), scale);
    return out;
  }

  /// Removes the first k coefficients, which the caller knows to be zero.
  Laurent drop_leading(int k) const { return {valuation + k, ps_shift_down(c, k)}; }

  template <class T>
  T eval(const T& x) const {
    T value = evaluate(c, x);
    if (valuation >= 0) {
      for (int k = 0; k < valuation; ++k) value = value * x;
    } else {
      if (mag(x) == 0) throw SingularityError("Laurent expansion evaluated at its pole");
      for (int k = 0; k < -valuation; ++k) value = value / x;
    }
    return value;
  }
};

// cosh(a x) - cos(b x) and its square-free friends.
PowerSeries<Real> cosh_minus_cos(const Real& a, const Real& b, int order) {
  return ps_sub(fn_series(Fn::cosh, a, order), fn_series(Fn::cos, b, order));
}

Laurent laurent_entry13() {
  const int K = kLaurentOrder;
  const auto n = ps_add(fn_series(Fn::sinh, Real(2), K), fn_series(Fn::sin, Real(2), K));
  const auto d = cosh_minus_cos(Real(2), Real(2), K);
  const Real p = pi();
  return Laurent::ratio(p * p * p * p / 8, -3, n, 1, d, 2);
}

Laurent laurent_t1a() {
  const int K = kLaurentOrder;
  const Real h(Real(1) / 2);
  const Real s = sqrt3() / 2;
  const auto n = ps_add(ps_scale(ps_mul(fn_series(Fn::cosh, h, K), fn_series(Fn::sin, s, K)),
                                 sqrt3()),
                        ps_mul(fn_series(Fn::cos, s, K), fn_series(Fn::sinh, h, K)));
  return Laurent::ratio(Real(1), 1, n, 1, cosh_minus_cos(Real(1), sqrt3(), K), 2);
}

Laurent laurent_t1b() {
  const int K = kLaurentOrder;
  const auto n = ps_mul(fn_series(Fn::cos, sqrt3() / 2, K), fn_series(Fn::sinh, Real(0.5), K));
  return Laurent::ratio(Real(4), 1, n, 1, cosh_minus_cos(Real(1), sqrt3(), K), 2);
}

Laurent laurent_t1c() {
  const int K = kLaurentOrder;
  const auto n = ps_sub(constant_series(Real(1), K),
                        ps_mul(fn_series(Fn::cos, sqrt3(), K), fn_series(Fn::cosh, Real(1), K)));
  const auto d = cosh_minus_cos(Real(1), sqrt3(), K);
  return Laurent::ratio(4 * pi2(), 0, n, 2, ps_mul(d, d), 4);
}

PowerSeries<Real> num_d(int order) {  // sqrt3 sin(sqrt3 x) + sinh x
  return ps_add(ps_scale(fn_series(Fn::sin, sqrt3(), order), sqrt3()),
                fn_series(Fn::sinh, Real(1), order));
}

PowerSeries<Real> num_e(int order) {  // sinh(sqrt3 x) - sqrt3 sin x
  return ps_sub(fn_series(Fn::sinh, sqrt3(), order),
                ps_scale(fn_series(Fn::sin, Real(1), order), sqrt3()));
}

Laurent laurent_t1d() {
  const int K = kLaurentOrder;
  return Laurent::ratio(Real(0.5), 1, num_d(K), 1, cosh_minus_cos(Real(1), sqrt3(), K), 2);
}

Laurent laurent_t1e() {
  const int K = kLaurentOrder;
  return Laurent::ratio(pi2() / (2 * sqrt3()), -1, num_e(K), 3,
                        cosh_minus_cos(sqrt3(), Real(1), K), 2);
}

Laurent laurent_t1f() {
  const int K = kLaurentOrder;
  const auto n = ps_sub(fn_series(Fn::sinh, Real(2), K), fn_series(Fn::sin, Real(2), K));
  return Laurent::ratio(pi2() / 4, -1, n, 3, cosh_minus_cos(Real(2), Real(2), K), 2);
}

Laurent laurent_truly() {
  const int K = kLaurentOrder;
  const auto n = ps_add(ps_mul(fn_series(Fn::sin, Real(1), K), fn_series(Fn::sin, sqrt3(), K)),
                        ps_mul(fn_series(Fn::sinh, Real(1), K), fn_series(Fn::sinh, sqrt3(), K)));
  const auto d = ps_mul(cosh_minus_cos(Real(1), sqrt3(), K), cosh_minus_cos(sqrt3(), Real(1), K));
  return Laurent::ratio(pi() * pi2() / sqrt3(), -2, n, 2, d, 4);
}

// lhs - c/x^4 for a Laurent series starting at x^-4 whose x^-3..x^-1 terms vanish.
Laurent subtract_quartic_pole(Laurent full, const Real& c) {
  if (full.valuation != -4) throw ContractError("expected a fourth-order pole");
  full.c[0] -= c;
  return full.drop_leading(4);
}

Laurent laurent_zgf1() {
  const Real p = pi();
  return subtract_quartic_pole(laurent_entry13(), p * p * p * p / 8);
}

Laurent laurent_zgf3() {
  const int K = kLaurentOrder;
  return Laurent::ratio(pi2() / 4, -1, num_e(K), 3, cosh_minus_cos(sqrt3(), Real(1), K), 2);
}

Laurent laurent_zgf4() {
  const int K = kLaurentOrder;
  return Laurent::ratio(Real(1), 1, num_d(K), 1, cosh_minus_cos(Real(1), sqrt3(), K), 2);
}

Laurent laurent_zgf5() {
  const Real p = pi();
  return subtract_quartic_pole(laurent_truly(), p * p * p / 2);
}

Laurent laurent_mittag() {
  const int K = kLaurentOrder;
  return Laurent::ratio(Real(1), 1, fn_series(Fn::cosh, Real(1), K), 0,
                        fn_series(Fn::sinh, Real(1), K), 1);
}

// ---------------------------------------------------------------------------
// Right sides. Slowly convergent tails are accelerated by subtracting the
// 1/n^2 part in closed form; every remaining tail has an explicit bound.

template <class T>
Part<T> rhs_entry13(const T& z, double tol) {
  const T z2 = z * z;
  const T four_z4 = 4 * z2 * z2;
  const double r = mag(z);
  std::function<T(long)> term = [&](long n) {
    const Real n2(n * n);
    return T(Real(1) / (four_z4 + n2 * n2));
  };
  std::function<double(long)> bound = [&](long n_last) {
    if (is_real_v<T>) return 1.0 / (3.0 * cube(n_last));
    // |4z^4 + n^4| >= 3n^4/4 once n >= 2|z|.
    return past_kummer_start(n_last, r) ? 4.0 / (9.0 * cube(n_last)) : kInf;
  };
  long terms = 0;
  const T s = sum_value(term, bound, tol, terms);
  return {T(Real(1) / (8 * z2 * z2)) + s, terms};
}

// sum_{n>=1} sign(n) * z^2 (n^2 + z^2) / (n^2 (n^4 - n^2 z^2 + z^4)) with
// sign(n) = (-1)^n when alternating; |term| <= 1.8182 |z|^2 / n^4 past the start.
template <class T>
T remainder_minus(const T& z2, bool alternating, double tol, long& terms) {
  const T z4 = z2 * z2;
  const double r2 = mag(z2);
  std::function<T(long)> term = [&](long n) {
    const Real n2(n * n);
    const T v = z2 * (z2 + n2) / (n2 * (z4 - n2 * z2 + n2 * n2));
    return (alternating && n % 2 == 1) ? T(-v) : v;
  };
  std::function<double(long)> bound = [&](long n_last) {
    return past_kummer_start(n_last, std::sqrt(r2)) ? 1.8182 * r2 / (3.0 * cube(n_last)) : kInf;
  };
  return sum_value(term, bound, tol, terms);
}

template <class T>
Part<T> rhs_t1a(const T& z, double tol) {
  // (2z^2 - n^2)/D = -1/n^2 + z^2(n^2 + z^2)/(n^2 D), sum (-1)^n/n^2 = -pi^2/12.
  const T z2 = z * z;
  long terms = 0;
  const T s = remainder_minus(z2, true, tol / std::max(1.0, mag(z2)), terms);
  return {Real(1) + z2 * (pi2() / 12 + s), terms};
}

template <class T>
Part<T> rhs_t1b(const T& z, double tol) {
  // (z^2 + n^2)/D = 1/n^2 + z^2(2n^2 - z^2)/(n^2 D).
  const T z2 = z * z;
  const T z4 = z2 * z2;
  const double r = mag(z);
  std::function<T(long)> term = [&](long n) {
    const Real n2(n * n);
    const T v = z2 * (2 * n2 - z2) / (n2 * (z4 - n2 * z2 + n2 * n2));
    return n % 2 == 1 ? T(-v) : v;
  };
  std::function<double(long)> bound = [&](long n_last) {
    return past_kummer_start(n_last, r) ? 3.2728 * r * r / (3.0 * cube(n_last)) : kInf;
  };
  long terms = 0;
  const T s = sum_value(term, bound, tol / (2 * std::max(1.0, r * r)), terms);
  return {Real(1) + 2 * z2 * (s - pi2() / 12), terms};
}

template <class T>
Part<T> rhs_t1c(const T& z, double tol) {
  // Summand for n != 0 is 2/n^2 + (3n^4 z^2 - 11 n^2 z^4 + 5 z^6 - 2 z^8/n^2)/D^2;
  // the n = 0 term is 1/z^2.
  const T z2 = z * z;
  const T z4 = z2 * z2;
  const T z6 = z4 * z2;
  const T z8 = z4 * z4;
  const double r = mag(z);
  std::function<T(long)> term = [&](long n) {
    const Real n2(n * n);
    const Real n4 = n2 * n2;
    const T d = z4 - n2 * z2 + n4;
    const T num = 3 * n4 * z2 - 11 * n2 * z4 + 5 * z6 - 2 * z8 / n2;
    return T(num / (d * d));
  };
  std::function<double(long)> bound = [&](long n_last) {
    return past_kummer_start(n_last, r) ? 13.0 * r * r / (3.0 * cube(n_last)) : kInf;
  };
  long terms = 0;
  const T s = sum_value(term, bound, tol / 2, terms);
  return {Real(1) / z2 + 2 * pi2() / 3 + 2 * s, terms};
}

template <class T>
Part<T> rhs_t1d(const T& z, double tol) {
  const T z2 = z * z;
  long terms = 0;
  const T s = remainder_minus(z2, false, tol / std::max(1.0, mag(z2)), terms);
  return {Real(1) + z2 * (s - pi2() / 6), terms};
}

template <class T>
Part<T> rhs_t1e(const T& z, double tol) {
  // n^2/D' = 1/n^2 - z^2(n^2 + z^2)/(n^2 D'), D' = n^4 + n^2 z^2 + z^4; the n = 0 term is 0.
  const T z2 = z * z;
  const T z4 = z2 * z2;
  const double r = mag(z);
  std::function<T(long)> term = [&](long n) {
    const Real n2(n * n);
    return T((z2 + n2) / (n2 * (z4 + n2 * z2 + n2 * n2)));
  };
  std::function<double(long)> bound = [&](long n_last) {
    return past_kummer_start(n_last, r) ? 1.8182 / (3.0 * cube(n_last)) : kInf;
  };
  long terms = 0;
  const T s = sum_value(term, bound, tol / std::max(1.0, r * r), terms);
  return {pi2() / 6 - z2 * s, terms};
}

template <class T>
Part<T> rhs_t1f(const T& z, double tol) {
  // n^2/(4z^4 + n^4) = 1/n^2 - 4z^4/(n^2 (4z^4 + n^4)).
  const T z2 = z * z;
  const T four_z4 = 4 * z2 * z2;
  const double r = mag(z);
  std::function<T(long)> term = [&](long n) {
    const Real n2(n * n);
    return T(Real(1) / (n2 * (four_z4 + n2 * n2)));
  };
  std::function<double(long)> bound = [&](long n_last) {
    const double n5 = cube(n_last) * static_cast<double>(n_last) * static_cast<double>(n_last);
    if (is_real_v<T>) return 1.0 / (5.0 * n5);
    return past_kummer_start(n_last, r) ? (4.0 / 3.0) / (5.0 * n5) : kInf;
  };
  long terms = 0;
  const T s = sum_value(term, bound, tol / std::max(1.0, 4 * r * r * r * r), terms);
  return {pi2() / 6 - four_z4 * s, terms};
}

template <class T>
Part<T> rhs_truly(const T& z, double tol) {
  // n (1/D+ + 1/D-) = 2/n^3 - 2z^8/(n^3 P), P = n^8 + n^4 z^4 + z^8, and
  // sum coth(n pi)/n^3 has a closed form.
  const T z2 = z * z;
  const T z4 = z2 * z2;
  const T z8 = z4 * z4;
  const double r = mag(z);
  const double r8 = std::pow(r, 8);
  std::function<T(long)> term = [&](long n) {
    const Real nr(n);
    const Real n4 = nr * nr * nr * nr;
    return T(coth_npi(n) / (nr * nr * nr * (n4 * n4 + n4 * z4 + z8)));
  };
  std::function<double(long)> bound = [&](long n_last) {
    // coth(n pi) <= coth(pi) < 1.0038 and |P| >= 0.93 n^8 once n >= 2|z|.
    if (!past_kummer_start(n_last, r)) return kInf;
    const double n10 = std::pow(static_cast<double>(n_last), 10);
    return 1.0794 / (10.0 * n10);
  };
  long terms = 0;
  const T s = sum_value(term, bound, tol / std::max(1.0, 2 * r8), terms);
  return {T(Real(1) / (2 * pi() * z4)) + 2 * coth_zeta_sum(1) - 2 * z8 * s, terms};
}

template <class T>
Part<T> rhs_mittag(const T& z, double tol) {
  // 2z^2/(z^2 + n^2) = 2z^2/n^2 - 2z^4/(n^2 (z^2 + n^2)).
  const T z2 = z * z;
  const double r = mag(z);
  std::function<T(long)> term = [&](long n) {
    const Real n2(n * n);
    return T(Real(1) / (n2 * (z2 + n2)));
  };
  std::function<double(long)> bound = [&](long n_last) {
    if (is_real_v<T>) return 1.0 / (3.0 * cube(n_last));
    return past_kummer_start(n_last, r) ? (4.0 / 3.0) / (3.0 * cube(n_last)) : kInf;
  };
  long terms = 0;
  const T s = sum_value(term, bound, tol / std::max(1.0, 2 * r * r * r * r), terms);
  return {Real(1) + pi2() * z2 / 3 - 2 * z2 * z2 * s, terms};
}

Real signed_power_of_four(long k) {  // (-4)^k
  const Real v = bmp::pow(Real(4), k);
  return k % 2 == 0 ? v : Real(-v);
}

template <class T>
Part<T> rhs_zgf1_published(const T& z, double tol) {
  const T z2 = z * z;
  const double q = 4 * std::pow(mag(z), 4);
  return power_sum<T>(
      [](long n) { return n == 0 ? Real(0) : Real(signed_power_of_four(n) * zeta_even(4 * n)); },
      T(z2 * z2), [&](long k) { return geometric_tail(to_double(zeta_even(4)), q, k); }, tol);
}

template <class T>
Part<T> rhs_zgf1_corrected(const T& z, double tol) {
  const T z2 = z * z;
  const double q = 4 * std::pow(mag(z), 4);
  return power_sum<T>(
      [](long k) { return Real(signed_power_of_four(k) * zeta_even(4 * k + 4)); }, T(z2 * z2),
      [&](long k) { return geometric_tail(to_double(zeta_even(4)), q, k); }, tol);
}

template <class T>
Part<T> rhs_zgf2(const T& z, double tol) {
  const T z2 = z * z;
  const double q = 4 * std::pow(mag(z), 4);
  return power_sum<T>(
      [](long n) { return Real(signed_power_of_four(n) * zeta_even(4 * n + 2)); }, T(z2 * z2),
      [&](long k) { return geometric_tail(to_double(zeta_even(2)), q, k); }, tol);
}

template <class T>
Part<T> rhs_zgf3(const T& z, double tol) {
  const double q = mag(z) * mag(z);
  return power_sum<T>(
      [](long n) {
        return Real(bmp::cos(pi() / 6 + 2 * pi() * n / 3) * zeta_even(2 * n + 2));
      },
      T(z * z), [&](long k) { return geometric_tail(to_double(zeta_even(2)), q, k); }, tol);
}

template <class T>
Part<T> rhs_zgf4(const T& z, double tol) {
  const double q = mag(z) * mag(z);
  return power_sum<T>(
      [](long n) { return Real(-4 * bmp::cos(n * pi() / 3) * zeta_even(2 * n)); }, T(z * z),
      [&](long k) { return geometric_tail(4 * to_double(zeta_even(2)), q, k); }, tol);
}

template <class T>
Part<T> rhs_zgf5(const T& z, double tol) {
  // In w = z^4: 2 zt(12p+4) w^(3p) - 2 zt(12p+12) w^(3p+2), zt(4m) = sum coth(n pi)/n^(4m-1).
  const T z2 = z * z;
  const double q = std::pow(mag(z), 4);
  return power_sum<T>(
      [](long m) {
        if (m % 3 == 0) return Real(2 * coth_zeta_sum(m + 1));
        if (m % 3 == 2) return Real(-2 * coth_zeta_sum(m + 1));
        return Real(0);
      },
      T(z2 * z2), [&](long k) { return geometric_tail(2 * 1.21, q, k); }, tol);
}

// ---------------------------------------------------------------------------

template <class F>
Evaluator side(F fn) {
  return [fn](const Complex& z, double tol) -> SideValue {
    if (z.is_real()) {
      const Part<Real> p = fn(z.re, tol);
      return {Complex(p.value), p.terms};
    }
    const Part<Complex> p = fn(z, tol);
    return {p.value, p.terms};
  };
}

template <class F>
Evaluator side_with_expansion(F fn, Laurent (*expansion)()) {
  const Evaluator direct = side(fn);
  return [direct, expansion](const Complex& z, double tol) -> SideValue {
    if (to_double(abs(z)) < kTaylorThreshold) {
      const Laurent l = expansion();
      const Complex x = pi() * z;
      const Complex v = z.is_real() ? Complex(l.eval(x.re)) : l.eval(x);
      return {v, l.c.order() + 1};
    }
    return direct(z, tol);
  };
}

#define RSL_SIDE(fn) side([](const auto& z, double tol) { return fn(z, tol); })
#define RSL_LHS(fn, expansion) \
  side_with_expansion([](const auto& z, double tol) { return fn(z, tol); }, expansion)

GridSpec grid(double start, double stop, int count) { return GridSpec{start, stop, count, 1e-3}; }

std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> r;
  const double radius_quarter = 1.0 / std::sqrt(2.0);  // 4|z|^4 < 1
  auto add = [&](IdentitySpec s) { r.push_back(std::move(s)); };

  add({"ENTRY13", "pi/(8z^3) (sinh 2pi z + sin 2pi z)/(cosh 2pi z - cos 2pi z) = 1/(8z^4) + sum 1/(4z^4+n^4)",
       "Notebook IV, Entry 13, p. 380", RSL_LHS(lhs_entry13, laurent_entry13),
       RSL_SIDE(rhs_entry13), std::nullopt, kInf, {0.0}, grid(0.1, 2.0, 20), 1e-10,
       Status::published_form_verified});
  add({"T1A", "pi z csc(pi z) trisected: alternating sum (2z^2-n^2)/(z^4-n^2z^2+n^4)",
       "multisection of pi z csc(pi z), w = e^{i pi/6}, f(zw)+f(zw^5)",
       RSL_LHS(lhs_t1a, laurent_t1a), RSL_SIDE(rhs_t1a), std::nullopt, kInf, {},
       grid(0.1, 2.0, 20), 1e-10, Status::published_form_verified});
  add({"T1B", "4 pi z cos(sqrt3 pi z/2) sinh(pi z/2)/(cosh pi z - cos sqrt3 pi z)",
       "multisection of pi z csc(pi z), w = e^{i pi/6}, f(zw)+f(zw^5)+i sqrt3 (f(zw)-f(zw^5))",
       RSL_LHS(lhs_t1b, laurent_t1b), RSL_SIDE(rhs_t1b), std::nullopt, kInf, {},
       grid(0.1, 2.0, 20), 1e-10, Status::published_form_verified});
  add({"T1C", "4 pi^2 (1 - cos sqrt3 pi z cosh pi z)/(cosh pi z - cos sqrt3 pi z)^2",
       "multisection of pi^2 csc^2(pi z), w = e^{i pi/6}, f(zw)+f(zw^5)",
       RSL_LHS(lhs_t1c, laurent_t1c), RSL_SIDE(rhs_t1c), std::nullopt, kInf, {0.0},
       grid(0.1, 2.0, 20), 1e-10, Status::published_form_verified});
  add({"T1D", "(pi z/2)(sqrt3 sin sqrt3 pi z + sinh pi z)/(cosh pi z - cos sqrt3 pi z)",
       "multisection of pi z coth(pi z), w = e^{2 i pi/3}, f(zw)+f(zw^2)",
       RSL_LHS(lhs_t1d, laurent_t1d), RSL_SIDE(rhs_t1d), std::nullopt, kInf, {},
       grid(0.1, 2.0, 20), 1e-10, Status::published_form_verified});
  add({"T1E", "pi/(2 sqrt3 z)(sinh sqrt3 pi z - sqrt3 sin pi z)/(cosh sqrt3 pi z - cos pi z) = sum n^2/(z^4+n^2z^2+n^4)",
       "Notebook II, Entry 4, p. 248", RSL_LHS(lhs_t1e, laurent_t1e), RSL_SIDE(rhs_t1e),
       std::nullopt, kInf, {}, grid(0.1, 2.0, 20), 1e-10, Status::published_form_verified});
  add({"T1F", "pi/(4z)(sinh 2pi z - sin 2pi z)/(cosh 2pi z - cos 2pi z) = sum n^2/(4z^4+n^4)",
       "Notebook IV, Entry 14, p. 380", RSL_LHS(lhs_t1f, laurent_t1f), RSL_SIDE(rhs_t1f),
       std::nullopt, kInf, {}, grid(0.1, 2.0, 20), 1e-10, Status::published_form_verified});
  add({"TRULY", "partial fraction expansion with n coth(n pi)/(z^4 +- n^2z^2 + n^4)",
       "Notebook IV, Entry 4, p. 360", RSL_LHS(lhs_truly, laurent_truly), RSL_SIDE(rhs_truly),
       std::nullopt, kInf, {0.0}, grid(0.05, 0.95, 19), 1e-8, Status::published_form_verified});
  add({"ZGF1", "ENTRY13 lhs - 1/(8z^4) as a zeta generating function",
       "zeta restatement of Entry 13", RSL_LHS(lhs_zgf1, laurent_zgf1),
       RSL_SIDE(rhs_zgf1_published), RSL_SIDE(rhs_zgf1_corrected), radius_quarter, {},
       grid(-0.4, 0.4, 17), 1e-8, Status::unresolved});
  add({"ZGF2", "T1F lhs = sum (-1)^n 4^n zeta(4n+2) z^(4n)", "zeta restatement of T1F",
       RSL_LHS(lhs_t1f, laurent_t1f), RSL_SIDE(rhs_zgf2), std::nullopt, radius_quarter, {},
       grid(-0.4, 0.4, 17), 1e-8, Status::published_form_verified});
  add({"ZGF3", "pi/(4z)(sinh sqrt3 pi z - sqrt3 sin pi z)/(cosh sqrt3 pi z - cos pi z) = sum cos(pi/6 + 2n pi/3) zeta(2n+2) z^(2n)",
       "zeta restatement of T1E", RSL_LHS(lhs_zgf3, laurent_zgf3), RSL_SIDE(rhs_zgf3),
       std::nullopt, 1.0, {}, grid(-0.4, 0.4, 17), 1e-8, Status::published_form_verified});
  add({"ZGF4", "pi z(sqrt3 sin sqrt3 pi z + sinh pi z)/(cosh pi z - cos sqrt3 pi z) = -4 sum cos(n pi/3) zeta(2n) z^(2n)",
       "zeta restatement of T1D", RSL_LHS(lhs_zgf4, laurent_zgf4), RSL_SIDE(rhs_zgf4),
       std::nullopt, 1.0, {}, grid(-0.4, 0.4, 17), 1e-8, Status::published_form_verified});
  add({"ZGF5", "TRULY lhs - 1/(2 pi z^4) as a generating function of sum coth(n pi)/n^(4p-1)",
       "zeta restatement of Notebook IV, Entry 4, p. 360", RSL_LHS(lhs_zgf5, laurent_zgf5),
       RSL_SIDE(rhs_zgf5), std::nullopt, 1.0, {}, grid(-0.4, 0.4, 17), 1e-8,
       Status::published_form_verified});
  add({"MITTAG", "pi z coth(pi z) = 1 + sum 2z^2/(z^2+n^2)", "Mittag-Leffler expansion",
       RSL_LHS(lhs_mittag, laurent_mittag), RSL_SIDE(rhs_mittag), std::nullopt, kInf, {},
       grid(0.25, 2.0, 8), 1e-10, Status::published_form_verified});
  return r;
}

#undef RSL_SIDE
#undef RSL_LHS

double sum_tolerance(const IdentitySpec& spec, double tol) {
  double t = spec.default_tol;
  if (tol > 0) t = std::min(t, tol);
  return std::max(t * 1e-4, 1e-16);
}

double relative_error(const Complex& lhs, const Complex& rhs, double& abs_err) {
  abs_err = to_double(abs(lhs - rhs));
  const double scale = std::max(to_double(abs(lhs)), to_double(abs(rhs)));
  if (scale == 0) return abs_err == 0 ? 0.0 : kInf;
  return abs_err / scale;
}

// Reason the point is excluded, or empty.
std::string exclusion_reason(const IdentitySpec& spec, double z, double radius) {
  for (double s : spec.singular_points) {
    if (std::abs(z - s) <= radius) return "within exclusion radius of singular point";
  }
  if (!(std::abs(z) < spec.domain_radius)) return "outside the convergence disk";
  return {};
}

VerificationReport run_grid(const IdentitySpec& spec, const Evaluator& lhs, const Evaluator& rhs,
                            const GridSpec& g, double tol, double sum_tol) {
  g.validate();
  VerificationReport rep;
  rep.identity_id = spec.id;
  rep.tol = tol;
  rep.precision_digits = working_digits();
  int evaluated = 0;
  for (double z : g.points()) {
    Sample s;
    s.z = z;
    s.note = exclusion_reason(spec, z, g.exclusion_radius);
    if (s.note.empty()) {
      try {
        const SideValue l = lhs(Complex(Real(z)), sum_tol);
        const SideValue r = rhs(Complex(Real(z)), sum_tol);
        s.lhs = l.value;
        s.rhs = r.value;
        s.terms_used = l.terms_used + r.terms_used;
        s.rel_err = relative_error(s.lhs, s.rhs, s.abs_err);
        ++evaluated;
      } catch (const Error& e) {
        s.note = e.what();
      }
    }
    if (!s.note.empty()) {
      s.excluded = true;
      s.terms_used = -1;
    } else {
      rep.max_rel_err = std::max(rep.max_rel_err, s.rel_err);
    }
    rep.samples.push_back(std::move(s));
  }
  rep.passed = evaluated > 0 && rep.max_rel_err <= tol;
  return rep;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::published_form_verified:
      return "published-form-verified";
    case Status::corrected_form_verified:
      return "corrected-form-verified";
    case Status::unresolved:
      return "unresolved";
  }
  return "unresolved";
}

void GridSpec::validate() const {
  if (count < 1) throw DomainError("grid count must be >= 1");
  if (!std::isfinite(start) || !std::isfinite(stop) || !(stop > start)) {
    throw DomainError("grid needs finite start < stop");
  }
  if (!(exclusion_radius >= 0)) throw DomainError("grid exclusion radius must be >= 0");
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  const double m = count - 1;
  for (int i = 0; i < count; ++i) out.push_back(((m - i) * start + i * stop) / m);
  return out;
}

GridSpec GridSpec::parse(std::string_view text, double exclusion_radius) {
  const std::string s(text);
  const auto c1 = s.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
  if (c2 == std::string::npos || s.find(':', c2 + 1) != std::string::npos) {
    throw DomainError("grid must be START:STOP:COUNT, got '" + s + "'");
  }
  auto number = [&](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size()) {
      throw DomainError("grid: not a number '" + part + "'");
    }
    return v;
  };
  const std::string count_text = s.substr(c2 + 1);
  char* end = nullptr;
  const long count = std::strtol(count_text.c_str(), &end, 10);
  if (count_text.empty() || end != count_text.c_str() + count_text.size() || count > 1'000'000) {
    throw DomainError("grid: invalid count '" + count_text + "'");
  }
  GridSpec g{number(s.substr(0, c1)), number(s.substr(c1 + 1, c2 - c1 - 1)),
             static_cast<int>(count), exclusion_radius};
  g.validate();
  return g;
}

const std::vector<IdentitySpec>& list_identities() {
  static const std::vector<IdentitySpec> registry = build_registry();
  return registry;
}

bool has_identity(std::string_view id) {
  for (const auto& s : list_identities()) {
    if (s.id == id) return true;
  }
  return false;
}

const IdentitySpec& find_identity(std::string_view id) {
  for (const auto& s : list_identities()) {
    if (s.id == id) return s;
  }
  throw DomainError("unknown identity id '" + std::string(id) + "'");
}

SideValue eval_side_detailed(const IdentitySpec& spec, Side side, const Complex& z,
                             double sum_tol) {
  const Evaluator& f = side == Side::lhs ? spec.lhs : spec.rhs;
  return f(z, sum_tol);
}

Complex eval_side(std::string_view id, Side side, const Complex& z) {
  const IdentitySpec& spec = find_identity(id);
  const double radius = spec.default_grid.exclusion_radius;
  for (double s : spec.singular_points) {
    if (to_double(abs(z - Real(s))) <= radius) {
      throw SingularityError(spec.id + ": z is within the exclusion radius of a singular point");
    }
  }
  if (!(to_double(abs(z)) < spec.domain_radius)) {
    throw DomainError(spec.id + ": z is outside the convergence disk");
  }
  return eval_side_detailed(spec, side, z, sum_tolerance(spec, 0)).value;
}

VerificationReport verify_identity(std::string_view id, const GridSpec& grid, double tol) {
  const IdentitySpec& spec = find_identity(id);
  const double sum_tol = sum_tolerance(spec, tol);
  VerificationReport published = run_grid(spec, spec.lhs, spec.rhs, grid, tol, sum_tol);
  if (!spec.corrected_rhs) {
    published.status = published.passed ? Status::published_form_verified : Status::unresolved;
    return published;
  }
  VerificationReport corrected = run_grid(spec, spec.lhs, *spec.corrected_rhs, grid, tol, sum_tol);
  const double pub_err = published.max_rel_err;
  const double cor_err = corrected.max_rel_err;
  VerificationReport out;
  if (published.passed) {
    out = std::move(published);
    out.status = Status::published_form_verified;
  } else if (corrected.passed) {
    out = std::move(corrected);
    out.status = Status::corrected_form_verified;
  } else {
    out = std::move(published);
    out.status = Status::unresolved;
  }
  out.published_form_max_rel_err = pub_err;
  out.corrected_form_max_rel_err = cor_err;
  return out;
}

VerificationReport verify_identity(std::string_view id) {
  const IdentitySpec& spec = find_identity(id);
  return verify_identity(id, spec.default_grid, spec.default_tol);
}

std::pair<Complex, Complex> entry13_multisection_sides(const Complex& z) {
  const Complex lhs = eval_side("ENTRY13", Side::lhs, z);
  const Complex z2 = z * z;
  const Complex scaled = 16 * z2 * z2 * lhs;
  const std::vector<Complex> w = roots_of_unity(8);
  const Real root2 = bmp::sqrt(Real(2));
  const Complex sum = pi_z_coth_pi_z(z * w[1] * root2) + pi_z_coth_pi_z(z * w[3] * root2);
  return {scaled, sum};
}

VerificationReport verify_restatement(std::string_view table_id, const GridSpec& grid,
                                      double tol) {
  struct Pair {
    std::string_view table;
    std::string_view zeta;
    Real scale;
    bool corrected;
  };
  const Pair pairs[] = {
      {"ENTRY13", "ZGF1", Real(1), true},      {"T1F", "ZGF2", Real(1), false},
      {"T1E", "ZGF3", 2 / sqrt3(), false},     {"T1D", "ZGF4", Real(0.5), false},
      {"TRULY", "ZGF5", Real(1), false},
  };
  for (const auto& p : pairs) {
    if (p.table != table_id) continue;
    const IdentitySpec& table = find_identity(p.table);
    const IdentitySpec& zeta = find_identity(p.zeta);
    const Evaluator zeta_rhs = p.corrected ? *zeta.corrected_rhs : zeta.rhs;
    const Real scale = p.scale;
    const Evaluator rhs = [zeta_rhs, scale](const Complex& z, double t) {
      SideValue v = zeta_rhs(z, t);
      v.value = v.value * scale;
      return v;
    };
    // The ENTRY13 and TRULY restatements subtract the quartic pole from the table lhs.
    const bool pole_removed = p.table == "ENTRY13" || p.table == "TRULY";
    const Evaluator left = pole_removed ? zeta.lhs : table.lhs;
    IdentitySpec merged = zeta;
    merged.id = std::string(p.table) + "~" + std::string(p.zeta);
    const double sum_tol = std::max(std::min(tol, zeta.default_tol) * 1e-4, 1e-16);
    VerificationReport rep = run_grid(merged, left, rhs, grid, tol, sum_tol);
    rep.status = rep.passed ? Status::published_form_verified : Status::unresolved;
    return rep;
  }
  throw DomainError("no zeta restatement registered for '" + std::string(table_id) + "'");
}

}  // namespace rsl::catalog
