#include "rsl/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rsl::integrals {

namespace {

namespace bmp = boost::multiprecision;

// Gauss-Kronrod 21-point abscissae (descending, centre last) and weights; the
// 10-point Gauss rule uses the odd-indexed abscissae.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478472, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct PanelEstimate {
  double value;
  double error;
  double rounding = 0;  // 50 eps |f|-integral: bisection cannot push the error below this
};

constexpr long kMaxPanels = 1'000'000;

/// GK21 on a panel of half-width h given f at the centre and at centre -+ h*kXgk[j].
PanelEstimate gk21_combine(double h, double f_centre, const double* f_minus, const double* f_plus) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  double resk = kWgk[10] * f_centre;
  double resg = 0;
  double resabs = std::abs(resk);
  for (int j = 0; j < 10; ++j) {
    const double pair = f_minus[j] + f_plus[j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(f_minus[j]) + std::abs(f_plus[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = resk * 0.5;
  double resasc = kWgk[10] * std::abs(f_centre - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(f_minus[j] - mean) + std::abs(f_plus[j] - mean));
  }
  resabs *= h;
  resasc *= h;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0 && err != 0) err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
  const double rounding = 50 * eps * resabs;
  if (resabs > tiny / (50 * eps)) err = std::max(rounding, err);
  return {resk * h, err, rounding};
}

PanelEstimate gk21(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fm[10];
  double fp[10];
  for (int j = 0; j < 10; ++j) {
    fm[j] = f(c - h * kXgk[j]);
    fp[j] = f(c + h * kXgk[j]);
  }
  return gk21_combine(h, f(c), fm, fp);
}

PanelEstimate adapt(const std::function<double(double)>& f, double a, double b, double tol,
                    const PanelEstimate& whole, int depth, long& panels) {
  ++panels;
  if (whole.error <= tol || whole.error <= whole.rounding || depth >= 48 || panels >= kMaxPanels) {
    return whole;
  }
  const double mid = 0.5 * (a + b);
  const PanelEstimate left = adapt(f, a, mid, tol / 2, gk21(f, a, mid), depth + 1, panels);
  const PanelEstimate right = adapt(f, mid, b, tol / 2, gk21(f, mid, b), depth + 1, panels);
  return {left.value + right.value, left.error + right.error, left.rounding + right.rounding};
}

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

Real indicator_half(const Real& t) {  // 1_[-1/2,1/2] with midpoint values
  const Real a = bmp::abs(t);
  if (a < Real(0.5)) return Real(1);
  if (a == Real(0.5)) return Real(0.5);
  return Real(0);
}

Real tent(const Real& t) {
  const Real a = bmp::abs(t);
  return a < 1 ? Real(1 - a) : Real(0);
}

Real prefactor(int n) {  // pi (-1)^n / 2^(2n+1)
  const Real v = pi() / bmp::pow(Real(2), 2 * n + 1);
  return n % 2 == 0 ? v : Real(-v);
}

Real kernel_sum(int n, const Real& p, Real (*kernel)(const Real&)) {
  Real acc(0);
  for (int k = 0; k <= 2 * n; ++k) {
    const Real c = to_real(BigRational(binomial(2 * n, k)));
    const Real v = c * kernel(p + k - n);
    if (k % 2 == 0) acc += v;
    else acc -= v;
  }
  return prefactor(n) * acc;
}

void require_order(int n) {
  if (n < 0) throw DomainError("n must be >= 0");
}

}  // namespace

PiecewiseFunction::PiecewiseFunction(Kind kind, std::vector<Real> breakpoints,
                                     std::vector<Real> values, bool even)
    : kind_(kind), breakpoints_(std::move(breakpoints)), values_(std::move(values)), even_(even) {
  if (breakpoints_.empty()) throw DomainError("piecewise function needs a breakpoint");
  for (size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw DomainError("breakpoints must be strictly increasing");
    }
  }
  const size_t expected = kind_ == Kind::constant ? breakpoints_.size() + 1 : breakpoints_.size();
  if (values_.size() != expected) throw DomainError("piecewise function value count mismatch");
}

PiecewiseFunction PiecewiseFunction::indicator(const Real& a, const Real& b) {
  return PiecewiseFunction(Kind::constant, {a, b}, {Real(0), Real(1), Real(0)}, a == -b);
}

PiecewiseFunction PiecewiseFunction::triangle(const Real& a, const Real& b) {
  return PiecewiseFunction(Kind::linear, {a, Real((a + b) / 2), b}, {Real(0), Real(1), Real(0)},
                           a == -b);
}

Real PiecewiseFunction::operator()(const Real& x) const {
  const auto& b = breakpoints_;
  const auto upper = std::upper_bound(b.begin(), b.end(), x);
  const auto i = static_cast<size_t>(upper - b.begin());  // b[i-1] <= x < b[i]
  if (kind_ == Kind::constant) {
    if (i > 0 && b[i - 1] == x) return (values_[i - 1] + values_[i]) / 2;
    return values_[i];
  }
  if (i == 0) return values_.front();
  if (i == b.size()) return values_.back();
  const Real t = (x - b[i - 1]) / (b[i] - b[i - 1]);
  return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

DifferenceStencil::DifferenceStencil(int m) : order(m) {
  if (m < 0) throw DomainError("difference order must be >= 0");
  for (int j = 0; j <= m; ++j) {
    const BigInt c = binomial(m, j);
    coefficients.push_back((m - j) % 2 == 0 ? c : BigInt(-c));
  }
}

Real DifferenceStencil::apply(const std::function<Real(const Real&)>& g, const Real& p) const {
  Real acc(0);
  for (int j = 0; j <= order; ++j) {
    acc += to_real(BigRational(coefficients[static_cast<size_t>(j)])) * g(p + j);
  }
  return acc;
}

Real forward_difference(const std::function<Real(const Real&)>& g, int m, const Real& p) {
  return DifferenceStencil(m).apply(g, p);
}

CauchyResidual cauchy_identity_check(int n, const Real& p, const Real& x) {
  require_order(n);
  const Real s = bmp::sin(x);
  const Real c2p = bmp::cos(2 * p * x);
  const Real sign = n % 2 == 0 ? Real(1) : Real(-1);

  const Real odd_lhs = forward_difference(
      [&](const Real& q) { return Real(bmp::sin((2 * q - 2 * n - 1) * x)); }, 2 * n + 1, p);
  const Real odd_rhs = sign * bmp::pow(Real(2), 2 * n + 1) * c2p * bmp::pow(s, 2 * n + 1);

  const Real even_lhs = forward_difference(
      [&](const Real& q) { return Real(bmp::cos((2 * q - 2 * n) * x)); }, 2 * n, p);
  const Real even_rhs = sign * bmp::pow(Real(2), 2 * n) * c2p * bmp::pow(s, 2 * n);

  return {bmp::abs(odd_lhs - odd_rhs), bmp::abs(even_lhs - even_rhs)};
}

Real gamma_half_integer(int twice_x) {
  if (twice_x < 1) throw DomainError("gamma_half_integer: argument must be positive");
  Real g = twice_x % 2 == 0 ? Real(1) : bmp::sqrt(pi());  // Gamma(1) or Gamma(1/2)
  for (int t = twice_x % 2 == 0 ? 2 : 1; t + 2 <= twice_x; t += 2) g *= Real(t) / 2;
  return g;
}

Real inp_gamma(int n, long p) {
  require_order(n);
  if (n - p + 1 <= 0 || n + p + 1 <= 0) return Real(0);
  const Real num = bmp::sqrt(pi()) / 2 * gamma_half_integer(2 * n + 2) *
                   gamma_half_integer(2 * n + 1);
  const Real den = gamma_half_integer(static_cast<int>(2 * (n - p + 1))) *
                   gamma_half_integer(static_cast<int>(2 * (n + p + 1)));
  const Real v = num / den;
  return p % 2 == 0 ? v : Real(-v);
}

Real inp_fourier(int n, const Real& p) {
  require_order(n);
  return kernel_sum(n, p, indicator_half);
}

Real inp_cauchy(int n, const Real& p) {
  require_order(n);
  const PiecewiseFunction box = PiecewiseFunction::indicator(Real(n) - Real(0.5), Real(n) + Real(0.5));
  return prefactor(n) * forward_difference([&](const Real& q) { return box(q); }, 2 * n, p);
}

Real inp_triangle(int n, const Real& p) {
  require_order(n);
  return kernel_sum(n, p, tent);
}

QuadResult integrate_gk21(const std::function<double(double)>& f, double a, double b,
                          double tol) {
  if (!(b > a)) throw DomainError("integration interval must have b > a");
  if (!(tol > 0)) throw AccuracyError("quadrature tolerance must be positive");
  QuadResult r;
  const PanelEstimate est = adapt(f, a, b, tol, gk21(f, a, b), 0, r.panels);
  r.value = est.value;
  r.error_estimate = est.error;
  r.cutoff = b;
  if (!(est.error <= tol)) {
    throw AccuracyError("quadrature error estimate " + std::to_string(est.error) +
                        " exceeds tolerance");
  }
  return r;
}

QuadResult quad_oracle_inp2(int n, double p, double tol) {
  require_order(n);
  if (!(tol >= 1e-8)) throw AccuracyError("quadrature oracle supports tol >= 1e-8 only");
  if (!std::isfinite(p)) throw DomainError("p must be finite");

  constexpr double kPanel = std::numbers::pi / 4;
  const double omega = 2 * p;
  const long panels = static_cast<long>(std::ceil(std::max(50.0, 4.0 / tol) / kPanel));
  const double h = kPanel / 2;
  const double panel_tol = tol / 2 / static_cast<double>(panels);

  auto power = [n](double s2) {
    double r = 1;
    for (int k = 0; k <= n; ++k) r *= s2;
    return r;
  };
  const std::function<double(double)> integrand = [&](double x) {
    const double s = std::sin(x);
    return power(s * s) * std::cos(omega * x) / (x * x);
  };

  // Node values from the panel centre by angle addition; the centre angles
  // advance by rotation and are recomputed directly every 1024 panels.
  double cd[10], sd[10], cwd[10], swd[10];
  for (int j = 0; j < 10; ++j) {
    const double d = h * kXgk[j];
    cd[j] = std::cos(d);
    sd[j] = std::sin(d);
    cwd[j] = std::cos(omega * d);
    swd[j] = std::sin(omega * d);
  }
  const double cl = std::cos(kPanel);
  const double sl = std::sin(kPanel);
  const double cwl = std::cos(omega * kPanel);
  const double swl = std::sin(omega * kPanel);

  CompensatedSum total;
  double error = 0;
  long evaluated = 0;
  double sc = 0, cc = 0, sw = 0, cw = 0;
  double fm[10], fp[10];
  for (long k = 0; k < panels; ++k) {
    const double c = (static_cast<double>(k) + 0.5) * kPanel;
    if (k % 1024 == 0) {
      sc = std::sin(c);
      cc = std::cos(c);
      sw = std::sin(omega * c);
      cw = std::cos(omega * c);
    }
    const double inv_c2 = 1 / (c * c);
    const double f_centre = power(sc * sc) * cw * inv_c2;
    for (int j = 0; j < 10; ++j) {
      const double d = h * kXgk[j];
      const double s_minus = sc * cd[j] - cc * sd[j];
      const double s_plus = sc * cd[j] + cc * sd[j];
      const double w_minus = cw * cwd[j] + sw * swd[j];
      const double w_plus = cw * cwd[j] - sw * swd[j];
      const double xm = c - d;
      const double xp = c + d;
      fm[j] = power(s_minus * s_minus) * w_minus / (xm * xm);
      fp[j] = power(s_plus * s_plus) * w_plus / (xp * xp);
    }
    PanelEstimate est = gk21_combine(h, f_centre, fm, fp);
    ++evaluated;
    if (est.error > panel_tol) {
      const double a = c - h;
      est = adapt(integrand, a, a + kPanel, panel_tol, gk21(integrand, a, a + kPanel), 0,
                  evaluated);
    }
    total.add(est.value);
    error += est.error;

    const double sc_next = sc * cl + cc * sl;
    cc = cc * cl - sc * sl;
    sc = sc_next;
    const double sw_next = sw * cwl + cw * swl;
    cw = cw * cwl - sw * swl;
    sw = sw_next;
  }

  QuadResult r;
  r.value = total.value();
  r.error_estimate = error;
  r.cutoff = static_cast<double>(panels) * kPanel;
  r.tail_bound = 1 / r.cutoff;
  r.panels = evaluated;
  if (!(r.error_estimate + r.tail_bound <= tol)) {
    throw AccuracyError("quadrature oracle could not certify the requested tolerance");
  }
  return r;
}

Q295Result verify_q295(double alpha, double tol) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  if (!(tol >= 1e-15)) throw AccuracyError("double-precision quadrature needs tol >= 1e-15");
  Q295Result r;
  r.alpha = alpha;
  r.beta = std::numbers::pi / alpha;
  // At the self-dual point pi/alpha can land an ulp away from alpha.
  if (std::abs(r.beta - alpha) <= 4 * std::numeric_limits<double>::epsilon() * alpha) {
    r.beta = alpha;
  }
  auto side = [tol](double a) {
    const QuadResult q = integrate_gk21(
        [a](double x) { return std::exp(-x * x) / std::cosh(a * x); }, 0.0, 8.0, tol / 4);
    return std::sqrt(a) * q.value;
  };
  r.lhs = side(r.alpha);
  r.rhs = r.beta == r.alpha ? r.lhs : side(r.beta);
  r.diff = std::abs(r.lhs - r.rhs);
  return r;
}

}  // namespace rsl::integrals
