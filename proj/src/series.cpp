#include "rsl/series.hpp"

namespace rsl {

Complex evaluate(const PowerSeries<Complex>& s, const Complex& z) {
  Complex acc = s[s.order()];
  for (int n = s.order() - 1; n >= 0; --n) acc = acc * z + s[n];
  return acc;
}

Complex evaluate(const PowerSeries<GaussianRational>& s, const Complex& z) {
  Complex acc = to_complex(s[s.order()]);
  for (int n = s.order() - 1; n >= 0; --n) acc = acc * z + to_complex(s[n]);
  return acc;
}

Complex multisect_eval(const std::function<Complex(const Complex&)>& f, int p, int q,
                       const Complex& z) {
  if (p < 1 || q < 0 || q >= p) throw DomainError("multisection needs p >= 1 and 0 <= q < p");
  const std::vector<Complex> roots = roots_of_unity(p);
  Complex acc;
  for (int k = 0; k < p; ++k) {
    const Complex point = z * roots[static_cast<size_t>(k)];
    Complex value;
    try {
      value = f(point);
    } catch (const SingularityError& e) {
      throw SingularityError(std::string(e.what()) + " [rotated point " +
                             to_string(point.re, 15) + " + " + to_string(point.im, 15) + "i]");
    }
    // w^(-kq) is the conjugate root of index kq mod p.
    const int idx = static_cast<int>((static_cast<long>(k) * q) % p);
    acc += conj(roots[static_cast<size_t>(idx)]) * value;
  }
  return acc / Real(p);
}

SumResult<Real> sum_alternating_paired(const std::function<Real(long)>& term, long k0, double tol,
                                       long hard_cap) {
  auto sign = [](const Real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  auto check_pair = [&](const Real& a, const Real& b, long k) {
    if (sign(a) != 0 && sign(a) == sign(b)) {
      throw ContractError("series is not alternating at index " + std::to_string(k));
    }
  };

  SumResult<Real> result{Real(0), 0, 0.0};
  long k = k0;
  Real previous(0);
  if (k % 2 != 0) {
    previous = term(k);
    result.value += previous;
    ++k;
  }
  Real next = term(k);
  for (;;) {
    if (k - k0 >= hard_cap) {
      throw NonconvergenceError("alternating series did not reach tolerance within " +
                                std::to_string(hard_cap) + " terms");
    }
    const Real a = std::move(next);
    const Real b = term(k + 1);
    check_pair(previous, a, k);
    check_pair(a, b, k + 1);
    result.value += a + b;
    previous = b;
    k += 2;
    next = term(k);
    check_pair(previous, next, k);
    const Real magnitude = boost::multiprecision::abs(next);
    if (magnitude <= tol && magnitude <= boost::multiprecision::abs(previous)) {
      result.tail_bound = to_double(magnitude);
      break;
    }
  }
  result.terms_used = k - k0;
  return result;
}

}  // namespace rsl
