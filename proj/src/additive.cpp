#include "rsl/additive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace rsl::additive {

namespace {

namespace bmp = boost::multiprecision;

constexpr std::uint64_t kPrimeTableLimit = 1'000'000;

const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kPrimeTableLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kPrimeTableLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kPrimeTableLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

/// f on integers with a per-call cache of prime values.
class CachedEvaluator {
 public:
  explicit CachedEvaluator(const AdditiveFunction& f) : f_(f) {}

  const Real& prime(std::uint64_t p) {
    auto it = cache_.find(p);
    if (it == cache_.end()) it = cache_.emplace(p, f_.prime_value(p)).first;
    return it->second;
  }

  Real operator()(std::uint64_t n) {
    Real acc(0);
    for (std::uint64_t p : factorize(n)) acc += prime(p);
    return acc;
  }

 private:
  const AdditiveFunction& f_;
  std::unordered_map<std::uint64_t, Real> cache_;
};

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw ResourceError("integer argument overflows 64 bits");
  }
  return a * b;
}

void require_positive_n(long N) {
  if (N < 2) throw DomainError("telescoped check needs N >= 2");
}

/// Raw sum_{k=2}^{2N} (-1)^k/(k F_k) + c sum_{k=2}^{2N} 1/(k F_k G_k) against the
/// telescoped 1/G_1 - sum_{k=N+1}^{2N} 1/(k G_k), both multiplied by `scale`.
/// F and G are indexed by k (entry 0 unused; F[1] unused). The tail bound uses
/// min G over (N, 2N].
TelescopeReport telescope(const std::vector<Real>& F, const std::vector<Real>& G, const Real& c,
                          const Real& scale, Real target, long N) {
  const auto last = static_cast<size_t>(2 * N);
  for (size_t k = 1; k <= last; ++k) {
    if (!(G[k] > 0) || (k >= 2 && !(F[k] > 0))) {
      throw DomainError("additive function is not positive on the arguments of the identity");
    }
  }
  Real alternating(0);
  Real difference(0);
  for (size_t k = 2; k <= last; ++k) {
    const Real kf = Real(static_cast<long>(k)) * F[k];
    if (k % 2 == 0) alternating += 1 / kf;
    else alternating -= 1 / kf;
    difference += 1 / (kf * G[k]);
  }
  Real tail(0);
  Real min_g = G[static_cast<size_t>(N) + 1];
  for (size_t k = static_cast<size_t>(N) + 1; k <= last; ++k) {
    tail += 1 / (Real(static_cast<long>(k)) * G[k]);
    if (G[k] < min_g) min_g = G[k];
  }
  TelescopeReport r;
  r.N = N;
  r.estimated_value = scale * (alternating + c * difference);
  r.telescoped_value = scale * (1 / G[1] - tail);
  r.finite_identity_residual = to_double(bmp::abs(r.estimated_value - r.telescoped_value));
  r.tail_bound = to_double(scale * Real(N) / (Real(N + 1) * min_g));
  r.target = std::move(target);
  r.passed = r.finite_identity_residual <= kResidualTolerance &&
             to_double(bmp::abs(r.estimated_value - r.target)) <= r.tail_bound;
  return r;
}

std::vector<Real> log_table(long last) {
  std::vector<Real> out(static_cast<size_t>(last) + 1);
  for (long k = 1; k <= last; ++k) out[static_cast<size_t>(k)] = bmp::log(Real(k));
  return out;
}

TelescopeReport shifted_log_telescope(const Real& z, const Real& scale, Real target, long N) {
  const long last = 2 * N;
  const std::vector<Real> logs = log_table(2 * last);
  std::vector<Real> F(static_cast<size_t>(last) + 1);
  std::vector<Real> G(static_cast<size_t>(last) + 1);
  for (long k = 1; k <= last; ++k) {
    F[static_cast<size_t>(k)] = logs[static_cast<size_t>(k)] + z;
    G[static_cast<size_t>(k)] = logs[static_cast<size_t>(2 * k)] + z;
  }
  return telescope(F, G, bmp::log(Real(2)), scale, std::move(target), N);
}

}  // namespace

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint32_t p : prime_table()) {
    const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (pp > n) break;
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) {
    if (n >= kPrimeTableLimit * kPrimeTableLimit) {
      throw ResourceError("factorize: cofactor " + std::to_string(n) +
                          " exceeds the trial-division bound");
    }
    out.push_back(n);
  }
  return out;
}

AdditiveFunction::AdditiveFunction(std::string name, PrimeValue value,
                                   std::optional<ExactPrimeValue> exact, bool growth_ok,
                                   bool positive_above_half)
    : name_(std::move(name)),
      value_(std::move(value)),
      exact_(std::move(exact)),
      growth_ok_(growth_ok),
      positive_above_half_(positive_above_half) {}

AdditiveFunction AdditiveFunction::from_primes(std::string name, PrimeValue value,
                                               std::optional<ExactPrimeValue> exact) {
  AdditiveFunction f(std::move(name), std::move(value), std::move(exact), false, false);
  f.growth_ok_ = !growth_violation(f).has_value();
  return f;
}

AdditiveFunction AdditiveFunction::log() {
  static const AdditiveFunction f = [] {
    AdditiveFunction g = from_primes("LOG", [](std::uint64_t p) { return bmp::log(Real(p)); });
    g.positive_above_half_ = true;
    return g;
  }();
  return f;
}

AdditiveFunction AdditiveFunction::omega() {
  static const AdditiveFunction f = from_primes(
      "OMEGA", [](std::uint64_t) { return Real(1); },
      [](std::uint64_t) { return BigRational(1); });
  return f;
}

AdditiveFunction AdditiveFunction::sopfr() {
  static const AdditiveFunction f = from_primes(
      "SOPFR", [](std::uint64_t p) { return Real(p); },
      [](std::uint64_t p) { return BigRational(BigInt(p)); });
  return f;
}

AdditiveFunction AdditiveFunction::ld() {
  static const AdditiveFunction f = from_primes(
      "LD", [](std::uint64_t p) { return Real(1) / Real(p); },
      [](std::uint64_t p) { return BigRational(BigInt(1), BigInt(p)); });
  return f;
}

AdditiveFunction AdditiveFunction::scaled(const BigRational& c) const {
  if (!(c > 0)) throw DomainError("additive function can only be scaled by a positive constant");
  PrimeValue value = [base = value_, c](std::uint64_t p) { return to_real(c) * base(p); };
  std::optional<ExactPrimeValue> exact;
  if (exact_) exact = [base = *exact_, c](std::uint64_t p) { return c * base(p); };
  return AdditiveFunction(to_string(c) + "*" + name_, std::move(value), std::move(exact),
                          growth_ok_, positive_above_half_);
}

BigRational AdditiveFunction::exact_prime_value(std::uint64_t p) const {
  if (!exact_) throw ContractError(name_ + " has no exact rational values");
  return (*exact_)(p);
}

std::optional<std::uint64_t> growth_violation(const AdditiveFunction& f, double c,
                                              std::uint64_t limit) {
  std::unordered_map<std::uint64_t, double> cache;
  for (std::uint64_t k = 2; k <= limit; ++k) {
    double value = 0;
    for (std::uint64_t p : factorize(k)) {
      auto it = cache.find(p);
      if (it == cache.end()) it = cache.emplace(p, to_double(f.prime_value(p))).first;
      value += it->second;
    }
    if (value < c * std::sqrt(std::log(static_cast<double>(k)))) return k;
  }
  return std::nullopt;
}

Real additive_eval(const AdditiveFunction& f, std::uint64_t n) {
  Real acc(0);
  for (std::uint64_t p : factorize(n)) acc += f.prime_value(p);
  return acc;
}

BigRational additive_eval_exact(const AdditiveFunction& f, std::uint64_t n) {
  BigRational acc(0);
  for (std::uint64_t p : factorize(n)) acc += f.exact_prime_value(p);
  return acc;
}

Real additive_eval_rational(const AdditiveFunction& f, std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw DomainError("additive_eval_rational: m and n must be >= 1");
  return additive_eval(f, m) - additive_eval(f, n);
}

TelescopeReport telescoped_check_log(long N) {
  require_positive_n(N);
  return shifted_log_telescope(Real(0), bmp::log(Real(2)), Real(1), N);
}

TelescopeReport verify_additive_identity(const AdditiveFunction& f, long alpha_num,
                                         long alpha_den, long N, AdditiveForm form) {
  require_positive_n(N);
  if (alpha_num < 1 || alpha_den < 1) throw DomainError("alpha must be a positive rational");
  if (f.positive_above_half()) {
    if (!(2 * alpha_num > alpha_den)) throw DomainError("alpha must exceed 1/2");
  } else if (alpha_num < alpha_den) {
    throw DomainError("alpha must be >= 1");
  }
  if (!f.growth_ok()) {
    throw ContractError(f.name() + " fails the growth certificate f(k) >= 0.5 sqrt(log k); "
                        "the identity is not guaranteed");
  }
  const auto a = static_cast<std::uint64_t>(alpha_num);
  const auto b = static_cast<std::uint64_t>(alpha_den);
  CachedEvaluator eval(f);
  const Real f_b = eval(b);
  const long last = 2 * N;
  std::vector<Real> F(static_cast<size_t>(last) + 1);
  std::vector<Real> G(static_cast<size_t>(last) + 1);
  for (long k = 1; k <= last; ++k) {
    const std::uint64_t ak = checked_product(a, static_cast<std::uint64_t>(k));
    F[static_cast<size_t>(k)] = eval(ak) - f_b;
    G[static_cast<size_t>(k)] = eval(checked_product(2, ak)) - f_b;
  }
  const Real f2 = eval(2);
  const Real scale = form == AdditiveForm::normalized ? f2 : Real(1);
  Real target = scale / G[1];
  return telescope(F, G, f2, scale, std::move(target), N);
}

TelescopeReport verify_q_identity(long q, long N) {
  if (q < 1) throw DomainError("q must be >= 1");
  require_positive_n(N);
  const long last = 2 * N;
  const std::vector<Real> logs = log_table(last);
  const Real log2 = bmp::log(Real(2));

  Real alternating(0);
  Real difference(0);
  for (long k = 2; k <= last; ++k) {
    const Real& lk = logs[static_cast<size_t>(k)];
    Real inner(0);
    for (long l = 1; l <= q; ++l) inner += 1 / (lk + l * log2);
    if (k % 2 == 0) alternating += inner / k;
    else alternating -= inner / k;
    difference += 1 / (k * (lk + log2) * (lk + (q + 1) * log2));
  }

  Real head(0);
  Real tail(0);
  double bound = 0;
  for (long m = 2; m <= q + 1; ++m) {
    head += Real(1) / m;
    for (long k = N + 1; k <= last; ++k) tail += 1 / (k * (logs[static_cast<size_t>(k)] + m * log2));
    bound += to_double(Real(N) / (Real(N + 1) * (logs[static_cast<size_t>(N + 1)] + m * log2)));
  }

  TelescopeReport r;
  r.N = N;
  r.estimated_value = log2 * alternating + q * log2 * log2 * difference;
  r.telescoped_value = head - log2 * tail;
  r.finite_identity_residual = to_double(bmp::abs(r.estimated_value - r.telescoped_value));
  r.tail_bound = to_double(log2) * bound;
  r.target = head;
  r.passed = r.finite_identity_residual <= kResidualTolerance &&
             to_double(bmp::abs(r.estimated_value - r.target)) <= r.tail_bound;
  return r;
}

TelescopeReport verify_zshift_identity(const Real& z, long N) {
  require_positive_n(N);
  const Real log2 = bmp::log(Real(2));
  if (!(z > -log2)) throw DomainError("z must exceed -log 2");
  return shifted_log_telescope(z, Real(1), 1 / (log2 + z), N);
}

TelescopeReport verify_power_shift_identity(long n, long N) {
  if (n < 0) throw DomainError("n must be >= 0");
  require_positive_n(N);
  const Real log2 = bmp::log(Real(2));
  return shifted_log_telescope(n * log2, Real(1), 1 / ((n + 1) * log2), N);
}

}  // namespace rsl::additive
