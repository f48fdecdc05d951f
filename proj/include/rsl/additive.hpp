#pragma once

// Completely additive arithmetic functions and the telescoping identities
// built on f(2k) = f(2) + f(k).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsl/exact.hpp"
#include "rsl/numerics.hpp"

namespace rsl::additive {

/// Prime factorization with multiplicity, ascending. Trial division by the
/// primes below 10^6; a remaining cofactor below 10^12 is therefore prime,
/// anything larger is a ResourceError. n >= 1 (1 gives an empty list).
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// f(mn) = f(m) + f(n), determined by its values on primes.
class AdditiveFunction {
 public:
  using PrimeValue = std::function<Real(std::uint64_t)>;
  using ExactPrimeValue = std::function<BigRational(std::uint64_t)>;

  static AdditiveFunction log();    // log p
  static AdditiveFunction omega();  // 1
  static AdditiveFunction sopfr();  // p
  static AdditiveFunction ld();     // 1/p

  /// The growth certificate is computed here.
  static AdditiveFunction from_primes(std::string name, PrimeValue value,
                                      std::optional<ExactPrimeValue> exact = std::nullopt);

  /// c*f for c > 0. Exactness and the growth certificate carry over.
  AdditiveFunction scaled(const BigRational& c) const;

  const std::string& name() const { return name_; }
  Real prime_value(std::uint64_t p) const { return value_(p); }
  bool is_exact() const { return exact_.has_value(); }
  BigRational exact_prime_value(std::uint64_t p) const;
  /// f(k) >= 0.5 sqrt(log k) for 2 <= k <= 10^5.
  bool growth_ok() const { return growth_ok_; }
  /// Positive on every rational above 1/2 (true for log and its multiples).
  bool positive_above_half() const { return positive_above_half_; }

 private:
  AdditiveFunction(std::string name, PrimeValue value, std::optional<ExactPrimeValue> exact,
                   bool growth_ok, bool positive_above_half);

  std::string name_;
  PrimeValue value_;
  std::optional<ExactPrimeValue> exact_;
  bool growth_ok_ = false;
  bool positive_above_half_ = false;
};

/// Smallest k in [2, limit] with f(k) < c sqrt(log k), if any.
std::optional<std::uint64_t> growth_violation(const AdditiveFunction& f, double c = 0.5,
                                              std::uint64_t limit = 100'000);

/// Sum of prime values over the factorization of n >= 1; f(1) = 0.
Real additive_eval(const AdditiveFunction& f, std::uint64_t n);
/// Exact value for functions with rational prime values; ContractError otherwise.
BigRational additive_eval_exact(const AdditiveFunction& f, std::uint64_t n);
/// f(m/n) = f(m) - f(n), m, n >= 1.
Real additive_eval_rational(const AdditiveFunction& f, std::uint64_t m, std::uint64_t n);

struct TelescopeReport {
  long N = 0;
  /// |raw partial sum to 2N - telescoped form|: zero up to rounding.
  double finite_identity_residual = 0.0;
  /// Raw partial sum of the left side over k = 2..2N.
  Real estimated_value;
  Real telescoped_value;
  double tail_bound = 0.0;
  Real target;
  bool passed = false;
};

inline constexpr double kResidualTolerance = 1e-12;

/// log2 sum (-1)^k/(k log k) + log^2 2 sum 1/(k log k log 2k) = 1, truncated at 2N.
TelescopeReport telescoped_check_log(long N);

/// General:    sum (-1)^k/(k f(ak)) + f(2) sum 1/(k f(ak) f(2ak)) = 1/f(2a).
/// Normalized: the same multiplied by f(2), so the target is f(2)/f(2a)
///             (= 1 for a = 1).
enum class AdditiveForm { general, normalized };

/// a = alpha_num/alpha_den >= 1 (> 1/2 when f is positive above 1/2).
/// ContractError when f lacks the growth certificate.
TelescopeReport verify_additive_identity(const AdditiveFunction& f, long alpha_num,
                                         long alpha_den, long N,
                                         AdditiveForm form = AdditiveForm::general);

/// log2 sum_{l=1}^q sum (-1)^k/(k log(2^l k)) + q log^2 2 sum 1/(k log 2k log(2^(q+1) k))
/// = sum_{l=1}^q 1/(l+1).
TelescopeReport verify_q_identity(long q, long N);

/// sum (-1)^k/(k (log k + z)) + sum log2/(k (log k + z)(log 2k + z)) = 1/(log 2 + z),
/// z > -log 2.
TelescopeReport verify_zshift_identity(const Real& z, long N);

/// The shift z = n log 2: target 1/((n+1) log 2).
TelescopeReport verify_power_shift_identity(long n, long N);

}  // namespace rsl::additive
