#pragma once

// Registry of the multisection identities: each entry pairs two independently
// evaluable sides with a validity domain, singular set and default grid, and
// verify_identity() checks them against each other on a grid.

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsl/numerics.hpp"

namespace rsl::catalog {

enum class Side { lhs, rhs };

enum class Status { published_form_verified, corrected_form_verified, unresolved };

std::string_view to_string(Status s);

/// `count` evenly spaced real points from start to stop inclusive.
struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  int count = 1;
  double exclusion_radius = 1e-3;

  void validate() const;
  std::vector<double> points() const;
  /// Parses "START:STOP:COUNT".
  static GridSpec parse(std::string_view text, double exclusion_radius = 1e-3);
};

struct SideValue {
  Complex value;
  long terms_used = 0;
};

/// Evaluates one side at z. `sum_tol` is the absolute tolerance handed to
/// every truncated infinite sum (tail bound) and Taylor fallback.
using Evaluator = std::function<SideValue(const Complex& z, double sum_tol)>;

struct IdentitySpec {
  std::string id;
  std::string description;
  std::string anchor;  // notebook entry / display the identity comes from
  Evaluator lhs;
  Evaluator rhs;
  /// Alternative right side for a display whose printed normalization is in doubt.
  std::optional<Evaluator> corrected_rhs;
  double domain_radius = std::numeric_limits<double>::infinity();  // |z| < radius
  std::vector<double> singular_points;                              // real poles
  GridSpec default_grid;
  double default_tol = 1e-10;
  Status status = Status::published_form_verified;
};

struct Sample {
  double z = 0.0;
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  long terms_used = 0;
  bool excluded = false;
  std::string note;
};

struct VerificationReport {
  std::string identity_id;
  std::vector<Sample> samples;
  double max_rel_err = 0.0;
  double tol = 0.0;
  bool passed = false;
  Status status = Status::unresolved;
  int precision_digits = 0;
  /// Filled when the identity carries a corrected form: errors of both forms.
  std::optional<double> published_form_max_rel_err;
  std::optional<double> corrected_form_max_rel_err;
};

/// Deterministic registry order; built once, immutable afterwards.
const std::vector<IdentitySpec>& list_identities();
/// Throws DomainError for an unknown id.
const IdentitySpec& find_identity(std::string_view id);
bool has_identity(std::string_view id);

/// Below this |z| the singular identities switch to their Laurent expansion.
inline constexpr double kTaylorThreshold = 0.05;

SideValue eval_side_detailed(const IdentitySpec& spec, Side side, const Complex& z, double sum_tol);
/// One side at z with the identity's default summation tolerance. Excluded
/// points raise SingularityError, points outside the domain DomainError.
Complex eval_side(std::string_view id, Side side, const Complex& z);

/// Both sides on every grid point. Per-point failures are recorded as
/// excluded samples rather than propagated. tol <= 0 is accepted (and fails).
VerificationReport verify_identity(std::string_view id, const GridSpec& grid, double tol);
VerificationReport verify_identity(std::string_view id);

/// 16 z^4 * lhs(ENTRY13) and f(z w sqrt2) + f(z w^3 sqrt2), f(z) = pi z coth(pi z),
/// w = exp(i pi / 4).
std::pair<Complex, Complex> entry13_multisection_sides(const Complex& z);

/// Table row compared against its Taylor/zeta restatement: lhs of `table_id`
/// against scale * rhs of `zeta_id`. Supported pairs: ENTRY13/ZGF1 (corrected
/// form), T1F/ZGF2, T1E/ZGF3, T1D/ZGF4, TRULY/ZGF5.
VerificationReport verify_restatement(std::string_view table_id, const GridSpec& grid, double tol);

}  // namespace rsl::catalog
