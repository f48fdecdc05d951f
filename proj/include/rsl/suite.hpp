#pragma once

// Named verification checks: every catalog identity plus the cross-checks of
// the zeta sums, Ramanujan polynomials, telescoping identities and integral
// routes. The CLI `verify` command runs these by id.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsl/catalog.hpp"

namespace rsl::suite {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  double tol = 0.0;
  /// Largest error over the samples, in the check's metric.
  double max_rel_err = 0.0;
  /// "relative", "absolute", "residual" (telescoped finite-N residual) or "exact".
  std::string metric = "relative";
  std::vector<catalog::Sample> samples;
  std::optional<catalog::Status> status;
  std::optional<double> published_form_max_rel_err;
  std::optional<double> corrected_form_max_rel_err;
};

/// Overrides apply to catalog identities only; the other checks have fixed
/// parameters and tolerances.
struct Overrides {
  std::optional<double> tol;
  std::optional<catalog::GridSpec> grid;
};

/// Catalog ids first (registry order), then the remaining checks.
const std::vector<std::string>& check_ids();
bool has_check(std::string_view id);
bool is_catalog_check(std::string_view id);

CheckResult run_check(std::string_view id, const Overrides& overrides = {});

}  // namespace rsl::suite
