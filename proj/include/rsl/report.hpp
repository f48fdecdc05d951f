#pragma once

// JSON and CSV serialization of verification results. Numbers are rounded to
// (tolerance digits + 4) significant digits so that reports are byte-stable.

#include <ostream>
#include <string>
#include <vector>

#include "rsl/catalog.hpp"
#include "rsl/suite.hpp"

namespace rsl::report {

struct SuiteReport {
  std::string suite;
  int precision_digits = 0;
  std::vector<suite::CheckResult> results;
};

/// ceil(-log10 tol) + 4, clamped to [6, 17]; 17 for tol <= 0.
int output_digits(double tol);

/// x rounded to `digits` significant digits.
double round_digits(double x, int digits);

/// Shortest text that reads back as round_digits(x, digits); "nan", "inf" and
/// "-inf" for non-finite x.
std::string format_number(double x, int digits);

/// Schema: { suite, precision_digits, results: [ { id, passed, tol,
/// max_rel_err, samples: [ { z, lhs, rhs, rel_err, excluded } ] } ] } plus
/// description, metric and the ZGF1 status fields. Non-finite errors are
/// written as the largest finite double.
void write_json(std::ostream& out, const SuiteReport& report);

/// One row per check: id,passed,tol,max_rel_err.
void write_summary_csv(std::ostream& out, const SuiteReport& report);

/// Header z,lhs,rhs,abs_err,rel_err,terms_used; excluded points are written as
/// z,nan,nan,nan,nan,-1.
void write_samples_csv(std::ostream& out, const std::vector<catalog::Sample>& samples, int digits);

}  // namespace rsl::report
