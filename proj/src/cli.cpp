#include "rsl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rsl/catalog.hpp"
#include "rsl/errors.hpp"
#include "rsl/integrals.hpp"
#include "rsl/numerics.hpp"
#include "rsl/report.hpp"
#include "rsl/suite.hpp"

namespace rsl::cli {

namespace {

struct VerifyArgs {
  std::vector<std::string> ids;
  bool all = false;
  std::optional<double> tol;
  std::optional<std::string> grid;
  std::string format = "json";
  std::optional<std::string> out;
};

struct IntegralArgs {
  int n = 0;
  std::string p;
  std::optional<std::string> route;
};

struct DumpArgs {
  std::string id;
  std::optional<std::string> grid;
  std::optional<std::string> out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `text` to the file at `path`, or to `out` when no path is given.
void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open '" + *path + "' for writing");
  file << text;
  if (!file.flush()) throw Error("write to '" + *path + "' failed");
}

int cmd_verify(const VerifyArgs& a, int digits, std::ostream& out, std::ostream& err) {
  if (a.all == !a.ids.empty()) throw UsageError("verify needs exactly one of --id or --all");
  if (a.tol && !(*a.tol >= 0 && std::isfinite(*a.tol))) {
    throw UsageError("--tol must be a finite non-negative number");
  }
  for (const auto& id : a.ids) {
    if (!suite::has_check(id)) throw UsageError("unknown identity id '" + id + "'");
  }
  suite::Overrides overrides;
  overrides.tol = a.tol;
  if (a.grid) {
    try {
      overrides.grid = catalog::GridSpec::parse(*a.grid);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  report::SuiteReport rep;
  rep.suite = a.all ? "all" : "selected";
  rep.precision_digits = digits;
  const auto& ids = a.all ? suite::check_ids() : a.ids;
  bool all_passed = true;
  for (const auto& id : ids) {
    rep.results.push_back(suite::run_check(id, overrides));
    all_passed = all_passed && rep.results.back().passed;
  }

  std::ostringstream text;
  if (a.format == "csv") {
    report::write_summary_csv(text, rep);
  } else {
    report::write_json(text, rep);
  }
  emit(a.out, text.str(), out);
  if (a.out) {
    for (const auto& r : rep.results) {
      out << std::left << std::setw(22) << r.id << (r.passed ? "PASS" : "FAIL") << "  "
          << r.metric << " error " << report::format_number(r.max_rel_err, 3) << " (tol "
          << report::format_number(r.tol, 3) << ")\n";
    }
  }
  if (!all_passed) err << "verification failed\n";
  return all_passed ? kExitOk : kExitFailed;
}

/// Parses a decimal literal exactly into a Real; UsageError when malformed.
Real parse_real(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw UsageError("--p: not a finite number '" + text + "'");
  }
  return Real(text);
}

int cmd_integral(const IntegralArgs& a, std::ostream& out) {
  if (a.n < 0) throw UsageError("--n must be a non-negative integer");
  if (a.n > 10000) throw UsageError("--n above 10000 is not supported");
  const Real p = parse_real(a.p);
  const bool integer_p = floor(p) == p && abs(p) < Real(1e15);
  if (a.route == "gamma" && !integer_p) {
    throw UsageError("the gamma route needs an integer p");
  }

  const std::vector<std::string> routes =
      a.route ? std::vector<std::string>{*a.route}
              : std::vector<std::string>{"gamma", "fourier", "cauchy", "triangle", "quad"};
  const int digits = report::output_digits(WorkingPrecision{}.tolerance_default);
  std::vector<std::pair<std::string, Real>> values;
  out << "I(n=" << a.n << ", p=" << a.p << ")\n";
  for (const auto& route : routes) {
    out << std::left << std::setw(10) << route;
    if (route == "gamma") {
      if (!integer_p) {
        out << "n/a (p is not an integer)\n";
        continue;
      }
      values.emplace_back(route, integrals::inp_gamma(a.n, p.convert_to<long>()));
    } else if (route == "fourier") {
      values.emplace_back(route, integrals::inp_fourier(a.n, p));
    } else if (route == "cauchy") {
      values.emplace_back(route, integrals::inp_cauchy(a.n, p));
    } else if (route == "triangle") {
      values.emplace_back(route, integrals::inp_triangle(a.n, p));
    } else {
      const auto q = integrals::quad_oracle_inp2(a.n, to_double(p), 1e-6);
      values.emplace_back(route, Real(q.value));
      out << report::format_number(q.value, digits) << "  (error estimate "
          << report::format_number(q.error_estimate, 3) << ", tail bound "
          << report::format_number(q.tail_bound, 3) << ")\n";
      continue;
    }
    out << to_string(values.back().second, digits) << '\n';
  }
  if (values.size() > 1) {
    out << "differences\n";
    for (size_t i = 0; i < values.size(); ++i) {
      for (size_t j = i + 1; j < values.size(); ++j) {
        const Real d = abs(values[i].second - values[j].second);
        out << "  " << values[i].first << " - " << values[j].first << ": "
            << report::format_number(to_double(d), 3) << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_dump(const DumpArgs& a, std::ostream& out) {
  if (!catalog::has_identity(a.id)) throw UsageError("unknown identity id '" + a.id + "'");
  const auto& spec = catalog::find_identity(a.id);
  catalog::GridSpec grid = spec.default_grid;
  if (a.grid) {
    try {
      grid = catalog::GridSpec::parse(*a.grid, spec.default_grid.exclusion_radius);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  const auto rep = catalog::verify_identity(a.id, grid, spec.default_tol);
  std::ostringstream text;
  report::write_samples_csv(text, rep.samples, report::output_digits(spec.default_tol));
  emit(a.out, text.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of series, zeta and integral identities", "rsl"};
  app.require_subcommand(1);
  std::optional<int> digits;
  app.add_option("--digits", digits, "Working precision in decimal digits (overrides RSL_PRECISION)")
      ->check(CLI::Range(15, 2000));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification checks and write a report");
  verify->fallthrough();
  verify->add_option("--id", va.ids, "Check id (repeatable)");
  verify->add_flag("--all", va.all, "Run every check");
  verify->add_option("--tol", va.tol, "Tolerance override for catalog identities");
  verify->add_option("--grid", va.grid, "Grid override START:STOP:COUNT for catalog identities");
  verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", va.out, "Output path (default: standard output)");

  IntegralArgs ia;
  auto* integral = app.add_subcommand("integral", "Evaluate I(n,p) by one or all routes");
  integral->fallthrough();
  integral->add_option("--n", ia.n, "Order n >= 0")->required();
  integral->add_option("--p", ia.p, "Frequency parameter p")->required();
  integral->add_option("--route", ia.route, "Single route")
      ->check(CLI::IsMember({"gamma", "fourier", "cauchy", "triangle", "quad"}));

  DumpArgs da;
  auto* dump = app.add_subcommand("dump", "Write lhs/rhs/error columns of an identity as CSV");
  dump->fallthrough();
  dump->add_option("--id", da.id, "Catalog identity id")->required();
  dump->add_option("--grid", da.grid, "Grid START:STOP:COUNT (default: the identity's grid)");
  dump->add_option("--out", da.out, "Output path (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  WorkingPrecision wp;
  try {
    if (digits) {
      wp.decimal_digits = *digits;
      wp.validate();
    } else {
      wp = WorkingPrecision::from_env();
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    PrecisionScope scope(wp);
    if (*verify) return cmd_verify(va, wp.decimal_digits, out, err);
    if (*integral) return cmd_integral(ia, out);
    return cmd_dump(da, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace rsl::cli
