#include "rsl/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace rsl::report {

namespace {

double finite_or_max(double x) {
  if (std::isnan(x) || x > std::numeric_limits<double>::max()) {
    return std::numeric_limits<double>::max();
  }
  return x;
}

}  // namespace

int output_digits(double tol) {
  if (!(tol > 0)) return 17;
  const int d = static_cast<int>(std::ceil(-std::log10(tol))) + 4;
  return std::clamp(d, 6, 17);
}

double round_digits(double x, int digits) {
  if (!std::isfinite(x) || x == 0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", std::clamp(digits, 1, 17) - 1, x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, round_digits(x, digits));
  return std::string(buf, res.ptr);
}

void write_json(std::ostream& out, const SuiteReport& report) {
  using nlohmann::ordered_json;
  ordered_json results = ordered_json::array();
  for (const auto& r : report.results) {
    const int d = output_digits(r.tol);
    ordered_json samples = ordered_json::array();
    for (const auto& s : r.samples) {
      ordered_json js;
      js["z"] = round_digits(s.z, 17);
      if (s.excluded) {
        js["lhs"] = 0.0;
        js["rhs"] = 0.0;
        js["rel_err"] = 0.0;
      } else {
        js["lhs"] = round_digits(finite_or_max(to_double(s.lhs.re)), d);
        js["rhs"] = round_digits(finite_or_max(to_double(s.rhs.re)), d);
        js["rel_err"] = round_digits(finite_or_max(s.rel_err), d);
      }
      js["excluded"] = s.excluded;
      if (!s.note.empty()) js["note"] = s.note;
      samples.push_back(std::move(js));
    }
    ordered_json jr;
    jr["id"] = r.id;
    jr["description"] = r.description;
    jr["passed"] = r.passed;
    jr["tol"] = r.tol;
    jr["max_rel_err"] = round_digits(finite_or_max(r.max_rel_err), d);
    jr["metric"] = r.metric;
    if (r.status) jr["status"] = catalog::to_string(*r.status);
    if (r.published_form_max_rel_err) {
      jr["published_form_max_rel_err"] = round_digits(finite_or_max(*r.published_form_max_rel_err), d);
    }
    if (r.corrected_form_max_rel_err) {
      jr["corrected_form_max_rel_err"] = round_digits(finite_or_max(*r.corrected_form_max_rel_err), d);
    }
    jr["samples"] = std::move(samples);
    results.push_back(std::move(jr));
  }
  ordered_json doc;
  doc["suite"] = report.suite;
  doc["precision_digits"] = report.precision_digits;
  doc["results"] = std::move(results);
  out << doc.dump(2) << '\n';
}

void write_summary_csv(std::ostream& out, const SuiteReport& report) {
  out << "id,passed,tol,max_rel_err\n";
  for (const auto& r : report.results) {
    out << r.id << ',' << (r.passed ? "true" : "false") << ',' << format_number(r.tol, 17) << ','
        << format_number(r.max_rel_err, output_digits(r.tol)) << '\n';
  }
}

void write_samples_csv(std::ostream& out, const std::vector<catalog::Sample>& samples, int digits) {
  out << "z,lhs,rhs,abs_err,rel_err,terms_used\n";
  for (const auto& s : samples) {
    out << format_number(s.z, 17) << ',';
    if (s.excluded) {
      out << "nan,nan,nan,nan,-1\n";
      continue;
    }
    out << to_string(s.lhs.re, digits) << ',' << to_string(s.rhs.re, digits) << ','
        << format_number(s.abs_err, digits) << ',' << format_number(s.rel_err, digits) << ','
        << s.terms_used << '\n';
  }
}

}  // namespace rsl::report
