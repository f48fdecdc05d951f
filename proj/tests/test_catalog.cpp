#include <doctest.h>

#include <algorithm>
#include <set>

#include "rsl/catalog.hpp"
#include "rsl/errors.hpp"
#include "rsl/special.hpp"
#include "support.hpp"

using namespace rsl;
using namespace rsl::catalog;
using rsl::test::digits_eps;
using rsl::test::rel_err;

namespace {

std::vector<std::string> registry_ids() {
  std::vector<std::string> ids;
  for (const auto& s : list_identities()) ids.push_back(s.id);
  return ids;
}

Real lhs_at(std::string_view id, const Real& z) {
  const auto& spec = find_identity(id);
  return eval_side_detailed(spec, Side::lhs, Complex(z), 1e-20).value.re;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("registry contents and order") {
  const auto ids = registry_ids();
  for (const char* id : {"ENTRY13", "T1A", "T1B", "T1C", "T1D", "T1E", "T1F", "TRULY", "ZGF1",
                         "ZGF2", "ZGF3", "ZGF4", "ZGF5"}) {
    CHECK_MESSAGE(std::find(ids.begin(), ids.end(), id) != ids.end(), id);
  }
  CHECK(ids == registry_ids());
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(has_identity("T1C"));
  CHECK_FALSE(has_identity("NOSUCH"));
  CHECK_THROWS_AS(find_identity("NOSUCH"), DomainError);
}

TEST_CASE("default grids avoid the singular points") {
  for (const auto& spec : list_identities()) {
    for (double z : spec.default_grid.points()) {
      for (double s : spec.singular_points) {
        CHECK_MESSAGE(std::abs(z - s) >= spec.default_grid.exclusion_radius, spec.id);
      }
      CHECK_MESSAGE(std::abs(z) < spec.domain_radius, spec.id);
    }
  }
}

TEST_CASE("grid parsing") {
  const auto g = GridSpec::parse("0.1:2:20");
  const auto pts = g.points();
  REQUIRE(pts.size() == 20);
  CHECK(pts.front() == 0.1);
  CHECK(pts.back() == 2.0);
  CHECK(pts[9] == doctest::Approx(1.0));
  CHECK(GridSpec::parse("-1:1:21").points()[10] == 0.0);
  CHECK(GridSpec::parse("0.5:1:1").points() == std::vector<double>{0.5});
  for (const char* bad : {"", "0.1:2", "0.1:2:20:3", "a:2:3", "0.1:2:0", "2:1:5", "1:1:3", "0:1:x",
                          "0:1:-4"}) {
    CHECK_THROWS_AS(GridSpec::parse(bad), DomainError);
  }
}

TEST_CASE("ENTRY13 right side at z = 1 against brute-force summation") {
  Real brute = Real(1) / 8;
  const long N = 100'000;
  for (long n = 1; n <= N; ++n) brute += Real(1) / (4 + pow(Real(n), 4));
  // Remainder between the integrals over [N+1, inf) and [N, inf) of 1/n^4.
  const Real upper = Real(1) / (3 * pow(Real(N), 3));
  const Real lower = Real(1) / (3 * pow(Real(N + 1), 3)) - Real(4) / (7 * pow(Real(N), 7));
  const Real rhs = eval_side("ENTRY13", Side::rhs, Complex(Real(1))).re;
  CHECK(rhs - brute <= upper + Real(1e-12));
  CHECK(rhs - brute >= lower - Real(1e-12));
}

TEST_CASE("ENTRY13 left side minus its pole tends to zeta(4)") {
  for (const char* zs : {"0.001", "0.01", "0.02", "0.04", "0.06"}) {
    const Real z(zs);
    const Real z4 = pow(z, 4);
    const Real reduced = lhs_at("ENTRY13", z) - 1 / (8 * z4);
    // sum 1/(4z^4 + n^4) = zeta(4) - 4z^4 zeta(8) + 16 z^8 zeta(12) - ...
    const Real series = zeta_even(4) - 4 * z4 * zeta_even(8) + 16 * z4 * z4 * zeta_even(12);
    // Subtracting the pole cancels about log10(1/(8 z^4)) of the working digits.
    const Real rounding = digits_eps(2) / (8 * z4);
    CHECK_MESSAGE(abs(reduced - series) <= 64 * pow(z4, 3) * zeta_even(16) + rounding, zs);
  }
}

TEST_CASE("T1F left side tends to zeta(2)") {
  for (const char* zs : {"0.001", "0.03", "0.07"}) {
    const Real z(zs);
    const Real z4 = pow(z, 4);
    // sum n^2/(4z^4 + n^4) = zeta(2) - 4z^4 zeta(6) + 16 z^8 zeta(10) - ...
    const Real series = zeta_even(2) - 4 * z4 * zeta_even(6) + 16 * z4 * z4 * zeta_even(10);
    CHECK_MESSAGE(abs(lhs_at("T1F", z) - series) <= 64 * pow(z4, 3) * zeta_even(14) + Real(1e-20), zs);
  }
  CHECK(rel_err(lhs_at("T1F", Real(0)), pi() * pi() / 6) < Real(1e-20));
}

TEST_CASE("the near-zero expansion joins the direct formula") {
  for (const char* id : {"ENTRY13", "T1A", "T1B", "T1C", "T1D", "T1E", "T1F", "TRULY"}) {
    const Real below = lhs_at(id, Real("0.0499999"));
    const Real above = lhs_at(id, Real("0.0500001"));
    const Real slope_scale = abs(below) * Real(1e-4);
    CHECK_MESSAGE(abs(below - above) < slope_scale, id);
  }
}

TEST_CASE("ZGF4 at the origin") {
  CHECK(abs(eval_side("ZGF4", Side::rhs, Complex(Real(0))) - Complex(Real(2))) < digits_eps(2));
  CHECK(abs(eval_side("ZGF4", Side::lhs, Complex(Real(0))) - Complex(Real(2))) < digits_eps(2));
}

TEST_CASE("eval_side exclusions and domain") {
  CHECK_THROWS_AS(eval_side("ENTRY13", Side::lhs, Complex(Real(0))), SingularityError);
  CHECK_THROWS_AS(eval_side("TRULY", Side::rhs, Complex(Real("0.0005"))), SingularityError);
  CHECK_THROWS_AS(eval_side("ZGF1", Side::rhs, Complex(Real("0.9"))), DomainError);
  CHECK_THROWS_AS(eval_side("NOSUCH", Side::rhs, Complex(Real(1))), DomainError);
}

TEST_CASE("complex arguments through eval_side") {
  const Complex z(Real("0.3"), Real("0.2"));
  for (const char* id : {"ENTRY13", "T1F", "MITTAG"}) {
    CHECK_MESSAGE(rel_err(eval_side(id, Side::lhs, z), eval_side(id, Side::rhs, z)) < Real(1e-10), id);
  }
}

TEST_CASE("ENTRY13 and TRULY pass on their default grids") {
  const auto entry = verify_identity("ENTRY13", GridSpec{0.1, 2.0, 20, 1e-3}, 1e-10);
  CHECK(entry.passed);
  CHECK(entry.samples.size() == 20);
  CHECK(entry.max_rel_err <= 1e-10);
  const auto truly = verify_identity("TRULY", GridSpec{0.05, 0.95, 19, 1e-3}, 1e-8);
  CHECK(truly.passed);
  for (const auto& s : truly.samples) CHECK_FALSE(s.excluded);
}

TEST_CASE("tolerance zero fails with a positive error") {
  const auto r = verify_identity("T1A", find_identity("T1A").default_grid, 0.0);
  CHECK_FALSE(r.passed);
  CHECK(r.max_rel_err > 0);
}

TEST_CASE("every resolved identity passes on its default grid") {
  for (const auto& spec : list_identities()) {
    const auto r = verify_identity(spec.id);
    if (r.status == Status::unresolved) continue;
    CHECK_MESSAGE(r.passed, spec.id << " max_rel_err=" << r.max_rel_err);
    CHECK(r.tol == spec.default_tol);
    double max = 0;
    for (const auto& s : r.samples) {
      if (!s.excluded) max = std::max(max, s.rel_err);
    }
    CHECK(max == r.max_rel_err);
  }
}

TEST_CASE("a grid through the pole marks that point excluded") {
  const auto r = verify_identity("ENTRY13", GridSpec::parse("-1:1:21"), 1e-10);
  REQUIRE(r.samples.size() == 21);
  for (size_t i = 0; i < r.samples.size(); ++i) {
    CHECK(r.samples[i].excluded == (i == 10));
  }
  CHECK(r.passed);
  CHECK_FALSE(r.samples[10].note.empty());
}

TEST_CASE("verification is deterministic") {
  const auto a = verify_identity("T1B");
  const auto b = verify_identity("T1B");
  REQUIRE(a.samples.size() == b.samples.size());
  for (size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].lhs == b.samples[i].lhs);
    CHECK(a.samples[i].rhs == b.samples[i].rhs);
    CHECK(a.samples[i].terms_used == b.samples[i].terms_used);
  }
}

TEST_CASE("ENTRY13 multisection consistency on the default grid") {
  for (double z : find_identity("ENTRY13").default_grid.points()) {
    const auto [scaled, rotated] = entry13_multisection_sides(Complex(Real(z)));
    CHECK(rel_err(scaled, rotated) < Real(1e-12));
  }
}

TEST_CASE("Mittag-Leffler expansion") {
  for (const char* zs : {"0.25", "0.5", "1", "2"}) {
    const Complex z{Real(zs)};
    const Complex direct = pi_z_coth_pi_z(z);
    CHECK(rel_err(eval_side("MITTAG", Side::rhs, z), direct) < Real(1e-10));
    CHECK(rel_err(eval_side("MITTAG", Side::lhs, z), direct) < Real(1e-10));
  }
}

TEST_CASE("ZGF1 normalization is decided empirically") {
  const auto r = verify_identity("ZGF1");
  REQUIRE(r.published_form_max_rel_err.has_value());
  REQUIRE(r.corrected_form_max_rel_err.has_value());
  CHECK(r.status == Status::corrected_form_verified);
  CHECK(*r.corrected_form_max_rel_err < 1e-8);
  CHECK(*r.published_form_max_rel_err > 1e-2);
  CHECK(r.passed);
  CHECK(to_string(r.status) == std::string("corrected-form-verified"));
}

TEST_CASE("table rows against their zeta restatements") {
  const GridSpec grid{-0.4, 0.4, 17, 1e-3};
  for (const char* id : {"ENTRY13", "T1D", "T1E", "T1F", "TRULY"}) {
    const auto r = verify_restatement(id, grid, 1e-8);
    CHECK_MESSAGE(r.passed, id << " max_rel_err=" << r.max_rel_err);
  }
  CHECK_THROWS_AS(verify_restatement("T1A", grid, 1e-8), DomainError);
}

}  // TEST_SUITE
