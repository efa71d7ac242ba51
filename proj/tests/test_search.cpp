#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "biuniv/search.hpp"

using namespace biuniv;
using doctest::Approx;

TEST_CASE("pinning relation") {
  FeasibleRegion r{mobius_beta(Rat(1, 2)), {1, Rat(0), Rat(0)}};
  CHECK(std::abs(r.pinned_s({0, 0})) == 0);
  // B1 = 1, disc = -1: s = -2 b_m^2.
  CHECK(r.pinned_s({0.5, 0}).real() == Approx(-0.5));

  FeasibleRegion deg{power_alpha(Rat(1, 2)), {1, Rat(0), Rat(0)}};
  for (double x : {0.1, 0.5, 0.9}) CHECK(std::abs(deg.pinned_s({x, 0.2})) == 0);
}

TEST_CASE("enumerated points satisfy the disc constraints and the pinning residual") {
  FeasibleRegion r{mobius_beta(Rat(0)), {2, Rat(1, 4), Rat(0)}};
  long count = 0;
  EnumerationStats stats = enumerate_region(r, 8, [&](const SchwarzPoint& pt) {
    ++count;
    CHECK(pt.within_discs(1e-12));
    CHECK(pt.coupled(0.0));
    CHECK(coefficients_from_point(pt, r.phi, r.p).residual < 1e-12);
  });
  CHECK(count > 0);
  CHECK(stats.visited == count);
  CHECK(stats.rejected > 0);
  CHECK_THROWS_AS(enumerate_region(r, 4, [](const SchwarzPoint&) {}),
                  std::invalid_argument);
}

TEST_CASE("the |b_m| = 1 row is feasible only for degenerate phi") {
  // Non-degenerate: s != 0 at |b_m| = 1 but the discs force b_2m = c_2m = 0.
  FeasibleRegion nd{mobius_beta(Rat(1, 2)), {1, Rat(0), Rat(0)}};
  enumerate_region(nd, 8, [&](const SchwarzPoint& pt) {
    CHECK(std::abs(pt.b_m) < 1.0 - 1e-9);
  });
  // Degenerate: s = 0, so b_m on the unit circle with d = 0 is feasible.
  FeasibleRegion deg{power_alpha(Rat(1)), {1, Rat(0), Rat(0)}};
  bool found_rim = false;
  enumerate_region(deg, 8, [&](const SchwarzPoint& pt) {
    if (std::abs(pt.b_m) > 1.0 - 1e-12) found_rim = true;
  });
  CHECK(found_rim);
}

TEST_CASE("empirical maxima respect and approach the analytic bounds") {
  FeasibleRegion r{mobius_beta(Rat(0)), {1, Rat(0), Rat(0)}};
  SearchReport rep = empirical_max(r, Functional::AbsAm1, 16);
  CHECK(rep.empirical_max <= rep.theoretical.value + 1e-9);
  CHECK(rep.tightness > 0.95);

  SearchReport rep2 = empirical_max(r, Functional::AbsA2m1, 16);
  CHECK(rep2.empirical_max <= rep2.theoretical.value + 1e-9);
  CHECK(rep2.theoretical.value == Approx(4.0));
  CHECK(rep2.tightness > 0.9);
}

TEST_CASE("Fekete-Szego witness at gamma = 1 beats the printed corollary factor") {
  FeasibleRegion r{mobius_beta(Rat(1, 2)), {1, Rat(0), Rat(1)}};
  SearchReport rep = empirical_max(r, Functional::FeketeSzego, 16);
  // Attained at b_m = 0, d = 2, the point (0, 1, 0, -1).
  CHECK(rep.empirical_max == Approx(0.5).epsilon(1e-9));
  CHECK(rep.theoretical.value == Approx(0.5));
  CHECK(std::abs(rep.argmax.b_m) == Approx(0.0));
  CHECK(std::abs(rep.argmax.b_2m - rep.argmax.c_2m) == Approx(2.0));
  CHECK(rep.empirical_max > 0.25 + 0.2);  // far above B1/4
}

TEST_CASE("density doubling never decreases the empirical maximum") {
  FeasibleRegion r{mobius_beta(Rat(1, 4)), {2, Rat(1, 4), Rat(1, 2)}};
  for (Functional f : {Functional::AbsAm1, Functional::AbsA2m1, Functional::FeketeSzego}) {
    SearchReport coarse = empirical_max(r, f, 8);
    SearchReport fine = empirical_max(r, f, 16);
    CHECK(fine.empirical_max >= coarse.empirical_max);
  }
}

TEST_CASE("degenerate-family fallback is attained by the search") {
  // power_alpha(1), m = 1, lambda = 0, gamma = 0: fallback bound is
  // max(B1/2, 2 B1^2 / 2) = 4, attained at |b_m| = 1.
  FeasibleRegion r{power_alpha(Rat(1)), {1, Rat(0), Rat(0)}};
  SearchReport rep = empirical_max(r, Functional::FeketeSzego, 32);
  CHECK(rep.theoretical.branch == "degenerate");
  CHECK(rep.theoretical.value == Approx(4.0));
  CHECK(rep.empirical_max <= 4.0 + 1e-9);
  CHECK(rep.empirical_max == Approx(4.0).epsilon(1e-3));
}

TEST_CASE("validate_bounds on a small grid reports no violations") {
  ValidationGrid g;
  g.ms = {1, 2};
  g.lambdas = {Rat(0), Rat(1, 2)};
  g.gammas = {Rat(0), Rat(1)};
  g.include_mid_gamma = true;
  g.phis = {mobius_beta(Rat(1, 2)), power_alpha(Rat(1))};
  g.density = 8;
  ValidationSummary s = validate_bounds(g);
  CHECK(s.violations.empty());
  CHECK(s.reports.size() == 2 * 2 * 2 * (2 + 3));
  CHECK(s.min_tightness_a_m1 > 0);
  for (const SearchReport& rep : s.reports)
    CHECK(rep.empirical_max <= rep.theoretical.value + 1e-9);
}

TEST_CASE("empty grid yields an empty report") {
  ValidationGrid g;
  g.ms = {};
  g.lambdas = {Rat(0)};
  g.phis = {mobius_beta(Rat(0))};
  ValidationSummary s = validate_bounds(g);
  CHECK(s.reports.empty());
  CHECK(s.violations.empty());
}
