#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "biuniv/bounds.hpp"

using namespace biuniv;
using doctest::Approx;

TEST_CASE("first coefficient bound specializations") {
  // mobius family, m = 1: 2(1-beta)/((1-lambda) sqrt(2 beta + 1)).
  for (int nb = 0; nb < 10; ++nb) {
    for (int nl = 0; nl < 10; ++nl) {
      Rat beta(nb, 10), lambda(nl, 12);
      double v = bound_a_m1(mobius_beta(beta), {1, lambda, Rat(0)}).value;
      double expect = 2.0 * (1 - nb / 10.0) /
                      ((1 - rat_to_double(lambda)) * std::sqrt(2 * nb / 10.0 + 1));
      CHECK(v == Approx(expect).epsilon(1e-12));
    }
  }

  // power family: degenerate discriminant collapses the radical to 2a/(m(1-lambda)).
  for (int m = 1; m <= 4; ++m) {
    BoundValue b = bound_a_m1(power_alpha(Rat(1, 2)), {m, Rat(1, 4), Rat(0)});
    CHECK(b.degenerate);
    CHECK(b.value == Approx(1.0 / (m * 0.75)).epsilon(1e-12));
  }

  // custom [2, 2], m = 1, lambda = 0: 2 sqrt(2)/sqrt(2) = 2.
  CHECK(bound_a_m1(custom_phi({Rat(2), Rat(2)}), {1, Rat(0), Rat(0)}).value ==
        Approx(2.0).epsilon(1e-12));
}

TEST_CASE("second coefficient bound branches") {
  // B1 below the threshold m(1-lambda)/(m+1): B1/(2m(1-lambda)).
  BoundValue low = bound_a_2m1(custom_phi({Rat(1, 10), Rat(1, 200)}), {1, Rat(0), Rat(0)});
  CHECK(low.branch == "low-B1");
  CHECK(low.value == Approx(0.05).epsilon(1e-12));

  // mobius(0), m = 1, lambda = 0: high branch,
  // (2 - 1/2) * 8 / (2 * (2 + 0)) + 2/2 = 3 + 1 = 4.
  BoundValue high = bound_a_2m1(mobius_beta(Rat(0)), {1, Rat(0), Rat(0)});
  CHECK(high.branch == "high-B1");
  CHECK(high.value == Approx(4.0).epsilon(1e-12));
}

TEST_CASE("second coefficient bound is branch-continuous at the threshold") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> mi(1, 4), li(0, 9), b2i(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    int m = mi(rng);
    Rat lambda(li(rng), 10);
    Rat b1 = Rat(m) * (1 - lambda) / Rat(m + 1);  // exactly at threshold
    Rat b2(b2i(rng), 7);
    PhiSpec phi = custom_phi({b1, b2});
    BoundValue b = bound_a_2m1(phi, {m, lambda, Rat(0)});
    // Both branches give B1/(2m(1-lambda)): the high branch's prefactor vanishes.
    double tail = rat_to_double(b1) / (2.0 * m * rat_to_double(1 - lambda));
    CHECK(b.branch == "high-B1");
    CHECK(b.value == Approx(tail).epsilon(1e-12));
  }
}

TEST_CASE("h(gamma) structure") {
  // gamma = (m+1)/2 kills the numerator.
  for (int m = 1; m <= 3; ++m) {
    HGamma h = h_gamma(mobius_beta(Rat(1, 3)), {m, Rat(1, 5), Rat(m + 1, 2)});
    CHECK(!h.degenerate);
    CHECK(h.exact == 0);
  }
  HGamma h1 = h_gamma(mobius_beta(Rat(1, 3)), {1, Rat(0), Rat(1)});
  CHECK(h1.exact == 0);

  // Power family is degenerate for every alpha.
  for (int n = 1; n <= 9; ++n)
    CHECK(h_gamma(power_alpha(Rat(n, 10)), {1, Rat(0), Rat(0)}).degenerate);
}

TEST_CASE("Fekete-Szego bound branches") {
  // gamma = 1, m = 1: h = 0, small branch B1/(2(1-lambda)). The printed
  // corollary's B1/(4(1-lambda)) is not reproduced; the search module
  // exhibits a point attaining the theorem value.
  BoundValue fs = fekete_szego_bound(mobius_beta(Rat(1, 2)), {1, Rat(0), Rat(1)});
  CHECK(fs.branch == "small-h");
  CHECK(fs.value == Approx(0.5).epsilon(1e-12));

  // mobius(1/2), gamma = 1/2: h = -1/4, exactly the branch point, value 1/2.
  BoundValue bp = fekete_szego_bound(mobius_beta(Rat(1, 2)), {1, Rat(0), Rat(1, 2)});
  CHECK(h_gamma(mobius_beta(Rat(1, 2)), {1, Rat(0), Rat(1, 2)}).exact == Rat(-1, 4));
  CHECK(bp.branch == "large-h");
  CHECK(bp.value == Approx(0.5).epsilon(1e-12));

  // Degenerate family falls back to the endpoint formula.
  BoundValue deg = fekete_szego_bound(power_alpha(Rat(1)), {1, Rat(0), Rat(0)});
  CHECK(deg.branch == "degenerate");
  CHECK(deg.value == Approx(4.0).epsilon(1e-12));  // max(2/2, 2*4/2)
}

TEST_CASE("Fekete-Szego bound is branch-continuous at |h| = 1/(4m(1-lambda))") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> mi(1, 4), li(0, 9), gi(-4, 4), b1i(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    int m = mi(rng);
    Rat lambda(li(rng), 10);
    Rat gamma(gi(rng), 3);
    if (gamma == Rat(m + 1, 2)) continue;  // h = 0 identically
    Rat b1(b1i(rng), 2);
    // Choose B2 so |h| sits exactly on the branch point.
    Rat target = (Rat(m + 1) - 2 * gamma) * b1 * b1 / (Rat(m) * (1 - lambda));
    Rat b2 = (b1 * b1 - target) / 2;
    PhiSpec phi = custom_phi({b1, b2});
    ClassParams p{m, lambda, gamma};
    HGamma h = h_gamma(phi, p);
    REQUIRE(!h.degenerate);
    Rat abs_h = h.exact < 0 ? Rat(-h.exact) : h.exact;
    REQUIRE(abs_h * 4 * m * (1 - lambda) == 1);
    BoundValue fs = fekete_szego_bound(phi, p);
    double small = rat_to_double(b1) / (2.0 * m * rat_to_double(1 - lambda));
    double large = 2.0 * rat_to_double(b1) * std::abs(h.value);
    CHECK(fs.branch == "large-h");
    CHECK(fs.value == Approx(small).epsilon(1e-12));
    CHECK(fs.value == Approx(large).epsilon(1e-12));
  }
}

TEST_CASE("bounds are nondecreasing in lambda") {
  PhiSpec phi = mobius_beta(Rat(1, 4));
  for (int m = 1; m <= 3; ++m) {
    double prev_a = 0, prev_b = 0, prev_f = 0;
    for (int nl = 0; nl <= 9; ++nl) {
      ClassParams p{m, Rat(nl, 10), Rat(1, 3)};
      double a = bound_a_m1(phi, p).value;
      double b = bound_a_2m1(phi, p).value;
      double f = fekete_szego_bound(phi, p).value;
      CHECK(a >= prev_a);
      CHECK(b >= prev_b);
      CHECK(f >= prev_f);
      prev_a = a;
      prev_b = b;
      prev_f = f;
    }
  }
}

TEST_CASE("Fekete-Szego at gamma = (m+1)/2 equals B1/(2m(1-lambda))") {
  for (int m = 1; m <= 3; ++m) {
    for (const PhiSpec& phi : {mobius_beta(Rat(1, 3)), custom_phi({Rat(3, 2), Rat(-1)})}) {
      ClassParams p{m, Rat(1, 4), Rat(m + 1, 2)};
      CHECK(fekete_szego_bound(phi, p).value ==
            Approx(phi.b1d() / (2.0 * m * 0.75)).epsilon(1e-12));
    }
  }
}

TEST_CASE("reference bounds from prior work") {
  ReferencePair a = reference_bounds(ReferenceFamily::Alpha, Rat(1), {1, Rat(0), Rat(0)});
  CHECK(a.a_m1 == Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(a.a_2m1 == Approx(5.0).epsilon(1e-12));  // 1 + 4

  ReferencePair b = reference_bounds(ReferenceFamily::Beta, Rat(0), {1, Rat(0), Rat(0)});
  CHECK(b.a_m1 == Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(reference_bounds(ReferenceFamily::Alpha, Rat(2), {1, Rat(0), Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("corollary table matches and flags as expected") {
  std::vector<Rat> params, lambdas;
  for (int i = 0; i < 10; ++i) params.push_back(Rat(i, 10));
  for (int i = 0; i < 10; ++i) lambdas.push_back(Rat(i, 12));
  auto rows = corollary_table(params, lambdas);
  int checked = 0, flagged = 0;
  for (const auto& r : rows) {
    if (r.id == "cor-beta-am1" || r.id == "cor-alpha-am1" || r.id == "cor-lambda0-am1") {
      CHECK(r.match);
      ++checked;
    }
    if (r.id == "cor-fs-gamma1") {
      CHECK(!r.match);  // theorem B1/(2(1-lambda)) vs printed B1/(4(1-lambda))
      CHECK(r.general == Approx(2.0 * r.printed).epsilon(1e-12));
      ++flagged;
    }
  }
  CHECK(checked > 100);
  CHECK(flagged == 100);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(bound_a_m1(mobius_beta(Rat(0)), {0, Rat(0), Rat(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(bound_a_m1(mobius_beta(Rat(0)), {1, Rat(1), Rat(0)}),
                  std::invalid_argument);
}
