#include "biuniv/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace biuniv {

void ClassParams::validate() const {
  if (m < 1) throw std::invalid_argument("ClassParams: m must be >= 1");
  if (lambda < 0 || lambda >= 1)
    throw std::invalid_argument("ClassParams: lambda must lie in [0, 1)");
}

namespace {

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

double d(const Rat& r) { return rat_to_double(r); }

}  // namespace

BoundValue bound_a_m1(const PhiSpec& phi, const ClassParams& p) {
  p.validate();
  Rat b1 = phi.b1();
  Rat abs_disc = abs_rat(phi.disc());
  double num = d(b1) * std::sqrt(d(b1));
  double den = p.m * (1.0 - p.lambdad()) * std::sqrt(d(abs_disc + b1));
  BoundValue r;
  r.value = num / den;
  r.degenerate = phi.disc() == 0;
  return r;
}

BoundValue bound_a_2m1(const PhiSpec& phi, const ClassParams& p) {
  p.validate();
  Rat b1 = phi.b1();
  Rat abs_disc = abs_rat(phi.disc());
  Rat one_l = 1 - p.lambda;
  Rat threshold = Rat(p.m) * one_l / Rat(p.m + 1);
  BoundValue r;
  double tail = d(b1) / (2.0 * p.m * d(one_l));
  if (b1 >= threshold) {
    Rat factor = Rat(p.m + 1) - Rat(p.m) * one_l / b1;
    Rat head = factor * b1 * b1 * b1 /
               (2 * Rat(p.m) * Rat(p.m) * one_l * one_l * (b1 + abs_disc));
    r.value = d(head) + tail;
    r.branch = "high-B1";
  } else {
    r.value = tail;
    r.branch = "low-B1";
  }
  r.degenerate = phi.disc() == 0;
  return r;
}

HGamma h_gamma(const PhiSpec& phi, const ClassParams& p) {
  p.validate();
  HGamma h;
  Rat disc = phi.disc();
  if (disc == 0) {
    h.degenerate = true;
    return h;
  }
  Rat one_l = 1 - p.lambda;
  h.exact = (Rat(p.m + 1) - 2 * p.gamma) / 2 * phi.b1() * phi.b1() /
            (2 * Rat(p.m) * Rat(p.m) * one_l * one_l * disc);
  h.value = d(h.exact);
  return h;
}

BoundValue fekete_szego_bound(const PhiSpec& phi, const ClassParams& p) {
  p.validate();
  Rat b1 = phi.b1();
  Rat one_l = 1 - p.lambda;
  BoundValue r;
  HGamma h = h_gamma(phi, p);
  if (h.degenerate) {
    // B1^2 = 2 B2: Eq. 23 pins b_2m + c_2m = 0 and the objective is linear
    // in |b_m|^2, so the maximum sits at an endpoint.
    Rat small = b1 / (2 * Rat(p.m) * one_l);
    Rat large = abs_rat(Rat(p.m + 1) - 2 * p.gamma) * b1 * b1 /
                (2 * Rat(p.m) * Rat(p.m) * one_l * one_l);
    r.value = d(small > large ? small : large);
    r.branch = "degenerate";
    r.degenerate = true;
    return r;
  }
  Rat abs_h = abs_rat(h.exact);
  if (abs_h * 4 * Rat(p.m) * one_l < 1) {
    r.value = d(b1 / (2 * Rat(p.m) * one_l));
    r.branch = "small-h";
  } else {
    r.value = d(2 * b1 * abs_h);
    r.branch = "large-h";
  }
  return r;
}

ReferencePair reference_bounds(ReferenceFamily family, const Rat& param, const ClassParams& p) {
  p.validate();
  double m = p.m;
  double one_l = 1.0 - p.lambdad();
  ReferencePair r;
  if (family == ReferenceFamily::Alpha) {
    if (param <= 0 || param > 1)
      throw std::invalid_argument("reference_bounds: alpha must lie in (0, 1]");
    double a = d(param);
    r.a_m1 = 2.0 * a / (m * one_l * std::sqrt(a + 1.0));
    r.a_2m1 = a / (m * one_l) + 2.0 * (m + 1.0) * a * a / (m * m * one_l * one_l);
  } else {
    if (param < 0 || param >= 1)
      throw std::invalid_argument("reference_bounds: beta must lie in [0, 1)");
    double b = d(param);
    r.a_m1 = std::sqrt(2.0 * (1.0 - b)) / (m * one_l);
    // The printed second bound reuses the alpha-class term with an
    // undefined alpha; 1-beta is the matching order parameter.
    r.a_2m1 = (1.0 - b) / (m * one_l) +
              2.0 * (m + 1.0) * (1.0 - b) * (1.0 - b) / (m * m * one_l * one_l);
  }
  return r;
}

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string pt(const char* name, const Rat& v, const Rat& lambda) {
  return std::string(name) + "=" + rat_to_string(v) + " lambda=" + rat_to_string(lambda);
}

}  // namespace

std::vector<CorollaryRow> corollary_table(const std::vector<Rat>& param_grid,
                                          const std::vector<Rat>& lambda_grid) {
  std::vector<CorollaryRow> rows;
  for (const Rat& q : param_grid) {
    for (const Rat& l : lambda_grid) {
      ClassParams p{1, l, Rat(0)};
      if (q >= 0 && q < 1) {
        PhiSpec phi = mobius_beta(q);
        double general = bound_a_m1(phi, p).value;
        double printed =
            2.0 * (1.0 - d(q)) / ((1.0 - d(l)) * std::sqrt(2.0 * d(q) + 1.0));
        rows.push_back({"cor-beta-am1", pt("beta", q, l), general, printed,
                        close(general, printed)});
      }
      if (q > 0 && q <= 1) {
        PhiSpec phi = power_alpha(q);
        double general = bound_a_m1(phi, p).value;
        double printed = 2.0 * d(q) / (1.0 - d(l));
        rows.push_back({"cor-alpha-am1", pt("alpha", q, l), general, printed,
                        close(general, printed)});
      }
      if (q >= 0 && q < 1) {
        // Fekete-Szego at gamma = 1, m = 1: the theorem's small-h branch
        // gives B1/(2(1-lambda)); the printed corollary says B1/(4(1-lambda)).
        PhiSpec phi = mobius_beta(q);
        ClassParams pg{1, l, Rat(1)};
        double general = fekete_szego_bound(phi, pg).value;
        double printed = phi.b1d() / (4.0 * (1.0 - d(l)));
        rows.push_back({"cor-fs-gamma1", pt("beta", q, l), general, printed,
                        close(general, printed)});
      }
      if (q >= 0 && q < 1) {
        // One-fold Fekete-Szego corollary piecewise factors (B1/4, 4 B1 |h|)
        // against the theorem's (B1/2, 2 B1 |h|), evaluated at gamma = 0.
        PhiSpec phi = mobius_beta(q);
        ClassParams pg{1, l, Rat(0)};
        BoundValue general = fekete_szego_bound(phi, pg);
        HGamma h = h_gamma(phi, pg);
        double printed;
        if (general.branch == "large-h")
          printed = 4.0 * phi.b1d() * std::abs(h.value);
        else
          printed = phi.b1d() / (4.0 * (1.0 - d(l)));
        rows.push_back({"cor-fs-factors", pt("beta", q, l), general.value, printed,
                        close(general.value, printed)});
      }
    }
    // lambda = 0 m-fold specialization of Eq. 14.
    if (q >= 0 && q < 1) {
      PhiSpec phi = mobius_beta(q);
      for (int m = 1; m <= 3; ++m) {
        ClassParams p{m, Rat(0), Rat(0)};
        double general = bound_a_m1(phi, p).value;
        double b1 = phi.b1d();
        double printed =
            b1 * std::sqrt(b1) / (m * std::sqrt(std::abs(phi.discd()) + b1));
        rows.push_back({"cor-lambda0-am1",
                        "beta=" + rat_to_string(q) + " m=" + std::to_string(m), general,
                        printed, close(general, printed)});
      }
    }
  }
  return rows;
}

}  // namespace biuniv
