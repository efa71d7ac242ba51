#include "biuniv/schwarz.hpp"

#include <cmath>
#include <stdexcept>

namespace biuniv {

bool SchwarzPoint::within_discs(double tol) const {
  double rb = std::abs(b_m), rc = std::abs(c_m);
  return rb <= 1.0 + tol && std::abs(b_2m) <= 1.0 - rb * rb + tol && rc <= 1.0 + tol &&
         std::abs(c_2m) <= 1.0 - rc * rc + tol;
}

bool SchwarzPoint::coupled(double tol) const { return std::abs(c_m + b_m) <= tol; }

MembershipCertificate check_membership(const DSeries& f, const PhiSpec& phi,
                                       const ClassParams& p, int order) {
  p.validate();
  if (!is_mfold_symmetric(f, p.m))
    throw std::invalid_argument("check_membership: f is not m-fold symmetric");
  if (order <= 0) order = 2 * p.m;
  if (f.order() < order + 1)
    throw std::invalid_argument("check_membership: f order too small for requested check");

  constexpr double kTol = 1e-10;
  DSeries g = revert(f);
  DSeries F = class_functional(f, p.lambdad());
  DSeries G = class_functional(g, p.lambdad());
  DSeries phi_s = phi.series(order);

  MembershipCertificate cert;
  cert.order = order;
  cert.u_coeffs = solve_schwarz(F.truncated(order), phi_s, order);
  cert.v_coeffs = solve_schwarz(G.truncated(order), phi_s, order);

  DSeries u(cert.u_coeffs), v(cert.v_coeffs);
  DSeries ru = sub(compose(phi_s, u), F.truncated(order));
  DSeries rv = sub(compose(phi_s, v), G.truncated(order));
  double max_resid = 0;
  for (int k = 0; k <= order; ++k) {
    double r = std::max(std::abs(ru[k]), std::abs(rv[k]));
    cert.residuals.push_back(r);
    max_resid = std::max(max_resid, r);
  }

  cert.point.b_m = u[p.m];
  cert.point.b_2m = u[2 * p.m];
  cert.point.c_m = v[p.m];
  cert.point.c_2m = v[2 * p.m];

  // Schwarz coefficients of an m-fold problem must be supported on
  // multiples of m; stray support counts against feasibility.
  bool symmetric = is_mfold_caratheodory(add(u, DSeries::constant({1.0, 0.0}, order)), p.m) &&
                   is_mfold_caratheodory(add(v, DSeries::constant({1.0, 0.0}, order)), p.m);

  cert.feasible = symmetric && max_resid <= kTol && cert.point.within_discs(kTol);
  return cert;
}

PointCoefficients coefficients_from_point(const SchwarzPoint& s, const PhiSpec& phi,
                                          const ClassParams& p) {
  p.validate();
  double b1 = phi.b1d();
  double one_l = 1.0 - p.lambdad();
  double m = p.m;
  PointCoefficients r;
  r.a_m1 = b1 * s.b_m / (m * one_l);
  std::complex<double> a2 = r.a_m1 * r.a_m1;
  r.a_2m1 = (m + 1.0) / 2.0 * a2 + b1 * (s.b_2m - s.c_2m) / (4.0 * m * one_l);
  r.residual = std::abs(2.0 * m * m * one_l * one_l * phi.discd() * a2 -
                        b1 * b1 * b1 * (s.b_2m + s.c_2m));
  return r;
}

}  // namespace biuniv
