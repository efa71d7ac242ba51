#pragma once

#include <complex>
#include <vector>

#include "biuniv/bounds.hpp"
#include "biuniv/series.hpp"

namespace biuniv {

// Leading Schwarz-function coefficient data (b_m, b_2m) for the f side and
// (c_m, c_2m) for the inverse side.
struct SchwarzPoint {
  std::complex<double> b_m{0}, b_2m{0}, c_m{0}, c_2m{0};

  // The truncated disc constraints: |b_m| <= 1, |b_2m| <= 1 - |b_m|^2,
  // and likewise for (c_m, c_2m).
  bool within_discs(double tol = 0) const;
  // Coupled points additionally satisfy c_m = -b_m.
  bool coupled(double tol = 1e-10) const;
};

struct MembershipCertificate {
  std::vector<std::complex<double>> u_coeffs;  // index k = coefficient of z^k
  std::vector<std::complex<double>> v_coeffs;
  SchwarzPoint point;
  bool feasible = false;
  std::vector<double> residuals;  // per-order matching error of phi(u)=F, phi(v)=G
  int order = 0;                  // truncation order checked
};

// zf'(z) / ((1-lambda) f(z) + lambda zf'(z)) for normalized f. The common
// factor z cancels before the division, so the result has constant term 1
// and the same order as f (f is treated as a polynomial past its order).
template <class T>
Series<T> class_functional(const Series<T>& f, const real_of<T>& lambda) {
  if (!f.is_normalized())
    throw std::invalid_argument("class_functional: series must be normalized");
  int n = f.order();
  // num = z f', den = (1-lambda) f + lambda z f', both divided by z.
  Series<T> num(n), den(n);
  T one = scalar_traits<T>::from_int(1);
  T lam = scalar_traits<T>::from_real(lambda);
  for (int k = 1; k <= n + 1; ++k) {
    T fk = f[k];  // zero past the stored order
    T zfp = fk * scalar_traits<T>::from_int(k);
    num.set(k - 1, zfp);
    den.set(k - 1, (one - lam) * fk + lam * zfp);
  }
  return mul(num, reciprocal(den));
}

// Given F with F(0) = 1, finds the unique u (u(0) = 0) with
// phi(u(z)) = F(z) through the given order. Coefficient n of u enters
// linearly with factor B1 != 0, so a triangular sweep suffices.
template <class T>
std::vector<T> solve_schwarz(const Series<T>& F, const Series<T>& phi_series, int order) {
  if (scalar_traits<T>::is_zero(phi_series[1]))
    throw std::invalid_argument("solve_schwarz: phi must have B1 != 0");
  Series<T> u(order);
  for (int k = 1; k <= order; ++k) {
    Series<T> c = compose(phi_series.truncated(order), u);
    u.set(k, (F[k] - c[k]) / phi_series[1]);
  }
  return u.coeffs();
}

// Certifies the truncated necessary conditions for class membership:
// builds g = f^{-1}, solves both subordination equations for u and v, and
// checks the disc constraints through order 2m.
MembershipCertificate check_membership(const DSeries& f, const PhiSpec& phi,
                                       const ClassParams& p, int order = 0);

// Coefficient data implied by a coupled Schwarz point, together with the
// consistency residual of the pinning relation
// 2 m^2 (1-lambda)^2 (B1^2 - 2 B2) a_{m+1}^2 = B1^3 (b_2m + c_2m).
struct PointCoefficients {
  std::complex<double> a_m1{0}, a_2m1{0};
  double residual = 0;
};
PointCoefficients coefficients_from_point(const SchwarzPoint& s, const PhiSpec& phi,
                                          const ClassParams& p);

}  // namespace biuniv
