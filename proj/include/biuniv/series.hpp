#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "biuniv/rational.hpp"

namespace biuniv {

// Truncated formal power series c0 + c1 z + ... + cN z^N.
// T is the scalar backend: std::complex<double> or RatC.
// All operations are pure; results carry the minimum order of their inputs.
template <class T>
class Series {
 public:
  Series() : coeffs_(1, T{}) {}
  explicit Series(int order) : coeffs_(static_cast<size_t>(order) + 1, T{}) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
  }
  explicit Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Series: empty coefficient list");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](int n) const {
    static const T zero{};
    return (n >= 0 && n <= order()) ? coeffs_[static_cast<size_t>(n)] : zero;
  }

  Series truncated(int new_order) const {
    Series r(std::min(new_order, order()));
    for (int n = 0; n <= r.order(); ++n) r.coeffs_[n] = coeffs_[n];
    return r;
  }

  bool is_normalized() const {
    return scalar_traits<T>::is_zero(coeffs_[0]) && order() >= 1 &&
           coeffs_[1] == scalar_traits<T>::from_int(1);
  }

  static Series identity(int order) {
    Series r(order);
    if (order >= 1) r.coeffs_[1] = scalar_traits<T>::from_int(1);
    return r;
  }
  static Series constant(T c, int order) {
    Series r(order);
    r.coeffs_[0] = std::move(c);
    return r;
  }

  void set(int n, T c) {
    if (n < 0 || n > order()) throw std::out_of_range("Series::set");
    coeffs_[static_cast<size_t>(n)] = std::move(c);
  }

 private:
  std::vector<T> coeffs_;
};

using DSeries = Series<std::complex<double>>;
using QSeries = Series<RatC>;

template <class T>
Series<T> add(const Series<T>& a, const Series<T>& b) {
  int n = std::min(a.order(), b.order());
  Series<T> r(n);
  for (int k = 0; k <= n; ++k) r.set(k, a[k] + b[k]);
  return r;
}

template <class T>
Series<T> sub(const Series<T>& a, const Series<T>& b) {
  int n = std::min(a.order(), b.order());
  Series<T> r(n);
  for (int k = 0; k <= n; ++k) r.set(k, a[k] - b[k]);
  return r;
}

template <class T>
Series<T> scale(const Series<T>& a, const T& k) {
  Series<T> r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.set(n, a[n] * k);
  return r;
}

// Cauchy product, truncated to the minimum order.
template <class T>
Series<T> mul(const Series<T>& a, const Series<T>& b) {
  int n = std::min(a.order(), b.order());
  Series<T> r(n);
  for (int i = 0; i <= n; ++i) {
    T acc{};
    for (int j = 0; j <= i; ++j) acc += a[j] * b[i - j];
    r.set(i, acc);
  }
  return r;
}

template <class T>
Series<T> derivative(const Series<T>& a) {
  int n = std::max(a.order() - 1, 0);
  Series<T> r(n);
  for (int k = 1; k <= a.order(); ++k)
    r.set(k - 1, a[k] * scalar_traits<T>::from_int(k));
  return r;
}

// outer(inner(z)), Horner over the outer coefficients. Requires inner(0) = 0.
template <class T>
Series<T> compose(const Series<T>& outer, const Series<T>& inner) {
  if (!scalar_traits<T>::is_zero(inner[0]))
    throw std::invalid_argument("compose: inner constant term must be zero");
  int n = std::min(outer.order(), inner.order());
  Series<T> r(n);
  for (int k = outer.order(); k >= 0; --k) {
    Series<T> next = mul(r, inner.truncated(n));
    next = add(next, Series<T>::constant(outer[k], n));
    r = next;
  }
  return r;
}

// 1/a, requires a(0) != 0.
template <class T>
Series<T> reciprocal(const Series<T>& a) {
  if (scalar_traits<T>::is_zero(a[0]))
    throw std::invalid_argument("reciprocal: constant term is zero");
  int n = a.order();
  Series<T> r(n);
  T inv0 = scalar_traits<T>::from_int(1) / a[0];
  r.set(0, inv0);
  for (int k = 1; k <= n; ++k) {
    T acc{};
    for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r.set(k, -(acc * inv0));
  }
  return r;
}

// log a with a(0) = 1, principal branch. Solves (log a)' = a'/a termwise.
template <class T>
Series<T> log1(const Series<T>& a) {
  if (a[0] != scalar_traits<T>::from_int(1))
    throw std::invalid_argument("log1: constant term must be 1");
  int n = a.order();
  Series<T> da = derivative(a);            // order n-1
  Series<T> q = mul(da, reciprocal(a).truncated(std::max(n - 1, 0)));
  Series<T> r(n);
  for (int k = 1; k <= n; ++k)
    r.set(k, q[k - 1] / scalar_traits<T>::from_int(k));
  return r;
}

// exp a with a(0) = 0.
template <class T>
Series<T> exp0(const Series<T>& a) {
  if (!scalar_traits<T>::is_zero(a[0]))
    throw std::invalid_argument("exp0: constant term must be zero");
  int n = a.order();
  Series<T> r(n);
  r.set(0, scalar_traits<T>::from_int(1));
  // r' = a' r  =>  k r_k = sum_{j=1..k} j a_j r_{k-j}
  for (int k = 1; k <= n; ++k) {
    T acc{};
    for (int j = 1; j <= k; ++j)
      acc += a[j] * scalar_traits<T>::from_int(j) * r[k - j];
    r.set(k, acc / scalar_traits<T>::from_int(k));
  }
  return r;
}

// a^e for real exponent e, principal branch; requires a(0) = 1.
template <class T>
Series<T> pow_fractional(const Series<T>& a, const real_of<T>& e) {
  if (a[0] != scalar_traits<T>::from_int(1))
    throw std::invalid_argument("pow_fractional: constant term must be 1");
  return exp0(scale(log1(a), scalar_traits<T>::from_real(e)));
}

// Compositional inverse of a normalized series (c0 = 0, c1 = 1), by
// triangular back-substitution on compose(f, g) = id: the coefficient of
// w^n in f(g) is g_n plus terms involving only g_j with j < n.
template <class T>
Series<T> revert(const Series<T>& f) {
  if (!f.is_normalized())
    throw std::invalid_argument("revert: series must be normalized (c0=0, c1=1)");
  int n = f.order();
  Series<T> g(n);
  g.set(1, scalar_traits<T>::from_int(1));
  for (int k = 2; k <= n; ++k) {
    Series<T> c = compose(f.truncated(k), g.truncated(k));
    g.set(k, -c[k]);
  }
  return g;
}

// f(z^m): coefficient k of f lands at exponent k*m.
template <class T>
Series<T> stretch(const Series<T>& f, int m) {
  if (m < 1) throw std::invalid_argument("stretch: m must be >= 1");
  Series<T> r(f.order() * m);
  for (int k = 0; k <= f.order(); ++k) r.set(k * m, f[k]);
  return r;
}

// (f(z^m))^(1/m) for normalized f: the m-fold symmetric companion of f.
template <class T>
Series<T> mfold_lift(const Series<T>& f, int m) {
  if (!f.is_normalized())
    throw std::invalid_argument("mfold_lift: series must be normalized");
  if (m < 1) throw std::invalid_argument("mfold_lift: m must be >= 1");
  if (m == 1) return f;
  // f(z^m) = z^m * q(z) with q(0) = 1; lift = z * q^(1/m).
  int qn = (f.order() - 1) * m;
  Series<T> q(qn);
  for (int k = 1; k <= f.order(); ++k) q.set((k - 1) * m, f[k]);
  Series<T> p = pow_fractional(q, scalar_traits<T>::real_ratio(1, m));
  Series<T> r(qn + 1);
  for (int k = 0; k <= qn; ++k) r.set(k + 1, p[k]);
  return r;
}

// True iff every coefficient at an exponent not congruent to 1 mod m vanishes.
template <class T>
bool is_mfold_symmetric(const Series<T>& f, int m, double tol = 1e-12) {
  if (m < 1) throw std::invalid_argument("is_mfold_symmetric: m must be >= 1");
  for (int k = 0; k <= f.order(); ++k)
    if (k % m != 1 % m && !scalar_traits<T>::is_zero(f[k], tol)) return false;
  return true;
}

// Carathéodory-style shape: constant term 1, support only at multiples of m.
template <class T>
bool is_mfold_caratheodory(const Series<T>& f, int m, double tol = 1e-12) {
  if (m < 1) throw std::invalid_argument("is_mfold_caratheodory: m must be >= 1");
  if (f[0] != scalar_traits<T>::from_int(1)) return false;
  for (int k = 1; k <= f.order(); ++k)
    if (k % m != 0 && !scalar_traits<T>::is_zero(f[k], tol)) return false;
  return true;
}

// Closed-form inverse coefficients for an m-fold symmetric series
// z + a_{m+1} z^{m+1} + a_{2m+1} z^{2m+1} + a_{3m+1} z^{3m+1} + ...
// Returns (g_{m+1}, g_{2m+1}, g_{3m+1}) of the compositional inverse.
template <class T>
struct MfoldInverseCoeffs {
  T g_m1, g_2m1, g_3m1;
};

template <class T>
MfoldInverseCoeffs<T> inverse_mfold_closed_form(int m, const T& a_m1, const T& a_2m1,
                                                const T& a_3m1) {
  if (m < 1) throw std::invalid_argument("inverse_mfold_closed_form: m must be >= 1");
  T mm1 = scalar_traits<T>::from_int(m + 1);
  T t32 = scalar_traits<T>::from_int(3 * m + 2);
  T half = scalar_traits<T>::from_int(1) / scalar_traits<T>::from_int(2);
  MfoldInverseCoeffs<T> r;
  r.g_m1 = -a_m1;
  r.g_2m1 = mm1 * a_m1 * a_m1 - a_2m1;
  r.g_3m1 = -(half * mm1 * t32 * a_m1 * a_m1 * a_m1 - t32 * a_m1 * a_2m1 + a_3m1);
  return r;
}

inline DSeries to_double_series(const QSeries& s) {
  std::vector<std::complex<double>> c(static_cast<size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) c[static_cast<size_t>(n)] = to_double_c(s[n]);
  return DSeries(std::move(c));
}

}  // namespace biuniv
