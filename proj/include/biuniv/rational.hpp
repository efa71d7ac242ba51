#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace biuniv {

using Rat = boost::multiprecision::cpp_rational;

// Exact complex scalar: a pair of arbitrary-precision rationals.
struct RatC {
  Rat re{0};
  Rat im{0};

  RatC() = default;
  RatC(Rat r) : re(std::move(r)) {}
  RatC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  RatC(int n) : re(n) {}
  RatC(long long n) : re(n) {}

  friend RatC operator+(const RatC& a, const RatC& b) { return {a.re + b.re, a.im + b.im}; }
  friend RatC operator-(const RatC& a, const RatC& b) { return {a.re - b.re, a.im - b.im}; }
  friend RatC operator-(const RatC& a) { return {-a.re, -a.im}; }
  friend RatC operator*(const RatC& a, const RatC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RatC operator/(const RatC& a, const RatC& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("RatC: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  RatC& operator+=(const RatC& b) { return *this = *this + b; }
  RatC& operator-=(const RatC& b) { return *this = *this - b; }
  RatC& operator*=(const RatC& b) { return *this = *this * b; }
  RatC& operator/=(const RatC& b) { return *this = *this / b; }
  friend bool operator==(const RatC& a, const RatC& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const RatC& a, const RatC& b) { return !(a == b); }
};

inline std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  std::istringstream is(s);
  if (!(is >> r)) throw std::invalid_argument("bad rational literal: " + s);
  return r;
}

// Exact double -> rational conversion (every finite double is a dyadic rational).
inline Rat rat_from_double(double x) {
  Rat r(x);
  return r;
}

inline double rat_to_double(const Rat& r) { return static_cast<double>(r); }

// Scalar traits shared by the two series backends.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<std::complex<double>> {
  using real_type = double;
  static bool is_zero(const std::complex<double>& c, double tol = 1e-12) {
    return std::abs(c) <= tol;
  }
  static std::complex<double> from_int(long long n) { return {static_cast<double>(n), 0.0}; }
  static std::complex<double> from_real(double r) { return {r, 0.0}; }
  static double real_ratio(long long p, long long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static constexpr bool exact = false;
};

template <>
struct scalar_traits<RatC> {
  using real_type = Rat;
  static bool is_zero(const RatC& c, double = 0) { return c.re == 0 && c.im == 0; }
  static RatC from_int(long long n) { return RatC(n); }
  static RatC from_real(Rat r) { return RatC(std::move(r)); }
  static Rat real_ratio(long long p, long long q) { return Rat(p, q); }
  static constexpr bool exact = true;
};

template <class T>
using real_of = typename scalar_traits<T>::real_type;

inline std::complex<double> to_double_c(const RatC& c) {
  return {rat_to_double(c.re), rat_to_double(c.im)};
}

}  // namespace biuniv
