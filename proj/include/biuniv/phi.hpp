#pragma once

#include <string>
#include <vector>

#include "biuniv/series.hpp"

namespace biuniv {

// A Ma-Minda majorant: phi(z) = 1 + B1 z + B2 z^2 + ... with B1 > 0 and
// all B_k real. Coefficients are held exactly; beyond the stored prefix
// they are taken as zero.
class PhiSpec {
 public:
  PhiSpec(std::vector<Rat> b, std::string label);

  const Rat& b1() const { return b_[0]; }
  const Rat& b2() const { return b_.size() > 1 ? b_[1] : zero_; }
  const Rat& bk(int k) const;  // B_k, k >= 1
  int stored() const { return static_cast<int>(b_.size()); }
  const std::string& label() const { return label_; }

  double b1d() const { return rat_to_double(b1()); }
  double b2d() const { return rat_to_double(b2()); }
  // B1^2 - 2 B2, the discriminant every bound depends on (through its
  // absolute value).
  Rat disc() const { return b1() * b1() - 2 * b2(); }
  double discd() const { return rat_to_double(disc()); }

  QSeries series_exact(int order) const;
  DSeries series(int order) const;

 private:
  std::vector<Rat> b_;
  std::string label_;
  static const Rat zero_;
};

// ((1+z)/(1-z))^alpha, 0 < alpha <= 1: B1 = 2 alpha, B2 = 2 alpha^2, ...
PhiSpec power_alpha(const Rat& alpha);
// (1+(1-2 beta) z)/(1-z), 0 <= beta < 1: B_k = 2(1-beta) for all k.
PhiSpec mobius_beta(const Rat& beta);
// Arbitrary admissible coefficient sequence (first entry must be positive).
PhiSpec custom_phi(std::vector<Rat> coeffs);

// ((1-z)/(1+z))^alpha and (1-(1-2 beta) z)/(1-z): the z -> -z companions.
// Every bound in scope depends only on B1 and |B1^2 - 2 B2|, which the
// sign flip preserves, so these share the base family's coefficient data.
PhiSpec power_alpha_conjugate(const Rat& alpha);
PhiSpec mobius_beta_conjugate(const Rat& beta);

// Parses "power:A", "mobius:B", or "custom:B1,B2[,B3...]" where each
// number is a decimal or "p/q" literal (converted exactly).
PhiSpec parse_phi(const std::string& spec);

// Exact decimal/rational literal parser ("0.25" -> 1/4, "3/7" -> 3/7).
Rat parse_rat(const std::string& text);

}  // namespace biuniv
