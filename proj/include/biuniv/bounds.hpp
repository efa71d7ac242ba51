#pragma once

#include <string>
#include <vector>

#include "biuniv/phi.hpp"

namespace biuniv {

// (m, lambda, gamma): fold order, class parameter, Fekete-Szego weight.
// lambda and gamma are held exactly so that branch selection at threshold
// values is deterministic.
struct ClassParams {
  int m = 1;
  Rat lambda{0};
  Rat gamma{0};

  void validate() const;
  double lambdad() const { return rat_to_double(lambda); }
  double gammad() const { return rat_to_double(gamma); }
};

struct BoundValue {
  double value = 0;
  std::string branch;     // "low-B1"/"high-B1", "small-h"/"large-h"/"degenerate"
  bool degenerate = false;  // set when B1^2 = 2 B2 forced a fallback
};

// |a_{m+1}| <= B1^(3/2) / (m (1-lambda) sqrt(|B1^2 - 2 B2| + B1)).
BoundValue bound_a_m1(const PhiSpec& phi, const ClassParams& p);

// Piecewise bound on |a_{2m+1}|, threshold B1 >= m(1-lambda)/(m+1).
BoundValue bound_a_2m1(const PhiSpec& phi, const ClassParams& p);

// h(gamma) = ((m+1-2 gamma)/2) B1^2 / (2 m^2 (1-lambda)^2 (B1^2 - 2 B2)),
// signed as printed; degenerate when B1^2 = 2 B2.
struct HGamma {
  bool degenerate = false;
  double value = 0;   // meaningless when degenerate
  Rat exact{0};       // exact value when not degenerate
};
HGamma h_gamma(const PhiSpec& phi, const ClassParams& p);

// |a_{2m+1} - gamma a_{m+1}^2| bound: B1/(2m(1-lambda)) when
// |h| < 1/(4m(1-lambda)), else 2 B1 |h|. When B1^2 = 2 B2 the printed
// form is undefined; the fallback derived from the same feasible set is
// max(B1/(2m(1-lambda)), |m+1-2 gamma| B1^2 / (2 m^2 (1-lambda)^2)).
BoundValue fekete_szego_bound(const PhiSpec& phi, const ClassParams& p);

// Prior-work reference bounds for the strongly-starlike (alpha) and
// starlike-of-order (beta) classes, for comparison tables.
enum class ReferenceFamily { Alpha, Beta };
struct ReferencePair {
  double a_m1 = 0;
  double a_2m1 = 0;
};
ReferencePair reference_bounds(ReferenceFamily family, const Rat& param, const ClassParams& p);

// One row per (corollary id, parameter point): the general-theorem value,
// the printed-corollary value, and whether they agree to 1e-12.
struct CorollaryRow {
  std::string id;
  std::string params;
  double general = 0;
  double printed = 0;
  bool match = false;
};
std::vector<CorollaryRow> corollary_table(const std::vector<Rat>& param_grid,
                                          const std::vector<Rat>& lambda_grid);

}  // namespace biuniv
