#pragma once

#include <functional>
#include <string>
#include <vector>

#include "biuniv/schwarz.hpp"

namespace biuniv {

// The proof's hypothesis set, parametrized by (b_m, d = b_2m - c_2m) with
// s = b_2m + c_2m pinned to 2 (B1^2 - 2 B2) b_m^2 / B1 so the pinning
// relation holds by construction. This set contains every coefficient
// datum the class can realize, so empirical maxima over it test the
// theorems' inequality chains, not class sharpness.
struct FeasibleRegion {
  PhiSpec phi;
  ClassParams p;

  std::complex<double> pinned_s(std::complex<double> b_m) const;
};

enum class Functional { AbsAm1, AbsA2m1, FeketeSzego };

std::string functional_name(Functional f);

struct SearchReport {
  std::string functional;
  ClassParams params;
  std::string phi_label;
  BoundValue theoretical;
  double empirical_max = 0;
  SchwarzPoint argmax;
  double tightness = 0;  // empirical / theoretical
  long grid_size = 0;
  long samples_rejected = 0;
};

// Deterministic sweep over (|b_m|, arg b_m, |d|, arg d) with `density`
// subdivisions per dimension (radial grids include both endpoints, so the
// point sets nest under density doubling), optionally augmented with
// `random_samples` uniform draws (fixed seed). Infeasible nodes are
// skipped; the callback sees only points satisfying the disc constraints.
struct EnumerationStats {
  long visited = 0;
  long rejected = 0;
};
EnumerationStats enumerate_region(const FeasibleRegion& r, int density,
                                  const std::function<void(const SchwarzPoint&)>& fn,
                                  long random_samples = 0);

SearchReport empirical_max(const FeasibleRegion& r, Functional functional, int density,
                           long random_samples = 0);

// One cell of the validation grid; gammas apply only to the
// Fekete-Szego functional.
struct ValidationGrid {
  std::vector<int> ms;
  std::vector<Rat> lambdas;
  std::vector<Rat> gammas;       // entries used verbatim
  bool include_mid_gamma = true;  // additionally gamma = (m+1)/2
  std::vector<PhiSpec> phis;
  int density = 32;
  long random_samples = 0;
};

ValidationGrid default_validation_grid();

struct ValidationSummary {
  std::vector<SearchReport> reports;
  std::vector<std::string> violations;  // empirical > theoretical + 1e-9
  double min_tightness_a_m1 = 1;
  double min_tightness_a_2m1 = 1;
  double min_tightness_fs = 1;
};

// Runs all three functionals on every grid cell, in parallel across cells
// (worker count capped by BIUNIV_THREADS). A bound violation is reported
// as a finding, never thrown.
ValidationSummary validate_bounds(const ValidationGrid& grid);

}  // namespace biuniv
