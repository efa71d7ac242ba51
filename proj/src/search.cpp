#include "biuniv/search.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace biuniv {

namespace {

constexpr double kDiscTol = 1e-12;
constexpr double kBoundSlack = 1e-9;
constexpr std::uint64_t kSeed = 0x5EED;

double norm2(std::complex<double> z) { return z.real() * z.real() + z.imag() * z.imag(); }

}  // namespace

std::complex<double> FeasibleRegion::pinned_s(std::complex<double> b_m) const {
  return 2.0 * phi.discd() * b_m * b_m / phi.b1d();
}

std::string functional_name(Functional f) {
  switch (f) {
    case Functional::AbsAm1: return "abs_a_m1";
    case Functional::AbsA2m1: return "abs_a_2m1";
    case Functional::FeketeSzego: return "fekete_szego";
  }
  return "?";
}

EnumerationStats enumerate_region(const FeasibleRegion& r, int density,
                                  const std::function<void(const SchwarzPoint&)>& fn,
                                  long random_samples) {
  if (density < 8) throw std::invalid_argument("enumerate_region: density must be >= 8");
  r.p.validate();
  EnumerationStats stats;
  const double two_pi = 2.0 * std::numbers::pi;

  auto try_point = [&](double rb, double thb, double rd, double thd) {
    std::complex<double> b_m = std::polar(rb, thb);
    std::complex<double> d = std::polar(rd, thd);
    std::complex<double> s = r.pinned_s(b_m);
    SchwarzPoint pt;
    pt.b_m = b_m;
    pt.c_m = -b_m;
    pt.b_2m = 0.5 * (s + d);
    pt.c_2m = 0.5 * (s - d);
    double cap = 1.0 - rb * rb;
    if (std::abs(pt.b_2m) <= cap + kDiscTol && std::abs(pt.c_2m) <= cap + kDiscTol) {
      stats.visited++;
      fn(pt);
    } else {
      stats.rejected++;
    }
  };

  for (int i = 0; i <= density; ++i) {
    double rb = static_cast<double>(i) / density;
    for (int j = 0; j < density; ++j) {
      double thb = two_pi * j / density;
      for (int k = 0; k <= density; ++k) {
        double rd = 2.0 * k / density;
        for (int l = 0; l < density; ++l) try_point(rb, thb, rd, two_pi * l / density);
      }
    }
  }

  if (random_samples > 0) {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (long n = 0; n < random_samples; ++n) {
      double rb = unit(rng);
      double thb = two_pi * unit(rng);
      double rd = 2.0 * unit(rng);
      double thd = two_pi * unit(rng);
      try_point(rb, thb, rd, thd);
    }
  }
  return stats;
}

namespace {

// One sweep of a cell evaluating several functionals at once. The
// functional values all have the shape |C + K d| for per-b_m constants
// C (K = 0 for |a_{m+1}|), so the inner loop is a handful of flops;
// maxima are tracked on squared magnitudes.
struct CellFunctional {
  Functional kind;
  Rat gamma;  // used only by FeketeSzego
};

struct CellBest {
  double best_norm2 = -1;
  SchwarzPoint argmax;
};

struct CellOutcome {
  std::vector<CellBest> best;
  long grid_size = 0;
  long rejected = 0;
};

CellOutcome run_cell(const PhiSpec& phi, int m, const Rat& lambda,
                     const std::vector<CellFunctional>& fns, int density,
                     long random_samples) {
  if (density < 8) throw std::invalid_argument("search: density must be >= 8");
  ClassParams{m, lambda, Rat(0)}.validate();

  const double b1 = rat_to_double(phi.b1());
  const double disc = phi.discd();
  const double one_l = 1.0 - rat_to_double(lambda);
  const double a_scale = b1 / (m * one_l);          // a_{m+1} = a_scale * b_m
  const double k_scale = b1 / (4.0 * m * one_l);    // coefficient of d
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<double> gammas_d(fns.size(), 0.0);
  for (size_t q = 0; q < fns.size(); ++q)
    if (fns[q].kind == Functional::FeketeSzego) gammas_d[q] = rat_to_double(fns[q].gamma);

  CellOutcome out;
  out.best.resize(fns.size());

  std::vector<double> cosv(static_cast<size_t>(density)), sinv(static_cast<size_t>(density));
  for (int j = 0; j < density; ++j) {
    cosv[j] = std::cos(two_pi * j / density);
    sinv[j] = std::sin(two_pi * j / density);
  }

  auto consider = [&](std::complex<double> b_m, std::complex<double> s,
                      const std::vector<std::complex<double>>& consts, double cap,
                      std::complex<double> d) {
    std::complex<double> b_2m = 0.5 * (s + d);
    std::complex<double> c_2m = 0.5 * (s - d);
    double lim = cap + kDiscTol;
    double lim2 = lim * lim;
    if (norm2(b_2m) > lim2 || norm2(c_2m) > lim2) {
      out.rejected++;
      return;
    }
    out.grid_size++;
    for (size_t q = 0; q < fns.size(); ++q) {
      double v = fns[q].kind == Functional::AbsAm1
                     ? norm2(consts[q])
                     : norm2(consts[q] + k_scale * d);
      if (v > out.best[q].best_norm2) {
        out.best[q].best_norm2 = v;
        out.best[q].argmax = SchwarzPoint{b_m, b_2m, -b_m, c_2m};
      }
    }
  };

  auto sweep_b = [&](std::complex<double> b_m, auto&& d_loop) {
    std::complex<double> a = a_scale * b_m;
    std::complex<double> a2 = a * a;
    std::complex<double> s = 2.0 * disc * b_m * b_m / b1;
    double cap = 1.0 - norm2(b_m);
    std::vector<std::complex<double>> consts(fns.size());
    for (size_t q = 0; q < fns.size(); ++q) {
      switch (fns[q].kind) {
        case Functional::AbsAm1: consts[q] = a; break;
        case Functional::AbsA2m1: consts[q] = (m + 1.0) / 2.0 * a2; break;
        case Functional::FeketeSzego:
          consts[q] = ((m + 1.0) / 2.0 - gammas_d[q]) * a2;
          break;
      }
    }
    d_loop(b_m, s, consts, cap);
  };

  for (int i = 0; i <= density; ++i) {
    double rb = static_cast<double>(i) / density;
    for (int j = 0; j < density; ++j) {
      std::complex<double> b_m{rb * cosv[j], rb * sinv[j]};
      sweep_b(b_m, [&](std::complex<double> bm, std::complex<double> s,
                       const std::vector<std::complex<double>>& consts, double cap) {
        for (int k = 0; k <= density; ++k) {
          double rd = 2.0 * k / density;
          for (int l = 0; l < density; ++l)
            consider(bm, s, consts, cap, {rd * cosv[l], rd * sinv[l]});
        }
      });
    }
  }

  if (random_samples > 0) {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (long n = 0; n < random_samples; ++n) {
      std::complex<double> b_m = std::polar(unit(rng), two_pi * unit(rng));
      double rd = 2.0 * unit(rng);
      double thd = two_pi * unit(rng);
      sweep_b(b_m, [&](std::complex<double> bm, std::complex<double> s,
                       const std::vector<std::complex<double>>& consts, double cap) {
        consider(bm, s, consts, cap, std::polar(rd, thd));
      });
    }
  }
  return out;
}

BoundValue theoretical_for(const PhiSpec& phi, const ClassParams& p, Functional f) {
  switch (f) {
    case Functional::AbsAm1: return bound_a_m1(phi, p);
    case Functional::AbsA2m1: return bound_a_2m1(phi, p);
    case Functional::FeketeSzego: return fekete_szego_bound(phi, p);
  }
  throw std::logic_error("unknown functional");
}

SearchReport make_report(const PhiSpec& phi, const ClassParams& p, Functional f,
                         const CellBest& best, long grid_size, long rejected) {
  SearchReport rep;
  rep.functional = functional_name(f);
  rep.params = p;
  rep.phi_label = phi.label();
  rep.theoretical = theoretical_for(phi, p, f);
  rep.empirical_max = best.best_norm2 > 0 ? std::sqrt(best.best_norm2) : 0.0;
  rep.argmax = best.argmax;
  rep.grid_size = grid_size + rejected;
  rep.samples_rejected = rejected;
  rep.tightness = rep.theoretical.value > 0 ? rep.empirical_max / rep.theoretical.value : 0;
  return rep;
}

}  // namespace

SearchReport empirical_max(const FeasibleRegion& r, Functional functional, int density,
                           long random_samples) {
  std::vector<CellFunctional> fns{{functional, r.p.gamma}};
  CellOutcome out = run_cell(r.phi, r.p.m, r.p.lambda, fns, density, random_samples);
  return make_report(r.phi, r.p, functional, out.best[0], out.grid_size, out.rejected);
}

ValidationGrid default_validation_grid() {
  ValidationGrid g;
  g.ms = {1, 2, 3};
  g.lambdas = {Rat(0), Rat(1, 4), Rat(1, 2)};
  g.gammas = {Rat(0), Rat(1, 2), Rat(1)};
  g.include_mid_gamma = true;
  g.phis = {mobius_beta(Rat(0)), mobius_beta(Rat(1, 2)), power_alpha(Rat(1, 2)),
            power_alpha(Rat(1))};
  g.density = 32;
  return g;
}

ValidationSummary validate_bounds(const ValidationGrid& grid) {
  struct Cell {
    const PhiSpec* phi;
    int m;
    Rat lambda;
    std::vector<CellFunctional> fns;
  };
  std::vector<Cell> cells;
  for (int m : grid.ms) {
    for (const Rat& l : grid.lambdas) {
      for (const PhiSpec& phi : grid.phis) {
        Cell cell{&phi, m, l, {}};
        cell.fns.push_back({Functional::AbsAm1, Rat(0)});
        cell.fns.push_back({Functional::AbsA2m1, Rat(0)});
        std::vector<Rat> gammas = grid.gammas;
        if (grid.include_mid_gamma) gammas.push_back(Rat(m + 1, 2));
        for (const Rat& gm : gammas) cell.fns.push_back({Functional::FeketeSzego, gm});
        cells.push_back(std::move(cell));
      }
    }
  }

  std::vector<std::vector<SearchReport>> cell_reports(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) break;
      const Cell& c = cells[i];
      CellOutcome out =
          run_cell(*c.phi, c.m, c.lambda, c.fns, grid.density, grid.random_samples);
      for (size_t q = 0; q < c.fns.size(); ++q) {
        ClassParams p{c.m, c.lambda, c.fns[q].gamma};
        cell_reports[i].push_back(make_report(*c.phi, p, c.fns[q].kind, out.best[q],
                                              out.grid_size, out.rejected));
      }
    }
  };

  unsigned n_threads = std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  if (const char* cap = std::getenv("BIUNIV_THREADS")) {
    long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n_threads = static_cast<unsigned>(std::min<long>(v, 256));
  }
  n_threads = std::min<unsigned>(n_threads, std::max<size_t>(cells.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t + 1 < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ValidationSummary summary;
  for (auto& reports : cell_reports)
    for (SearchReport& rep : reports) summary.reports.push_back(std::move(rep));
  for (const SearchReport& rep : summary.reports) {
    if (rep.empirical_max > rep.theoretical.value + kBoundSlack) {
      summary.violations.push_back(
          rep.functional + " phi=" + rep.phi_label + " m=" + std::to_string(rep.params.m) +
          " lambda=" + rat_to_string(rep.params.lambda) +
          " gamma=" + rat_to_string(rep.params.gamma) + ": empirical " +
          std::to_string(rep.empirical_max) + " > bound " +
          std::to_string(rep.theoretical.value));
    }
    double& slot = rep.functional == "abs_a_m1"    ? summary.min_tightness_a_m1
                   : rep.functional == "abs_a_2m1" ? summary.min_tightness_a_2m1
                                                   : summary.min_tightness_fs;
    slot = std::min(slot, rep.tightness);
  }
  return summary;
}

}  // namespace biuniv
