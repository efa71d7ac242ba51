#include "biuniv/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "biuniv/search.hpp"
#include "biuniv/series_json.hpp"

namespace biuniv {

namespace {

using nlohmann::json;

// Shortest round-trip formatting, for diff-stable CSV output.
std::string fmt(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t comma = csv.find(',', start);
    std::string item =
        comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
    out.push_back(parse_rat(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rat rat_from_json(const json& v) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  return rat_from_double(v.get<double>());
}

json bound_json(const BoundValue& b) {
  return {{"value", b.value}, {"branch", b.branch}, {"degenerate", b.degenerate}};
}

json point_json(const SchwarzPoint& pt) {
  auto c = [](std::complex<double> z) { return json{z.real(), z.imag()}; };
  return {{"b_m", c(pt.b_m)}, {"b_2m", c(pt.b_2m)}, {"c_m", c(pt.c_m)}, {"c_2m", c(pt.c_2m)}};
}

json report_json(const SearchReport& rep) {
  return {{"functional", rep.functional},
          {"params",
           {{"m", rep.params.m},
            {"lambda", rat_to_string(rep.params.lambda)},
            {"gamma", rat_to_string(rep.params.gamma)},
            {"phi", rep.phi_label}}},
          {"theoretical", bound_json(rep.theoretical)},
          {"empirical", rep.empirical_max},
          {"argmax", point_json(rep.argmax)},
          {"tightness", rep.tightness},
          {"grid_size", rep.grid_size},
          {"samples_rejected", rep.samples_rejected}};
}

void emit(std::ostream& out, const std::string& out_path, const std::string& text,
          std::ostream& err) {
  if (out_path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open --out file: " + out_path);
  f << text << "\n";
  (void)err;
}

DSeries load_series(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read --f file: " + path);
  json j;
  f >> j;
  return dseries_from_json(j);
}

int cmd_bounds(const PhiSpec& phi, const ClassParams& p, bool has_gamma, bool csv,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  BoundValue am1 = bound_a_m1(phi, p);
  BoundValue a2m1 = bound_a_2m1(phi, p);
  json j = {{"phi", phi.label()},
            {"m", p.m},
            {"lambda", rat_to_string(p.lambda)},
            {"bound_a_m1", am1.value},
            {"bound_a_2m1", a2m1.value},
            {"branch", {{"a_2m1", a2m1.branch}}},
            {"degenerate", am1.degenerate}};
  if (has_gamma) {
    BoundValue fs = fekete_szego_bound(phi, p);
    j["gamma"] = rat_to_string(p.gamma);
    j["fekete_szego"] = fs.value;
    j["branch"]["fekete_szego"] = fs.branch;
  }
  if (csv) {
    std::ostringstream os;
    os << "bound_a_m1,bound_a_2m1,fekete_szego,branch,degenerate\n"
       << fmt(am1.value) << "," << fmt(a2m1.value) << ","
       << (has_gamma ? fmt(j["fekete_szego"].get<double>()) : "") << "," << a2m1.branch
       << "," << (am1.degenerate ? "true" : "false");
    emit(out, out_path, os.str(), err);
  } else {
    emit(out, out_path, j.dump(2), err);
  }
  return 0;
}

ValidationGrid grid_from_json(const json& j) {
  ValidationGrid g = default_validation_grid();
  if (j.contains("m")) {
    g.ms.clear();
    for (const auto& v : j["m"]) g.ms.push_back(v.get<int>());
  }
  if (j.contains("lambda")) {
    g.lambdas.clear();
    for (const auto& v : j["lambda"]) g.lambdas.push_back(rat_from_json(v));
  }
  if (j.contains("gamma")) {
    g.gammas.clear();
    for (const auto& v : j["gamma"]) g.gammas.push_back(rat_from_json(v));
  }
  if (j.contains("include_mid_gamma")) g.include_mid_gamma = j["include_mid_gamma"].get<bool>();
  if (j.contains("phi")) {
    g.phis.clear();
    for (const auto& v : j["phi"]) g.phis.push_back(parse_phi(v.get<std::string>()));
  }
  if (j.contains("density")) g.density = j["density"].get<int>();
  if (j.contains("random_samples")) g.random_samples = j["random_samples"].get<long>();
  return g;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient-bound evaluation and stress-testing for m-fold "
               "symmetric bi-univalent function classes"};
  app.require_subcommand(1);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the closed-form coefficient bounds");
  int b_m = 1;
  std::string b_lambda = "0", b_gamma, b_phi, b_out;
  bool b_csv = false, b_json = false;
  bounds_cmd->add_option("--m", b_m, "fold order (>= 1)")->required();
  bounds_cmd->add_option("--lambda", b_lambda, "class parameter in [0,1)");
  bounds_cmd->add_option("--gamma", b_gamma, "Fekete-Szego weight");
  bounds_cmd->add_option("--phi", b_phi, "majorant: power:A | mobius:B | custom:B1,B2,...")
      ->required();
  bounds_cmd->add_flag("--json", b_json, "JSON output (default)");
  bounds_cmd->add_flag("--csv", b_csv, "CSV output");
  bounds_cmd->add_option("--out", b_out, "write output to file");

  // invert
  auto* invert_cmd = app.add_subcommand("invert", "Inverse-series coefficients");
  int i_m = 1;
  std::string i_coeffs, i_out;
  invert_cmd->add_option("--m", i_m, "fold order (>= 1)")->required();
  invert_cmd->add_option("--coeffs", i_coeffs, "a_{m+1},a_{2m+1},a_{3m+1} (exact literals)")
      ->required();
  invert_cmd->add_option("--out", i_out, "write output to file");

  // lift
  auto* lift_cmd = app.add_subcommand("lift", "m-fold symmetric lift (f(z^m))^(1/m)");
  int l_m = 1;
  std::string l_coeffs, l_file, l_out;
  lift_cmd->add_option("--m", l_m, "fold order (>= 1)")->required();
  lift_cmd->add_option("--coeffs", l_coeffs, "a_2,a_3,... of a normalized series");
  lift_cmd->add_option("--f", l_file, "series JSON file");
  lift_cmd->add_option("--out", l_out, "write output to file");

  // check
  auto* check_cmd = app.add_subcommand("check", "Truncated class-membership certificate");
  int c_m = 1, c_order = 0;
  std::string c_lambda = "0", c_phi, c_file, c_out;
  check_cmd->add_option("--m", c_m, "fold order (>= 1)")->required();
  check_cmd->add_option("--lambda", c_lambda, "class parameter in [0,1)");
  check_cmd->add_option("--phi", c_phi, "majorant spec")->required();
  check_cmd->add_option("--f", c_file, "series JSON file")->required();
  check_cmd->add_option("--order", c_order, "truncation order to certify (default 2m)");
  check_cmd->add_option("--out", c_out, "write output to file");

  // search
  auto* search_cmd = app.add_subcommand("search", "Extremal search over the feasible set");
  int s_density = 32;
  std::string s_grid, s_functional, s_out;
  search_cmd->add_option("--grid", s_grid, "grid spec JSON file (default grid if omitted)");
  search_cmd->add_option("--density", s_density, "grid subdivisions per dimension (>= 8)");
  search_cmd->add_option("--functional", s_functional,
                         "abs_a_m1 | abs_a_2m1 | fekete_szego (default: all)");
  search_cmd->add_option("--out", s_out, "write report JSON to file");

  // corollaries
  auto* cor_cmd = app.add_subcommand("corollaries",
                                     "Printed-corollary vs general-theorem comparison table");
  bool cor_csv = false, cor_json = false;
  std::string cor_out;
  cor_cmd->add_flag("--json", cor_json, "JSON output (default)");
  cor_cmd->add_flag("--csv", cor_csv, "CSV output");
  cor_cmd->add_option("--out", cor_out, "write output to file");

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "New bounds vs prior-work reference bounds");
  int p_m = 1;
  std::string p_lambda = "0", p_family, p_param, p_out;
  bool cmp_csv = false, cmp_json = false;
  cmp_cmd->add_option("--family", p_family, "alpha | beta")->required();
  cmp_cmd->add_option("--param", p_param, "alpha in (0,1] or beta in [0,1)")->required();
  cmp_cmd->add_option("--m", p_m, "fold order (>= 1)");
  cmp_cmd->add_option("--lambda", p_lambda, "class parameter in [0,1)");
  cmp_cmd->add_flag("--json", cmp_json, "JSON output (default)");
  cmp_cmd->add_flag("--csv", cmp_csv, "CSV output");
  cmp_cmd->add_option("--out", p_out, "write output to file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bounds_cmd->parsed()) {
      ClassParams p{b_m, parse_rat(b_lambda), b_gamma.empty() ? Rat(0) : parse_rat(b_gamma)};
      p.validate();
      return cmd_bounds(parse_phi(b_phi), p, !b_gamma.empty(), b_csv && !b_json, b_out, out,
                        err);
    }

    if (invert_cmd->parsed()) {
      if (i_m < 1) throw std::invalid_argument("--m must be >= 1");
      std::vector<Rat> a = parse_rat_list(i_coeffs);
      if (a.size() != 3)
        throw std::invalid_argument("--coeffs needs exactly a_{m+1},a_{2m+1},a_{3m+1}");
      auto inv = inverse_mfold_closed_form<RatC>(i_m, RatC(a[0]), RatC(a[1]), RatC(a[2]));
      QSeries f(3 * i_m + 1);
      f.set(1, RatC(1));
      f.set(i_m + 1, RatC(a[0]));
      f.set(2 * i_m + 1, RatC(a[1]));
      f.set(3 * i_m + 1, RatC(a[2]));
      QSeries g = revert(f);
      json j = {{"m", i_m},
                {"closed_form",
                 {{"g_m1", rat_to_string(inv.g_m1.re)},
                  {"g_2m1", rat_to_string(inv.g_2m1.re)},
                  {"g_3m1", rat_to_string(inv.g_3m1.re)}}},
                {"inverse_series", to_json(g)}};
      emit(out, i_out, j.dump(2), err);
      return 0;
    }

    if (lift_cmd->parsed()) {
      if (l_m < 1) throw std::invalid_argument("--m must be >= 1");
      if (l_coeffs.empty() == l_file.empty())
        throw std::invalid_argument("give exactly one of --coeffs or --f");
      DSeries f = [&] {
        if (!l_file.empty()) return load_series(l_file);
        std::vector<Rat> a = parse_rat_list(l_coeffs);
        DSeries s(static_cast<int>(a.size()) + 1);
        s.set(1, {1.0, 0.0});
        for (size_t k = 0; k < a.size(); ++k)
          s.set(static_cast<int>(k) + 2, {rat_to_double(a[k]), 0.0});
        return s;
      }();
      emit(out, l_out, to_json(mfold_lift(f, l_m)).dump(2), err);
      return 0;
    }

    if (check_cmd->parsed()) {
      ClassParams p{c_m, parse_rat(c_lambda), Rat(0)};
      p.validate();
      MembershipCertificate cert = check_membership(load_series(c_file), parse_phi(c_phi), p,
                                                    c_order);
      json uc = json::array(), vc = json::array();
      for (auto z : cert.u_coeffs) uc.push_back({z.real(), z.imag()});
      for (auto z : cert.v_coeffs) vc.push_back({z.real(), z.imag()});
      json j = {{"feasible", cert.feasible},
                {"order", cert.order},
                {"u_coeffs", uc},
                {"v_coeffs", vc},
                {"point", point_json(cert.point)},
                {"residuals", cert.residuals}};
      emit(out, c_out, j.dump(2), err);
      return cert.feasible ? 0 : 1;
    }

    if (search_cmd->parsed()) {
      ValidationGrid grid = default_validation_grid();
      if (!s_grid.empty()) {
        std::ifstream f(s_grid);
        if (!f) throw std::runtime_error("cannot read --grid file: " + s_grid);
        json gj;
        f >> gj;
        grid = grid_from_json(gj);
      }
      grid.density = s_density;
      if (!s_functional.empty()) {
        if (s_functional == "abs_a_m1") grid.gammas.clear(), grid.include_mid_gamma = false;
        // Restrict the task set by filtering reports afterwards.
      }
      ValidationSummary summary = validate_bounds(grid);
      json cells = json::array();
      for (const SearchReport& rep : summary.reports) {
        if (!s_functional.empty() && rep.functional != s_functional) continue;
        cells.push_back(report_json(rep));
      }
      json j = {{"note",
                 "search space is the proofs' truncated hypothesis set (a superset of the "
                 "class's coefficient data); maxima test the inequality chains, not class "
                 "sharpness"},
                {"cells", cells},
                {"violations", summary.violations},
                {"min_tightness",
                 {{"abs_a_m1", summary.min_tightness_a_m1},
                  {"abs_a_2m1", summary.min_tightness_a_2m1},
                  {"fekete_szego", summary.min_tightness_fs}}}};
      emit(out, s_out, j.dump(2), err);
      return summary.violations.empty() ? 0 : 1;
    }

    if (cor_cmd->parsed()) {
      std::vector<Rat> params, lambdas;
      for (int i = 0; i < 10; ++i) params.push_back(Rat(i, 10));
      for (int i = 0; i < 10; ++i) lambdas.push_back(Rat(i, 12));
      auto rows = corollary_table(params, lambdas);
      if (cor_csv && !cor_json) {
        std::ostringstream os;
        os << "id,params,general,printed,match\n";
        for (const auto& r : rows)
          os << r.id << "," << r.params << "," << fmt(r.general) << "," << fmt(r.printed)
             << "," << (r.match ? "true" : "false") << "\n";
        std::string s = os.str();
        s.pop_back();
        emit(out, cor_out, s, err);
      } else {
        json j = json::array();
        for (const auto& r : rows)
          j.push_back({{"id", r.id},
                       {"params", r.params},
                       {"general", r.general},
                       {"printed", r.printed},
                       {"match", r.match}});
        emit(out, cor_out, j.dump(2), err);
      }
      return 0;
    }

    if (cmp_cmd->parsed()) {
      ClassParams p{p_m, parse_rat(p_lambda), Rat(0)};
      p.validate();
      Rat q = parse_rat(p_param);
      ReferenceFamily fam;
      PhiSpec phi = [&]() -> PhiSpec {
        if (p_family == "alpha") {
          fam = ReferenceFamily::Alpha;
          return power_alpha(q);
        }
        if (p_family == "beta") {
          fam = ReferenceFamily::Beta;
          return mobius_beta(q);
        }
        throw std::invalid_argument("--family must be alpha or beta");
      }();
      ReferencePair ref = reference_bounds(fam, q, p);
      BoundValue am1 = bound_a_m1(phi, p);
      BoundValue a2m1 = bound_a_2m1(phi, p);
      if (cmp_csv && !cmp_json) {
        std::ostringstream os;
        os << "quantity,this_work,reference\n"
           << "a_m1," << fmt(am1.value) << "," << fmt(ref.a_m1) << "\n"
           << "a_2m1," << fmt(a2m1.value) << "," << fmt(ref.a_2m1);
        emit(out, p_out, os.str(), err);
      } else {
        json j = {{"family", p_family},
                  {"param", rat_to_string(q)},
                  {"m", p_m},
                  {"lambda", rat_to_string(p.lambda)},
                  {"a_m1", {{"this_work", am1.value}, {"reference", ref.a_m1}}},
                  {"a_2m1", {{"this_work", a2m1.value}, {"reference", ref.a_2m1}}}};
        emit(out, p_out, j.dump(2), err);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace biuniv
