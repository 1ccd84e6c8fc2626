#include "bandharvest/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bandharvest/deltaswitch.hpp"
#include "bandharvest/design.hpp"
#include "bandharvest/perturbative.hpp"
#include "bandharvest/quadrature.hpp"
#include "bandharvest/rootfind.hpp"
#include "bandharvest/sweep.hpp"
#include "bandharvest/types.hpp"

namespace bandharvest::cli {

namespace {

constexpr const char *kVersion = "0.1.0";

double parse_band(const std::string &s) {
  if (s == "inf" || s == "Inf" || s == "INF")
    return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size())
    throw CLI::ValidationError("bandlimit", "cannot parse '" + s + "'");
  if (v < 0.0) throw CLI::ValidationError("bandlimit", "must be >= 0 or inf");
  return v;
}

std::string num_label(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream ss;
  ss.precision(17);
  ss << x;
  return ss.str();
}

struct OutputOptions {
  std::string out_path;
  std::string format = "csv";
};

void add_output_options(CLI::App *cmd, OutputOptions &o) {
  cmd->add_option("--out", o.out_path, "Output path (default stdout)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "structured"}));
  cmd->fallthrough();
}

void base_metadata(sweep::SweepResult &r, const std::string &command) {
  r.metadata["tool"] = "bandharvest";
  r.metadata["version"] = kVersion;
  r.metadata["command"] = command;
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  std::ostringstream ss;
  ss << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  r.metadata["generated"] = ss.str();
}

void emit(const sweep::SweepResult &r, const OutputOptions &o,
          std::ostream &out) {
  std::ofstream file;
  std::ostream *os = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + o.out_path);
    os = &file;
  }
  if (o.format == "structured")
    sweep::write_structured(*os, r);
  else
    sweep::write_csv(*os, r);
}

// ---- subcommand bodies ------------------------------------------------

struct PdSweepArgs {
  double omega_min = -10.0, omega_max = 5.0;
  int points = 301;
  std::vector<std::string> bands{"0.5", "1", "2", "inf"};
  double coupling = 1.0;
  bool raw = false;
  OutputOptions out;
};

sweep::SweepResult run_pd_sweep(const PdSweepArgs &a) {
  sweep::SweepGrid grid{"omega", a.omega_min, a.omega_max, a.points,
                        sweep::SweepGrid::Scale::Linear};
  std::vector<double> bands;
  for (const auto &s : a.bands) bands.push_back(parse_band(s));
  sweep::SweepResult r;
  base_metadata(r, "pd-sweep");
  r.metadata["coupling"] = fmt(a.coupling);
  r.metadata["normalization"] = a.raw ? "raw" : "per_coupling_sq";
  r.columns.push_back("omega");
  for (double b : bands)
    r.columns.push_back((a.raw ? "pd_L" : "pd_per_lambda_sq_L") +
                        num_label(b));
  const double norm = a.raw ? 1.0 : a.coupling * a.coupling;
  const auto omegas = grid.values();
  auto rows = sweep::parallel_map(omegas.size(), [&](std::size_t i) {
    std::vector<double> row{omegas[i]};
    for (double b : bands) {
      DetectorParams d{omegas[i], a.coupling};
      row.push_back(perturbative::pd_gaussian(d, Bandlimit{b}) / norm);
    }
    return row;
  });
  r.rows = std::move(rows);
  return r;
}

struct NegMapArgs {
  double s_min = 0.1, s_max = 2.0;
  int s_points = 39;
  double l_min = 0.5, l_max = 50.0;
  int l_points = 100;
  double omega = 0.01;
  double coupling = 1.0;
  bool raw = false;
  OutputOptions out;
};

sweep::SweepResult run_negativity_map(const NegMapArgs &a) {
  sweep::SweepGrid sg{"s", a.s_min, a.s_max, a.s_points,
                      sweep::SweepGrid::Scale::Linear};
  sweep::SweepGrid lg{"lambda", a.l_min, a.l_max, a.l_points,
                      sweep::SweepGrid::Scale::Linear};
  const auto svals = sg.values();
  const auto lvals = lg.values();
  sweep::SweepResult r;
  base_metadata(r, "negativity-map");
  r.metadata["omega_sigma"] = fmt(a.omega);
  r.metadata["coupling"] = fmt(a.coupling);
  r.metadata["normalization"] = a.raw ? "raw" : "per_coupling_sq";
  r.columns = {"s", "lambda",
               a.raw ? "negativity" : "negativity_per_lambda_sq"};
  const double norm = a.raw ? 1.0 : a.coupling * a.coupling;
  const std::size_t n = svals.size() * lvals.size();
  r.rows = sweep::parallel_map(n, [&](std::size_t i) {
    const double s = svals[i / lvals.size()];
    const double l = lvals[i % lvals.size()];
    DetectorParams d{a.omega, a.coupling};
    PairGeometry g{s, 0.0};
    const double neg =
        perturbative::negativity_perturbative(d, g, Bandlimit{l});
    return std::vector<double>{s, l, neg / norm};
  });
  return r;
}

struct NegSliceArgs {
  double omega = 0.01;
  double s = 1.0;
  double l_min = 0.05, l_max = 20.0;
  int points = 400;
  double coupling = 1.0;
  bool raw = false;
  OutputOptions out;
};

sweep::SweepResult run_negativity_vs_lambda(const NegSliceArgs &a) {
  sweep::SweepGrid lg{"lambda", a.l_min, a.l_max, a.points,
                      sweep::SweepGrid::Scale::Linear};
  const auto lvals = lg.values();
  sweep::SweepResult r;
  base_metadata(r, "negativity-vs-lambda");
  r.metadata["omega_sigma"] = fmt(a.omega);
  r.metadata["s_over_sigma"] = fmt(a.s);
  r.metadata["coupling"] = fmt(a.coupling);
  r.metadata["normalization"] = a.raw ? "raw" : "per_coupling_sq";
  r.columns = {"lambda", a.raw ? "negativity" : "negativity_per_lambda_sq"};
  const double norm = a.raw ? 1.0 : a.coupling * a.coupling;
  r.rows = sweep::parallel_map(lvals.size(), [&](std::size_t i) {
    DetectorParams d{a.omega, a.coupling};
    PairGeometry g{a.s, 0.0};
    const double neg =
        perturbative::negativity_perturbative(d, g, Bandlimit{lvals[i]});
    return std::vector<double>{lvals[i], neg / norm};
  });
  return r;
}

struct NegVsSArgs {
  double omega = 0.01;
  std::string band = "50";
  double s_min = 0.2, s_max = 2.0;
  int points = 200;
  double coupling = 1.0;
  bool raw = false;
  double overlay_scale = 300.0;
  OutputOptions out;
};

sweep::SweepResult run_negativity_vs_s(const NegVsSArgs &a) {
  const double band = parse_band(a.band);
  sweep::SweepGrid sg{"s", a.s_min, a.s_max, a.points,
                      sweep::SweepGrid::Scale::Linear};
  const auto svals = sg.values();
  sweep::SweepResult r;
  base_metadata(r, "negativity-vs-s");
  r.metadata["omega_sigma"] = fmt(a.omega);
  r.metadata["lambda_sigma"] = fmt(band);
  r.metadata["coupling"] = fmt(a.coupling);
  r.metadata["overlay_scale"] = fmt(a.overlay_scale);
  r.metadata["normalization"] = a.raw ? "raw" : "per_coupling_sq";
  r.columns = {"s", a.raw ? "negativity" : "negativity_per_lambda_sq",
               a.raw ? "negativity_inf" : "negativity_inf_per_lambda_sq",
               "profile_scaled"};
  const double norm = a.raw ? 1.0 : a.coupling * a.coupling;
  r.rows = sweep::parallel_map(svals.size(), [&](std::size_t i) {
    DetectorParams d{a.omega, a.coupling};
    PairGeometry g{svals[i], 0.0};
    const double neg =
        perturbative::negativity_perturbative(d, g, Bandlimit{band});
    const double neg_inf =
        perturbative::negativity_perturbative(d, g, Bandlimit::infinite());
    const double overlay =
        std::isinf(band)
            ? 0.0
            : perturbative::effective_profile_pointlike(svals[i],
                                                        Bandlimit{band}) /
                  a.overlay_scale;
    return std::vector<double>{svals[i], neg / norm, neg_inf / norm, overlay};
  });
  return r;
}

struct OmegaCritArgs {
  double l_min = 5.0, l_max = 40.0;
  int points = 15;
  double halfwidth = 10.0;
  OutputOptions out;
};

sweep::SweepResult run_omega_crit(const OmegaCritArgs &a) {
  sweep::SweepGrid lg{"lambda", a.l_min, a.l_max, a.points,
                      sweep::SweepGrid::Scale::Linear};
  const auto lvals = lg.values();
  sweep::SweepResult r;
  base_metadata(r, "omega-crit");
  r.metadata["search_halfwidth"] = fmt(a.halfwidth);
  r.columns = {"lambda", "omega_crit"};
  r.rows = sweep::parallel_map(lvals.size(), [&](std::size_t i) {
    return std::vector<double>{
        lvals[i], perturbative::omega_crit(Bandlimit{lvals[i]}, a.halfwidth)};
  });
  return r;
}

struct ArrayDesignArgs {
  double threshold = 20.0;
  int pairs = 8;
  double gap = 0.01;
  double coupling = 1.0;
  double grid_step = 0.1;
  OutputOptions out;
};

sweep::SweepResult run_array_design(const ArrayDesignArgs &a) {
  const auto arr =
      design::design_array(a.threshold, a.pairs, a.gap, a.coupling);
  const auto rep = design::array_coverage_check(arr, a.grid_step);
  sweep::SweepResult r;
  base_metadata(r, "array-design");
  r.metadata["threshold"] = fmt(a.threshold);
  r.metadata["base_gap"] = fmt(a.gap);
  r.metadata["coupling"] = fmt(a.coupling);
  r.metadata["grid_step"] = fmt(a.grid_step);
  r.metadata["covered_fraction"] = fmt(rep.covered_fraction);
  std::ostringstream unc;
  for (std::size_t i = 0; i < rep.uncovered.size(); ++i)
    unc << (i ? ";" : "") << rep.uncovered[i];
  r.metadata["uncovered"] = unc.str();
  r.columns = {"pair", "gap", "separation"};
  for (std::size_t i = 0; i < arr.pairs.size(); ++i)
    r.rows.push_back({static_cast<double>(i + 1), arr.pairs[i].first,
                      arr.pairs[i].second});
  return r;
}

struct DeltaPaArgs {
  std::vector<double> widths{0.001, 0.2, 0.5, 1.0};
  double coupling = 1.0;
  double l_min = 0.0, l_max = 30.0;
  int points = 301;
  OutputOptions out;
};

sweep::SweepResult run_delta_pa(const DeltaPaArgs &a) {
  sweep::SweepGrid lg{"lambda", a.l_min, a.l_max, a.points,
                      sweep::SweepGrid::Scale::Linear};
  const auto lvals = lg.values();
  sweep::SweepResult r;
  base_metadata(r, "delta-pa");
  r.metadata["coupling"] = fmt(a.coupling);
  r.columns = {"lambda"};
  for (double w : a.widths) r.columns.push_back("pa_a" + num_label(w));
  r.rows = sweep::parallel_map(lvals.size(), [&](std::size_t i) {
    std::vector<double> row{lvals[i]};
    for (double w : a.widths) {
      DeltaPairConfig cfg;
      cfg.detector.coupling = a.coupling;
      cfg.profile.width = w;
      cfg.bandlimit = Bandlimit{lvals[i]};
      row.push_back(deltaswitch::pd_delta(cfg).first);
    }
    return row;
  });
  return r;
}

struct LambdaMaxArgs {
  std::vector<double> tolerances{0.02, 0.01, 0.005};
  double w_min = 1e-3, w_max = 2.0;
  int points = 60;
  double coupling = 1.0;
  OutputOptions out;
};

sweep::SweepResult run_lambda_max(const LambdaMaxArgs &a) {
  sweep::SweepGrid wg{"width", a.w_min, a.w_max, a.points,
                      sweep::SweepGrid::Scale::Log};
  const auto widths = wg.values();
  sweep::SweepResult r;
  base_metadata(r, "lambda-max");
  r.metadata["coupling"] = fmt(a.coupling);
  r.columns = {"width"};
  for (double t : a.tolerances)
    r.columns.push_back("lambda_max_tol" + num_label(t));
  DeltaPairConfig tmpl;
  tmpl.detector.coupling = a.coupling;
  std::vector<std::vector<std::pair<double, double>>> per_tol;
  per_tol.reserve(a.tolerances.size());
  for (double t : a.tolerances)
    per_tol.push_back(deltaswitch::lambda_max_sweep(widths, t, tmpl));
  for (std::size_t i = 0; i < widths.size(); ++i) {
    std::vector<double> row{widths[i]};
    for (const auto &col : per_tol) row.push_back(col[i].second);
    r.rows.push_back(std::move(row));
  }
  return r;
}

struct DeltaThetaPbArgs {
  double a_width = 0.01;
  double s = 0.8;
  double t = 1.0;
  double coupling = 1.0;
  double l_min = 0.0, l_max = 60.0;
  int points = 601;
  OutputOptions out;
};

sweep::SweepResult run_delta_theta_pb(const DeltaThetaPbArgs &a) {
  sweep::SweepGrid lg{"lambda", a.l_min, a.l_max, a.points,
                      sweep::SweepGrid::Scale::Linear};
  const auto lvals = lg.values();
  sweep::SweepResult r;
  base_metadata(r, "delta-theta-pb");
  r.metadata["a_over_sigma"] = fmt(a.a_width);
  r.metadata["s_over_sigma"] = fmt(a.s);
  r.metadata["t_over_sigma"] = fmt(a.t);
  r.metadata["coupling"] = fmt(a.coupling);
  r.columns = {"lambda", "theta", "pa", "pb"};
  r.rows = sweep::parallel_map(lvals.size(), [&](std::size_t i) {
    DeltaPairConfig cfg;
    cfg.detector.coupling = a.coupling;
    cfg.geometry.separation = a.s;
    cfg.geometry.delay = a.t;
    cfg.profile.width = a.a_width;
    cfg.bandlimit = Bandlimit{lvals[i]};
    const double th = deltaswitch::theta_gaussian_profile(cfg);
    const auto [pa, pb] = deltaswitch::pd_delta(cfg);
    return std::vector<double>{lvals[i], th, pa, pb};
  });
  return r;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Unruh-DeWitt detector pair responses in a bandlimited "
               "scalar field"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Config file ([subcommand] sections, flags override)");

  PdSweepArgs pd;
  auto *c_pd = app.add_subcommand("pd-sweep",
                                  "Transition probability vs energy gap");
  c_pd->add_option("--omega-min", pd.omega_min);
  c_pd->add_option("--omega-max", pd.omega_max);
  c_pd->add_option("--points", pd.points);
  c_pd->add_option("--lambda-sigma", pd.bands,
                   "Bandlimit values (inf allowed)");
  c_pd->add_option("--coupling", pd.coupling);
  c_pd->add_flag("--raw", pd.raw, "Emit raw values, not per coupling^2");
  add_output_options(c_pd, pd.out);

  NegMapArgs nm;
  auto *c_nm = app.add_subcommand("negativity-map",
                                  "Negativity over (separation, bandlimit)");
  c_nm->add_option("--s-min", nm.s_min);
  c_nm->add_option("--s-max", nm.s_max);
  c_nm->add_option("--s-points", nm.s_points);
  c_nm->add_option("--lambda-min", nm.l_min);
  c_nm->add_option("--lambda-max", nm.l_max);
  c_nm->add_option("--lambda-points", nm.l_points);
  c_nm->add_option("--omega-sigma", nm.omega);
  c_nm->add_option("--coupling", nm.coupling);
  c_nm->add_flag("--raw", nm.raw);
  add_output_options(c_nm, nm.out);

  NegSliceArgs nl;
  auto *c_nl = app.add_subcommand("negativity-vs-lambda",
                                  "Negativity vs bandlimit at fixed "
                                  "separation");
  c_nl->add_option("--omega-sigma", nl.omega);
  c_nl->add_option("--s-over-sigma", nl.s);
  c_nl->add_option("--lambda-min", nl.l_min);
  c_nl->add_option("--lambda-max", nl.l_max);
  c_nl->add_option("--points", nl.points);
  c_nl->add_option("--coupling", nl.coupling);
  c_nl->add_flag("--raw", nl.raw);
  add_output_options(c_nl, nl.out);

  NegVsSArgs ns;
  auto *c_ns = app.add_subcommand("negativity-vs-s",
                                  "Negativity vs separation with "
                                  "effective-profile overlay");
  c_ns->add_option("--omega-sigma", ns.omega);
  c_ns->add_option("--lambda-sigma", ns.band);
  c_ns->add_option("--s-min", ns.s_min);
  c_ns->add_option("--s-max", ns.s_max);
  c_ns->add_option("--points", ns.points);
  c_ns->add_option("--coupling", ns.coupling);
  c_ns->add_option("--overlay-scale", ns.overlay_scale);
  c_ns->add_flag("--raw", ns.raw);
  add_output_options(c_ns, ns.out);

  OmegaCritArgs oc;
  auto *c_oc = app.add_subcommand("omega-crit",
                                  "Critical energy gap vs bandlimit");
  c_oc->add_option("--lambda-min", oc.l_min);
  c_oc->add_option("--lambda-max", oc.l_max);
  c_oc->add_option("--points", oc.points);
  c_oc->add_option("--search-halfwidth", oc.halfwidth);
  add_output_options(c_oc, oc.out);

  ArrayDesignArgs ad;
  auto *c_ad = app.add_subcommand("array-design",
                                  "Bandlimit-bounding detector array");
  c_ad->add_option("--threshold", ad.threshold);
  c_ad->add_option("--pairs", ad.pairs);
  c_ad->add_option("--omega-sigma", ad.gap, "Base gap for the first pair");
  c_ad->add_option("--coupling", ad.coupling);
  c_ad->add_option("--grid-step", ad.grid_step);
  add_output_options(c_ad, ad.out);

  DeltaPaArgs dp;
  auto *c_dp = app.add_subcommand("delta-pa",
                                  "Delta-switching transition probability "
                                  "vs bandlimit");
  c_dp->add_option("--a-over-sigma", dp.widths, "Profile widths");
  c_dp->add_option("--coupling", dp.coupling);
  c_dp->add_option("--lambda-min", dp.l_min);
  c_dp->add_option("--lambda-max", dp.l_max);
  c_dp->add_option("--points", dp.points);
  add_output_options(c_dp, dp.out);

  LambdaMaxArgs lm;
  auto *c_lm = app.add_subcommand("lambda-max",
                                  "Bandlimit sensitivity vs profile width");
  c_lm->add_option("--tolerance", lm.tolerances);
  c_lm->add_option("--width-min", lm.w_min);
  c_lm->add_option("--width-max", lm.w_max);
  c_lm->add_option("--points", lm.points);
  c_lm->add_option("--coupling", lm.coupling);
  add_output_options(c_lm, lm.out);

  DeltaThetaPbArgs dt;
  auto *c_dt = app.add_subcommand("delta-theta-pb",
                                  "Commutator angle and P_B vs bandlimit");
  c_dt->add_option("--a-over-sigma", dt.a_width);
  c_dt->add_option("--s-over-sigma", dt.s);
  c_dt->add_option("--t-over-sigma", dt.t);
  c_dt->add_option("--coupling", dt.coupling);
  c_dt->add_option("--lambda-min", dt.l_min);
  c_dt->add_option("--lambda-max", dt.l_max);
  c_dt->add_option("--points", dt.points);
  add_output_options(c_dt, dt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print through CLI11's formatter
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    sweep::SweepResult r;
    OutputOptions *o = nullptr;
    if (*c_pd) {
      r = run_pd_sweep(pd);
      o = &pd.out;
    } else if (*c_nm) {
      r = run_negativity_map(nm);
      o = &nm.out;
    } else if (*c_nl) {
      r = run_negativity_vs_lambda(nl);
      o = &nl.out;
    } else if (*c_ns) {
      r = run_negativity_vs_s(ns);
      o = &ns.out;
    } else if (*c_oc) {
      r = run_omega_crit(oc);
      o = &oc.out;
    } else if (*c_ad) {
      r = run_array_design(ad);
      o = &ad.out;
    } else if (*c_dp) {
      r = run_delta_pa(dp);
      o = &dp.out;
    } else if (*c_lm) {
      r = run_lambda_max(lm);
      o = &lm.out;
    } else if (*c_dt) {
      r = run_delta_theta_pb(dt);
      o = &dt.out;
    }
    emit(r, *o, out);
    return 0;
  } catch (const CLI::Error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const quadrature::ConvergenceError &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const rootfind::BracketError &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

} // namespace bandharvest::cli
