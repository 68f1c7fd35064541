#include "orlicz/experiment.hpp"

#include <chrono>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "orlicz/cutoff.hpp"
#include "orlicz/iteration.hpp"
#include "orlicz/numerics.hpp"
#include "orlicz/sobolev.hpp"

namespace orlicz {

namespace {

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for " + key + ": " + v);
  }
  if (pos != v.size())
    throw std::invalid_argument("config: bad number for " + key + ": " + v);
  return out;
}

long long parse_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long long out;
  try {
    out = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer for " + key + ": " + v);
  }
  if (pos != v.size())
    throw std::invalid_argument("config: bad integer for " + key + ": " + v);
  return out;
}

}  // namespace

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (key == "profile") profile = value;
  else if (key == "sigma") sigma = parse_double(key, value);
  else if (key == "half_width") half_width = parse_double(key, value);
  else if (key == "grid_n") grid_n = static_cast<int>(parse_int(key, value));
  else if (key == "bump") bump = value;
  else if (key == "alpha") alpha = parse_double(key, value);
  else if (key == "gamma") gamma = parse_double(key, value);
  else if (key == "cutoff_count") cutoff_count = static_cast<int>(parse_int(key, value));
  else if (key == "r_min") r_min = parse_double(key, value);
  else if (key == "r_max") r_max = parse_double(key, value);
  else if (key == "r_count") r_count = static_cast<int>(parse_int(key, value));
  else if (key == "epsilon") epsilon = parse_double(key, value);
  else if (key == "seed") seed = static_cast<std::uint64_t>(parse_int(key, value));
  else if (key == "out_dir") out_dir = value;
  else if (key == "format") format = value;
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

void ExperimentConfig::load_file(const std::filesystem::path& path) {
  for (const auto& [k, v] : read_key_value_file(path)) set(k, v);
}

void ExperimentConfig::validate_common() const {
  if (profile != "euclidean" && profile != "exppower")
    throw std::invalid_argument("config: profile must be euclidean or exppower");
  if (profile == "exppower" && (!(sigma > 0.0) || !(sigma <= 2.0)))
    throw std::invalid_argument("config: sigma must lie in (0, 2]");
  if (!(half_width > 0.0))
    throw std::invalid_argument("config: half_width must be > 0");
  if (grid_n < 8 || grid_n % 2 != 0)
    throw std::invalid_argument("config: grid_n must be even and >= 8");
  if (bump != "logpower" && bump != "power")
    throw std::invalid_argument("config: bump must be logpower or power");
  if (bump == "logpower" && !(alpha > 1.0))
    throw std::invalid_argument("config: logpower bump requires alpha > 1");
  if (bump == "power" && !(alpha >= 1.0))
    throw std::invalid_argument("config: power bump requires alpha >= 1");
  if (!(gamma > 1.0))
    throw std::invalid_argument(
        "config: gamma must be > 1 (the cutoff decrements form a divergent "
        "series otherwise)");
  if (cutoff_count < 2)
    throw std::invalid_argument("config: cutoff_count must be >= 2");
  if (!(r_min > 0.0) || !(r_max >= r_min))
    throw std::invalid_argument("config: requires 0 < r_min <= r_max");
  if (r_count < 1) throw std::invalid_argument("config: r_count must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("config: epsilon must be > 0");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("config: format must be csv or json");
}

DegeneracyProfile ExperimentConfig::make_profile() const {
  return profile == "euclidean" ? DegeneracyProfile::euclidean()
                                : DegeneracyProfile::exp_power(sigma);
}

MetricGrid ExperimentConfig::make_grid() const {
  return MetricGrid(make_profile(), half_width, grid_n);
}

YoungFunction ExperimentConfig::make_bump() const {
  return bump == "logpower" ? YoungFunction::log_power(alpha)
                            : YoungFunction::power(alpha);
}

std::vector<double> ExperimentConfig::radii_sweep() const {
  std::vector<double> out;
  if (r_count == 1) {
    out.push_back(r_min);
    return out;
  }
  double q = std::pow(r_max / r_min, 1.0 / (r_count - 1));
  for (int k = 0; k < r_count; ++k) out.push_back(r_min * std::pow(q, k));
  return out;
}

namespace {

using njson = nlohmann::ordered_json;

njson config_json(const ExperimentConfig& c) {
  njson j;
  j["profile"] = c.profile;
  if (c.profile == "exppower") j["sigma"] = c.sigma;
  j["half_width"] = c.half_width;
  j["grid_n"] = c.grid_n;
  j["bump"] = c.bump;
  j["alpha"] = c.alpha;
  j["gamma"] = c.gamma;
  j["cutoff_count"] = c.cutoff_count;
  j["r_min"] = c.r_min;
  j["r_max"] = c.r_max;
  j["r_count"] = c.r_count;
  j["epsilon"] = c.epsilon;
  j["seed"] = c.seed;
  j["format"] = c.format;
  return j;
}

njson base_summary(const std::string& command, const ExperimentConfig& c) {
  njson j;
  j["schema_version"] = "1";
  j["command"] = command;
  j["config"] = config_json(c);
  return j;
}

// one distance field shared by the lattice-route helpers below
struct Router {
  const MetricGrid& grid;
  std::unique_ptr<DistanceField> field;  // built lazily, flat profile only

  explicit Router(const MetricGrid& g) : grid(g) {}

  const DistanceField& lattice_field() {
    if (!field) field = std::make_unique<DistanceField>(origin_distance_field(grid));
    return *field;
  }

  double volume(double r) {
    if (grid.profile().degenerate()) return profile_ball_volume(grid, r);
    return ball_measure(lattice_field(), r);
  }

  double ratio(double r) {
    if (grid.profile().degenerate()) return profile_doubling_ratio(grid, r);
    return doubling_ratio(lattice_field(), r);
  }
};

}  // namespace

RunResult run_volume(const ExperimentConfig& cfg) {
  cfg.validate_common();
  if (!(cfg.r_max <= cfg.half_width))
    throw std::invalid_argument("volume: requires r_max <= half_width");
  MetricGrid grid = cfg.make_grid();
  Router router(grid);
  bool degenerate = grid.profile().degenerate();

  RunResult out;
  out.summary = base_summary("volume", cfg);
  CsvTable table{"volume", {"r", "measured", "reference", "ratio"}, {}};
  njson rows = njson::array();
  std::vector<double> ln_meas, ln_ref;
  double ratio_min = 0.0, ratio_max = 0.0;
  for (double r : cfg.radii_sweep()) {
    double v = router.volume(r);
    double ref = degenerate ? volume_asymptotic(grid.profile(), r)
                            : std::numbers::pi * r * r;
    double ratio = v / ref;
    if (rows.empty()) ratio_min = ratio_max = ratio;
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
    if (v > 0.0 && ref > 0.0) {
      ln_meas.push_back(std::log(v));
      ln_ref.push_back(std::log(ref));
    }
    rows.push_back({{"r", r}, {"measured", v}, {"reference", ref}, {"ratio", ratio}});
    table.rows.push_back({format_double(r), format_double(v), format_double(ref),
                          format_double(ratio)});
  }
  out.summary["route"] = degenerate ? "column" : "lattice";
  out.summary["reference"] = degenerate ? "closed_form_small_r" : "pi_r_squared";
  out.summary["rows"] = rows;
  out.summary["ratio_min"] = ratio_min;
  out.summary["ratio_max"] = ratio_max;
  if (ln_meas.size() >= 2)
    out.summary["loglog_slope"] = fit_line(ln_ref, ln_meas).slope;
  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_doubling(const ExperimentConfig& cfg) {
  cfg.validate_common();
  if (!(2.0 * cfg.r_max <= cfg.half_width * (1.0 + 1e-12)))
    throw std::invalid_argument("doubling: requires 2 r_max <= half_width");
  if (cfg.r_count < 3)
    throw std::invalid_argument("doubling: requires r_count >= 3 for the fit");
  MetricGrid grid = cfg.make_grid();
  Router router(grid);

  RunResult out;
  out.summary = base_summary("doubling", cfg);
  CsvTable table{"doubling", {"r", "ratio"}, {}};
  njson rows = njson::array();
  std::vector<double> radii = cfg.radii_sweep(), ratios;
  for (double r : radii) {
    double q = router.ratio(r);
    ratios.push_back(q);
    rows.push_back({{"r", r}, {"ratio", q}});
    table.rows.push_back({format_double(r), format_double(q)});
  }
  out.summary["rows"] = rows;
  out.tables.push_back(std::move(table));

  DoublingFit fit = log_doubling_exponent_fit(radii, ratios);
  njson jf;
  jf["divergent"] = fit.divergent;
  jf["sigma_hat"] = fit.sigma_hat;
  jf["level"] = fit.level;
  jf["scale"] = fit.scale;
  jf["drift"] = fit.drift;
  jf["excess_variation"] = fit.excess_variation;
  jf["naive_slope"] = fit.naive_slope;
  jf["points"] = fit.points;
  out.summary["fit"] = jf;
  out.summary["verdict"] =
      fit.divergent ? "NON-DOUBLING-WITNESS" : "DOUBLING-CONSISTENT";
  if (!fit.divergent) {
    // empirical doubling constant over the sweep
    out.summary["implied_c_d"] = *std::max_element(ratios.begin(), ratios.end());
  }

  // accumulating-cutoff trace on the largest ball
  CutoffSequence cs(cfg.r_max, cfg.gamma, cfg.cutoff_count);
  IterationTrace trace;
  trace.c_tilde = 1.0;
  trace.gamma = cfg.gamma;
  trace.radii = cs.radii();
  for (double rj : trace.radii) trace.measures.push_back(router.volume(rj));
  trace.mu_star = trace.measures.front();
  trace.mu_half = router.volume(0.5 * cfg.r_max);
  std::vector<double> pj = pj_sequence(trace);
  RecursionReport rec = recursion_check(trace, cfg.make_bump());

  CsvTable ttab{"doubling_trace", {"j", "radius", "measure", "p_j"}, {}};
  for (std::size_t k = 0; k < pj.size(); ++k)
    ttab.rows.push_back({std::to_string(k + 1), format_double(trace.radii[k]),
                         format_double(trace.measures[k]), format_double(pj[k])});
  out.tables.push_back(std::move(ttab));

  njson jt;
  jt["mu_star"] = trace.mu_star;
  jt["mu_half"] = trace.mu_half;
  jt["measured_star_half_ratio"] = trace.mu_star / trace.mu_half;
  jt["all_setup_ok"] = rec.all_setup_ok;
  jt["all_recursion_ok"] = rec.all_recursion_ok;
  jt["first_recursion_failure"] = rec.first_recursion_failure;
  out.summary["trace"] = jt;

  if (cfg.gamma < cfg.alpha && cfg.bump == "logpower") {
    InductionThresholds th = induction_threshold(cfg.alpha, cfg.gamma, 1.0);
    njson jth;
    jth["closed_form"] = th.closed_form;
    jth["sharper"] = th.sharper;
    jth["argmax_j"] = th.argmax_j;
    jth["doubling_bound"] = doubling_bound(cfg.alpha, cfg.gamma, 1.0);
    out.summary["thresholds"] = jth;
  } else {
    out.summary["thresholds"] = "unavailable: requires logpower bump and gamma < alpha";
  }
  return out;
}

RunResult run_superradius(const ExperimentConfig& cfg) {
  cfg.validate_common();
  if (cfg.profile != "exppower")
    throw std::invalid_argument("superradius: requires the exppower profile");
  if (cfg.bump != "logpower")
    throw std::invalid_argument("superradius: requires the logpower bump");
  if (!(cfg.epsilon < cfg.alpha - 1.0))
    throw std::invalid_argument("superradius: requires 0 < epsilon < alpha - 1");
  if (!(2.0 * cfg.r_max <= cfg.half_width * (1.0 + 1e-12)))
    throw std::invalid_argument("superradius: requires 2 r_max <= half_width");
  MetricGrid grid = cfg.make_grid();
  YoungFunction phi = cfg.make_bump();

  RunResult out;
  out.summary = base_summary("superradius", cfg);
  SuperradiusSweep sweep =
      empirical_superradius(grid, phi, cfg.radii_sweep(), cfg.gamma);
  bool formula_ok = cfg.sigma * cfg.alpha < 1.0;

  CsvTable table{"superradius",
                 {"r", "max_ratio", "best_profile", "phi_over_r", "proxy", "band",
                  "bound", "bound_sweep", "c_eps", "formula"},
                 {}};
  njson rows = njson::array();
  std::vector<double> blx, bly, mlx, mly, clx, cly;
  for (const auto& pt : sweep.points) {
    double vr = profile_ball_volume(grid, pt.r);
    double vh = profile_ball_volume(grid, 0.5 * pt.r);
    double mratio = vh > 0.0 ? vr / vh : 0.0;
    // proven bound at the pinned exponent alpha - 1 - epsilon
    SuperradiusBound b =
        superradius_lower_bound(cfg.alpha, cfg.epsilon, 1.0, mratio);
    SuperradiusBound bs =
        superradius_lower_bound_sweep(cfg.alpha, cfg.epsilon, 1.0, mratio);
    double formula = formula_ok ? superradius_formula(cfg.sigma, cfg.alpha, pt.r) : 0.0;
    njson jr;
    jr["r"] = pt.r;
    jr["max_ratio"] = pt.max_ratio;
    jr["best_profile"] = pt.best_profile;
    jr["phi_over_r"] = pt.phi_over_r;
    jr["proxy"] = pt.proxy;
    jr["band"] = pt.band;
    jr["bound"] = b.value;
    jr["bound_exponent"] = b.exponent;
    jr["bound_vacuous"] = b.vacuous;
    jr["bound_sweep"] = bs.value;
    jr["bound_sweep_gamma"] = bs.gamma;
    jr["c_eps"] = b.c_eps;
    jr["c_tilde_min"] = b.c_tilde_min;
    if (formula_ok) jr["formula"] = formula;
    rows.push_back(jr);
    table.rows.push_back({format_double(pt.r), format_double(pt.max_ratio),
                          pt.best_profile, format_double(pt.phi_over_r),
                          format_double(pt.proxy), format_double(pt.band),
                          format_double(b.value), format_double(bs.value),
                          format_double(b.c_eps), format_double(formula)});
    if (pt.phi_over_r > 0.0) {
      mlx.push_back(std::log(pt.r));
      mly.push_back(std::log(pt.phi_over_r));
    }
    if (!b.vacuous && b.value > 0.0) {
      blx.push_back(std::log(pt.r));
      bly.push_back(std::log(b.value));
    }
    if (pt.proxy > 0.0) {
      clx.push_back(std::log(pt.r));
      cly.push_back(std::log(pt.proxy));
    }
  }
  out.summary["rows"] = rows;
  out.summary["slope"] = sweep.slope;
  // log-log slopes of the three phi(r)/r curves: measured, proven lower
  // bound (exponent alpha - 1 - epsilon), conjectured (exponent alpha)
  if (mlx.size() >= 2) out.summary["measured_slope"] = fit_line(mlx, mly).slope;
  if (blx.size() >= 2) out.summary["bound_slope"] = fit_line(blx, bly).slope;
  if (clx.size() >= 2) out.summary["conjectured_slope"] = fit_line(clx, cly).slope;
  if (formula_ok) out.summary["formula_exponent"] = 1.0 - cfg.sigma * cfg.alpha;
  out.tables.push_back(std::move(table));
  return out;
}

RunResult run_sobolev(const ExperimentConfig& cfg) {
  cfg.validate_common();
  if (!(cfg.r_max <= cfg.half_width))
    throw std::invalid_argument("sobolev: requires r_max <= half_width");
  MetricGrid grid = cfg.make_grid();
  YoungFunction phi = cfg.make_bump();
  bool degenerate = grid.profile().degenerate();

  RunResult out;
  out.summary = base_summary("sobolev", cfg);
  out.summary["route"] = degenerate ? "shell" : "lattice";

  DistanceField field = origin_distance_field(grid);

  CsvTable table{"sobolev", {"r", "profile", "lhs", "rhs", "ratio"}, {}};
  njson rows = njson::array();
  for (double r : cfg.radii_sweep()) {
    std::vector<RadialProfile> profiles = standard_profiles(r, cfg.gamma);
    if (degenerate) {
      ShellQuadrature q = shell_quadrature(grid, r);
      for (const RadialProfile& w : profiles) {
        SobolevSample s = sobolev_ratio_radial(q, w, phi);
        rows.push_back({{"r", r}, {"profile", w.name}, {"lhs", s.lhs},
                        {"rhs", s.rhs}, {"ratio", s.ratio}});
        table.rows.push_back({format_double(r), w.name, format_double(s.lhs),
                              format_double(s.rhs), format_double(s.ratio)});
      }
    } else {
      int m = grid.nodes_per_axis();
      std::vector<double> w(grid.node_count());
      for (const RadialProfile& prof : profiles) {
        for (int j = 0; j < m; ++j)
          for (int i = 0; i < m; ++i) {
            double d = field.at(i, j);
            w[grid.index(i, j)] = std::isinf(d) ? 0.0 : prof.value(d);
          }
        SobolevSample s = sobolev_ratio_field(field, w, r, phi);
        rows.push_back({{"r", r}, {"profile", prof.name}, {"lhs", s.lhs},
                        {"rhs", s.rhs}, {"ratio", s.ratio}});
        table.rows.push_back({format_double(r), prof.name, format_double(s.lhs),
                              format_double(s.rhs), format_double(s.ratio)});
      }
    }
  }
  out.summary["rows"] = rows;
  out.tables.push_back(std::move(table));

  // p-p consistency block: x-tent on each ball of the sweep
  CsvTable ptab{"sobolev_pp", {"r", "constant"}, {}};
  njson prows = njson::array();
  double cmin = 0.0, cmax = 0.0;
  int m = grid.nodes_per_axis();
  for (double r : cfg.radii_sweep()) {
    std::vector<double> w(grid.node_count());
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i)
        w[grid.index(i, j)] = std::max(0.0, 1.0 - std::abs(grid.x(i)) / r);
    double c = pp_sobolev_check(field, w, r, 2.0);
    if (prows.empty()) cmin = cmax = c;
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
    prows.push_back({{"r", r}, {"constant", c}});
    ptab.rows.push_back({format_double(r), format_double(c)});
  }
  njson jp;
  jp["rows"] = prows;
  jp["constant_min"] = cmin;
  jp["constant_max"] = cmax;
  jp["spread"] = cmin > 0.0 ? cmax / cmin : 0.0;
  out.summary["pp_check"] = jp;
  out.tables.push_back(std::move(ptab));
  return out;
}

RunResult run_report(const ExperimentConfig& cfg) {
  cfg.validate_common();
  auto t0 = std::chrono::steady_clock::now();

  RunResult out;
  out.summary = base_summary("report", cfg);

  // structural check of the configured bump
  YoungCheckReport yc = check_young(cfg.make_bump());
  njson jy = njson::array();
  for (const auto& c : yc.conditions)
    jy.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  out.summary["bump_conditions"] = jy;
  out.summary["bump_ok"] = yc.all_pass();

  // norm engine self-check: Luxemburg of a power bump against the direct mean
  {
    Rng rng(cfg.seed);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> f(128), w(128);
      for (auto& v : f) v = rng.uniform(0.0, 3.0);
      for (auto& v : w) v = rng.uniform(0.1, 1.0);
      DiscreteMeasureSpace space(w);
      YoungFunction p2 = YoungFunction::power(2.0);
      double a = luxemburg_norm(f, space, p2);
      double b = lp_norm(f, space, 2.0);
      worst = std::max(worst, std::abs(a - b) / b);
    }
    out.summary["norm_self_check_rel_err"] = worst;
  }

  RunResult vol = run_volume(cfg);
  vol.summary.erase("schema_version");
  vol.summary.erase("command");
  vol.summary.erase("config");
  out.summary["volume"] = vol.summary;
  for (auto& t : vol.tables) out.tables.push_back(std::move(t));

  ExperimentConfig dcfg = cfg;
  if (2.0 * dcfg.r_max > dcfg.half_width) {
    dcfg.r_max = 0.5 * dcfg.half_width;
    if (dcfg.r_min > dcfg.r_max) dcfg.r_min = 0.5 * dcfg.r_max;
  }
  RunResult dbl = run_doubling(dcfg);
  dbl.summary.erase("schema_version");
  dbl.summary.erase("command");
  dbl.summary.erase("config");
  out.summary["doubling"] = dbl.summary;
  for (auto& t : dbl.tables) out.tables.push_back(std::move(t));

  RunResult sob = run_sobolev(cfg);
  sob.summary.erase("schema_version");
  sob.summary.erase("command");
  sob.summary.erase("config");
  out.summary["sobolev"] = sob.summary;
  for (auto& t : sob.tables) out.tables.push_back(std::move(t));

  if (cfg.profile == "exppower" && cfg.bump == "logpower" &&
      cfg.epsilon < cfg.alpha - 1.0) {
    RunResult sup = run_superradius(dcfg);
    sup.summary.erase("schema_version");
    sup.summary.erase("command");
    sup.summary.erase("config");
    out.summary["superradius"] = sup.summary;
    for (auto& t : sup.tables) out.tables.push_back(std::move(t));
  } else {
    out.summary["superradius"] =
        "skipped: requires exppower profile, logpower bump, epsilon < alpha - 1";
  }

  auto t1 = std::chrono::steady_clock::now();
  out.summary["runtime_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return out;
}

std::vector<std::filesystem::path> write_result(const RunResult& result,
                                                const std::string& name,
                                                const ExperimentConfig& cfg) {
  std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  std::filesystem::path jpath = dir / (name + ".json");
  {
    std::ofstream js(jpath);
    if (!js) throw std::runtime_error("cannot open " + jpath.string());
    js << result.summary.dump(2) << "\n";
  }
  written.push_back(jpath);
  if (cfg.format == "csv") {
    for (const auto& t : result.tables) {
      std::filesystem::path cpath = dir / (t.name + ".csv");
      write_csv(t, cpath);
      written.push_back(cpath);
    }
  }
  return written;
}

}  // namespace orlicz
