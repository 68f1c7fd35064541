#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orlicz/experiment.hpp"
#include "orlicz/numerics.hpp"

namespace {

struct Flags {
  std::optional<std::string> config, profile, out_dir, format;
  std::optional<double> sigma, alpha, gamma, r_min, r_max, epsilon;
  std::optional<int> grid_n, r_count;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Flags& fl) {
  cmd->add_option("--config", fl.config, "key=value config file");
  cmd->add_option("--profile", fl.profile, "euclidean | exppower");
  cmd->add_option("--sigma", fl.sigma, "degeneracy exponent of the exppower profile");
  cmd->add_option("--alpha", fl.alpha, "bump exponent");
  cmd->add_option("--gamma", fl.gamma, "cutoff decay exponent (> 1)");
  cmd->add_option("--grid-n", fl.grid_n, "lattice cells per axis (even)");
  cmd->add_option("--r-min", fl.r_min, "smallest sweep radius");
  cmd->add_option("--r-max", fl.r_max, "largest sweep radius");
  cmd->add_option("--r-count", fl.r_count, "sweep length (geometric)");
  cmd->add_option("--epsilon", fl.epsilon, "superradius margin (0 < eps < alpha-1)");
  cmd->add_option("--out-dir", fl.out_dir, "output directory");
  cmd->add_option("--seed", fl.seed, "seed for synthesized example data");
  cmd->add_option("--format", fl.format, "csv | json");
}

orlicz::ExperimentConfig build_config(const Flags& fl) {
  orlicz::ExperimentConfig cfg;
  if (fl.config) cfg.load_file(*fl.config);
  if (fl.profile) cfg.profile = *fl.profile;
  if (fl.sigma) cfg.sigma = *fl.sigma;
  if (fl.alpha) cfg.alpha = *fl.alpha;
  if (fl.gamma) cfg.gamma = *fl.gamma;
  if (fl.grid_n) cfg.grid_n = *fl.grid_n;
  if (fl.r_min) cfg.r_min = *fl.r_min;
  if (fl.r_max) cfg.r_max = *fl.r_max;
  if (fl.r_count) cfg.r_count = *fl.r_count;
  if (fl.epsilon) cfg.epsilon = *fl.epsilon;
  if (fl.out_dir) cfg.out_dir = *fl.out_dir;
  if (fl.seed) cfg.seed = *fl.seed;
  if (fl.format) cfg.format = *fl.format;
  return cfg;
}

void brief(const std::string& name, const nlohmann::ordered_json& s) {
  using std::cout;
  if (name == "volume") {
    cout << "volume: route=" << s["route"].get<std::string>()
         << " ratio_band=[" << s["ratio_min"].get<double>() << ", "
         << s["ratio_max"].get<double>() << "]";
    if (s.contains("loglog_slope"))
      cout << " loglog_slope=" << s["loglog_slope"].get<double>();
    cout << "\n";
  } else if (name == "doubling") {
    cout << "doubling: verdict=" << s["verdict"].get<std::string>()
         << " sigma_hat=" << s["fit"]["sigma_hat"].get<double>()
         << " excess_variation=" << s["fit"]["excess_variation"].get<double>()
         << "\n";
  } else if (name == "superradius") {
    const auto& last = s["rows"].back();
    cout << "superradius: slope=" << s["slope"].get<double>();
    if (s.contains("measured_slope"))
      cout << " measured_slope=" << s["measured_slope"].get<double>();
    if (s.contains("bound_slope"))
      cout << " bound_slope=" << s["bound_slope"].get<double>();
    if (s.contains("conjectured_slope"))
      cout << " conjectured_slope=" << s["conjectured_slope"].get<double>();
    cout << " phi_over_r(r_max)=" << last["phi_over_r"].get<double>()
         << " bound(r_max)=" << last["bound"].get<double>() << "\n";
  } else if (name == "sobolev") {
    cout << "sobolev: route=" << s["route"].get<std::string>()
         << " pp_spread=" << s["pp_check"]["spread"].get<double>() << "\n";
  } else if (name == "report") {
    cout << "report: bump_ok=" << (s["bump_ok"].get<bool>() ? "yes" : "no")
         << " doubling=" << s["doubling"]["verdict"].get<std::string>()
         << " runtime_ms=" << s["runtime_ms"].get<long long>() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-space analysis of a plane with a degenerate direction"};
  app.require_subcommand(1);
  Flags fl;
  const std::pair<const char*, const char*> cmds[] = {
      {"volume", "ball volumes against the reference law"},
      {"doubling", "doubling ratios, exponent fit, iteration trace"},
      {"superradius", "empirical and certified superradius estimates"},
      {"sobolev", "Sobolev ratios of the standard test family"},
      {"report", "everything above in one document"},
  };
  for (const auto& [n, d] : cmds) add_common(app.add_subcommand(n, d), fl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    orlicz::ExperimentConfig cfg = build_config(fl);
    orlicz::RunResult res;
    if (name == "volume") res = orlicz::run_volume(cfg);
    else if (name == "doubling") res = orlicz::run_doubling(cfg);
    else if (name == "superradius") res = orlicz::run_superradius(cfg);
    else if (name == "sobolev") res = orlicz::run_sobolev(cfg);
    else res = orlicz::run_report(cfg);
    auto paths = orlicz::write_result(res, name, cfg);
    brief(name, res.summary);
    for (const auto& p : paths) std::cout << "wrote: " << p.string() << "\n";
    return 0;
  } catch (const orlicz::DegenerateDataError& e) {
    std::cerr << "degenerate data: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
