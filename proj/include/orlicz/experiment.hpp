#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlicz/io.hpp"
#include "orlicz/metric.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// Everything a run needs; filled from a key=value file and/or flag
// overrides and validated once up front.
struct ExperimentConfig {
  std::string profile = "exppower";  // "euclidean" | "exppower"
  double sigma = 1.0;
  double half_width = 1.0;
  int grid_n = 768;

  std::string bump = "logpower";  // "logpower" | "power"
  double alpha = 2.0;             // bump exponent (alpha, or p for "power")

  double gamma = 2.0;     // cutoff decay exponent
  int cutoff_count = 40;  // trace length

  double r_min = 0.15;
  double r_max = 0.5;
  int r_count = 8;
  double epsilon = 0.1;

  std::uint64_t seed = 12345;
  std::string out_dir = ".";
  std::string format = "csv";  // "csv" | "json"

  void set(const std::string& key, const std::string& value);
  void load_file(const std::filesystem::path& path);
  // Throws std::invalid_argument naming the violated constraint.
  void validate_common() const;

  DegeneracyProfile make_profile() const;
  MetricGrid make_grid() const;
  YoungFunction make_bump() const;
  std::vector<double> radii_sweep() const;  // geometric from r_min to r_max
};

// A command's result: one JSON document plus zero or more tables.
struct RunResult {
  nlohmann::ordered_json summary;
  std::vector<CsvTable> tables;
};

RunResult run_volume(const ExperimentConfig& cfg);
RunResult run_doubling(const ExperimentConfig& cfg);
RunResult run_superradius(const ExperimentConfig& cfg);
RunResult run_sobolev(const ExperimentConfig& cfg);
RunResult run_report(const ExperimentConfig& cfg);

// Writes <name>.json (always) and, when cfg.format == "csv", one
// <table.name>.csv per table into cfg.out_dir (created if missing).
// Returns the paths written.
std::vector<std::filesystem::path> write_result(const RunResult& result,
                                                const std::string& name,
                                                const ExperimentConfig& cfg);

}  // namespace orlicz
