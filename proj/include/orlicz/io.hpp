#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "orlicz/iteration.hpp"

namespace orlicz {

// Rectangular table with a header row; cells are preformatted strings.
struct CsvTable {
  std::string name;  // file stem
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Shortest round-trippable decimal ("%.12g" style, fixed 12 significant
// digits): deterministic across runs of the same binary.
std::string format_double(double v);

void write_csv(const CsvTable& table, const std::filesystem::path& path);

// Iteration trace round-trip. Columns: j,radius,measure. Header lines
// starting with '#' carry mu_star, mu_half, c_tilde, gamma.
void write_trace_csv(const IterationTrace& t, const std::filesystem::path& path);
IterationTrace read_trace_csv(const std::filesystem::path& path);

// Flat key=value file; '#' comments and blank lines skipped.
// Duplicate keys: last wins. Throws std::invalid_argument on a bad line.
std::vector<std::pair<std::string, std::string>> read_key_value_file(
    const std::filesystem::path& path);

}  // namespace orlicz
