#include "orlicz/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "orlicz/numerics.hpp"

namespace orlicz {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
  for (std::size_t k = 0; k < table.header.size(); ++k)
    out << (k ? "," : "") << table.header[k];
  out << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size())
      throw std::invalid_argument("write_csv: ragged row");
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
    out << "\n";
  }
}

void write_trace_csv(const IterationTrace& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("write_trace_csv: cannot open " + path.string());
  out << "# mu_star=" << format_double(t.mu_star) << "\n";
  out << "# mu_half=" << format_double(t.mu_half) << "\n";
  out << "# c_tilde=" << format_double(t.c_tilde) << "\n";
  out << "# gamma=" << format_double(t.gamma) << "\n";
  out << "j,radius,measure\n";
  for (std::size_t k = 0; k < t.measures.size(); ++k) {
    double r = t.radii.empty() ? 0.0 : t.radii[k];
    out << (k + 1) << "," << format_double(r) << ","
        << format_double(t.measures[k]) << "\n";
  }
}

IterationTrace read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_trace_csv: cannot open " + path.string());
  IterationTrace t;
  t.radii.clear();
  t.measures.clear();
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      double val = std::stod(line.substr(eq + 1));
      if (key == "mu_star") t.mu_star = val;
      else if (key == "mu_half") t.mu_half = val;
      else if (key == "c_tilde") t.c_tilde = val;
      else if (key == "gamma") t.gamma = val;
      continue;
    }
    if (!header_seen) {  // the j,radius,measure line
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 3)
      throw std::invalid_argument("read_trace_csv: bad row: " + line);
    t.radii.push_back(std::stod(cells[1]));
    t.measures.push_back(std::stod(cells[2]));
  }
  if (t.measures.empty())
    throw DegenerateDataError("read_trace_csv: no data rows in " + path.string());
  bool all_zero = true;
  for (double r : t.radii)
    if (r != 0.0) all_zero = false;
  if (all_zero) t.radii.clear();
  return t;
}

std::vector<std::pair<std::string, std::string>> read_key_value_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("config: cannot open " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not key=value: " + t);
    out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return out;
}

}  // namespace orlicz
