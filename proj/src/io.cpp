#include "radialdec/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include "radialdec/error.hpp"

namespace radialdec::io {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

bool parse_double(const std::string& s, double& v) {
  try {
    std::size_t used = 0;
    v = std::stod(s, &used);
    return used > 0;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

void write_spectral_csv(std::ostream& os, const sphharm::SpectralField& field) {
  os << "n,m,coeff\n";
  char buf[96];
  for (int n = 0; n <= field.max_degree(); ++n) {
    for (int m = -n; m <= n; ++m) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", n, m, field.at(n, m));
      os << buf;
    }
  }
}

sphharm::SpectralField read_spectral_csv(std::istream& is) {
  std::vector<std::tuple<int, int, double>> rows;
  std::string line;
  int max_n = 0;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line);
    double n = 0, m = 0, c = 0;
    if (cells.size() != 3 || !parse_double(cells[0], n) || !parse_double(cells[1], m) ||
        !parse_double(cells[2], c)) {
      if (lineno == 1) continue;
      throw ConfigError("spectral CSV line " + std::to_string(lineno) + " is not n,m,coeff");
    }
    rows.emplace_back(static_cast<int>(n), static_cast<int>(m), c);
    max_n = std::max(max_n, static_cast<int>(n));
  }
  sphharm::SpectralField f(max_n);
  for (const auto& [n, m, c] : rows) f.at(n, m) = c;
  return f;
}

std::vector<double> read_samples_csv(std::istream& is) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line);
    double v = 0;
    if (cells.empty() || !parse_double(cells.back(), v)) {
      if (lineno == 1) continue;
      throw ConfigError("sample CSV line " + std::to_string(lineno) + " has no numeric value");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace radialdec::io
