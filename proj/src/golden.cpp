#include "radialdec/golden.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "radialdec/error.hpp"

#ifndef RADIALDEC_DEFAULT_GOLDEN_DIR
#define RADIALDEC_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace radialdec::golden {

std::string manifold_hash(std::string_view preset, double r0, int max_degree, int node_count) {
  char r0_text[64];
  std::snprintf(r0_text, sizeof r0_text, "%.17g", r0);
  const std::string key = std::string(preset) + "|" + r0_text + "|" + std::to_string(max_degree) +
                          "|" + std::to_string(node_count);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

std::string file_name(std::string_view case_name, std::string_view preset, double r0,
                      int node_count) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.*s_%.*s_r0-%.2f_n%d.json", static_cast<int>(case_name.size()),
                case_name.data(), static_cast<int>(preset.size()), preset.data(), r0, node_count);
  return buf;
}

std::filesystem::path default_directory() {
  if (const char* env = std::getenv("RADIALDEC_GOLDEN_DIR"); env && *env) return env;
  return RADIALDEC_DEFAULT_GOLDEN_DIR;
}

GoldenCase read(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw GoldenDataError("cannot open golden file " + file.string());
  GoldenCase c;
  c.path = file;
  try {
    const auto j = nlohmann::json::parse(in);
    const auto& m = j.at("manifold");
    c.preset = m.at("preset").get<std::string>();
    c.r0 = m.at("r0").get<double>();
    c.max_degree = m.at("maxDegree").get<int>();
    c.node_count = j.at("nodeCount").get<int>();
    c.hash = j.at("hash").get<std::string>();
    c.generator_version = j.value("generator_version", std::string{});
    c.case_name = j.value("case", std::string{});
    c.u = j.at("u").get<std::vector<double>>();
    c.g = j.at("g").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw GoldenDataError("malformed golden file " + file.string() + ": " + e.what());
  }
  if (c.u.size() != static_cast<std::size_t>(c.node_count) ||
      c.g.size() != static_cast<std::size_t>(c.node_count)) {
    throw GoldenDataError("golden file " + file.string() + " has sample arrays of the wrong length");
  }
  for (double v : c.u) {
    if (!std::isfinite(v)) throw GoldenDataError("non-finite u sample in " + file.string());
  }
  for (double v : c.g) {
    if (!std::isfinite(v)) throw GoldenDataError("non-finite g sample in " + file.string());
  }
  if (c.hash != manifold_hash(c.preset, c.r0, c.max_degree, c.node_count)) {
    throw GoldenDataError("golden file " + file.string() +
                          " carries a manifold hash that does not match its own manifold fields");
  }
  return c;
}

GoldenCase load(const std::filesystem::path& directory, std::string_view case_name,
                std::string_view preset, double r0, int max_degree, int node_count) {
  const auto file = directory / file_name(case_name, preset, r0, node_count);
  if (!std::filesystem::exists(file)) {
    char r0_text[32];
    std::snprintf(r0_text, sizeof r0_text, "%g", r0);
    throw GoldenDataError("missing golden file " + file.string() +
                          "; generate it with: radialdec grid --nodes " +
                          std::to_string(node_count) + " --out grids && python3 -m oracle generate"
                          " --case " + std::string(case_name) + " --manifold " +
                          std::string(preset) + " --r0 " + r0_text + " --nodes " +
                          std::to_string(node_count) + " --grid-csv grids/lebedev_" +
                          std::to_string(node_count) + ".csv --out " + directory.string());
  }
  GoldenCase c = read(file);
  const std::string expected = manifold_hash(preset, r0, max_degree, node_count);
  if (c.hash != expected) {
    throw GoldenDataError("golden file " + file.string() + " is for a different manifold (hash " +
                          c.hash + ", expected " + expected + ")");
  }
  return c;
}

}  // namespace radialdec::golden
