#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace radialdec::golden {

// Node samples of an exact solution u and its source g = -L u produced by the
// offline oracle.
struct GoldenCase {
  std::string case_name;
  std::string preset;
  double r0 = 0.0;
  int max_degree = 0;
  int node_count = 0;
  std::string hash;
  std::string generator_version;
  std::vector<double> u;
  std::vector<double> g;
  std::filesystem::path path;
};

// FNV-1a 64 of "preset|r0|maxDegree|nodeCount" with r0 printed as %.17g,
// rendered as 16 lowercase hex digits.
std::string manifold_hash(std::string_view preset, double r0, int max_degree, int node_count);

// <case>_<preset>_r0-<r0 with two decimals>_n<nodes>.json
std::string file_name(std::string_view case_name, std::string_view preset, double r0,
                      int node_count);

// RADIALDEC_GOLDEN_DIR if set, otherwise the directory configured at build time.
std::filesystem::path default_directory();

// Reads and validates one file. Throws GoldenDataError on malformed content.
GoldenCase read(const std::filesystem::path& file);

// Locates, reads and checks a case against the requested manifold. A missing
// file raises GoldenDataError naming the oracle command that produces it; a
// hash or node-count mismatch raises GoldenDataError as well.
GoldenCase load(const std::filesystem::path& directory, std::string_view case_name,
                std::string_view preset, double r0, int max_degree, int node_count);

}  // namespace radialdec::golden
