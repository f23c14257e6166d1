#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "radialdec/geometry.hpp"
#include "radialdec/kernels.hpp"

namespace radialdec::experiments {

// Node counts and amplitudes of the convergence studies.
inline const std::vector<int> kStudyNodes{110, 194, 302, 434, 590};
inline const std::vector<double> kStudyAmplitudes{0.0, 0.1, 0.2, 0.3, 0.4};

struct StudyConfig {
  geometry::Preset preset = geometry::Preset::Dimple;
  std::vector<double> r0{kStudyAmplitudes};
  std::vector<int> nodes{kStudyNodes};
  std::filesystem::path golden_dir;
  kernels::Backend backend = kernels::Backend::OpenMP;
};

struct Row {
  std::string field;
  int nodes = 0;
  int max_degree = 0;
  double r0 = 0.0;
  double rel_error = 0.0;
};

// Relative error of the numerical star against closed-form geometry:
//   "star0"  f = exp(z) / (3 - y), compared through the chart coefficient
//            f sqrt|g|
//   "star1"  a = sqrt|g| exp(z) (dtheta + dphi) in the chart of each node,
//            compared through the sharp of *a
std::vector<Row> conv_star(const StudyConfig& config);

// Relative error of the numerical d:
//   "d0"  f = exp(z) against the tangential projection of (0, 0, exp(z))
//   "d1"  the pullback of exp(z) (x dy - y dx - dz), compared through the
//         dual scalar of its exterior derivative
std::vector<Row> conv_d(const StudyConfig& config);

// Manufactured Laplace-Beltrami solve with u = exp(y) / (3 - z)^4 ("lb").
// Optional per-node dump of the finest run for each amplitude.
struct NodeDump {
  double r0 = 0.0;
  int nodes = 0;
  std::vector<double> u, u_exact;
};
std::vector<Row> solve_lb(const StudyConfig& config, std::vector<NodeDump>* dumps = nullptr);

std::vector<Row> select(std::span<const Row> rows, std::string_view field);

// Header nodes,N,r0,rel_error with rows in the order given.
void write_csv(std::ostream& os, std::span<const Row> rows);
// Log-scale line chart with one polyline per amplitude.
void write_svg(std::ostream& os, std::span<const Row> rows, std::string_view title);
void write_dump_csv(std::ostream& os, const NodeDump& dump);

}  // namespace radialdec::experiments
