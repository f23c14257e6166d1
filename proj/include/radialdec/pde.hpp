#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "radialdec/excalc.hpp"

namespace radialdec::pde {

enum class Step { D, Star, Codifferential, Negate };

// A composition of the numerical operators, applied left to right to a
// 0-form. Each step's input degree is checked when the chain is built.
class OperatorChain {
 public:
  explicit OperatorChain(std::vector<Step> steps, int input_degree = 0);
  // -delta d = * d * d
  static OperatorChain laplace_beltrami();

  const std::vector<Step>& steps() const noexcept { return steps_; }
  int input_degree() const noexcept { return input_degree_; }
  int output_degree() const noexcept { return output_degree_; }

  forms::FormField apply(const excalc::OperatorContext& ctx, const forms::FormField& f) const;

 private:
  std::vector<Step> steps_;
  int input_degree_;
  int output_degree_;
};

struct GalerkinSystem {
  int max_degree = 0;
  Eigen::MatrixXd stiffness;  // K_ij = <L Y_j, Y_i>_Q
  Eigen::MatrixXd mass;       // M_ij = <Y_j, Y_i>_Q
  bool pin_zero_mode = true;
};

// Builds K column by column by applying the chain to the node samples of each
// basis function. Columns are distributed over threads with the OpenMP
// backend. Requires a scalar-to-scalar chain (DegreeError otherwise).
GalerkinSystem assemble(const excalc::OperatorContext& ctx, const OperatorChain& chain,
                        kernels::Backend backend = kernels::Backend::OpenMP);

struct SolveResult {
  sphharm::SpectralField u;
  std::vector<double> u_samples;
  double residual = 0.0;           // |K' u - b'| of the pinned system
  double condition_estimate = 0.0;  // 1 / rcond of the pinned matrix
  double source_mean = 0.0;        // int g dA / int |g| dA
  bool incompatible_source = false;
};

inline constexpr double kCompatibilityTolerance = 1e-6;
inline constexpr double kMaxCondition = 1e14;

// Solves K u = -M g with the Y_1 row and column replaced by u_1 = 0, by dense
// LU with partial pivoting. A source whose mean over the surface exceeds
// kCompatibilityTolerance is flagged and made mean-free first. Throws
// NearSingularError when the pinned matrix is numerically singular.
SolveResult solve(const GalerkinSystem& system, const excalc::OperatorContext& ctx,
                  std::span<const double> g);

enum class Provenance { AnalyticSphere, GoldenFile };

struct ManufacturedCase {
  std::string name;
  Provenance provenance = Provenance::AnalyticSphere;
  std::vector<double> u;
  std::vector<double> g;
};

// Cases for L = -delta d, i.e. g = -Delta u:
//   "eig-<n>-<m>"  unit sphere only, u = Y^m_n with the analytic normalization
//   "exp-poly"     u = exp(y) / (3 - z)^4; on the unit sphere g is computed in
//                  process, otherwise it is read from the golden directory.
ManufacturedCase manufactured_case(const geometry::RadialShape& shape, std::string_view name,
                                   const lebedev::LebedevGrid& grid,
                                   const std::filesystem::path& golden_dir);

double exp_poly(const Vec3& p);

// Surface Laplacian of an ambient function through
//   Delta_M U = Delta U - n^T (D^2 U) n - tr(W) (grad U . n)
// evaluated on exact frames.
std::vector<double> ambient_exp_poly_laplacian(const geometry::ManifoldGeometry& exact);

// Q-weighted relative L2 error |a - b| / |b|.
double relative_error(std::span<const double> approx, std::span<const double> exact,
                      const lebedev::LebedevGrid& grid);

// Removes the Y_1 component, matching the pinned zero mode of the solver.
std::vector<double> remove_mean_mode(std::span<const double> u, const lebedev::LebedevGrid& grid);

}  // namespace radialdec::pde
