#pragma once

#include <span>
#include <vector>

#include "radialdec/chart.hpp"
#include "radialdec/kernels.hpp"
#include "radialdec/lebedev.hpp"
#include "radialdec/sphharm.hpp"

namespace radialdec::hyperinterp {

using sphharm::SpectralField;

struct Grad {
  double value = 0.0;
  double d_theta = 0.0;
  double d_phi = 0.0;
};

struct Hess {
  double d_theta_theta = 0.0;
  double d_theta_phi = 0.0;
  double d_phi_phi = 0.0;
};

// Value with all first and second angular derivatives.
struct Jet {
  double value = 0.0;
  double d_theta = 0.0;
  double d_phi = 0.0;
  double d_theta_theta = 0.0;
  double d_theta_phi = 0.0;
  double d_phi_phi = 0.0;
};

// Pointwise evaluation of sum_i f_i Y_i in the angles of whichever chart the
// coefficients are expressed in.
double evaluate(const sphharm::Basis& basis, const SpectralField& field, double theta, double phi);
Grad evaluate_grad(const sphharm::Basis& basis, const SpectralField& field, double theta,
                   double phi);
Hess evaluate_hess(const sphharm::Basis& basis, const SpectralField& field, double theta,
                   double phi);
Jet evaluate_jet(const sphharm::Basis& basis, const SpectralField& field, double theta, double phi);

// Chart-coordinate derivatives of the hyperinterpolant at every node, each
// node using its selected chart.
struct NodalDerivatives {
  std::vector<double> d_theta;
  std::vector<double> d_phi;
};

// L2-orthogonal projection onto spherical harmonics of degree <= N using the
// Lebedev inner product, with the basis normalized so that its discrete Gram
// matrix is the identity. Projection is then f_i = <f, Y_i>_Q.
//
// The projector keeps the basis sampled in both charts. Coefficients "in chart
// B" expand the same function in harmonics of chart-B angles; they are the
// projection of the same samples onto the rotated basis, and give derivatives
// near the chart-A poles.
class Projector {
 public:
  explicit Projector(lebedev::GridPtr grid, kernels::Backend backend = kernels::Backend::OpenMP);
  Projector(lebedev::GridPtr grid, int max_degree,
            kernels::Backend backend = kernels::Backend::OpenMP);

  const lebedev::LebedevGrid& grid() const noexcept { return *grid_; }
  const lebedev::GridPtr& grid_ptr() const noexcept { return grid_; }
  int max_degree() const noexcept { return basis_.max_degree(); }
  std::size_t basis_size() const noexcept { return basis_.size(); }
  std::size_t node_count() const noexcept { return charts_.size(); }
  const sphharm::Basis& basis() const noexcept { return basis_; }
  kernels::Backend backend() const noexcept { return backend_; }

  // node_count x basis_size, entry (l, i) = Y_i at node l in chart coordinates.
  const Eigen::MatrixXd& basis_matrix(geometry::Chart chart = geometry::Chart::A) const;

  geometry::Chart node_chart(std::size_t l) const { return charts_[l]; }
  const geometry::ChartAngles& node_angles(std::size_t l) const { return angles_[l]; }

  SpectralField project(std::span<const double> samples,
                        geometry::Chart chart = geometry::Chart::A) const;
  std::vector<double> synthesize(const SpectralField& field,
                                 geometry::Chart chart = geometry::Chart::A) const;
  // Re-expresses chart-A coefficients of a band-limited field in chart `chart`.
  SpectralField to_chart(const SpectralField& field_a, geometry::Chart chart) const;

  // Derivatives through precomputed nodal differentiation matrices.
  NodalDerivatives nodal_derivatives(std::span<const double> samples) const;
  // Same quantity by projecting in both charts and evaluating the basis jet at
  // each node. Serial; kept as the reference for the matrix path.
  NodalDerivatives nodal_derivatives_reference(std::span<const double> samples) const;

  const kernels::RowMatrix& differentiation_theta() const noexcept { return d_theta_; }
  const kernels::RowMatrix& differentiation_phi() const noexcept { return d_phi_; }

 private:
  void check_samples(std::span<const double> samples) const;

  lebedev::GridPtr grid_;
  kernels::Backend backend_;
  sphharm::Basis basis_;
  std::vector<geometry::Chart> charts_;
  std::vector<geometry::ChartAngles> angles_;
  Eigen::MatrixXd basis_a_;
  Eigen::MatrixXd basis_b_;
  kernels::RowMatrix d_theta_;
  kernels::RowMatrix d_phi_;
};

// Discrete normalization constants 1 / sqrt(<Y~_i, Y~_i>_Q) of the analytic
// basis on a grid.
std::vector<double> discrete_normalization(const lebedev::LebedevGrid& grid, int max_degree);

}  // namespace radialdec::hyperinterp
