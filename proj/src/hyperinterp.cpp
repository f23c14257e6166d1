#include "radialdec/hyperinterp.hpp"

#include <cmath>
#include <string>

#include "radialdec/error.hpp"

namespace radialdec::hyperinterp {

using geometry::Chart;

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_degree(const sphharm::Basis& basis, const SpectralField& field) {
  if (field.max_degree() != basis.max_degree()) {
    throw LengthMismatchError("field degree " + std::to_string(field.max_degree()) +
                              " does not match basis degree " +
                              std::to_string(basis.max_degree()));
  }
}

Eigen::MatrixXd sample_basis(const sphharm::Basis& basis, const lebedev::LebedevGrid& grid,
                             Chart chart, kernels::Backend backend) {
  const auto n = static_cast<std::size_t>(grid.node_count());
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(basis.size()));
  kernels::for_each(backend, n, [&](std::size_t l) {
    const auto a = geometry::chart_angles(grid.node(l).unit, chart);
    std::vector<double> row(basis.size());
    basis.values(a.theta, a.phi, row);
    for (std::size_t i = 0; i < row.size(); ++i) {
      m(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(i)) = row[i];
    }
  });
  return m;
}

}  // namespace

double evaluate(const sphharm::Basis& basis, const SpectralField& field, double theta,
                double phi) {
  check_degree(basis, field);
  std::vector<double> v(basis.size());
  basis.values(theta, phi, v);
  return dot(v, field.coeffs());
}

Grad evaluate_grad(const sphharm::Basis& basis, const SpectralField& field, double theta,
                   double phi) {
  check_degree(basis, field);
  sphharm::BasisJet jet;
  basis.evaluate(theta, phi, sphharm::JetOrder::First, jet);
  const auto c = field.coeffs();
  return {dot(jet.value, c), dot(jet.d_theta, c), dot(jet.d_phi, c)};
}

Hess evaluate_hess(const sphharm::Basis& basis, const SpectralField& field, double theta,
                   double phi) {
  const Jet j = evaluate_jet(basis, field, theta, phi);
  return {j.d_theta_theta, j.d_theta_phi, j.d_phi_phi};
}

Jet evaluate_jet(const sphharm::Basis& basis, const SpectralField& field, double theta,
                 double phi) {
  check_degree(basis, field);
  sphharm::BasisJet jet;
  basis.evaluate(theta, phi, sphharm::JetOrder::Second, jet);
  const auto c = field.coeffs();
  return {dot(jet.value, c),         dot(jet.d_theta, c),     dot(jet.d_phi, c),
          dot(jet.d_theta_theta, c), dot(jet.d_theta_phi, c), dot(jet.d_phi_phi, c)};
}

std::vector<double> discrete_normalization(const lebedev::LebedevGrid& grid, int max_degree) {
  const sphharm::Basis analytic(max_degree);
  std::vector<double> norm2(analytic.size(), 0.0);
  std::vector<double> row(analytic.size());
  for (std::size_t l = 0; l < grid.nodes().size(); ++l) {
    const auto& nd = grid.node(l);
    analytic.values(nd.theta, nd.phi, row);
    for (std::size_t i = 0; i < row.size(); ++i) norm2[i] += grid.weight(l) * row[i] * row[i];
  }
  for (double& v : norm2) v = 1.0 / std::sqrt(v);
  return norm2;
}

Projector::Projector(lebedev::GridPtr grid, kernels::Backend backend)
    : Projector(grid, lebedev::max_degree(*grid), backend) {}

Projector::Projector(lebedev::GridPtr grid, int max_degree, kernels::Backend backend)
    : grid_(std::move(grid)),
      backend_(backend),
      basis_(max_degree, discrete_normalization(*grid_, max_degree)) {
  if (2 * max_degree > grid_->precision()) {
    throw ConfigError("band limit " + std::to_string(max_degree) +
                      " is not resolved by a grid of precision " +
                      std::to_string(grid_->precision()));
  }
  const auto n = static_cast<std::size_t>(grid_->node_count());
  charts_.resize(n);
  angles_.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    charts_[l] = geometry::chart_select(grid_->node(l).unit);
    angles_[l] = geometry::chart_angles(grid_->node(l).unit, charts_[l]);
  }
  basis_a_ = sample_basis(basis_, *grid_, Chart::A, backend_);
  basis_b_ = sample_basis(basis_, *grid_, Chart::B, backend_);

  // Derivative rows of each node in its own chart, then D = E * (B_c^T W).
  const auto nb = static_cast<Eigen::Index>(basis_.size());
  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd e_theta(nn, nb), e_phi(nn, nb);
  kernels::for_each(backend_, n, [&](std::size_t l) {
    sphharm::BasisJet jet;
    basis_.evaluate(angles_[l].theta, angles_[l].phi, sphharm::JetOrder::First, jet);
    for (Eigen::Index i = 0; i < nb; ++i) {
      e_theta(static_cast<Eigen::Index>(l), i) = jet.d_theta[static_cast<std::size_t>(i)];
      e_phi(static_cast<Eigen::Index>(l), i) = jet.d_phi[static_cast<std::size_t>(i)];
    }
  });
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(grid_->weights().data(), nn);
  const Eigen::MatrixXd proj_a = (basis_a_.array().colwise() * w.array()).matrix().transpose();
  const Eigen::MatrixXd proj_b = (basis_b_.array().colwise() * w.array()).matrix().transpose();
  d_theta_.resize(nn, nn);
  d_phi_.resize(nn, nn);
  for (Chart c : {Chart::A, Chart::B}) {
    std::vector<Eigen::Index> rows;
    for (std::size_t l = 0; l < n; ++l) {
      if (charts_[l] == c) rows.push_back(static_cast<Eigen::Index>(l));
    }
    if (rows.empty()) continue;
    const Eigen::MatrixXd& proj = c == Chart::A ? proj_a : proj_b;
    const Eigen::MatrixXd dt = e_theta(rows, Eigen::all) * proj;
    const Eigen::MatrixXd dp = e_phi(rows, Eigen::all) * proj;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      d_theta_.row(rows[k]) = dt.row(static_cast<Eigen::Index>(k));
      d_phi_.row(rows[k]) = dp.row(static_cast<Eigen::Index>(k));
    }
  }
}

const Eigen::MatrixXd& Projector::basis_matrix(Chart chart) const {
  return chart == Chart::A ? basis_a_ : basis_b_;
}

void Projector::check_samples(std::span<const double> samples) const {
  if (samples.size() != node_count()) {
    throw LengthMismatchError("expected " + std::to_string(node_count()) +
                              " node samples, got " + std::to_string(samples.size()));
  }
}

SpectralField Projector::project(std::span<const double> samples, Chart chart) const {
  check_samples(samples);
  std::vector<double> weighted(samples.size());
  for (std::size_t l = 0; l < samples.size(); ++l) weighted[l] = grid_->weight(l) * samples[l];
  std::vector<double> coeffs(basis_size());
  kernels::gemv_transposed(backend_, basis_matrix(chart), weighted, coeffs);
  return SpectralField(max_degree(), std::move(coeffs));
}

std::vector<double> Projector::synthesize(const SpectralField& field, Chart chart) const {
  check_degree(basis_, field);
  const Eigen::MatrixXd& b = basis_matrix(chart);
  const Eigen::VectorXd c =
      Eigen::Map<const Eigen::VectorXd>(field.coeffs().data(), b.cols());
  const Eigen::VectorXd v = b * c;
  return {v.data(), v.data() + v.size()};
}

SpectralField Projector::to_chart(const SpectralField& field_a, Chart chart) const {
  if (chart == Chart::A) return field_a;
  if (field_a.max_degree() > max_degree()) {
    throw LengthMismatchError("field degree exceeds projector band limit");
  }
  SpectralField padded(max_degree());
  for (std::size_t i = 0; i < field_a.size(); ++i) padded[i] = field_a[i];
  const auto samples = synthesize(padded, Chart::A);
  SpectralField full = project(samples, chart);
  SpectralField out(field_a.max_degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = full[i];
  return out;
}

NodalDerivatives Projector::nodal_derivatives(std::span<const double> samples) const {
  check_samples(samples);
  NodalDerivatives out{std::vector<double>(samples.size()), std::vector<double>(samples.size())};
  kernels::gemv(backend_, d_theta_, samples, out.d_theta);
  kernels::gemv(backend_, d_phi_, samples, out.d_phi);
  return out;
}

NodalDerivatives Projector::nodal_derivatives_reference(std::span<const double> samples) const {
  check_samples(samples);
  const SpectralField ca = project(samples, Chart::A);
  const SpectralField cb = project(samples, Chart::B);
  NodalDerivatives out{std::vector<double>(samples.size()), std::vector<double>(samples.size())};
  for (std::size_t l = 0; l < samples.size(); ++l) {
    const Grad g = evaluate_grad(basis_, charts_[l] == Chart::A ? ca : cb, angles_[l].theta,
                                 angles_[l].phi);
    out.d_theta[l] = g.d_theta;
    out.d_phi[l] = g.d_phi;
  }
  return out;
}

}  // namespace radialdec::hyperinterp
