#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radialdec/error.hpp"
#include "radialdec/hyperinterp.hpp"
#include "support.hpp"

using namespace radialdec;
using geometry::Chart;
using hyperinterp::Projector;

namespace {

sphharm::SpectralField random_field(int N, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  sphharm::SpectralField f(N);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = d(rng);
  return f;
}

}  // namespace

TEST_SUITE("hyperinterp") {

TEST_CASE("discrete Gram matrix is the identity") {
  for (int n : {110, 302, 590}) {
    const Projector p(lebedev::make_grid(n));
    for (Chart c : {Chart::A, Chart::B}) {
      const auto& b = p.basis_matrix(c);
      const Eigen::VectorXd w =
          Eigen::Map<const Eigen::VectorXd>(p.grid().weights().data(), b.rows());
      const Eigen::MatrixXd gram = b.transpose() * w.asDiagonal() * b;
      CHECK((gram - Eigen::MatrixXd::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("constant and single-harmonic samples") {
  const auto g = lebedev::make_grid(302);
  const Projector p(g);
  const auto c = p.project(std::vector<double>(g->nodes().size(), 2.5));
  CHECK(c[0] == doctest::Approx(2.5 * std::sqrt(4.0 * std::numbers::pi)).epsilon(1e-13));
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(std::abs(c[i]) <= 1e-12);

  const auto y20 = p.project(support::harmonic(*g, 2, 0));
  for (std::size_t i = 0; i < y20.size(); ++i) {
    const double expected = i == sphharm::storage_index(2, 0) ? 1.0 : 0.0;
    CHECK(std::abs(y20[i] - expected) <= 1e-12);
  }
  CHECK_THROWS_AS(p.project(std::vector<double>(10)), LengthMismatchError);
}

TEST_CASE("exp(z) coefficients decay spectrally") {
  const auto g = lebedev::make_grid(590);
  const Projector p(g);
  const auto c = p.project(support::sample(*g, [](const auto& n) { return std::exp(n.unit.z()); }));
  std::vector<double> energy(static_cast<std::size_t>(p.max_degree() + 1), 0.0);
  for (int n = 0; n <= p.max_degree(); ++n) {
    for (int m = -n; m <= n; ++m) energy[n] += c.at(n, m) * c.at(n, m);
  }
  // Until round-off, log-energy per degree falls by more every step.
  for (int n = 1; n <= 12; ++n) {
    CHECK(energy[n] < energy[n - 1]);
    if (n >= 2) CHECK(std::log(energy[n]) - std::log(energy[n - 1]) <
                      std::log(energy[n - 1]) - std::log(energy[n - 2]) + 1e-9);
  }
}

TEST_CASE("evaluation of projected fields") {
  const auto g = lebedev::make_grid(302);
  const Projector p(g);
  const auto c = p.project(support::harmonic(*g, 1, 0));
  const double expected = sphharm::eval_basis(1, 0.7, 1.2)[2];
  CHECK(std::abs(hyperinterp::evaluate(p.basis(), c, 0.7, 1.2) - expected) <= 1e-13);

  const auto k = p.project(std::vector<double>(g->nodes().size(), 3.0));
  const auto gr = hyperinterp::evaluate_grad(p.basis(), k, 0.4, 2.0);
  CHECK(gr.value == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(std::abs(gr.d_theta) <= 1e-12);
  CHECK(std::abs(gr.d_phi) <= 1e-12);
  CHECK_THROWS_AS(hyperinterp::evaluate_grad(p.basis(), k, 0.4, 1e-9), PoleProximityError);
}

TEST_CASE("Hessian matches second-order differences") {
  const sphharm::Basis basis(8);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> th(0.0, 6.28), ph(0.4, 2.7);
  const double h = 1e-4;
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_field(8, 100 + trial);
    const double t = th(rng), q = ph(rng);
    const auto H = hyperinterp::evaluate_hess(basis, f, t, q);
    const auto v = [&](double a, double b) { return hyperinterp::evaluate(basis, f, a, b); };
    const double tt = (v(t + h, q) - 2 * v(t, q) + v(t - h, q)) / (h * h);
    const double pp = (v(t, q + h) - 2 * v(t, q) + v(t, q - h)) / (h * h);
    const double tp =
        (v(t + h, q + h) - v(t + h, q - h) - v(t - h, q + h) + v(t - h, q - h)) / (4 * h * h);
    const double scale = std::abs(H.d_theta_theta) + std::abs(H.d_phi_phi) + std::abs(H.d_theta_phi);
    CHECK(std::abs(tt - H.d_theta_theta) <= 1e-6 * scale);
    CHECK(std::abs(pp - H.d_phi_phi) <= 1e-6 * scale);
    CHECK(std::abs(tp - H.d_theta_phi) <= 1e-6 * scale);
  }
}

TEST_CASE("projection is idempotent and exact on band-limited data") {
  const auto g = lebedev::make_grid(194);
  const Projector p(g);
  std::mt19937 rng(11);
  std::normal_distribution<double> d;
  std::vector<double> s(g->nodes().size());
  for (double& x : s) x = d(rng);
  const auto c1 = p.project(s);
  const auto c2 = p.project(p.synthesize(c1));
  CHECK(support::max_abs_diff(c1.coeffs(), c2.coeffs()) <= 1e-12);

  const auto f = random_field(p.max_degree(), 5);
  const auto nodal = p.synthesize(f);
  CHECK(support::max_abs_diff(p.synthesize(p.project(nodal)), nodal) <= 1e-12);
}

TEST_CASE("the tail beyond the band limit shrinks faster than algebraically") {
  // Relative L2 distance of exp(z) to its projection, measured on a fine grid.
  const auto fine = lebedev::make_grid(1202);
  const auto exact = support::sample(*fine, [](const auto& n) { return std::exp(n.unit.z() * 2.0); });
  std::vector<double> log_err, log_n;
  for (int nodes : {50, 110, 194, 302}) {
    const auto g = lebedev::make_grid(nodes);
    const Projector p(g);
    const auto c = p.project(support::sample(*g, [](const auto& n) { return std::exp(n.unit.z() * 2.0); }));
    double num = 0.0, den = 0.0;
    for (std::size_t l = 0; l < fine->nodes().size(); ++l) {
      const auto& nd = fine->node(l);
      const double v = hyperinterp::evaluate(p.basis(), c, nd.theta, nd.phi);
      num += fine->weight(l) * (v - exact[l]) * (v - exact[l]);
      den += fine->weight(l) * exact[l] * exact[l];
    }
    log_err.push_back(std::log(std::sqrt(num / den)));
    log_n.push_back(std::log(p.max_degree()));
  }
  for (std::size_t k = 2; k < log_err.size(); ++k) {
    const double s_prev = (log_err[k - 1] - log_err[k - 2]) / (log_n[k - 1] - log_n[k - 2]);
    const double s_now = (log_err[k] - log_err[k - 1]) / (log_n[k] - log_n[k - 1]);
    CHECK(s_now < s_prev);
  }
}

TEST_CASE("both charts describe the same function") {
  const auto g = lebedev::make_grid(302);
  const Projector p(g);
  const auto f = random_field(p.max_degree(), 9);
  const auto fb = p.to_chart(f, Chart::B);
  CHECK(support::max_abs_diff(p.synthesize(f, Chart::A), p.synthesize(fb, Chart::B)) <= 1e-12);
  const Vec3 u = Vec3(0.3, -0.5, 0.8).normalized();
  const auto a = geometry::chart_angles(u, Chart::A), b = geometry::chart_angles(u, Chart::B);
  CHECK(std::abs(hyperinterp::evaluate(p.basis(), f, a.theta, a.phi) -
                 hyperinterp::evaluate(p.basis(), fb, b.theta, b.phi)) <= 1e-12);
}

TEST_CASE("nodal differentiation matrices against per-node evaluation") {
  const auto g = lebedev::make_grid(302);
  const Projector fast(g, kernels::Backend::OpenMP);
  const Projector serial(g, kernels::Backend::Serial);
  const auto s = support::sample(*g, [](const auto& n) { return std::exp(n.unit.z()) / (3 - n.unit.y()); });
  const auto d1 = fast.nodal_derivatives(s);
  const auto d2 = serial.nodal_derivatives_reference(s);
  const double scale = support::max_abs(d2.d_phi) + support::max_abs(d2.d_theta);
  CHECK(support::max_abs_diff(d1.d_theta, d2.d_theta) <= 1e-12 * scale);
  CHECK(support::max_abs_diff(d1.d_phi, d2.d_phi) <= 1e-12 * scale);

  // Exact on a band-limited function: d/dtheta and d/dphi of z in each chart.
  const auto z = support::sample(*g, [](const auto& n) { return n.unit.z(); });
  const auto dz = fast.nodal_derivatives(z);
  for (std::size_t l = 0; l < z.size(); ++l) {
    const auto jet = geometry::chart_jet(fast.node_chart(l), fast.node_angles(l));
    CHECK(std::abs(dz.d_theta[l] - jet.e_t.z()) <= 1e-12);
    CHECK(std::abs(dz.d_phi[l] - jet.e_p.z()) <= 1e-12);
  }
}

TEST_CASE("the band limit must be resolved by the grid") {
  CHECK_THROWS_AS(Projector(lebedev::make_grid(110), 9), ConfigError);
  CHECK_NOTHROW(Projector(lebedev::make_grid(110), 6));
}

}
