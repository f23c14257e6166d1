#include "radialdec/sphharm.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "radialdec/error.hpp"

namespace radialdec::sphharm {

int index_map(int degree, int order) {
  if (degree < 0 || order < -degree || order > degree) {
    throw InvalidOrderError("invalid spherical-harmonic label (n=" + std::to_string(degree) +
                            ", m=" + std::to_string(order) + "): need n >= 0 and |m| <= n");
  }
  return static_cast<int>(storage_index(degree, order)) + 1;
}

BasisIndex flat_to_nm(int flat_index) {
  if (flat_index < 1) {
    throw InvalidOrderError("flat basis index must be >= 1, got " + std::to_string(flat_index));
  }
  const int slot = flat_index - 1;
  int n = static_cast<int>(std::sqrt(static_cast<double>(slot)));
  while (n * n > slot) --n;
  while ((n + 1) * (n + 1) <= slot) ++n;
  return {n, slot - n * n - n};
}

SpectralField::SpectralField(int max_degree)
    : max_degree_(max_degree), coeffs_(static_cast<std::size_t>(basis_size(max_degree)), 0.0) {
  if (max_degree < 0) throw InvalidOrderError("max degree must be non-negative");
}

SpectralField::SpectralField(int max_degree, std::vector<double> coeffs)
    : max_degree_(max_degree), coeffs_(std::move(coeffs)) {
  if (max_degree < 0) throw InvalidOrderError("max degree must be non-negative");
  if (coeffs_.size() != static_cast<std::size_t>(basis_size(max_degree))) {
    throw LengthMismatchError("spectral field of degree " + std::to_string(max_degree) +
                              " needs " + std::to_string(basis_size(max_degree)) +
                              " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw Error("spectral field coefficients must be finite");
  }
}

double SpectralField::at(int degree, int order) const {
  index_map(degree, order);
  if (degree > max_degree_) return 0.0;
  return coeffs_[storage_index(degree, order)];
}

double& SpectralField::at(int degree, int order) {
  index_map(degree, order);
  if (degree > max_degree_) {
    throw InvalidOrderError("degree " + std::to_string(degree) + " exceeds field max degree " +
                            std::to_string(max_degree_));
  }
  return coeffs_[storage_index(degree, order)];
}

namespace {

// Triangular table of Theta_nm(phi) = c_nm P^m_n(cos phi), 0 <= m <= n <= N,
// with c_nm the unit-L2 constant of the complex harmonic and P^m_n carrying the
// Condon-Shortley phase.
class LegendreTable {
 public:
  explicit LegendreTable(int max_degree) : n_(max_degree) {
    data_.assign(static_cast<std::size_t>((n_ + 1) * (n_ + 2) / 2), 0.0);
  }
  double& operator()(int n, int m) { return data_[slot(n, m)]; }
  double operator()(int n, int m) const { return m > n ? 0.0 : data_[slot(n, m)]; }

 private:
  static std::size_t slot(int n, int m) { return static_cast<std::size_t>(n * (n + 1) / 2 + m); }
  int n_;
  std::vector<double> data_;
};

void fill_legendre(int max_degree, double phi, LegendreTable& theta) {
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  theta(0, 0) = 0.5 / std::sqrt(std::numbers::pi);
  for (int m = 1; m <= max_degree; ++m) {
    theta(m, m) = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * theta(m - 1, m - 1);
  }
  for (int m = 0; m < max_degree; ++m) {
    theta(m + 1, m) = std::sqrt(2.0 * m + 3.0) * c * theta(m, m);
    for (int n = m + 2; n <= max_degree; ++n) {
      const double nn = n, mm = m;
      const double a = std::sqrt((4.0 * nn * nn - 1.0) / (nn * nn - mm * mm));
      const double b =
          std::sqrt(((nn - 1.0) * (nn - 1.0) - mm * mm) / (4.0 * (nn - 1.0) * (nn - 1.0) - 1.0));
      theta(n, m) = a * (c * theta(n - 1, m) - b * theta(n - 2, m));
    }
  }
}

double ladder(int n, int m) { return std::sqrt(static_cast<double>((n - m) * (n + m + 1))); }

void check_pole(double phi, double pole_band) {
  if (phi < pole_band || std::numbers::pi - phi < pole_band) {
    throw PoleProximityError("polar derivative requested at phi=" + std::to_string(phi) +
                             ", inside the pole-exclusion band of " + std::to_string(pole_band) +
                             " rad");
  }
}

void resize_jet(BasisJet& jet, std::size_t size, JetOrder order) {
  jet.value.assign(size, 0.0);
  if (order >= JetOrder::First) {
    jet.d_theta.assign(size, 0.0);
    jet.d_phi.assign(size, 0.0);
  }
  if (order >= JetOrder::Second) {
    jet.d_theta_theta.assign(size, 0.0);
    jet.d_theta_phi.assign(size, 0.0);
    jet.d_phi_phi.assign(size, 0.0);
  }
}

std::vector<double> analytic_scale(int max_degree) {
  if (max_degree < 0) throw InvalidOrderError("max degree must be non-negative");
  return std::vector<double>(static_cast<std::size_t>(basis_size(max_degree)), 1.0);
}

}  // namespace

Basis::Basis(int max_degree) : max_degree_(max_degree), scale_(analytic_scale(max_degree)) {}

Basis::Basis(int max_degree, std::vector<double> scale)
    : max_degree_(max_degree), scale_(std::move(scale)) {
  if (scale_.size() != static_cast<std::size_t>(basis_size(max_degree))) {
    throw LengthMismatchError("basis scale vector has wrong length");
  }
}

void Basis::values(double theta, double phi, std::span<double> out) const {
  if (out.size() != size()) throw LengthMismatchError("basis output span has wrong length");
  LegendreTable leg(max_degree_);
  fill_legendre(max_degree_, phi, leg);
  for (int n = 0; n <= max_degree_; ++n) {
    out[storage_index(n, 0)] = scale_[storage_index(n, 0)] * leg(n, 0);
    for (int m = 1; m <= n; ++m) {
      const double amp = std::numbers::sqrt2 * leg(n, m);
      out[storage_index(n, m)] = scale_[storage_index(n, m)] * amp * std::cos(m * theta);
      out[storage_index(n, -m)] = scale_[storage_index(n, -m)] * amp * std::sin(m * theta);
    }
  }
}

void Basis::evaluate(double theta, double phi, JetOrder order, BasisJet& jet,
                     double pole_band) const {
  resize_jet(jet, size(), order);
  if (order == JetOrder::Value) {
    values(theta, phi, jet.value);
    return;
  }
  check_pole(phi, pole_band);

  const int N = max_degree_;
  LegendreTable leg(N), d1(N), d2(N);
  fill_legendre(N, phi, leg);
  const double cot = std::cos(phi) / std::sin(phi);
  const double csc2 = 1.0 / (std::sin(phi) * std::sin(phi));
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= n; ++m) {
      d1(n, m) = m * cot * leg(n, m) + (m < n ? ladder(n, m) * leg(n, m + 1) : 0.0);
    }
    if (order == JetOrder::Second) {
      for (int m = 0; m <= n; ++m) {
        d2(n, m) = -m * csc2 * leg(n, m) + m * cot * d1(n, m) +
                   (m < n ? ladder(n, m) * d1(n, m + 1) : 0.0);
      }
    }
  }

  const bool second = order == JetOrder::Second;
  for (int n = 0; n <= N; ++n) {
    const std::size_t z0 = storage_index(n, 0);
    const double s0 = scale_[z0];
    jet.value[z0] = s0 * leg(n, 0);
    jet.d_phi[z0] = s0 * d1(n, 0);
    if (second) jet.d_phi_phi[z0] = s0 * d2(n, 0);
    for (int m = 1; m <= n; ++m) {
      const double cm = std::cos(m * theta), sm = std::sin(m * theta);
      const double a0 = std::numbers::sqrt2 * leg(n, m);
      const double a1 = std::numbers::sqrt2 * d1(n, m);
      const std::size_t ix = storage_index(n, m), iz = storage_index(n, -m);
      const double sx = scale_[ix], sz = scale_[iz];
      // X = a cos(m theta), Z = a sin(m theta).
      jet.value[ix] = sx * a0 * cm;
      jet.value[iz] = sz * a0 * sm;
      jet.d_theta[ix] = -sx * m * a0 * sm;
      jet.d_theta[iz] = sz * m * a0 * cm;
      jet.d_phi[ix] = sx * a1 * cm;
      jet.d_phi[iz] = sz * a1 * sm;
      if (second) {
        const double a2 = std::numbers::sqrt2 * d2(n, m);
        jet.d_theta_theta[ix] = -sx * m * m * a0 * cm;
        jet.d_theta_theta[iz] = -sz * m * m * a0 * sm;
        jet.d_theta_phi[ix] = -sx * m * a1 * sm;
        jet.d_theta_phi[iz] = sz * m * a1 * cm;
        jet.d_phi_phi[ix] = sx * a2 * cm;
        jet.d_phi_phi[iz] = sz * a2 * sm;
      }
    }
  }
}

std::vector<double> eval_basis(int max_degree, double theta, double phi) {
  Basis basis(max_degree);
  std::vector<double> out(basis.size());
  basis.values(theta, phi, out);
  return out;
}

std::vector<double> eval_basis_dtheta(int max_degree, double theta, double phi) {
  // The azimuthal derivative never needs the polar ladder, so it is valid at
  // the poles as well.
  const auto v = eval_basis(max_degree, theta, phi);
  std::vector<double> out(v.size(), 0.0);
  for (int n = 0; n <= max_degree; ++n) {
    for (int m = 1; m <= n; ++m) {
      out[storage_index(n, m)] = -m * v[storage_index(n, -m)];
      out[storage_index(n, -m)] = m * v[storage_index(n, m)];
    }
  }
  return out;
}

std::vector<double> eval_basis_dphi(int max_degree, double theta, double phi, double pole_band) {
  Basis basis(max_degree);
  BasisJet jet;
  basis.evaluate(theta, phi, JetOrder::First, jet, pole_band);
  return jet.d_phi;
}

}  // namespace radialdec::sphharm
