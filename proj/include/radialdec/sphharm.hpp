#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace radialdec::sphharm {

// Default half-width (radians) of the band around phi = 0 and phi = pi where
// polar-angle derivatives are refused.
inline constexpr double kDefaultPoleBand = 1e-6;

// (degree n, order m) label of a real basis element. Negative orders label the
// imaginary part Z^{|m|}_n, positive orders the real part X^m_n.
struct BasisIndex {
  int degree = 0;
  int order = 0;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

constexpr int basis_size(int max_degree) { return (max_degree + 1) * (max_degree + 1); }

// 0-based storage slot of (n, m). Within degree n the slots run over
// m = -n..n, i.e. Z^n_n, ..., Z^1_n, Y^0_n, X^1_n, ..., X^n_n.
constexpr std::size_t storage_index(int degree, int order) {
  return static_cast<std::size_t>(degree * degree + degree + order);
}

// 1-based flat index i of (n, m), matching the listing Y_1 = Y^0_0,
// Y_2 = Z^1_1, Y_3 = Y^0_1, Y_4 = X^1_1, ... Throws InvalidOrderError when
// |m| > n or n < 0.
int index_map(int degree, int order);
BasisIndex flat_to_nm(int flat_index);

// Coefficients of a scalar field in the real spherical-harmonic basis, stored
// in storage_index order.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(int max_degree);
  SpectralField(int max_degree, std::vector<double> coeffs);

  int max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::span<double> coeffs() noexcept { return coeffs_; }

  double operator[](std::size_t slot) const { return coeffs_[slot]; }
  double& operator[](std::size_t slot) { return coeffs_[slot]; }
  double at(int degree, int order) const;
  double& at(int degree, int order);

 private:
  int max_degree_ = 0;
  std::vector<double> coeffs_ = std::vector<double>(1, 0.0);
};

enum class JetOrder { Value = 0, First = 1, Second = 2 };

// Values and angular derivatives of every basis element at one point.
struct BasisJet {
  std::vector<double> value;
  std::vector<double> d_theta;
  std::vector<double> d_phi;
  std::vector<double> d_theta_theta;
  std::vector<double> d_theta_phi;
  std::vector<double> d_phi_phi;
};

// Real spherical-harmonic basis up to a maximum degree. Elements carry the
// analytic unit-L2 normalization multiplied by an optional per-element scale,
// which is how a grid-specific discrete normalization is installed.
//
// theta is the azimuth, phi the polar angle. The associated Legendre functions
// include the Condon-Shortley phase. Polar derivatives use the ladder relation
//   d/dphi Y^m_n = m cot(phi) Y^m_n + sqrt((n-m)(n+m+1)) e^{-i theta} Y^{m+1}_n
// and therefore refuse points within pole_band of phi = 0 or pi.
class Basis {
 public:
  explicit Basis(int max_degree);
  Basis(int max_degree, std::vector<double> scale);

  int max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return scale_.size(); }
  std::span<const double> scale() const noexcept { return scale_; }

  void values(double theta, double phi, std::span<double> out) const;
  void evaluate(double theta, double phi, JetOrder order, BasisJet& jet,
                double pole_band = kDefaultPoleBand) const;

 private:
  int max_degree_;
  std::vector<double> scale_;
};

// Convenience wrappers using the analytic normalization.
std::vector<double> eval_basis(int max_degree, double theta, double phi);
std::vector<double> eval_basis_dtheta(int max_degree, double theta, double phi);
std::vector<double> eval_basis_dphi(int max_degree, double theta, double phi,
                                    double pole_band = kDefaultPoleBand);

}  // namespace radialdec::sphharm
