#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "radialdec/geometry.hpp"

namespace radialdec::forms {

// A k-form sampled at the grid nodes. 0-forms store their values, 1-forms the
// embedding-space vector of their sharp, and 2-forms the dual scalar *w, which
// keeps the storage independent of the chart at each node.
class FormField {
 public:
  static FormField scalar(int degree, lebedev::GridPtr grid, std::vector<double> values);
  static FormField vector(lebedev::GridPtr grid, std::vector<Vec3> values);
  static FormField zero(int degree, lebedev::GridPtr grid);

  int degree() const noexcept { return degree_; }
  const lebedev::LebedevGrid& grid() const noexcept { return *grid_; }
  const lebedev::GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(grid_->node_count()); }

  // Valid for degree 0 and 2.
  std::span<const double> scalars() const;
  // Valid for degree 1.
  std::span<const Vec3> vectors() const;

 private:
  FormField(int degree, lebedev::GridPtr grid) : degree_(degree), grid_(std::move(grid)) {}
  int degree_;
  lebedev::GridPtr grid_;
  std::vector<double> scalars_;
  std::vector<Vec3> vectors_;
};

// Nodes where flat had to discard a normal part larger than
// kNormalTolerance * |v|, and the largest such relative part.
struct FlatDiagnostics {
  std::size_t projected_nodes = 0;
  double max_normal_fraction = 0.0;
};

inline constexpr double kNormalTolerance = 1e-8;

std::vector<Vec3> sharp(const FormField& alpha);
FormField flat(const geometry::ManifoldGeometry& geom, std::span<const Vec3> v,
               FlatDiagnostics* diagnostics = nullptr);

// Covariant chart components v_i = g_ij (A^{-1} v)^j, which reduce to the dot
// products s_i . v for tangent v.
Vec2 chart_covariant_components(const geometry::NodeFrame& frame, const Vec3& v);

FormField from_expression(const geometry::ManifoldGeometry& geom, std::span<const double> values);

// 1-form from chart coefficients (a_t, a_p) with a = a_t dtheta + a_p dphi.
// charts[l] names the chart the coefficients at node l are written in and must
// be the chart the geometry selected there.
FormField from_expression(const geometry::ManifoldGeometry& geom, std::span<const Vec2> coeffs,
                          std::span<const geometry::Chart> charts);

// 2-form from chart coefficients w with omega = w dtheta ^ dphi.
FormField from_area_coefficients(const geometry::ManifoldGeometry& geom,
                                 std::span<const double> w);

// Chart coefficient w = (*omega) sqrt|g| at each node.
std::vector<double> area_coefficients(const geometry::ManifoldGeometry& geom,
                                      const FormField& omega);

void check_same_grid(const geometry::ManifoldGeometry& geom, const FormField& f);

// CSV with header node,value or node,vx,vy,vz at 17 significant digits.
void write_csv(std::ostream& os, const FormField& f);

}  // namespace radialdec::forms
