#include "radialdec/forms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "radialdec/error.hpp"

namespace radialdec::forms {

namespace {

void check_length(std::size_t got, const lebedev::LebedevGrid& g) {
  if (got != static_cast<std::size_t>(g.node_count())) {
    throw LengthMismatchError("form needs " + std::to_string(g.node_count()) +
                              " node values, got " + std::to_string(got));
  }
}

}  // namespace

FormField FormField::scalar(int degree, lebedev::GridPtr grid, std::vector<double> values) {
  if (degree != 0 && degree != 2) throw DegreeError("scalar storage is for 0- and 2-forms");
  check_length(values.size(), *grid);
  FormField f(degree, std::move(grid));
  f.scalars_ = std::move(values);
  return f;
}

FormField FormField::vector(lebedev::GridPtr grid, std::vector<Vec3> values) {
  check_length(values.size(), *grid);
  FormField f(1, std::move(grid));
  f.vectors_ = std::move(values);
  return f;
}

FormField FormField::zero(int degree, lebedev::GridPtr grid) {
  const auto n = static_cast<std::size_t>(grid->node_count());
  if (degree == 1) return vector(std::move(grid), std::vector<Vec3>(n, Vec3::Zero()));
  return scalar(degree, std::move(grid), std::vector<double>(n, 0.0));
}

std::span<const double> FormField::scalars() const {
  if (degree_ == 1) throw DegreeError("1-forms are stored as vectors");
  return scalars_;
}

std::span<const Vec3> FormField::vectors() const {
  if (degree_ != 1) throw DegreeError(std::to_string(degree_) + "-forms are stored as scalars");
  return vectors_;
}

void check_same_grid(const geometry::ManifoldGeometry& geom, const FormField& f) {
  if (geom.grid_ptr() != f.grid_ptr() && geom.grid().node_count() != f.grid().node_count()) {
    throw GridMismatchError("form and geometry live on different grids");
  }
}

std::vector<Vec3> sharp(const FormField& alpha) {
  const auto v = alpha.vectors();
  return {v.begin(), v.end()};
}

FormField flat(const geometry::ManifoldGeometry& geom, std::span<const Vec3> v,
               FlatDiagnostics* diagnostics) {
  check_length(v.size(), geom.grid());
  std::vector<Vec3> out(v.size());
  FlatDiagnostics d;
  for (std::size_t l = 0; l < v.size(); ++l) {
    const auto& f = geom.frame(l);
    const double normal_part = std::abs(f.normal.dot(v[l]));
    const double norm = v[l].norm();
    if (norm > 0.0 && normal_part > kNormalTolerance * norm) {
      ++d.projected_nodes;
      d.max_normal_fraction = std::max(d.max_normal_fraction, normal_part / norm);
    }
    out[l] = geometry::tangent_projection(f, v[l]);
  }
  if (diagnostics) *diagnostics = d;
  return FormField::vector(geom.grid_ptr(), std::move(out));
}

Vec2 chart_covariant_components(const geometry::NodeFrame& frame, const Vec3& v) {
  return frame.metric * geometry::invert_frame(frame, v);
}

FormField from_expression(const geometry::ManifoldGeometry& geom, std::span<const double> values) {
  return FormField::scalar(0, geom.grid_ptr(), {values.begin(), values.end()});
}

FormField from_expression(const geometry::ManifoldGeometry& geom, std::span<const Vec2> coeffs,
                          std::span<const geometry::Chart> charts) {
  check_length(coeffs.size(), geom.grid());
  check_length(charts.size(), geom.grid());
  std::vector<Vec3> v(coeffs.size());
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    const auto& f = geom.frame(l);
    if (charts[l] != f.chart) {
      const bool valid = geometry::chart_valid_at(geom.grid().node(l).unit, charts[l]);
      throw ChartValidityError("chart " + std::string(geometry::to_string(charts[l])) +
                               " coefficients supplied at node " + std::to_string(l) +
                               (valid ? ", which uses chart " + std::string(geometry::to_string(f.chart))
                                      : ", outside that chart's valid range"));
    }
    v[l] = f.frame * geometry::solve2(f.metric, coeffs[l]);
  }
  return FormField::vector(geom.grid_ptr(), std::move(v));
}

FormField from_area_coefficients(const geometry::ManifoldGeometry& geom,
                                 std::span<const double> w) {
  check_length(w.size(), geom.grid());
  std::vector<double> dual(w.size());
  for (std::size_t l = 0; l < w.size(); ++l) dual[l] = w[l] / geom.frame(l).sqrt_g;
  return FormField::scalar(2, geom.grid_ptr(), std::move(dual));
}

std::vector<double> area_coefficients(const geometry::ManifoldGeometry& geom,
                                      const FormField& omega) {
  if (omega.degree() != 2) throw DegreeError("area coefficients need a 2-form");
  check_same_grid(geom, omega);
  const auto s = omega.scalars();
  std::vector<double> w(s.size());
  for (std::size_t l = 0; l < s.size(); ++l) w[l] = s[l] * geom.frame(l).sqrt_g;
  return w;
}

void write_csv(std::ostream& os, const FormField& f) {
  char buf[160];
  if (f.degree() == 1) {
    os << "node,vx,vy,vz\n";
    const auto v = f.vectors();
    for (std::size_t l = 0; l < v.size(); ++l) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", l, v[l].x(), v[l].y(), v[l].z());
      os << buf;
    }
    return;
  }
  os << "node,value\n";
  const auto s = f.scalars();
  for (std::size_t l = 0; l < s.size(); ++l) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", l, s[l]);
    os << buf;
  }
}

}  // namespace radialdec::forms
