#include "radialdec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "radialdec/error.hpp"

namespace radialdec::geometry {

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::Sphere: return "sphere";
    case Preset::Dimple: return "dimple";
    case Preset::Fountain: return "fountain";
    case Preset::Spectral: return "spectral";
  }
  return "?";
}

Preset parse_preset(std::string_view name) {
  if (name == "sphere") return Preset::Sphere;
  if (name == "dimple") return Preset::Dimple;
  if (name == "fountain") return Preset::Fountain;
  throw ConfigError("unknown manifold '" + std::string(name) +
                    "' (expected sphere, dimple or fountain)");
}

RadialShape RadialShape::sphere(double radius) {
  if (!(radius > 0.0)) throw NotRadialError("sphere radius must be positive");
  return RadialShape(Preset::Sphere, radius);
}

RadialShape RadialShape::dimple(double r0) { return RadialShape(Preset::Dimple, r0); }
RadialShape RadialShape::fountain(double r0) { return RadialShape(Preset::Fountain, r0); }

RadialShape RadialShape::preset(Preset p, double r0) {
  switch (p) {
    case Preset::Sphere: return sphere(1.0);
    case Preset::Dimple: return dimple(r0);
    case Preset::Fountain: return fountain(r0);
    case Preset::Spectral: break;
  }
  throw ConfigError("spectral shapes need coefficients");
}

RadialShape RadialShape::from_spectrum(sphharm::SpectralField coeffs) {
  RadialShape s(Preset::Spectral, 0.0);
  s.spectrum_ = std::move(coeffs);
  return s;
}

int RadialShape::degree() const noexcept {
  switch (kind_) {
    case Preset::Sphere: return 0;
    case Preset::Dimple: return 3;
    case Preset::Fountain: return 7;
    case Preset::Spectral: return spectrum_->max_degree();
  }
  return 0;
}

double RadialShape::value(const Vec3& u) const {
  const double z = u.z(), z2 = z * z;
  switch (kind_) {
    case Preset::Sphere: return amplitude_;
    // sin(k phi) cos(theta) = x U_{k-1}(z) with U the Chebyshev polynomials of
    // the second kind.
    case Preset::Dimple: return 1.0 + amplitude_ * u.x() * (4.0 * z2 - 1.0);
    case Preset::Fountain:
      return 1.0 + amplitude_ * u.x() * (((64.0 * z2 - 80.0) * z2 + 24.0) * z2 - 1.0);
    case Preset::Spectral: break;
  }
  double theta = std::atan2(u.y(), u.x());
  const double phi = std::acos(std::clamp(z, -1.0, 1.0));
  return value(theta, phi);
}

double RadialShape::value(double theta, double phi) const {
  if (kind_ != Preset::Spectral) return value(chart_point(Chart::A, {theta, phi}));
  const auto v = sphharm::eval_basis(spectrum_->max_degree(), theta, phi);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * (*spectrum_)[i];
  return s;
}

double condition_number(const Mat2& a) {
  const double det = a.determinant();
  if (det == 0.0 || !std::isfinite(det)) return std::numeric_limits<double>::infinity();
  const Mat2 inv = a.inverse();
  return a.cwiseAbs().colwise().sum().maxCoeff() * inv.cwiseAbs().colwise().sum().maxCoeff();
}

Vec2 solve2(const Mat2& a, const Vec2& b, double max_condition) {
  const double cond = condition_number(a);
  if (!(cond <= max_condition)) {
    throw DegenerateFrameError("2x2 system has condition number " + std::to_string(cond) +
                               " above " + std::to_string(max_condition));
  }
  int p = std::abs(a(1, 0)) > std::abs(a(0, 0)) ? 1 : 0;
  const int q = 1 - p;
  const double l = a(q, 0) / a(p, 0);
  const double u11 = a(q, 1) - l * a(p, 1);
  const double y1 = b(q) - l * b(p);
  const double x1 = y1 / u11;
  const double x0 = (b(p) - a(p, 1) * x1) / a(p, 0);
  return {x0, x1};
}

NodeFrame make_frame(Chart chart, ChartAngles angles, const RadialDerivatives& r) {
  const ChartJet e = chart_jet(chart, angles);
  NodeFrame f;
  f.chart = chart;
  f.angles = angles;
  f.radial = r;
  f.x = r.r * e.e;
  f.s_t = r.r_t * e.e + r.r * e.e_t;
  f.s_p = r.r_p * e.e + r.r * e.e_p;
  f.s_tt = r.r_tt * e.e + 2.0 * r.r_t * e.e_t + r.r * e.e_tt;
  f.s_tp = r.r_tp * e.e + r.r_t * e.e_p + r.r_p * e.e_t + r.r * e.e_tp;
  f.s_pp = r.r_pp * e.e + 2.0 * r.r_p * e.e_p + r.r * e.e_pp;

  const double sp = std::sin(angles.phi), cp = std::cos(angles.phi);
  const double sp2 = sp * sp;
  f.metric << r.r_t * r.r_t + r.r * r.r * sp2, r.r_t * r.r_p, r.r_t * r.r_p,
      r.r_p * r.r_p + r.r * r.r;
  const double cond = condition_number(f.metric);
  if (!(cond <= kMaxMetricCondition)) {
    throw DegenerateFrameError("metric is degenerate at chart angles (" +
                               std::to_string(angles.theta) + ", " + std::to_string(angles.phi) +
                               "): condition " + std::to_string(cond));
  }
  f.sqrt_g = std::sqrt(f.metric.determinant());
  const Vec3 cross = f.s_t.cross(f.s_p);
  f.sqrt_g_cross = cross.norm();
  f.chart_normal = cross / f.sqrt_g_cross;
  f.normal = -f.chart_normal;

  const double L = f.s_tt.dot(f.normal), M = f.s_tp.dot(f.normal), N = f.s_pp.dot(f.normal);
  f.shape << L, M, M, N;
  const Vec2 w0 = solve2(f.metric, f.shape.col(0));
  const Vec2 w1 = solve2(f.metric, f.shape.col(1));
  f.weingarten.col(0) = -w0;
  f.weingarten.col(1) = -w1;
  f.gauss_curvature = f.weingarten.determinant();

  const double gtt_t = 2.0 * r.r_t * r.r_tt + 2.0 * r.r * r.r_t * sp2;
  const double gtt_p = 2.0 * r.r_t * r.r_tp + 2.0 * r.r * r.r_p * sp2 + 2.0 * r.r * r.r * sp * cp;
  const double gtp_t = r.r_tt * r.r_p + r.r_t * r.r_tp;
  const double gtp_p = r.r_tp * r.r_p + r.r_t * r.r_pp;
  const double gpp_t = 2.0 * r.r_p * r.r_tp + 2.0 * r.r * r.r_t;
  const double gpp_p = 2.0 * r.r_p * r.r_pp + 2.0 * r.r * r.r_p;
  f.d_metric_t << gtt_t, gtp_t, gtp_t, gpp_t;
  f.d_metric_p << gtt_p, gtp_p, gtp_p, gpp_p;

  f.frame.col(0) = f.s_t;
  f.frame.col(1) = f.s_p;
  f.d_frame_t.col(0) = f.s_tt;
  f.d_frame_t.col(1) = f.s_tp;
  f.d_frame_p.col(0) = f.s_tp;
  f.d_frame_p.col(1) = f.s_pp;
  f.area_ratio = f.sqrt_g / sp;
  return f;
}

void metric_derivatives_from_vectors(const NodeFrame& f, Mat2& d_t, Mat2& d_p) {
  const auto d = [&](const Vec3& a_s, const Vec3& a, const Vec3& b_s, const Vec3& b) {
    return a_s.dot(b) + a.dot(b_s);
  };
  d_t(0, 0) = d(f.s_tt, f.s_t, f.s_tt, f.s_t);
  d_t(0, 1) = d_t(1, 0) = d(f.s_tt, f.s_t, f.s_tp, f.s_p);
  d_t(1, 1) = d(f.s_tp, f.s_p, f.s_tp, f.s_p);
  d_p(0, 0) = d(f.s_tp, f.s_t, f.s_tp, f.s_t);
  d_p(0, 1) = d_p(1, 0) = d(f.s_tp, f.s_t, f.s_pp, f.s_p);
  d_p(1, 1) = d(f.s_pp, f.s_p, f.s_pp, f.s_p);
}

Vec3 tangent_projection(const NodeFrame& f, const Vec3& v) {
  return v - f.normal * f.normal.dot(v);
}

Vec2 invert_frame(const NodeFrame& f, const Vec3& v) {
  return solve2(f.metric, f.frame.transpose() * tangent_projection(f, v));
}

std::vector<double> ManifoldGeometry::radius_samples() const {
  std::vector<double> r(frames_.size());
  for (std::size_t l = 0; l < frames_.size(); ++l) r[l] = frames_[l].radial.r;
  return r;
}

ManifoldGeometry build(const RadialShape& shape, const hyperinterp::Projector& projector,
                       kernels::Backend backend) {
  if (shape.kind() == Preset::Spectral && shape.degree() > projector.max_degree()) {
    throw DegreeError("radial spectrum of degree " + std::to_string(shape.degree()) +
                      " exceeds the band limit " + std::to_string(projector.max_degree()));
  }
  const auto& g = projector.grid();
  const auto n = static_cast<std::size_t>(g.node_count());
  std::vector<double> samples(n);
  for (std::size_t l = 0; l < n; ++l) {
    samples[l] = shape.value(g.node(l).unit);
    if (!(samples[l] > 0.0)) {
      throw NotRadialError("radial function is " + std::to_string(samples[l]) + " at node " +
                           std::to_string(l) + "; the surface is not a radial manifold");
    }
  }
  ManifoldGeometry m;
  m.shape_ = shape;
  m.grid_ = projector.grid_ptr();
  m.r_a_ = projector.project(samples, Chart::A);
  m.r_b_ = projector.project(samples, Chart::B);
  // Coefficients above the degree of r are dropped.
  const auto keep = static_cast<std::size_t>(sphharm::basis_size(shape.degree()));
  for (auto* r : {&m.r_a_, &m.r_b_}) {
    for (std::size_t k = keep; k < r->size(); ++k) (*r)[k] = 0.0;
  }
  m.frames_.resize(n);
  kernels::for_each(backend, n, [&](std::size_t l) {
    const Chart c = projector.node_chart(l);
    const ChartAngles a = projector.node_angles(l);
    const auto j = hyperinterp::evaluate_jet(projector.basis(), m.radius_spectrum(c), a.theta,
                                             a.phi);
    m.frames_[l] = make_frame(
        c, a, {j.value, j.d_theta, j.d_phi, j.d_theta_theta, j.d_theta_phi, j.d_phi_phi});
  });
  return m;
}

ManifoldGeometry from_frames(const RadialShape& shape, lebedev::GridPtr grid,
                             std::vector<NodeFrame> frames) {
  if (frames.size() != static_cast<std::size_t>(grid->node_count())) {
    throw GridMismatchError("frame count does not match the grid");
  }
  ManifoldGeometry m;
  m.shape_ = shape;
  m.grid_ = std::move(grid);
  m.frames_ = std::move(frames);
  return m;
}

}  // namespace radialdec::geometry
