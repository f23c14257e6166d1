#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radialdec/chart.hpp"
#include "radialdec/hyperinterp.hpp"
#include "radialdec/kernels.hpp"
#include "radialdec/lebedev.hpp"
#include "radialdec/sphharm.hpp"
#include "radialdec/types.hpp"

namespace radialdec::geometry {

enum class Preset { Sphere, Dimple, Fountain, Spectral };

std::string_view to_string(Preset p);
// Accepts "sphere", "dimple", "fountain". Throws ConfigError otherwise.
Preset parse_preset(std::string_view name);

// r(theta, phi) ** e(theta, phi). The presets are
//   sphere    r = R
//   dimple    r = 1 + r0 sin(3 phi) cos(theta)
//   fountain  r = 1 + r0 sin(7 phi) cos(theta)
// in chart-A angles. Both deformations are spherical polynomials (of degree 3
// and 7), so a grid resolving degree 7 represents them exactly.
class RadialShape {
 public:
  static RadialShape sphere(double radius = 1.0);
  static RadialShape dimple(double r0);
  static RadialShape fountain(double r0);
  static RadialShape preset(Preset p, double r0);
  // Coefficients in the analytic unit-L2 basis, chart-A angles.
  static RadialShape from_spectrum(sphharm::SpectralField coeffs);

  Preset kind() const noexcept { return kind_; }
  double amplitude() const noexcept { return amplitude_; }
  // Degree of the preset polynomial (also when r0 = 0), or the spectrum degree.
  int degree() const noexcept;
  const std::optional<sphharm::SpectralField>& spectrum() const noexcept { return spectrum_; }

  double value(const Vec3& unit) const;
  double value(double theta, double phi) const;

 private:
  RadialShape(Preset kind, double amplitude) : kind_(kind), amplitude_(amplitude) {}
  Preset kind_;
  double amplitude_;
  std::optional<sphharm::SpectralField> spectrum_;
};

// r and its chart-coordinate derivatives at one point.
struct RadialDerivatives {
  double r = 1.0;
  double r_t = 0.0, r_p = 0.0;
  double r_tt = 0.0, r_tp = 0.0, r_pp = 0.0;
};

struct NodeFrame {
  Chart chart = Chart::A;
  ChartAngles angles;
  RadialDerivatives radial;
  Vec3 x = Vec3::Zero();
  Vec3 s_t = Vec3::Zero(), s_p = Vec3::Zero();
  Vec3 s_tt = Vec3::Zero(), s_tp = Vec3::Zero(), s_pp = Vec3::Zero();
  Vec3 normal = Vec3::Zero();        // outward unit normal
  Vec3 chart_normal = Vec3::Zero();  // s_t x s_p normalized, equals -normal
  Mat2 metric = Mat2::Identity();    // first fundamental form g_ij
  Mat2 shape = Mat2::Zero();         // second fundamental form w.r.t. outward normal
  Mat2 d_metric_t = Mat2::Zero();
  Mat2 d_metric_p = Mat2::Zero();
  Mat3x2 frame = Mat3x2::Zero();     // columns s_t, s_p
  Mat3x2 d_frame_t = Mat3x2::Zero();
  Mat3x2 d_frame_p = Mat3x2::Zero();
  Mat2 weingarten = Mat2::Zero();    // -I^{-1} II
  double sqrt_g = 0.0;               // sqrt(det I)
  double sqrt_g_cross = 0.0;         // |s_t x s_p|
  double gauss_curvature = 0.0;
  double area_ratio = 0.0;           // dA / dOmega, i.e. sqrt_g / sin(chart phi)
};

// Frame from r and its derivatives in the given chart. The metric derivatives
// come from differentiating the closed-form entries
//   g_tt = r_t^2 + r^2 sin^2 phi, g_tp = r_t r_p, g_pp = r_p^2 + r^2.
NodeFrame make_frame(Chart chart, ChartAngles angles, const RadialDerivatives& r);

// The same two derivatives via d(s_i . s_j) = s_si . s_j + s_i . s_sj.
void metric_derivatives_from_vectors(const NodeFrame& f, Mat2& d_t, Mat2& d_p);

inline constexpr double kMaxMetricCondition = 1e12;

// Solves a x = b for 2x2 a by Gaussian elimination with partial pivoting.
// Throws DegenerateFrameError if the 1-norm condition number exceeds
// max_condition.
Vec2 solve2(const Mat2& a, const Vec2& b, double max_condition = kMaxMetricCondition);
double condition_number(const Mat2& a);

Vec3 tangent_projection(const NodeFrame& f, const Vec3& v);
// Chart components (v^t, v^p) with A (v^t, v^p) = P_T v. The normal system
// A^T A c = A^T v uses A^T A = I.
Vec2 invert_frame(const NodeFrame& f, const Vec3& v);

class ManifoldGeometry {
 public:
  const RadialShape& shape() const noexcept { return shape_; }
  const lebedev::LebedevGrid& grid() const noexcept { return *grid_; }
  const lebedev::GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return frames_.size(); }
  const NodeFrame& frame(std::size_t l) const { return frames_[l]; }
  const std::vector<NodeFrame>& frames() const noexcept { return frames_; }
  // Spectrum of r in each chart, in the projector's discrete basis.
  const sphharm::SpectralField& radius_spectrum(Chart c) const {
    return c == Chart::A ? r_a_ : r_b_;
  }
  std::vector<double> radius_samples() const;

  friend ManifoldGeometry build(const RadialShape&, const hyperinterp::Projector&,
                                kernels::Backend);
  friend ManifoldGeometry from_frames(const RadialShape&, lebedev::GridPtr,
                                      std::vector<NodeFrame>);

 private:
  RadialShape shape_ = RadialShape::sphere();
  lebedev::GridPtr grid_;
  std::vector<NodeFrame> frames_;
  sphharm::SpectralField r_a_, r_b_;
};

// Samples r at the nodes, projects it in both charts and evaluates the
// hyperinterpolant, truncated to the degree of r, at each node in its
// selected chart. Throws
// NotRadialError if r <= 0 at a node and DegreeError if an explicit spectrum
// exceeds the projector's band limit.
ManifoldGeometry build(const RadialShape& shape, const hyperinterp::Projector& projector,
                       kernels::Backend backend = kernels::Backend::OpenMP);

// Wraps precomputed frames, e.g. the closed-form ones.
ManifoldGeometry from_frames(const RadialShape& shape, lebedev::GridPtr grid,
                             std::vector<NodeFrame> frames);

}  // namespace radialdec::geometry
