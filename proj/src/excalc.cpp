#include "radialdec/excalc.hpp"

#include <array>

#include "radialdec/error.hpp"

namespace radialdec::excalc {

using geometry::NodeFrame;
using geometry::solve2;

OperatorContext::OperatorContext(const geometry::ManifoldGeometry& geometry,
                                 const hyperinterp::Projector& projector,
                                 kernels::Backend backend)
    : geometry_(&geometry), projector_(&projector), backend_(backend) {
  if (geometry.grid_ptr() != projector.grid_ptr() &&
      geometry.grid().node_count() != projector.grid().node_count()) {
    throw GridMismatchError("geometry and projector are built on different grids");
  }
}

hyperinterp::NodalDerivatives OperatorContext::derivatives(std::span<const double> samples) const {
  if (backend_ == kernels::Backend::Serial) return projector_->nodal_derivatives_reference(samples);
  return projector_->nodal_derivatives(samples);
}

namespace {

FormField d0(const OperatorContext& ctx, const FormField& f) {
  const auto& geom = ctx.geometry();
  const auto d = ctx.derivatives(f.scalars());
  std::vector<Vec3> v(ctx.size());
  kernels::for_each(ctx.backend(), ctx.size(), [&](std::size_t l) {
    const NodeFrame& fr = geom.frame(l);
    v[l] = fr.frame * solve2(fr.metric, Vec2{d.d_theta[l], d.d_phi[l]});
  });
  return FormField::vector(geom.grid_ptr(), std::move(v));
}

FormField d1(const OperatorContext& ctx, const FormField& alpha) {
  const auto& geom = ctx.geometry();
  const auto v = alpha.vectors();
  const std::size_t n = ctx.size();
  std::array<hyperinterp::NodalDerivatives, 3> dv;
  std::vector<double> comp(n);
  for (int k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < n; ++l) comp[l] = v[l](k);
    dv[static_cast<std::size_t>(k)] = ctx.derivatives(comp);
  }
  std::vector<double> dual(n);
  kernels::for_each(ctx.backend(), n, [&](std::size_t l) {
    const NodeFrame& fr = geom.frame(l);
    const Vec3& vbar = v[l];
    const Vec3 dv_t{dv[0].d_theta[l], dv[1].d_theta[l], dv[2].d_theta[l]};
    const Vec3 dv_p{dv[0].d_phi[l], dv[1].d_phi[l], dv[2].d_phi[l]};
    const Vec2 c = solve2(fr.metric, fr.frame.transpose() * vbar);
    const auto component_derivative = [&](const Mat2& dg, const Mat3x2& dA, const Vec3& dvbar) {
      const Vec2 dinv = -solve2(fr.metric, fr.frame.transpose() * (dA * c));
      const Vec2 inv_dv = solve2(fr.metric, fr.frame.transpose() * dvbar);
      return Vec2(dg * c + fr.metric * dinv + fr.metric * inv_dv);
    };
    const Vec2 dcov_t = component_derivative(fr.d_metric_t, fr.d_frame_t, dv_t);
    const Vec2 dcov_p = component_derivative(fr.d_metric_p, fr.d_frame_p, dv_p);
    dual[l] = (dcov_t(1) - dcov_p(0)) / fr.sqrt_g;
  });
  return FormField::scalar(2, geom.grid_ptr(), std::move(dual));
}

}  // namespace

FormField exterior_derivative(const OperatorContext& ctx, const FormField& omega) {
  forms::check_same_grid(ctx.geometry(), omega);
  switch (omega.degree()) {
    case 0: return d0(ctx, omega);
    case 1: return d1(ctx, omega);
    default: return FormField::zero(2, omega.grid_ptr());
  }
}

FormField hodge_star(const OperatorContext& ctx, const FormField& omega) {
  forms::check_same_grid(ctx.geometry(), omega);
  if (omega.degree() == 0 || omega.degree() == 2) {
    const auto s = omega.scalars();
    return FormField::scalar(2 - omega.degree(), omega.grid_ptr(), {s.begin(), s.end()});
  }
  const auto& geom = ctx.geometry();
  const auto v = omega.vectors();
  std::vector<Vec3> out(v.size());
  kernels::for_each(ctx.backend(), v.size(), [&](std::size_t l) {
    const NodeFrame& fr = geom.frame(l);
    const Vec2 up = geometry::invert_frame(fr, v[l]);
    const Vec2 star_cov{-fr.sqrt_g * up(1), fr.sqrt_g * up(0)};
    out[l] = fr.frame * solve2(fr.metric, star_cov);
  });
  return FormField::vector(omega.grid_ptr(), std::move(out));
}

FormField hodge_star_cross(const OperatorContext& ctx, const FormField& alpha) {
  forms::check_same_grid(ctx.geometry(), alpha);
  const auto v = alpha.vectors();
  std::vector<Vec3> out(v.size());
  for (std::size_t l = 0; l < v.size(); ++l) {
    const NodeFrame& fr = ctx.geometry().frame(l);
    out[l] = fr.chart_normal.cross(geometry::tangent_projection(fr, v[l]));
  }
  return FormField::vector(alpha.grid_ptr(), std::move(out));
}

FormField codifferential(const OperatorContext& ctx, const FormField& omega) {
  if (omega.degree() == 0) throw DegreeError("the codifferential of a 0-form is undefined");
  return scale(hodge_star(ctx, exterior_derivative(ctx, hodge_star(ctx, omega))), -1.0);
}

std::vector<Vec3> grad(const OperatorContext& ctx, std::span<const double> f) {
  return forms::sharp(exterior_derivative(ctx, forms::from_expression(ctx.geometry(), f)));
}

std::vector<double> div(const OperatorContext& ctx, std::span<const Vec3> field) {
  const FormField r = codifferential(ctx, forms::flat(ctx.geometry(), field));
  const auto s = r.scalars();
  std::vector<double> out(s.begin(), s.end());
  for (double& x : out) x = -x;
  return out;
}

std::vector<double> curl(const OperatorContext& ctx, std::span<const Vec3> field) {
  const FormField r = exterior_derivative(ctx, forms::flat(ctx.geometry(), field));
  const auto s = r.scalars();
  return {s.begin(), s.end()};
}

std::vector<double> laplacian(const OperatorContext& ctx, std::span<const double> f) {
  const FormField df = exterior_derivative(ctx, forms::from_expression(ctx.geometry(), f));
  const auto s = codifferential(ctx, df).scalars();
  std::vector<double> out(s.begin(), s.end());
  for (double& x : out) x = -x;
  return out;
}

FormField hodge_laplacian_1form(const OperatorContext& ctx, const FormField& alpha) {
  const FormField a = codifferential(ctx, exterior_derivative(ctx, alpha));
  const FormField b = exterior_derivative(ctx, codifferential(ctx, alpha));
  return scale(add(a, b), -1.0);
}

FormField bochner_1form(const OperatorContext& ctx, const FormField& alpha) {
  return scale(codifferential(ctx, exterior_derivative(ctx, alpha)), -1.0);
}

FormField scale(const FormField& f, double s) {
  if (f.degree() == 1) {
    const auto v = f.vectors();
    std::vector<Vec3> out(v.begin(), v.end());
    for (Vec3& x : out) x *= s;
    return FormField::vector(f.grid_ptr(), std::move(out));
  }
  const auto v = f.scalars();
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x *= s;
  return FormField::scalar(f.degree(), f.grid_ptr(), std::move(out));
}

FormField add(const FormField& a, const FormField& b) {
  if (a.degree() != b.degree()) throw DegreeError("cannot add forms of different degree");
  if (a.size() != b.size()) throw GridMismatchError("cannot add forms on different grids");
  if (a.degree() == 1) {
    std::vector<Vec3> out(a.size());
    for (std::size_t l = 0; l < out.size(); ++l) out[l] = a.vectors()[l] + b.vectors()[l];
    return FormField::vector(a.grid_ptr(), std::move(out));
  }
  std::vector<double> out(a.size());
  for (std::size_t l = 0; l < out.size(); ++l) out[l] = a.scalars()[l] + b.scalars()[l];
  return FormField::scalar(a.degree(), a.grid_ptr(), std::move(out));
}

}  // namespace radialdec::excalc
