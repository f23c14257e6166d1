#pragma once

#include "radialdec/forms.hpp"
#include "radialdec/hyperinterp.hpp"

namespace radialdec::excalc {

using forms::FormField;

// Geometry and projector sharing one grid. With the serial backend the
// derivative step evaluates the basis jet node by node; with OpenMP it goes
// through the precomputed nodal differentiation matrices.
class OperatorContext {
 public:
  OperatorContext(const geometry::ManifoldGeometry& geometry,
                  const hyperinterp::Projector& projector,
                  kernels::Backend backend = kernels::Backend::OpenMP);

  const geometry::ManifoldGeometry& geometry() const noexcept { return *geometry_; }
  const hyperinterp::Projector& projector() const noexcept { return *projector_; }
  kernels::Backend backend() const noexcept { return backend_; }
  std::size_t size() const noexcept { return geometry_->size(); }

  hyperinterp::NodalDerivatives derivatives(std::span<const double> samples) const;

 private:
  const geometry::ManifoldGeometry* geometry_;
  const hyperinterp::Projector* projector_;
  kernels::Backend backend_;
};

// k = 0: sharp of df is g^{ij} (d_j f) s_i.
// k = 1: per node the covariant components are differentiated by the
//   three-term rule
//     d_s v_i = (d_s g_ij) c^j + g_ij (d_s A^{-1} vbar)^j + g_ij (A^{-1} d_s vbar)^j
//   with c = A^{-1} vbar and d_s A^{-1} = -A^{-1} (d_s A) A^{-1}, and the
//   result is stored as the dual scalar (d_t v_p - d_p v_t) / sqrt|g|.
// k = 2: the zero 2-form.
FormField exterior_derivative(const OperatorContext& ctx, const FormField& omega);

// k = 0 and k = 2 swap storage. k = 1 applies the chart formula
//   (*a)_p = sqrt|g| a^t,  (*a)_t = -sqrt|g| a^p
// with the Levi-Civita symbol of the chart orientation.
FormField hodge_star(const OperatorContext& ctx, const FormField& omega);
// The same rotation of 1-forms written as a cross product with the chart normal
// s_t x s_p / |s_t x s_p| (the inward normal).
FormField hodge_star_cross(const OperatorContext& ctx, const FormField& alpha);

// delta = -* d *, so that delta d has spectrum +n(n+1) on the unit sphere.
// Throws DegreeError for 0-forms.
FormField codifferential(const OperatorContext& ctx, const FormField& omega);

std::vector<Vec3> grad(const OperatorContext& ctx, std::span<const double> f);
// div F = -delta F^flat.
std::vector<double> div(const OperatorContext& ctx, std::span<const Vec3> field);
// Dual scalar of d F^flat.
std::vector<double> curl(const OperatorContext& ctx, std::span<const Vec3> field);
// -delta d f.
std::vector<double> laplacian(const OperatorContext& ctx, std::span<const double> f);
// -(delta d + d delta) alpha.
FormField hodge_laplacian_1form(const OperatorContext& ctx, const FormField& alpha);
// -delta d alpha.
FormField bochner_1form(const OperatorContext& ctx, const FormField& alpha);

FormField scale(const FormField& f, double s);
FormField add(const FormField& a, const FormField& b);

}  // namespace radialdec::excalc
