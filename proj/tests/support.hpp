#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "radialdec/closed_form.hpp"
#include "radialdec/excalc.hpp"
#include "radialdec/hyperinterp.hpp"

namespace support {

// Grid, projector and spectral/closed-form geometry for one shape.
struct Fixture {
  radialdec::lebedev::GridPtr grid;
  radialdec::hyperinterp::Projector proj;
  radialdec::geometry::ManifoldGeometry geom;
  radialdec::geometry::ManifoldGeometry exact;
  radialdec::excalc::OperatorContext ctx;

  Fixture(const radialdec::geometry::RadialShape& shape, int nodes,
          radialdec::kernels::Backend backend = radialdec::kernels::Backend::OpenMP)
      : grid(radialdec::lebedev::make_grid(nodes)),
        proj(grid, backend),
        geom(radialdec::geometry::build(shape, proj, backend)),
        exact(radialdec::geometry::exact::geometry(shape, grid)),
        ctx(geom, proj, backend) {}

  std::size_t size() const { return geom.size(); }
};

template <class F>
std::vector<double> sample(const radialdec::lebedev::LebedevGrid& g, F&& f) {
  std::vector<double> out(g.nodes().size());
  for (std::size_t l = 0; l < out.size(); ++l) out[l] = f(g.node(l));
  return out;
}

// Analytic basis element `slot` at every node.
inline std::vector<double> harmonic(const radialdec::lebedev::LebedevGrid& g, int n, int m) {
  return sample(g, [&](const radialdec::lebedev::Node& nd) {
    return radialdec::sphharm::eval_basis(n, nd.theta, nd.phi)[radialdec::sphharm::storage_index(n, m)];
  });
}

inline double l2(std::span<const double> v, const radialdec::lebedev::LebedevGrid& g) {
  return std::sqrt(radialdec::lebedev::inner_product_q(v, v, g));
}

inline double l2(std::span<const radialdec::Vec3> v, const radialdec::lebedev::LebedevGrid& g) {
  double s = 0.0;
  for (std::size_t l = 0; l < v.size(); ++l) s += g.weight(l) * v[l].squaredNorm();
  return std::sqrt(s);
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace support
