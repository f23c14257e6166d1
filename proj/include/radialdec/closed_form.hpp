#pragma once

#include "radialdec/geometry.hpp"

// Exact geometry of the preset shapes, independent of any projection. Each
// preset's r is the restriction of a polynomial R(x, y, z) to the unit sphere,
// so chart derivatives follow from the chain rule through the chart jet.
namespace radialdec::geometry::exact {

struct AmbientJet {
  double value = 0.0;
  Vec3 grad = Vec3::Zero();
  Mat3 hess = Mat3::Zero();
};

// Throws ConfigError for spectral shapes.
AmbientJet radial_jet(const RadialShape& shape, const Vec3& p);

RadialDerivatives chart_derivatives(const RadialShape& shape, Chart chart, ChartAngles angles);

NodeFrame frame_at(const RadialShape& shape, const Vec3& unit, Chart chart);
NodeFrame frame_at(const RadialShape& shape, const Vec3& unit);

ManifoldGeometry geometry(const RadialShape& shape, lebedev::GridPtr grid,
                          kernels::Backend backend = kernels::Backend::OpenMP);

}  // namespace radialdec::geometry::exact
