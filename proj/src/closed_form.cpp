#include "radialdec/closed_form.hpp"

#include "radialdec/error.hpp"

namespace radialdec::geometry::exact {

AmbientJet radial_jet(const RadialShape& shape, const Vec3& p) {
  AmbientJet j;
  const double a = shape.amplitude();
  const double x = p.x(), z = p.z(), z2 = z * z;
  switch (shape.kind()) {
    case Preset::Sphere:
      j.value = a;
      return j;
    case Preset::Dimple: {
      const double u = 4.0 * z2 - 1.0, du = 8.0 * z, ddu = 8.0;
      j.value = 1.0 + a * x * u;
      j.grad = {a * u, 0.0, a * x * du};
      j.hess(0, 2) = j.hess(2, 0) = a * du;
      j.hess(2, 2) = a * x * ddu;
      return j;
    }
    case Preset::Fountain: {
      const double u = ((64.0 * z2 - 80.0) * z2 + 24.0) * z2 - 1.0;
      const double du = ((384.0 * z2 - 320.0) * z2 + 48.0) * z;
      const double ddu = (1920.0 * z2 - 960.0) * z2 + 48.0;
      j.value = 1.0 + a * x * u;
      j.grad = {a * u, 0.0, a * x * du};
      j.hess(0, 2) = j.hess(2, 0) = a * du;
      j.hess(2, 2) = a * x * ddu;
      return j;
    }
    case Preset::Spectral: break;
  }
  throw ConfigError("closed-form geometry is only available for the preset shapes");
}

RadialDerivatives chart_derivatives(const RadialShape& shape, Chart chart, ChartAngles angles) {
  const ChartJet e = chart_jet(chart, angles);
  const AmbientJet R = radial_jet(shape, e.e);
  RadialDerivatives d;
  d.r = R.value;
  d.r_t = R.grad.dot(e.e_t);
  d.r_p = R.grad.dot(e.e_p);
  d.r_tt = e.e_t.dot(R.hess * e.e_t) + R.grad.dot(e.e_tt);
  d.r_tp = e.e_t.dot(R.hess * e.e_p) + R.grad.dot(e.e_tp);
  d.r_pp = e.e_p.dot(R.hess * e.e_p) + R.grad.dot(e.e_pp);
  return d;
}

NodeFrame frame_at(const RadialShape& shape, const Vec3& unit, Chart chart) {
  const ChartAngles a = chart_angles(unit, chart);
  return make_frame(chart, a, chart_derivatives(shape, chart, a));
}

NodeFrame frame_at(const RadialShape& shape, const Vec3& unit) {
  return frame_at(shape, unit, chart_select(unit));
}

ManifoldGeometry geometry(const RadialShape& shape, lebedev::GridPtr grid,
                          kernels::Backend backend) {
  const auto n = static_cast<std::size_t>(grid->node_count());
  std::vector<NodeFrame> frames(n);
  kernels::for_each(backend, n, [&](std::size_t l) {
    const Vec3& u = grid->node(l).unit;
    if (!(shape.value(u) > 0.0)) throw NotRadialError("radial function is not positive");
    frames[l] = frame_at(shape, u);
  });
  return from_frames(shape, std::move(grid), std::move(frames));
}

}  // namespace radialdec::geometry::exact
