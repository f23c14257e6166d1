#include "radialdec/chart.hpp"

#include <algorithm>
#include <cmath>

namespace radialdec::geometry {

namespace {

// Maps chart-A embedding coordinates to chart-B ones.
Vec3 rotate_to_b(const Vec3& v) { return {v.z(), v.y(), -v.x()}; }
Vec3 rotate_from_b(const Vec3& v) { return {-v.z(), v.y(), v.x()}; }

}  // namespace

Chart chart_select(const Vec3& unit) {
  return std::abs(unit.z()) <= std::cos(kPhiMin) ? Chart::A : Chart::B;
}

ChartAngles chart_angles(const Vec3& unit, Chart chart) {
  const Vec3 v = chart == Chart::A ? unit : rotate_from_b(unit);
  double theta = std::atan2(v.y(), v.x());
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  const double phi = std::acos(std::clamp(v.z() / v.norm(), -1.0, 1.0));
  return {theta, phi};
}

Vec3 chart_point(Chart chart, ChartAngles a) {
  const Vec3 e{std::sin(a.phi) * std::cos(a.theta), std::sin(a.phi) * std::sin(a.theta),
               std::cos(a.phi)};
  return chart == Chart::A ? e : rotate_to_b(e);
}

ChartJet chart_jet(Chart chart, ChartAngles a) {
  const double st = std::sin(a.theta), ct = std::cos(a.theta);
  const double sp = std::sin(a.phi), cp = std::cos(a.phi);
  ChartJet j;
  j.e = {sp * ct, sp * st, cp};
  j.e_t = {-sp * st, sp * ct, 0.0};
  j.e_p = {cp * ct, cp * st, -sp};
  j.e_tt = {-sp * ct, -sp * st, 0.0};
  j.e_tp = {-cp * st, cp * ct, 0.0};
  j.e_pp = -j.e;
  if (chart == Chart::B) {
    for (Vec3* v : {&j.e, &j.e_t, &j.e_p, &j.e_tt, &j.e_tp, &j.e_pp}) *v = rotate_to_b(*v);
  }
  return j;
}

bool chart_valid_at(const Vec3& unit, Chart chart) {
  const double phi = chart_angles(unit, chart).phi;
  return phi >= kPhiMin && phi <= kPhiMax;
}

std::string_view to_string(Chart chart) { return chart == Chart::A ? "A" : "B"; }

}  // namespace radialdec::geometry
