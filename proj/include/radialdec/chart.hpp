#pragma once

#include <numbers>
#include <string_view>

#include "radialdec/types.hpp"

namespace radialdec::geometry {

// Two spherical-coordinate charts covering the sphere. Chart A is singular at
// +-iota_3, chart B at +-iota_1. Chart B is chart A composed with the fixed
// rotation (a, b, c) -> (c, b, -a), so both induce the same orientation.
enum class Chart { A, B };

// Polar-angle window in which a chart is used.
inline constexpr double kPhiMin = 0.8 * std::numbers::pi / 4.0;
inline constexpr double kPhiMax = 0.8 * std::numbers::pi;

struct ChartAngles {
  double theta = 0.0;  // azimuth in [0, 2 pi)
  double phi = 0.0;    // polar angle in [0, pi]
};

// Unit radial vector of a chart with its first and second angular derivatives.
struct ChartJet {
  Vec3 e, e_t, e_p, e_tt, e_tp, e_pp;
};

// A when |u . iota_3| <= cos(kPhiMin), otherwise B.
Chart chart_select(const Vec3& unit);

ChartAngles chart_angles(const Vec3& unit, Chart chart);
Vec3 chart_point(Chart chart, ChartAngles angles);
ChartJet chart_jet(Chart chart, ChartAngles angles);

// True when the chart's polar angle at `unit` lies inside [kPhiMin, kPhiMax].
bool chart_valid_at(const Vec3& unit, Chart chart);

std::string_view to_string(Chart chart);

}  // namespace radialdec::geometry
