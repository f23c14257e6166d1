#include "radialdec/lebedev.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "radialdec/error.hpp"
#include "radialdec/geometry.hpp"

namespace radialdec::lebedev {

namespace {

struct OrbitGenerator {
  int type;
  double a;
  double b;
  double v;
};

struct RuleEntry {
  int node_count;
  int precision;
  int offset;
  int orbits;
};

#include "lebedev_orbits.inc"

constexpr std::array<int, std::size(kRules)> kCounts = [] {
  std::array<int, std::size(kRules)> c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = kRules[i].node_count;
  return c;
}();

const RuleEntry* find_rule(int node_count) {
  for (const auto& r : kRules) {
    if (r.node_count == node_count) return &r;
  }
  return nullptr;
}

Vec3 generator_point(const OrbitGenerator& o) {
  switch (o.type) {
    case 1: return {1.0, 0.0, 0.0};
    case 2: return {0.0, std::sqrt(0.5), std::sqrt(0.5)};
    case 3: return Vec3::Constant(std::sqrt(1.0 / 3.0));
    case 4: return {o.a, o.a, std::sqrt(1.0 - 2.0 * o.a * o.a)};
    case 5: return {o.a, std::sqrt(1.0 - o.a * o.a), 0.0};
    case 6: return {o.a, o.b, std::sqrt(1.0 - o.a * o.a - o.b * o.b)};
    default: throw Error("corrupt Lebedev orbit table");
  }
}

constexpr std::array<int, 6> kOrbitSize = {6, 12, 8, 24, 24, 48};

// All distinct images of the generator under the 48 signed permutations.
std::vector<Vec3> expand_orbit(const Vec3& g) {
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<Vec3> out;
  for (const auto& p : perms) {
    for (int signs = 0; signs < 8; ++signs) {
      Vec3 v;
      for (int k = 0; k < 3; ++k) {
        const double s = (signs >> k) & 1 ? -1.0 : 1.0;
        v[k] = s * g[p[k]] + 0.0;  // +0.0 folds -0 into 0
      }
      if (std::none_of(out.begin(), out.end(), [&](const Vec3& w) { return w == v; })) {
        out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

std::span<const int> supported_node_counts() { return kCounts; }

int precision_for(int node_count) {
  const RuleEntry* r = find_rule(node_count);
  return r ? r->precision : -1;
}

LebedevGrid grid(int node_count) {
  const RuleEntry* rule = find_rule(node_count);
  if (!rule) {
    std::string msg = "unsupported Lebedev node count " + std::to_string(node_count) +
                      "; supported counts:";
    for (int c : kCounts) msg += " " + std::to_string(c);
    throw UnsupportedGridError(msg);
  }
  LebedevGrid g;
  g.precision_ = rule->precision;
  g.nodes_.reserve(static_cast<std::size_t>(node_count));
  g.weights_.reserve(static_cast<std::size_t>(node_count));
  for (int k = 0; k < rule->orbits; ++k) {
    const OrbitGenerator& o = kOrbits[rule->offset + k];
    const auto points = expand_orbit(generator_point(o));
    if (points.size() != static_cast<std::size_t>(kOrbitSize[o.type - 1])) {
      throw Error("Lebedev orbit expanded to an unexpected size");
    }
    for (const Vec3& u : points) {
      double theta = std::atan2(u.y(), u.x());
      if (theta < 0.0) theta += 2.0 * std::numbers::pi;
      const double phi = std::acos(std::clamp(u.z(), -1.0, 1.0));
      g.nodes_.push_back({u, theta, phi});
      g.weights_.push_back(4.0 * std::numbers::pi * o.v);
    }
  }
  if (g.node_count() != node_count) throw Error("Lebedev rule expanded to the wrong node count");
  return g;
}

GridPtr make_grid(int node_count) { return std::make_shared<const LebedevGrid>(grid(node_count)); }

int max_degree(const LebedevGrid& g) { return g.precision() / 2; }

double inner_product_q(std::span<const double> u, std::span<const double> v, const LebedevGrid& g) {
  const auto n = static_cast<std::size_t>(g.node_count());
  if (u.size() != n || v.size() != n) {
    throw LengthMismatchError("inner product needs " + std::to_string(n) +
                              " samples per argument, got " + std::to_string(u.size()) + " and " +
                              std::to_string(v.size()));
  }
  double sum = 0.0;
  for (std::size_t l = 0; l < n; ++l) sum += g.weight(l) * u[l] * v[l];
  return sum;
}

double surface_integral(std::span<const double> f, const LebedevGrid& g,
                        const geometry::ManifoldGeometry& geometry) {
  if (&geometry.grid() != &g && geometry.grid().node_count() != g.node_count()) {
    throw GridMismatchError("geometry was built on a different grid");
  }
  const auto n = static_cast<std::size_t>(g.node_count());
  if (f.size() != n) throw LengthMismatchError("surface integral sample count mismatch");
  double sum = 0.0;
  for (std::size_t l = 0; l < n; ++l) sum += g.weight(l) * f[l] * geometry.frame(l).area_ratio;
  return sum;
}

void write_csv(std::ostream& os, const LebedevGrid& g) {
  os << "x,y,z,theta,phi,weight\n";
  char buf[256];
  for (std::size_t l = 0; l < g.nodes().size(); ++l) {
    const Node& nd = g.node(l);
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g,%.15g,%.15g,%.15g\n", nd.unit.x(),
                  nd.unit.y(), nd.unit.z(), nd.theta, nd.phi, g.weight(l));
    os << buf;
  }
}

}  // namespace radialdec::lebedev
