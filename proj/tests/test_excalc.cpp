#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radialdec/error.hpp"
#include "radialdec/excalc.hpp"
#include "support.hpp"

using namespace radialdec;
using namespace radialdec::excalc;
using forms::FormField;
using geometry::RadialShape;

namespace {

std::vector<double> random_band_limited(const lebedev::LebedevGrid& g, int degree, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  std::vector<double> c(static_cast<std::size_t>(sphharm::basis_size(degree)));
  for (double& x : c) x = d(rng);
  return support::sample(g, [&](const lebedev::Node& n) {
    const auto y = sphharm::eval_basis(degree, n.theta, n.phi);
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) s += c[i] * y[i];
    return s;
  });
}

FormField tangent_field(const support::Fixture& f) {
  std::vector<Vec3> v(f.size());
  for (std::size_t l = 0; l < v.size(); ++l) {
    const Vec3& x = f.geom.frame(l).x;
    v[l] = Vec3(std::exp(x.z()), x.x() * x.y(), std::sin(x.x()));
  }
  return forms::flat(f.geom, v);
}

}  // namespace

TEST_SUITE("excalc") {

TEST_CASE("gradient of the height function") {
  const support::Fixture f(RadialShape::sphere(), 302);
  const auto z = support::sample(*f.grid, [](const auto& n) { return n.unit.z(); });
  const auto g = grad(f.ctx, z);
  for (std::size_t l = 0; l < f.size(); ++l) {
    const Vec3& x = f.geom.frame(l).x;
    CHECK((g[l] - (Vec3::UnitZ() - x.z() * x)).norm() <= 1e-12);
    if ((x - Vec3::UnitX()).norm() < 1e-14) CHECK((g[l] - Vec3::UnitZ()).norm() <= 1e-12);
  }
}

TEST_CASE("d d = 0") {
  const support::Fixture f(RadialShape::sphere(), 302);
  const auto e = support::sample(*f.grid, [](const auto& n) { return std::exp(n.unit.z()); });
  const auto df = exterior_derivative(f.ctx, forms::from_expression(f.geom, e));
  const auto ddf = exterior_derivative(f.ctx, df);
  CHECK(support::l2(ddf.scalars(), *f.grid) <= 1e-8 * support::l2(df.vectors(), *f.grid));
  const auto d2 = exterior_derivative(f.ctx, ddf);
  CHECK(d2.degree() == 2);
  CHECK(support::max_abs(d2.scalars()) == 0.0);
}

TEST_CASE("star rotates sin(phi) dtheta into dphi") {
  const support::Fixture f(RadialShape::sphere(), 302);
  std::vector<Vec3> v(f.size());
  for (std::size_t l = 0; l < v.size(); ++l) {
    const auto& fr = f.geom.frame(l);
    v[l] = fr.s_t / std::sin(fr.angles.phi);
  }
  const auto star = hodge_star(f.ctx, forms::flat(f.geom, v));
  for (std::size_t l = 0; l < v.size(); ++l) {
    const auto& fr = f.geom.frame(l);
    CHECK((star.vectors()[l] - fr.s_p).norm() <= 1e-12);
  }
}

TEST_CASE("star star sign law, isometry and the cross-product form") {
  for (const auto& shape : {RadialShape::sphere(), RadialShape::dimple(0.4), RadialShape::fountain(0.4)}) {
    const support::Fixture f(shape, 302);
    const auto a = tangent_field(f);
    const auto ss = hodge_star(f.ctx, hodge_star(f.ctx, a));
    const auto cross = hodge_star_cross(f.ctx, a);
    const auto s = hodge_star(f.ctx, a);
    for (std::size_t l = 0; l < f.size(); ++l) {
      const Vec3& v = a.vectors()[l];
      CHECK((ss.vectors()[l] + v).norm() <= 1e-12 * v.norm());
      CHECK(std::abs(s.vectors()[l].norm() - v.norm()) <= 1e-10 * v.norm());
      CHECK((cross.vectors()[l] - s.vectors()[l]).norm() <= 1e-12 * v.norm());
      CHECK(std::abs(s.vectors()[l].dot(v)) <= 1e-12 * v.squaredNorm());
    }
    const auto e = support::sample(*f.grid, [](const auto& n) { return std::exp(n.unit.z()); });
    const auto ss0 = hodge_star(f.ctx, hodge_star(f.ctx, forms::from_expression(f.geom, e)));
    CHECK(ss0.degree() == 0);
    CHECK(support::max_abs_diff(ss0.scalars(), e) == 0.0);
  }
}

TEST_CASE("codifferential on the unit sphere") {
  const support::Fixture f(RadialShape::sphere(), 302);
  const auto y = support::harmonic(*f.grid, 1, 0);
  const auto dy = exterior_derivative(f.ctx, forms::from_expression(f.geom, y));
  const auto r = codifferential(f.ctx, dy);
  for (std::size_t l = 0; l < f.size(); ++l) CHECK(std::abs(r.scalars()[l] - 2.0 * y[l]) <= 1e-11);
  const auto zero = codifferential(f.ctx, FormField::zero(1, f.grid));
  CHECK(support::max_abs(zero.scalars()) == 0.0);
  CHECK_THROWS_AS(codifferential(f.ctx, forms::from_expression(f.geom, y)), DegreeError);
  const auto two = codifferential(f.ctx, FormField::zero(2, f.grid));
  CHECK(two.degree() == 1);
}

TEST_CASE("vector calculus identities") {
  const support::Fixture f(RadialShape::sphere(), 302);
  const auto y = support::harmonic(*f.grid, 1, 0);
  const auto g = grad(f.ctx, y);
  const auto dv = div(f.ctx, g);
  for (std::size_t l = 0; l < f.size(); ++l) CHECK(std::abs(dv[l] + 2.0 * y[l]) <= 1e-11);

  const auto p = random_band_limited(*f.grid, 7, 1);
  const auto c = curl(f.ctx, grad(f.ctx, p));
  CHECK(support::l2(c, *f.grid) <= 1e-8 * support::l2(grad(f.ctx, p), *f.grid));

  const auto lap = laplacian(f.ctx, support::harmonic(*f.grid, 3, -2));
  const auto y32 = support::harmonic(*f.grid, 3, -2);
  for (std::size_t l = 0; l < f.size(); ++l) CHECK(std::abs(lap[l] + 12.0 * y32[l]) <= 1e-10);
}

TEST_CASE("Hodge and Bochner Laplacians of an exact 1-form on the sphere") {
  const support::Fixture f(RadialShape::sphere(), 590);
  const auto y = support::harmonic(*f.grid, 2, 1);
  const auto dy = exterior_derivative(f.ctx, forms::from_expression(f.geom, y));
  const auto h = hodge_laplacian_1form(f.ctx, dy);
  const auto b = bochner_1form(f.ctx, dy);
  const double scale = support::l2(dy.vectors(), *f.grid);
  for (std::size_t l = 0; l < f.size(); ++l) {
    CHECK((h.vectors()[l] + 6.0 * dy.vectors()[l]).norm() <= 1e-9 * scale);
    CHECK(b.vectors()[l].norm() <= 1e-9 * scale);
  }
}

TEST_CASE("Stokes and divergence theorems on closed surfaces") {
  for (const auto& shape : {RadialShape::sphere(), RadialShape::dimple(0.2), RadialShape::fountain(0.1)}) {
    const support::Fixture f(shape, 590);
    const auto a = tangent_field(f);
    const double norm = support::l2(a.vectors(), *f.grid);
    const auto da = exterior_derivative(f.ctx, a);
    CHECK(std::abs(lebedev::surface_integral(da.scalars(), *f.grid, f.geom)) <= 1e-8 * norm);
    const auto dsa = exterior_derivative(f.ctx, hodge_star(f.ctx, a));
    CHECK(std::abs(lebedev::surface_integral(dsa.scalars(), *f.grid, f.geom)) <= 1e-8 * norm);
  }
}

TEST_CASE("sphere spectrum up to degree 8") {
  const support::Fixture f(RadialShape::sphere(), 590);
  for (int n = 0; n <= 8; ++n) {
    for (int m = -n; m <= n; ++m) {
      const auto y = support::harmonic(*f.grid, n, m);
      const auto r = codifferential(f.ctx, exterior_derivative(f.ctx, forms::from_expression(f.geom, y)));
      std::vector<double> expected(y);
      for (double& v : expected) v *= n * (n + 1.0);
      std::vector<double> diff(y.size());
      for (std::size_t l = 0; l < y.size(); ++l) diff[l] = r.scalars()[l] - expected[l];
      const double ref = n == 0 ? 1.0 : support::l2(expected, *f.grid);
      CHECK(support::l2(diff, *f.grid) <= 1e-9 * ref);
    }
  }
}

TEST_CASE("serial reference and OpenMP kernels agree") {
  const auto shape = RadialShape::fountain(0.3);
  const support::Fixture s(shape, 194, kernels::Backend::Serial);
  const support::Fixture p(shape, 194, kernels::Backend::OpenMP);
  const auto e = support::sample(*s.grid, [](const auto& n) { return std::exp(n.unit.z()) * n.unit.x(); });
  const auto ls = laplacian(s.ctx, e), lp = laplacian(p.ctx, e);
  CHECK(support::max_abs_diff(ls, lp) <= 1e-10 * support::max_abs(ls));
  for (std::size_t l = 0; l < s.size(); ++l) {
    CHECK(s.geom.frame(l).gauss_curvature == p.geom.frame(l).gauss_curvature);
  }
}

TEST_CASE("mismatched grids are rejected") {
  const support::Fixture f(RadialShape::sphere(), 110);
  const hyperinterp::Projector other(lebedev::make_grid(50));
  CHECK_THROWS_AS(OperatorContext(f.geom, other), GridMismatchError);
  CHECK_THROWS_AS(hodge_star(f.ctx, FormField::zero(0, lebedev::make_grid(50))), GridMismatchError);
}

}
