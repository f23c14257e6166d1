#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "radialdec/error.hpp"
#include "radialdec/forms.hpp"
#include "support.hpp"

using namespace radialdec;
using forms::FormField;

TEST_SUITE("forms") {

TEST_CASE("flat and sharp are inverse on stored data") {
  const support::Fixture f(geometry::RadialShape::dimple(0.4), 110);
  std::vector<Vec3> v(f.size());
  for (std::size_t l = 0; l < v.size(); ++l) {
    v[l] = 0.3 * f.geom.frame(l).s_t - 1.2 * f.geom.frame(l).s_p;
  }
  forms::FlatDiagnostics diag;
  const FormField a = forms::flat(f.geom, v, &diag);
  CHECK(diag.projected_nodes == 0);
  const auto back = forms::sharp(a);
  for (std::size_t l = 0; l < v.size(); ++l) CHECK((back[l] - v[l]).norm() <= 1e-14 * v[l].norm());
  const FormField again = forms::flat(f.geom, back);
  for (std::size_t l = 0; l < v.size(); ++l) CHECK((again.vectors()[l] - a.vectors()[l]).norm() <= 1e-14 * a.vectors()[l].norm());
}

TEST_CASE("normal parts are projected and counted") {
  const support::Fixture f(geometry::RadialShape::sphere(), 50);
  std::vector<Vec3> v(f.size());
  for (std::size_t l = 0; l < v.size(); ++l) v[l] = f.geom.frame(l).normal + f.geom.frame(l).s_p;
  forms::FlatDiagnostics diag;
  const auto a = forms::flat(f.geom, v, &diag);
  CHECK(diag.projected_nodes == f.size());
  CHECK(diag.max_normal_fraction == doctest::Approx(std::sqrt(0.5)));
  for (std::size_t l = 0; l < v.size(); ++l) {
    CHECK(std::abs(a.vectors()[l].dot(f.geom.frame(l).normal)) <= 1e-14);
  }
}

TEST_CASE("covariant components") {
  const auto fr = geometry::exact::frame_at(geometry::RadialShape::sphere(), Vec3::UnitY(),
                                            geometry::Chart::A);
  const Vec2 c = forms::chart_covariant_components(fr, fr.s_t);
  CHECK(c(0) == doctest::Approx(1.0));
  CHECK(std::abs(c(1)) <= 1e-15);

  const support::Fixture f(geometry::RadialShape::fountain(0.4), 194);
  std::mt19937 rng(4);
  std::normal_distribution<double> d;
  for (const auto& fr2 : f.geom.frames()) {
    const Vec3 v = geometry::tangent_projection(fr2, Vec3(d(rng), d(rng), d(rng)));
    const Vec2 a = forms::chart_covariant_components(fr2, v);
    const Vec2 b{fr2.s_t.dot(v), fr2.s_p.dot(v)};
    CHECK((a - b).norm() <= 1e-12 * (1 + b.norm()));
  }
}

TEST_CASE("forms from chart expressions") {
  const support::Fixture f(geometry::RadialShape::dimple(0.4), 302);
  const std::size_t n = f.size();
  std::vector<geometry::Chart> charts(n);
  for (std::size_t l = 0; l < n; ++l) charts[l] = f.geom.frame(l).chart;

  const auto zero = forms::from_expression(f.geom, std::vector<Vec2>(n, Vec2::Zero()), charts);
  for (const auto& v : zero.vectors()) CHECK(v.norm() == 0.0);

  std::vector<Vec2> coeffs(n, Vec2(1.0, -2.0));
  const auto a = forms::from_expression(f.geom, coeffs, charts);
  for (std::size_t l = 0; l < n; ++l) {
    const Vec2 cov = forms::chart_covariant_components(f.geom.frame(l), a.vectors()[l]);
    CHECK((cov - coeffs[l]).norm() <= 1e-12);
    // chart component round trip
    const Vec2 up = geometry::invert_frame(f.geom.frame(l), a.vectors()[l]);
    CHECK((f.geom.frame(l).frame * up - a.vectors()[l]).norm() <= 1e-12 * a.vectors()[l].norm());
  }

  // Coefficients in the wrong chart at a polar node are refused.
  std::size_t pole = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (f.grid->node(l).unit.z() > 0.999) pole = l;
  }
  charts[pole] = geometry::Chart::A;
  CHECK_THROWS_AS(forms::from_expression(f.geom, coeffs, charts), ChartValidityError);
}

TEST_CASE("2-form chart coefficients") {
  const support::Fixture f(geometry::RadialShape::fountain(0.2), 110);
  std::vector<double> w(f.size());
  for (std::size_t l = 0; l < w.size(); ++l) w[l] = 0.1 * double(l) - 3.0;
  const auto omega = forms::from_area_coefficients(f.geom, w);
  CHECK(omega.degree() == 2);
  CHECK(support::max_abs_diff(forms::area_coefficients(f.geom, omega), w) <= 1e-13);
  CHECK_THROWS_AS(forms::area_coefficients(f.geom, forms::from_expression(f.geom, w)), DegreeError);
}

TEST_CASE("storage is typed by degree") {
  const auto g = lebedev::make_grid(14);
  const auto z1 = FormField::zero(1, g);
  CHECK_THROWS_AS(z1.scalars(), DegreeError);
  CHECK_THROWS_AS(FormField::zero(0, g).vectors(), DegreeError);
  CHECK_THROWS_AS(FormField::scalar(1, g, std::vector<double>(14)), DegreeError);
  CHECK_THROWS_AS(FormField::scalar(0, g, std::vector<double>(13)), LengthMismatchError);
}

TEST_CASE("CSV dumps") {
  const auto g = lebedev::make_grid(6);
  std::ostringstream a, b;
  forms::write_csv(a, FormField::zero(0, g));
  forms::write_csv(b, FormField::zero(1, g));
  CHECK(a.str().rfind("node,value\n0,0\n", 0) == 0);
  CHECK(b.str().rfind("node,vx,vy,vz\n0,0,0,0\n", 0) == 0);
}

}
