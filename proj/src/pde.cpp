#include "radialdec/pde.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "radialdec/error.hpp"
#include "radialdec/golden.hpp"

namespace radialdec::pde {

namespace {

int step_output(Step s, int k) {
  switch (s) {
    case Step::D:
      if (k > 1) throw DegreeError("d applied to a 2-form leaves the complex on a surface");
      return k + 1;
    case Step::Star: return 2 - k;
    case Step::Codifferential:
      if (k < 1) throw DegreeError("codifferential applied to a 0-form");
      return k - 1;
    case Step::Negate: return k;
  }
  return k;
}

}  // namespace

OperatorChain::OperatorChain(std::vector<Step> steps, int input_degree)
    : steps_(std::move(steps)), input_degree_(input_degree) {
  if (input_degree < 0 || input_degree > 2) throw DegreeError("form degree must be 0, 1 or 2");
  int k = input_degree;
  for (Step s : steps_) k = step_output(s, k);
  output_degree_ = k;
}

OperatorChain OperatorChain::laplace_beltrami() {
  return OperatorChain({Step::D, Step::Star, Step::D, Step::Star});
}

forms::FormField OperatorChain::apply(const excalc::OperatorContext& ctx,
                                      const forms::FormField& f) const {
  if (f.degree() != input_degree_) {
    throw DegreeError("operator chain expects a " + std::to_string(input_degree_) +
                      "-form, got a " + std::to_string(f.degree()) + "-form");
  }
  forms::FormField cur = f;
  for (Step s : steps_) {
    switch (s) {
      case Step::D: cur = excalc::exterior_derivative(ctx, cur); break;
      case Step::Star: cur = excalc::hodge_star(ctx, cur); break;
      case Step::Codifferential: cur = excalc::codifferential(ctx, cur); break;
      case Step::Negate: cur = excalc::scale(cur, -1.0); break;
    }
  }
  return cur;
}

GalerkinSystem assemble(const excalc::OperatorContext& ctx, const OperatorChain& chain,
                        kernels::Backend backend) {
  if (chain.input_degree() != 0 || chain.output_degree() != 0) {
    throw DegreeError("Galerkin assembly needs an operator from 0-forms to 0-forms");
  }
  const auto& proj = ctx.projector();
  const Eigen::MatrixXd& b = proj.basis_matrix(geometry::Chart::A);
  const auto nn = b.rows();
  const auto nb = b.cols();
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(proj.grid().weights().data(), nn);
  const Eigen::MatrixXd wb = (b.array().colwise() * w.array()).matrix();

  const excalc::OperatorContext inner(ctx.geometry(), proj, backend);
  GalerkinSystem sys;
  sys.max_degree = proj.max_degree();
  sys.stiffness.resize(nb, nb);
  sys.mass = wb.transpose() * b;
  kernels::for_each(backend, static_cast<std::size_t>(nb), [&](std::size_t j) {
    const auto col = static_cast<Eigen::Index>(j);
    std::vector<double> samples(b.col(col).data(), b.col(col).data() + nn);
    const auto out = chain.apply(inner, forms::from_expression(ctx.geometry(), samples));
    const Eigen::Map<const Eigen::VectorXd> r(out.scalars().data(), nn);
    sys.stiffness.col(col) = wb.transpose() * r;
  });
  return sys;
}

SolveResult solve(const GalerkinSystem& system, const excalc::OperatorContext& ctx,
                  std::span<const double> g) {
  const auto& proj = ctx.projector();
  const auto& grid = proj.grid();
  if (g.size() != static_cast<std::size_t>(grid.node_count())) {
    throw LengthMismatchError("source has " + std::to_string(g.size()) + " samples, grid has " +
                              std::to_string(grid.node_count()));
  }
  SolveResult res;
  std::vector<double> src(g.begin(), g.end());
  std::vector<double> ones(src.size(), 1.0), abs_g(src.size());
  for (std::size_t l = 0; l < src.size(); ++l) abs_g[l] = std::abs(src[l]);
  const double total = lebedev::surface_integral(src, grid, ctx.geometry());
  const double scale = lebedev::surface_integral(abs_g, grid, ctx.geometry());
  res.source_mean = scale > 0.0 ? total / scale : 0.0;
  if (std::abs(res.source_mean) > kCompatibilityTolerance) {
    res.incompatible_source = true;
    const double area = lebedev::surface_integral(ones, grid, ctx.geometry());
    for (double& v : src) v -= total / area;
  }

  const auto ghat = proj.project(src);
  const auto nb = static_cast<Eigen::Index>(ghat.size());
  if (system.stiffness.rows() != nb) throw GridMismatchError("system and projector disagree");
  Eigen::VectorXd rhs =
      -system.mass * Eigen::Map<const Eigen::VectorXd>(ghat.coeffs().data(), nb);
  Eigen::MatrixXd k = system.stiffness;
  if (system.pin_zero_mode) {
    k.row(0).setZero();
    k.col(0).setZero();
    k(0, 0) = 1.0;
    rhs(0) = 0.0;
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(k);
  const double rcond = lu.rcond();
  res.condition_estimate = rcond > 0.0 ? 1.0 / rcond : INFINITY;
  if (!(res.condition_estimate <= kMaxCondition)) {
    throw NearSingularError("pinned Galerkin matrix is numerically singular (condition estimate " +
                                std::to_string(res.condition_estimate) + ")",
                            res.condition_estimate);
  }
  const Eigen::VectorXd u = lu.solve(rhs);
  res.residual = (k * u - rhs).norm();
  res.u = sphharm::SpectralField(system.max_degree, {u.data(), u.data() + u.size()});
  if (system.pin_zero_mode) res.u[0] = 0.0;
  res.u_samples = proj.synthesize(res.u);
  return res;
}

double exp_poly(const Vec3& p) { return std::exp(p.y()) / std::pow(3.0 - p.z(), 4); }

std::vector<double> ambient_exp_poly_laplacian(const geometry::ManifoldGeometry& exact) {
  std::vector<double> out(exact.size());
  for (std::size_t l = 0; l < out.size(); ++l) {
    const auto& f = exact.frame(l);
    const double u = exp_poly(f.x);
    const double q = 1.0 / (3.0 - f.x.z());
    const Vec3 grad{0.0, u, 4.0 * u * q};
    Mat3 hess = Mat3::Zero();
    hess(1, 1) = u;
    hess(1, 2) = hess(2, 1) = 4.0 * u * q;
    hess(2, 2) = 20.0 * u * q * q;
    out[l] = hess.trace() - f.normal.dot(hess * f.normal) -
             f.weingarten.trace() * grad.dot(f.normal);
  }
  return out;
}

namespace {

bool parse_eig(std::string_view name, int& n, int& m) {
  if (!name.starts_with("eig-")) return false;
  name.remove_prefix(4);
  const auto dash = name.find('-', 1);
  if (dash == std::string_view::npos) return false;
  const auto a = name.substr(0, dash), b = name.substr(dash + 1);
  return std::from_chars(a.data(), a.data() + a.size(), n).ec == std::errc{} &&
         std::from_chars(b.data(), b.data() + b.size(), m).ec == std::errc{};
}

}  // namespace

ManufacturedCase manufactured_case(const geometry::RadialShape& shape, std::string_view name,
                                   const lebedev::LebedevGrid& grid,
                                   const std::filesystem::path& golden_dir) {
  using geometry::Preset;
  const auto nn = static_cast<std::size_t>(grid.node_count());
  ManufacturedCase c;
  c.name = std::string(name);
  int n = 0, m = 0;
  if (parse_eig(name, n, m)) {
    if (shape.kind() != Preset::Sphere || shape.amplitude() != 1.0) {
      throw ConfigError("case " + c.name + " is only defined on the unit sphere");
    }
    const int slot = sphharm::index_map(n, m) - 1;
    c.u.resize(nn);
    c.g.resize(nn);
    for (std::size_t l = 0; l < nn; ++l) {
      const auto& nd = grid.node(l);
      c.u[l] = sphharm::eval_basis(n, nd.theta, nd.phi)[static_cast<std::size_t>(slot)];
      c.g[l] = n * (n + 1.0) * c.u[l];
    }
    return c;
  }
  if (name != "exp-poly") {
    throw ConfigError("unknown manufactured case '" + c.name + "' (expected exp-poly or eig-n-m)");
  }
  c.u.resize(nn);
  for (std::size_t l = 0; l < nn; ++l) {
    c.u[l] = exp_poly(shape.value(grid.node(l).unit) * grid.node(l).unit);
  }
  if (shape.kind() == Preset::Sphere) {
    auto gp = std::make_shared<const lebedev::LebedevGrid>(grid);
    const auto exact = geometry::from_frames(shape, gp, [&] {
      std::vector<geometry::NodeFrame> frames(nn);
      for (std::size_t l = 0; l < nn; ++l) {
        const Vec3& u = grid.node(l).unit;
        const auto ch = geometry::chart_select(u);
        const auto a = geometry::chart_angles(u, ch);
        geometry::RadialDerivatives r;
        r.r = shape.amplitude();
        frames[l] = geometry::make_frame(ch, a, r);
      }
      return frames;
    }());
    const auto lap = ambient_exp_poly_laplacian(exact);
    c.g.resize(nn);
    for (std::size_t l = 0; l < nn; ++l) c.g[l] = -lap[l];
    return c;
  }
  const auto gc = golden::load(golden_dir, name, geometry::to_string(shape.kind()),
                               shape.amplitude(), shape.degree(), grid.node_count());
  for (std::size_t l = 0; l < nn; ++l) {
    if (std::abs(gc.u[l] - c.u[l]) > 1e-12 * std::max(1.0, std::abs(c.u[l]))) {
      throw GoldenDataError("golden file " + gc.path.string() + " disagrees with u at node " +
                            std::to_string(l) + "; it was generated on a different grid");
    }
  }
  c.provenance = Provenance::GoldenFile;
  c.g = gc.g;
  return c;
}

double relative_error(std::span<const double> approx, std::span<const double> exact,
                      const lebedev::LebedevGrid& grid) {
  if (approx.size() != exact.size()) throw LengthMismatchError("relative error length mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t l = 0; l < approx.size(); ++l) {
    const double d = approx[l] - exact[l];
    num += grid.weight(l) * d * d;
    den += grid.weight(l) * exact[l] * exact[l];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

std::vector<double> remove_mean_mode(std::span<const double> u, const lebedev::LebedevGrid& grid) {
  double mean = 0.0;
  for (std::size_t l = 0; l < u.size(); ++l) mean += grid.weight(l) * u[l];
  mean /= 4.0 * std::numbers::pi;
  std::vector<double> out(u.begin(), u.end());
  for (double& v : out) v -= mean;
  return out;
}

}  // namespace radialdec::pde
