#include "radialdec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>

#include "radialdec/closed_form.hpp"
#include "radialdec/excalc.hpp"
#include "radialdec/pde.hpp"

namespace radialdec::experiments {

namespace {

using geometry::ManifoldGeometry;

struct Setup {
  lebedev::GridPtr grid;
  hyperinterp::Projector projector;
  geometry::RadialShape shape;
  ManifoldGeometry spectral;
  ManifoldGeometry exact;

  Setup(geometry::Preset preset, double r0, int nodes, kernels::Backend backend)
      : grid(lebedev::make_grid(nodes)),
        projector(grid, backend),
        shape(geometry::RadialShape::preset(preset, r0)),
        spectral(geometry::build(shape, projector, backend)),
        exact(geometry::exact::geometry(shape, grid, backend)) {}
};

struct Job {
  double r0;
  int nodes;
};

std::vector<Job> jobs_for(const StudyConfig& c) {
  std::vector<Job> jobs;
  const std::vector<double> amplitudes =
      c.preset == geometry::Preset::Sphere ? std::vector<double>{0.0} : c.r0;
  for (double r0 : amplitudes) {
    for (int n : c.nodes) jobs.push_back({r0, n});
  }
  return jobs;
}

// Runs fn for every job and returns the per-job rows in job order.
template <class Fn>
std::vector<Row> sweep(const StudyConfig& c, const std::vector<std::string>& fields, Fn&& fn) {
  const auto jobs = jobs_for(c);
  std::vector<std::vector<double>> errors(jobs.size());
  std::vector<int> degrees(jobs.size());
  kernels::for_each(c.backend, jobs.size(), [&](std::size_t i) {
    Setup s(c.preset, jobs[i].r0, jobs[i].nodes, c.backend);
    degrees[i] = s.projector.max_degree();
    errors[i] = fn(s, i);
  });
  std::vector<Row> rows;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      rows.push_back({fields[f], jobs[i].nodes, degrees[i], jobs[i].r0, errors[i][f]});
    }
  }
  return rows;
}

double vector_relative_error(std::span<const Vec3> a, std::span<const Vec3> b,
                             const lebedev::LebedevGrid& g) {
  double num = 0.0, den = 0.0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    num += g.weight(l) * (a[l] - b[l]).squaredNorm();
    den += g.weight(l) * b[l].squaredNorm();
  }
  return std::sqrt(num / den);
}

}  // namespace

std::vector<Row> conv_star(const StudyConfig& config) {
  return sweep(config, {"star0", "star1"}, [&](const Setup& s, std::size_t) {
    const excalc::OperatorContext ctx(s.spectral, s.projector, config.backend);
    const auto& g = *s.grid;
    const std::size_t n = s.spectral.size();

    std::vector<double> f(n), exact_w(n);
    std::vector<Vec2> coeffs(n);
    std::vector<geometry::Chart> charts(n);
    std::vector<Vec3> exact_star(n);
    for (std::size_t l = 0; l < n; ++l) {
      const auto& fr = s.exact.frame(l);
      f[l] = std::exp(fr.x.z()) / (3.0 - fr.x.y());
      exact_w[l] = f[l] * fr.sqrt_g;
      const double c = fr.sqrt_g * std::exp(fr.x.z());
      coeffs[l] = {c, c};
      charts[l] = fr.chart;
      const Vec2 up = geometry::solve2(fr.metric, coeffs[l]);
      const Vec2 star_cov{-fr.sqrt_g * up(1), fr.sqrt_g * up(0)};
      exact_star[l] = fr.frame * geometry::solve2(fr.metric, star_cov);
    }
    const auto star_f = excalc::hodge_star(ctx, forms::from_expression(s.spectral, f));
    const auto w = forms::area_coefficients(s.spectral, star_f);
    const auto alpha = forms::from_expression(s.spectral, coeffs, charts);
    const auto star_alpha = excalc::hodge_star(ctx, alpha);
    return std::vector<double>{pde::relative_error(w, exact_w, g),
                               vector_relative_error(star_alpha.vectors(), exact_star, g)};
  });
}

std::vector<Row> conv_d(const StudyConfig& config) {
  return sweep(config, {"d0", "d1"}, [&](const Setup& s, std::size_t) {
    const excalc::OperatorContext ctx(s.spectral, s.projector, config.backend);
    const auto& g = *s.grid;
    const std::size_t n = s.spectral.size();

    std::vector<double> f(n), exact_dual(n);
    std::vector<Vec3> exact_grad(n), beta(n);
    for (std::size_t l = 0; l < n; ++l) {
      const auto& fr = s.exact.frame(l);
      const Vec3& x = fr.x;
      const double ez = std::exp(x.z());
      f[l] = ez;
      exact_grad[l] = geometry::tangent_projection(fr, Vec3{0.0, 0.0, ez});
      beta[l] = ez * Vec3{-x.y(), x.x(), -1.0};
      exact_dual[l] = (ez * Vec3{-x.x(), -x.y(), 2.0}).dot(fr.chart_normal);
    }
    const auto df = excalc::exterior_derivative(ctx, forms::from_expression(s.spectral, f));
    const auto dalpha = excalc::exterior_derivative(ctx, forms::flat(s.spectral, beta));
    return std::vector<double>{vector_relative_error(df.vectors(), exact_grad, g),
                               pde::relative_error(dalpha.scalars(), exact_dual, g)};
  });
}

std::vector<Row> solve_lb(const StudyConfig& config, std::vector<NodeDump>* dumps) {
  const auto jobs = jobs_for(config);
  std::vector<NodeDump> all(jobs.size());
  auto rows = sweep(config, {"lb"}, [&](const Setup& s, std::size_t i) {
    const excalc::OperatorContext ctx(s.spectral, s.projector, config.backend);
    const auto mc = pde::manufactured_case(s.shape, "exp-poly", *s.grid, config.golden_dir);
    const auto sys = pde::assemble(ctx, pde::OperatorChain::laplace_beltrami(), config.backend);
    const auto res = pde::solve(sys, ctx, mc.g);
    const auto exact = pde::remove_mean_mode(mc.u, *s.grid);
    all[i] = {jobs[i].r0, jobs[i].nodes, res.u_samples, exact};
    return std::vector<double>{pde::relative_error(res.u_samples, exact, *s.grid)};
  });
  if (dumps) {
    std::map<double, std::size_t> finest;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      auto it = finest.find(jobs[i].r0);
      if (it == finest.end() || jobs[it->second].nodes < jobs[i].nodes) finest[jobs[i].r0] = i;
    }
    dumps->clear();
    for (const auto& [r0, i] : finest) dumps->push_back(std::move(all[i]));
  }
  return rows;
}

std::vector<Row> select(std::span<const Row> rows, std::string_view field) {
  std::vector<Row> out;
  for (const Row& r : rows) {
    if (r.field == field) out.push_back(r);
  }
  return out;
}

void write_csv(std::ostream& os, std::span<const Row> rows) {
  os << "nodes,N,r0,rel_error\n";
  char buf[128];
  for (const Row& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.2f,%.17g\n", r.nodes, r.max_degree, r.r0, r.rel_error);
    os << buf;
  }
}

void write_svg(std::ostream& os, std::span<const Row> rows, std::string_view title) {
  constexpr double W = 640, H = 420, left = 70, right = 110, top = 40, bottom = 50;
  std::map<double, std::vector<const Row*>> curves;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Row& r : rows) {
    curves[r.r0].push_back(&r);
    xmin = std::min(xmin, double(r.nodes));
    xmax = std::max(xmax, double(r.nodes));
    const double y = std::log10(std::max(r.rel_error, 1e-17));
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (rows.empty()) xmin = ymin = 0, xmax = ymax = 1;
  ymin = std::floor(ymin);
  ymax = std::ceil(ymax);
  if (ymax <= ymin) ymax = ymin + 1;
  if (xmax <= xmin) xmax = xmin + 1;
  const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (W - left - right); };
  const auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * (H - top - bottom); };

  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                 "#8c564b", "#e377c2", "#7f7f7f"};
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
                "font-family=\"sans-serif\" font-size=\"12\">\n",
                W, H);
  os << buf;
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\">" << title << "</text>\n";
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" "
                "stroke=\"black\"/>\n",
                left, top, W - left - right, H - top - bottom);
  os << buf;
  for (int e = int(ymin); e <= int(ymax); ++e) {
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" text-anchor=\"end\">1e%d</text>\n", left - 6,
                  py(e) + 4, e);
    os << buf;
  }
  for (const auto& [r0, pts] : curves) {
    for (const Row* r : pts) {
      std::snprintf(buf, sizeof buf, "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">%d</text>\n",
                    px(r->nodes), H - bottom + 16, r->nodes);
      os << buf;
    }
    break;
  }
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">nodes</text>\n",
                (left + W - right) / 2, H - 12);
  os << buf;
  std::size_t c = 0;
  for (const auto& [r0, pts] : curves) {
    const char* color = colors[c % 8];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const Row* r : pts) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(r->nodes),
                    py(std::log10(std::max(r->rel_error, 1e-17))));
      os << buf;
    }
    os << "\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" fill=\"%s\">r0 = %.2f</text>\n", W - right + 10,
                  top + 16 + 16.0 * double(c), color, r0);
    os << buf;
    ++c;
  }
  os << "</svg>\n";
}

void write_dump_csv(std::ostream& os, const NodeDump& dump) {
  os << "node,u,u_exact,error\n";
  char buf[128];
  for (std::size_t l = 0; l < dump.u.size(); ++l) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", l, dump.u[l], dump.u_exact[l],
                  dump.u[l] - dump.u_exact[l]);
    os << buf;
  }
}

}  // namespace radialdec::experiments
