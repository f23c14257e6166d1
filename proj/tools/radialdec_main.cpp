// radialdec command-line driver.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radialdec/error.hpp"
#include "radialdec/experiments.hpp"
#include "radialdec/geometry.hpp"
#include "radialdec/golden.hpp"
#include "radialdec/hyperinterp.hpp"
#include "radialdec/io.hpp"
#include "radialdec/lebedev.hpp"

namespace fs = std::filesystem;
using namespace radialdec;

namespace {

enum Exit { kOk = 0, kConfig = 2, kGolden = 3, kNumerical = 4 };

struct Options {
  std::string manifold = "dimple";
  std::optional<double> r0;
  std::string nodes;
  std::string out = ".";
  std::string golden;
  std::string format = "csv";
  std::string input;
  bool serial = false;
};

std::vector<int> parse_nodes(const std::string& text, std::vector<int> fallback) {
  if (text.empty()) return fallback;
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      lebedev::precision_for(n);
      out.push_back(n);
    } catch (const std::logic_error&) {
      throw ConfigError("bad node count '" + item + "' in --nodes");
    }
  }
  if (out.empty()) throw ConfigError("--nodes is empty");
  return out;
}

std::string r0_tag(double r0) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "r0-%.2f", r0);
  return buf;
}

fs::path out_dir(const Options& o) {
  fs::path p(o.out);
  fs::create_directories(p);
  return p;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p);
  if (!f) throw ConfigError("cannot write " + p.string());
  return f;
}

experiments::StudyConfig study_config(const Options& o) {
  experiments::StudyConfig c;
  c.preset = geometry::parse_preset(o.manifold);
  if (o.r0) {
    if (*o.r0 < 0.0 || *o.r0 > 0.4) throw ConfigError("--r0 must lie in [0, 0.4]");
    c.r0 = {*o.r0};
  }
  c.nodes = parse_nodes(o.nodes, experiments::kStudyNodes);
  c.golden_dir = o.golden.empty() ? golden::default_directory() : fs::path(o.golden);
  c.backend = o.serial ? kernels::Backend::Serial : kernels::Backend::OpenMP;
  if (o.format != "csv" && o.format != "csv+svg") {
    throw ConfigError("--format must be csv or csv+svg");
  }
  return c;
}

void emit(const Options& o, const std::vector<experiments::Row>& rows, const std::string& field,
          const std::string& stem, const std::string& title) {
  const auto sel = experiments::select(rows, field);
  for (const auto& r : sel) {
    if (!std::isfinite(r.rel_error) || r.rel_error < 0.0) {
      throw Error("non-finite relative error for " + field + " at " + std::to_string(r.nodes) +
                  " nodes");
    }
  }
  const fs::path dir = out_dir(o);
  {
    auto f = open_out(dir / (stem + ".csv"));
    experiments::write_csv(f, sel);
  }
  if (o.format == "csv+svg") {
    auto f = open_out(dir / (stem + ".svg"));
    experiments::write_svg(f, sel, title);
  }
  experiments::write_csv(std::cout, sel);
}

int cmd_grid(const Options& o) {
  const auto nodes = parse_nodes(o.nodes, {302});
  const fs::path dir = out_dir(o);
  for (int n : nodes) {
    const auto g = lebedev::grid(n);
    const fs::path p = dir / ("lebedev_" + std::to_string(n) + ".csv");
    auto f = open_out(p);
    lebedev::write_csv(f, g);
    std::cout << p.string() << " (" << n << " nodes, precision " << g.precision() << ")\n";
  }
  return kOk;
}

int cmd_project(const Options& o) {
  const auto nodes = parse_nodes(o.nodes, {302});
  if (nodes.size() != 1) throw ConfigError("project takes a single --nodes value");
  const auto grid = lebedev::make_grid(nodes[0]);
  const hyperinterp::Projector proj(grid);
  std::vector<double> samples;
  std::string what;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw ConfigError("cannot read " + o.input);
    samples = io::read_samples_csv(in);
    what = fs::path(o.input).stem().string();
  } else {
    const auto shape = geometry::RadialShape::preset(geometry::parse_preset(o.manifold),
                                                     o.r0.value_or(0.4));
    for (const auto& nd : grid->nodes()) samples.push_back(shape.value(nd.unit));
    what = "radius_" + o.manifold + "_" + r0_tag(shape.amplitude());
  }
  const auto field = proj.project(samples);
  const fs::path p = out_dir(o) / (what + "_n" + std::to_string(nodes[0]) + "_spectrum.csv");
  auto f = open_out(p);
  io::write_spectral_csv(f, field);
  std::cout << p.string() << " (N = " << field.max_degree() << ")\n";
  return kOk;
}

int cmd_report_geometry(const Options& o) {
  const auto nodes = parse_nodes(o.nodes, {302});
  const auto preset = geometry::parse_preset(o.manifold);
  const double r0 = o.r0.value_or(0.4);
  if (r0 < 0.0 || r0 > 0.4) throw ConfigError("--r0 must lie in [0, 0.4]");
  const auto shape = geometry::RadialShape::preset(preset, r0);
  const fs::path dir = out_dir(o);
  for (int n : nodes) {
    const auto grid = lebedev::make_grid(n);
    const hyperinterp::Projector proj(grid);
    const auto geom = geometry::build(shape, proj);
    const fs::path p =
        dir / ("geometry_" + o.manifold + "_" + r0_tag(r0) + "_n" + std::to_string(n) + ".csv");
    auto f = open_out(p);
    f << "node,chart,x,y,z,sqrt_g,K\n";
    std::vector<double> ones(geom.size(), 1.0), k(geom.size());
    char buf[256];
    for (std::size_t l = 0; l < geom.size(); ++l) {
      const auto& fr = geom.frame(l);
      k[l] = fr.gauss_curvature;
      std::snprintf(buf, sizeof buf, "%zu,%s,%.17g,%.17g,%.17g,%.17g,%.17g\n", l,
                    std::string(geometry::to_string(fr.chart)).c_str(), fr.x.x(), fr.x.y(),
                    fr.x.z(), fr.sqrt_g, fr.gauss_curvature);
      f << buf;
    }
    const double area = lebedev::surface_integral(ones, *grid, geom);
    const double total_k = lebedev::surface_integral(k, *grid, geom);
    std::snprintf(buf, sizeof buf, "%s %s nodes=%d N=%d area=%.15g int_K=%.15g int_K-4pi=%.3e\n",
                  o.manifold.c_str(), r0_tag(r0).c_str(), n, proj.max_degree(), area, total_k,
                  total_k - 4.0 * std::numbers::pi);
    std::cout << buf;
    f.close();
    auto s = open_out(dir / ("geometry_" + o.manifold + "_" + r0_tag(r0) + "_n" +
                             std::to_string(n) + "_summary.txt"));
    s << buf
      << "orientation: n = -(s_theta x s_phi)/|s_theta x s_phi| is outward in both charts; "
         "chart B is chart A rotated by (a,b,c) -> (c,b,-a)\n";
  }
  return kOk;
}

int cmd_conv_star(const Options& o) {
  const auto c = study_config(o);
  const auto rows = experiments::conv_star(c);
  emit(o, rows, "star0", "conv_star_k0_" + o.manifold, "star of f = exp(z)/(3-y), " + o.manifold);
  emit(o, rows, "star1", "conv_star_k1_" + o.manifold, "star of a 1-form, " + o.manifold);
  return kOk;
}

int cmd_conv_d(const Options& o) {
  const auto c = study_config(o);
  const auto rows = experiments::conv_d(c);
  emit(o, rows, "d0", "conv_d_k0_" + o.manifold, "d of f = exp(z), " + o.manifold);
  emit(o, rows, "d1", "conv_d_k1_" + o.manifold, "d of a 1-form, " + o.manifold);
  return kOk;
}

int cmd_solve_lb(const Options& o) {
  const auto c = study_config(o);
  if (c.preset == geometry::Preset::Sphere) {
    throw ConfigError("solve-lb runs on the dimple and fountain manifolds");
  }
  std::vector<experiments::NodeDump> dumps;
  const auto rows = experiments::solve_lb(c, &dumps);
  emit(o, rows, "lb", "solve_lb_" + o.manifold,
       "Laplace-Beltrami, u = exp(y)/(3-z)^4, " + o.manifold);
  const fs::path dir = out_dir(o);
  for (const auto& d : dumps) {
    auto f = open_out(dir / ("solve_lb_" + o.manifold + "_" + r0_tag(d.r0) + "_n" +
                             std::to_string(d.nodes) + "_nodes.csv"));
    experiments::write_dump_csv(f, d);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exterior calculus on radial manifolds"};
  app.require_subcommand(1);
  Options o;
  const auto common = [&](CLI::App* s, bool study) {
    s->add_option("--nodes", o.nodes, "comma-separated Lebedev node counts");
    s->add_option("--out", o.out, "output directory");
    if (study) {
      s->add_option("--manifold", o.manifold, "sphere, dimple or fountain")
          ->check(CLI::IsMember({"sphere", "dimple", "fountain"}));
      s->add_option("--r0", o.r0, "deformation amplitude in [0, 0.4]");
      s->add_option("--golden", o.golden, "golden data directory");
      s->add_option("--format", o.format, "csv or csv+svg")
          ->check(CLI::IsMember({"csv", "csv+svg"}));
      s->add_flag("--serial", o.serial, "use the serial reference kernels");
    }
  };
  auto* grid = app.add_subcommand("grid", "dump Lebedev grids as CSV");
  common(grid, false);
  auto* project = app.add_subcommand("project", "project node samples to a spectral CSV");
  common(project, true);
  project->add_option("--input", o.input, "node samples (one value per line or node,value)");
  auto* report = app.add_subcommand("report-geometry", "per-node geometry and summary");
  common(report, true);
  auto* star = app.add_subcommand("conv-star", "Hodge star convergence study");
  common(star, true);
  auto* d = app.add_subcommand("conv-d", "exterior derivative convergence study");
  common(d, true);
  auto* lb = app.add_subcommand("solve-lb", "manufactured Laplace-Beltrami convergence study");
  common(lb, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*grid) return cmd_grid(o);
    if (*project) return cmd_project(o);
    if (*report) return cmd_report_geometry(o);
    if (*star) return cmd_conv_star(o);
    if (*d) return cmd_conv_d(o);
    if (*lb) return cmd_solve_lb(o);
  } catch (const GoldenDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGolden;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const UnsupportedGridError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kConfig;
}
