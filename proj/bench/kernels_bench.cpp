#include <benchmark/benchmark.h>

#include <cmath>

#include "radialdec/excalc.hpp"
#include "radialdec/pde.hpp"

using namespace radialdec;
using kernels::Backend;

namespace {

Backend backend_of(const benchmark::State& s) {
  return s.range(1) == 0 ? Backend::Serial : Backend::OpenMP;
}

void label(benchmark::State& s) {
  s.SetLabel(std::string(kernels::to_string(backend_of(s))) + " threads=" +
             std::to_string(kernels::thread_count()));
}

void BM_NodalDerivatives(benchmark::State& s) {
  const auto grid = lebedev::make_grid(static_cast<int>(s.range(0)));
  const hyperinterp::Projector proj(grid, backend_of(s));
  std::vector<double> f(grid->nodes().size());
  for (std::size_t l = 0; l < f.size(); ++l) f[l] = std::exp(grid->node(l).unit.z());
  for (auto _ : s) {
    auto d = s.range(1) == 0 ? proj.nodal_derivatives_reference(f) : proj.nodal_derivatives(f);
    benchmark::DoNotOptimize(d.d_theta.data());
  }
  label(s);
}

void BM_GeometryBuild(benchmark::State& s) {
  const auto grid = lebedev::make_grid(static_cast<int>(s.range(0)));
  const hyperinterp::Projector proj(grid);
  const auto shape = geometry::RadialShape::fountain(0.4);
  for (auto _ : s) {
    auto g = geometry::build(shape, proj, backend_of(s));
    benchmark::DoNotOptimize(g.frame(0).sqrt_g);
  }
  label(s);
}

void BM_Assemble(benchmark::State& s) {
  const auto grid = lebedev::make_grid(static_cast<int>(s.range(0)));
  const hyperinterp::Projector proj(grid);
  const auto geom = geometry::build(geometry::RadialShape::dimple(0.4), proj);
  const excalc::OperatorContext ctx(geom, proj);
  for (auto _ : s) {
    auto sys = pde::assemble(ctx, pde::OperatorChain::laplace_beltrami(), backend_of(s));
    benchmark::DoNotOptimize(sys.stiffness.data());
  }
  label(s);
}

}  // namespace

BENCHMARK(BM_NodalDerivatives)->ArgsProduct({{110, 302, 590}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GeometryBuild)->ArgsProduct({{302, 590}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Assemble)->ArgsProduct({{110, 302}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
