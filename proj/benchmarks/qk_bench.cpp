#include <benchmark/benchmark.h>

#include "qk/linearization.hpp"
#include "qk/random.hpp"
#include "qk/solutions.hpp"
#include "qk/spectra.hpp"

using namespace qk;

namespace {

Flow make_flow(int n, int d, int K) {
  Rng rng(1234);
  return Flow{circulant({n, random_bands(K, rng)}), CouplingSeries::identity(),
              ForcingVector::zero(n, d, GroupTag::SOd), std::nullopt};
}

void BM_CouplingDrift(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = 4;
  Rng rng(7);
  const Flow flow = make_flow(n, d, 2);
  const Configuration X = random_so_configuration(n, d, 1.0, rng);
  for (auto _ : state) {
    auto F = coupling_drift(X, flow.graph, flow.f);
    benchmark::DoNotOptimize(F);
  }
}
BENCHMARK(BM_CouplingDrift)->Arg(16)->Arg(64)->Arg(256);

void BM_IntegratorStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = 3;
  Rng rng(7);
  const Flow flow = make_flow(n, d, 1);
  const Configuration X = random_so_configuration(n, d, 0.5, rng);
  IntegrateOptions opts;
  opts.store_every = 1 << 30;
  for (auto _ : state) {
    auto traj = integrate(X, flow, opts.step, opts);  // a single step
    benchmark::DoNotOptimize(traj);
  }
}
BENCHMARK(BM_IntegratorStep)->Arg(16)->Arg(64);

void BM_JacobianBuild(benchmark::State& state) {
  const int n = 12, d = static_cast<int>(state.range(0));
  const Flow flow = make_flow(n, d, 2);
  const Configuration Y = twist_configuration({n, d, std::vector<int>(d / 2, 0)});
  const SoBasis basis = so_basis(d);
  for (auto _ : state) {
    auto J = jacobian_matrix(Y, flow.graph, flow.f, basis);
    benchmark::DoNotOptimize(J);
  }
}
BENCHMARK(BM_JacobianBuild)->Arg(3)->Arg(5);

void BM_FdOracle(benchmark::State& state) {
  const int n = 8, d = 3;
  const Flow flow = make_flow(n, d, 1);
  TwistSpec spec{n, d, {1}};
  const Configuration Y = twist_configuration(spec);
  for (auto _ : state) {
    auto J = fd_jacobian_oracle(Y, flow, 1e-5);
    benchmark::DoNotOptimize(J);
  }
}
BENCHMARK(BM_FdOracle);

void BM_SingleTwistEigs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(9);
  const auto bands = random_bands(n / 8, rng);
  for (auto _ : state) {
    auto sp = single_twist_eigs(bands, n, 4, 1);
    benchmark::DoNotOptimize(sp);
  }
}
BENCHMARK(BM_SingleTwistEigs)->Arg(64)->Arg(400);

void BM_SupportsOneTwist(benchmark::State& state) {
  const int n = 400;
  const auto bands = alpha_graph_bands(0.34, n);
  for (auto _ : state) {
    auto s = supports_one_twist(bands, n, 3);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SupportsOneTwist);

}  // namespace

BENCHMARK_MAIN();
