// Microbenchmarks for the exact kernels: transport, curvature, BFS build,
// pair packing, covering radius, and the local triple profile.

#include <benchmark/benchmark.h>

#include "cosetcurv/curvature.hpp"
#include "cosetcurv/graph.hpp"
#include "cosetcurv/local.hpp"
#include "cosetcurv/transport.hpp"
#include "cosetcurv/zoo.hpp"

namespace {

using namespace cosetcurv;

void BM_w1_hypercube(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CosetGraph g(identity_code(n));
    LocalMeasure mu = local_measure(g, 0);
    LocalMeasure nu = local_measure(g, g.target(0));
    auto dist = [&g](std::uint64_t a, std::uint64_t b) { return g.distance(a, b); };
    for (auto _ : state) {
        Rat v = w1(mu, nu, dist);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_w1_hypercube)->Arg(4)->Arg(8)->Arg(12);

void BM_curvature_direction_hypercube(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CosetGraph g(identity_code(n));
    for (auto _ : state) {
        Rat v = curvature_direction(g, 0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_curvature_direction_hypercube)->Arg(4)->Arg(8)->Arg(12);

void BM_coset_graph_build(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    LinearCode c = random_code(m, 2 * m, 1);
    for (auto _ : state) {
        CosetGraph g(c);
        benchmark::DoNotOptimize(g.diameter());
    }
}
BENCHMARK(BM_coset_graph_build)->Arg(12)->Arg(16)->Arg(20);

void BM_min_K_simplex(benchmark::State& state) {
    LinearCode c = hadamard(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        int k = min_K(c);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_min_K_simplex)->Arg(6)->Arg(8)->Arg(10);

void BM_covering_radius(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    LinearCode c = random_code(8, n, 2);
    for (auto _ : state) {
        int r = covering_radius_bruteforce(c);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_covering_radius)->Arg(12)->Arg(16)->Arg(20);

void BM_ltc_profile(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    LinearCode c = random_code(16, n, 3);
    for (auto _ : state) {
        LtcProfile p = ltc_profile(c);
        benchmark::DoNotOptimize(p.sigma);
    }
}
BENCHMARK(BM_ltc_profile)->Arg(64)->Arg(128)->Arg(256);

} // namespace

BENCHMARK_MAIN();
