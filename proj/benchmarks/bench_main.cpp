#include <benchmark/benchmark.h>

#include "pencil_tns/membership.hpp"
#include "pencil_tns/network.hpp"
#include "pencil_tns/pencil.hpp"
#include "pencil_tns/triangle.hpp"

using namespace ptns;

static void BM_RationalRank(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    auto m = random_matrix(n, n, rng, -50, 50);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RationalRank)->Arg(8)->Arg(16)->Arg(32);

static void BM_KroneckerGeneric(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    MatrixPencil p(random_matrix(n, n + 1, rng, -50, 50), random_matrix(n, n + 1, rng, -50, 50));
    for (auto _ : state) benchmark::DoNotOptimize(kronecker_decompose(p));
}
BENCHMARK(BM_KroneckerGeneric)->Arg(4)->Arg(8);

static void BM_KroneckerNormalForm(benchmark::State& state) {
    auto p = normal_form_sample(TriangleConfig::make(3, 3, 1, 0), 5);
    for (auto _ : state) benchmark::DoNotOptimize(kronecker_decompose(p));
}
BENCHMARK(BM_KroneckerNormalForm);

static void BM_JacobianOracle(benchmark::State& state) {
    auto m = static_cast<std::size_t>(state.range(0));
    auto net = TriangleConfig::make(m, m, 0, 0).network();
    for (auto _ : state) benchmark::DoNotOptimize(jacobian_rank_dim(net, 1));
}
BENCHMARK(BM_JacobianOracle)->Arg(2)->Arg(3);

static void BM_ProfileTest(benchmark::State& state) {
    auto cfg = TriangleConfig::make(3, 3, 0, 0);
    auto p = normal_form_sample(cfg, 9);
    for (auto _ : state) benchmark::DoNotOptimize(determinant_profile_test(p, cfg, 0, 1));
}
BENCHMARK(BM_ProfileTest);

static void BM_BridgeRank(benchmark::State& state) {
    Rng rng(3);
    auto t = random_tensor({2, 3, 4}, rng, -50, 50);
    for (auto _ : state) benchmark::DoNotOptimize(bridge_map_rank(t, 1, 7));
}
BENCHMARK(BM_BridgeRank);
BENCHMARK_MAIN();
