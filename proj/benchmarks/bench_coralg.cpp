// Benchmarks for the hot paths of the library: exact elimination, tensor
// construction, coring construction/verification, and the full report.
#include <benchmark/benchmark.h>

#include "coralg/fixtures.hpp"
#include "coralg/report.hpp"

using namespace coralg;

namespace {

// Deterministic pseudo-random rational matrix with small entries.
Matrix test_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Field q = Field::rationals();
    Matrix m(q, rows, cols);
    std::uint64_t s = seed;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            int v = static_cast<int>((s >> 33) % 7) - 3;
            m.set(r, c, Scalar(v));
        }
    return m;
}

void bm_rref(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix m = test_matrix(n, n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref)->Arg(16)->Arg(32)->Arg(64);

void bm_kron_mult(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix a = test_matrix(n, n * n, 1);
    Matrix f = test_matrix(n, n, 2);
    Matrix g = test_matrix(n, n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kron_mult(a, f, g));
}
BENCHMARK(bm_kron_mult)->Arg(8)->Arg(12);

void bm_balanced_tensor(benchmark::State& state) {
    Covering cov = build_nil3_fixture().covering();
    CoveringCompletion comp = covering_completion(cov);
    Bimodule a_reg = regular_bimodule(comp.a.sum);
    Bimodule left = pullback_right(a_reg, cov.base, comp.kappa);
    Bimodule right = pullback_left(a_reg, cov.base, comp.kappa);
    for (auto _ : state) benchmark::DoNotOptimize(balanced_tensor(left, right));
}
BENCHMARK(bm_balanced_tensor);

void bm_covering_coring(benchmark::State& state) {
    Covering cov = build_nil3_fixture().covering();
    for (auto _ : state) benchmark::DoNotOptimize(covering_coring(cov));
}
BENCHMARK(bm_covering_coring);

void bm_verify_coring(benchmark::State& state) {
    Covering cov = build_nil3_fixture().covering();
    CoveringCoring cc = covering_coring(cov);
    for (auto _ : state) benchmark::DoNotOptimize(verify_coring(cc.coring));
}
BENCHMARK(bm_verify_coring);

void bm_report_fn3(benchmark::State& state) {
    Covering cov =
        build_open_cover_fixture(3, {{0, 1}, {1, 2}}).covering();
    for (auto _ : state) benchmark::DoNotOptimize(theorem3_report(cov));
}
BENCHMARK(bm_report_fn3);

void bm_report_nil3(benchmark::State& state) {
    Covering cov = build_nil3_fixture().covering();
    for (auto _ : state) benchmark::DoNotOptimize(theorem3_report(cov));
}
BENCHMARK(bm_report_nil3);

void bm_random_fixture(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_covering(seed, GeneratorProfile::mixed));
        ++seed;
    }
}
BENCHMARK(bm_random_fixture);

} // namespace

BENCHMARK_MAIN();
