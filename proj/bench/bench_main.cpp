#include <benchmark/benchmark.h>

#include <random>

#include "casimir/theorems.hpp"

using namespace casimir;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

const HopfAlgebra& double_s3() {
    static const HopfAlgebra D = drinfeld_double(named_group("S3"));
    return D;
}

void BM_TensorMultiply(benchmark::State& state) {
    const auto& D = double_s3();
    const auto& A = D.A();
    std::mt19937_64 rng(1);
    auto u = pure_tensor(random_element(A, rng), random_element(A, rng));
    auto v = pure_tensor(random_element(A, rng), random_element(A, rng));
    for (auto _ : state) benchmark::DoNotOptimize(tensor_multiply(A, A, u, v, mode(state)));
}
BENCHMARK(BM_TensorMultiply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
    const auto& K = CyclotomicField::get(12);
    std::mt19937_64 rng(2);
    CMatrix m(40, 48, Cyclotomic(K));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = random_scalar(K, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref_and_kernel(m, mode(state)));
}
BENCHMARK(BM_Rref)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyAlgebra(benchmark::State& state) {
    const auto& A = double_s3().A();
    for (auto _ : state) benchmark::DoNotOptimize(verify_algebra(A, mode(state)));
}
BENCHMARK(BM_VerifyAlgebra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyHopf(benchmark::State& state) {
    const auto& D = double_s3();
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(D, mode(state)));
}
BENCHMARK(BM_VerifyHopf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Wedderburn(benchmark::State& state) {
    const auto& A = double_s3().A();
    set_parallel(state.range(0) != 0);
    for (auto _ : state) benchmark::DoNotOptimize(central_primitive_idempotents(A));
    set_parallel(true);
}
BENCHMARK(BM_Wedderburn)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
