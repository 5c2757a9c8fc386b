#include <benchmark/benchmark.h>

#include <schur/modules.hpp>
#include <schur/oracle.hpp>
#include <schur/planner.hpp>

using namespace schur;

namespace {

void BM_weyl_character(benchmark::State& state) {
    long r = state.range(0);
    DominantWeight lam({r, r / 2, r / 4, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(weyl_character(lam));
    }
    state.SetLabel(to_string(lam));
}
BENCHMARK(BM_weyl_character)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_character_product(benchmark::State& state) {
    Character a = weyl_character(Weight({6, 3, 1, 0}));
    Character b = weyl_character(Weight({4, 2, 0, 0}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_character_product)->Unit(benchmark::kMillisecond);

void BM_brauer_expand(benchmark::State& state) {
    DominantWeight lam({4, 2, 0});
    Weight nu({3, 1, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(brauer_expand(lam, nu));
    }
}
BENCHMARK(BM_brauer_expand)->Unit(benchmark::kMicrosecond);

void BM_padic_decompose(benchmark::State& state) {
    DominantWeight lam({1000000007, 999999937, 104729, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(p_adic_decompose(lam, 3));
    }
}
BENCHMARK(BM_padic_decompose)->Unit(benchmark::kMicrosecond);

void BM_alternant_eval(benchmark::State& state) {
    DominantWeight lam({8, 5, 2, 0});
    std::vector<Rat> point = {Rat(2), Rat(3), Rat(5), Rat(7)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(alternant_eval(lam, point));
    }
}
BENCHMARK(BM_alternant_eval)->Unit(benchmark::kMicrosecond);

void BM_construct_classical(benchmark::State& state) {
    ClassicalParams c;
    c.n = 4;
    c.p = 2;
    c.m = 3;
    c.h = 3;
    c.r = min_r_classical(c.n, c.p, c.m, c.h) + state.range(0);
    c.with_character = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_classical(c));
    }
}
BENCHMARK(BM_construct_classical)->Arg(0)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_construct_quantum_with_character(benchmark::State& state) {
    QuantumParams q;
    q.n = 2;
    q.p = 3;
    q.m = 1;
    q.l = 2;
    q.h = 1;
    q.r = 25;
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_quantum(q));
    }
}
BENCHMARK(BM_construct_quantum_with_character)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
