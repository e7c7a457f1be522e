#include <benchmark/benchmark.h>

#include "symquot/classify.hpp"

using namespace symquot;

static void BM_cyclotomic_mul(benchmark::State& state) {
    CycField F(static_cast<unsigned>(state.range(0)));
    CycNum a = F.zero(), b = F.zero();
    for (unsigned j = 0; j < F.degree(); ++j) {
        a.num[j] = Int(j + 1);
        b.num[j] = Int(2 * j + 1);
    }
    for (auto _ : state) {
        CycNum c = F.mul(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_cyclotomic_mul)->Arg(8)->Arg(24)->Arg(63);

static void BM_valuation(benchmark::State& state) {
    auto ctx = make_context(static_cast<unsigned>(state.range(0)), 2);
    const CycField& F = ctx->field();
    CycNum x = F.mul(ctx->pi_pow(3), F.add(F.root_of_unity(1), F.from_int(3)));
    for (auto _ : state) {
        auto v = ctx->valuation(x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_valuation)->Arg(8)->Arg(56);

static void BM_echelonize(benchmark::State& state) {
    auto ctx = make_context(8, 2);
    const CycField& F = ctx->field();
    std::vector<std::vector<CycNum>> rows;
    unsigned n = static_cast<unsigned>(state.range(0));
    for (unsigned i = 0; i < n; ++i) {
        std::vector<CycNum> r(n, F.zero());
        for (unsigned j = 0; j < n; ++j) {
            r[j] = F.mul_int(F.root_of_unity(static_cast<long>(i + j)), Int(1 + (i * j) % 5));
        }
        rows.push_back(std::move(r));
    }
    for (auto _ : state) {
        OLattice L = dvr::echelonize(*ctx, rows, n);
        benchmark::DoNotOptimize(L);
    }
}
BENCHMARK(BM_echelonize)->Arg(8)->Arg(24);

static void BM_character_table(benchmark::State& state) {
    GroupPtr G = Group::build(state.range(0) == 0 ? "dihedral:32" : "wreath:3");
    for (auto _ : state) {
        CharacterTable T = character_table(G);
        benchmark::DoNotOptimize(T);
    }
}
BENCHMARK(BM_character_table)->Arg(0)->Arg(1);

static void BM_classify_group(benchmark::State& state) {
    GroupPtr G = Group::build(state.range(0) == 0 ? "dihedral:16" : "wreath:3");
    std::uint64_t p = state.range(0) == 0 ? 2 : 3;
    for (auto _ : state) {
        GroupClassification C = classify_group(G, p);
        benchmark::DoNotOptimize(C);
    }
}
BENCHMARK(BM_classify_group)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
