#include <benchmark/benchmark.h>

#include "rank2/classify.hpp"

using namespace rank2;

static void BM_ScalarMul(benchmark::State& state) {
    CycScalar a = (CycScalar::q_power(1) - CycScalar::q_power(-1)) / (CycScalar(1) - CycScalar::q_power(-2));
    CycScalar b = CycScalar(1) + CycScalar::v_power(3);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMul);

static void BM_PrincipalG2(benchmark::State& state) {
    const RootSystem& rs = RootSystem::get(System::G2);
    const CentralCharFixture* f = find_fixture(System::G2, "t_e");
    for (auto _ : state) benchmark::DoNotOptimize(build_principal(rs, f->t));
}
BENCHMARK(BM_PrincipalG2);

static void BM_CompositionG2te(benchmark::State& state) {
    const RootSystem& rs = RootSystem::get(System::G2);
    const CentralCharFixture* f = find_fixture(System::G2, "t_e");
    ModuleRep principal = build_principal(rs, f->t);
    std::vector<OrbitEntry> orb = orbit(rs, f->t);
    for (auto _ : state) benchmark::DoNotOptimize(composition_factors(rs, principal, orb));
}
BENCHMARK(BM_CompositionG2te);

static void BM_FixtureA2(benchmark::State& state) {
    const CentralCharFixture* f = find_fixture(System::A2, "t_c");
    ReportOptions opt;
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct_inventory(*f, opt));
}
BENCHMARK(BM_FixtureA2);

BENCHMARK_MAIN();
