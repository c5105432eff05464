#include "alexchen/chenranks.hpp"
#include "alexchen/geomingest.hpp"
#include "alexchen/localcc.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace alexchen;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(ALEXCHEN_FIXTURES) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Presentation real_presentation(const std::string& name) {
    auto f = ArrangementFile::parse(fixture(name));
    auto a = decone(f.planes, f.planes.n());
    auto w = wiring_diagram(a, f.frame ? certify_frame(a, *f.frame) : generic_frame(a));
    return presentation_real(real_vertices(w), a.n());
}

const char* kFixtures[] = {"sixlines.arr", "braid_a4.arr", "diamond.arr", "pappus2.arr", "pappus1.arr"};

void BM_ChenRanks(benchmark::State& state) {
    auto p = real_presentation(kFixtures[state.range(0)]);
    int K = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(chen_ranks(p, K));
    state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_ChenRanks)->ArgsProduct({{0, 1, 2, 3}, {6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChenRanks)->Args({4, 8})->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Oracle(benchmark::State& state) {
    auto p = real_presentation(kFixtures[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(chen_ranks_oracle(p, static_cast<int>(state.range(1))));
    state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Oracle)->ArgsProduct({{0, 1, 2}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_FreeGroup(benchmark::State& state) {
    auto p = presentation_free(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chen_ranks(p, 8));
}
BENCHMARK(BM_FreeGroup)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Psi3(benchmark::State& state) {
    auto L = lattice2(ArrangementFile::parse(fixture(kFixtures[state.range(0)])).planes);
    for (auto _ : state) benchmark::DoNotOptimize(decomposes(L));
    state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Psi3)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Wiring(benchmark::State& state) {
    auto f = ArrangementFile::parse(fixture(kFixtures[state.range(0)]));
    auto a = decone(f.planes, f.planes.n());
    for (auto _ : state) {
        auto w = wiring_diagram(a, generic_frame(a));
        benchmark::DoNotOptimize(monodromy_real(w));
    }
    state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Wiring)->DenseRange(0, 4);

}  // namespace

BENCHMARK_MAIN();
