#include <benchmark/benchmark.h>

#include "inertial/coloring.hpp"
#include "inertial/fractional.hpp"
#include "inertial/generators.hpp"
#include "inertial/graph6.hpp"
#include "inertial/independent_sets.hpp"
#include "inertial/inertia.hpp"
#include "inertial/spectrum.hpp"

namespace {

using namespace inertial;

void BM_charpoly_gp_15_4(benchmark::State& state) {
    const Graph g = gen_generalized_petersen(15, 4);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_charpoly_gp_15_4)->Unit(benchmark::kMillisecond);

void BM_charpoly_kneser_7_3(benchmark::State& state) {
    const Graph g = gen_kneser(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_charpoly_kneser_7_3)->Unit(benchmark::kMillisecond);

void BM_inertia_kneser_7_3(benchmark::State& state) {
    const Graph g = gen_kneser(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(inertia(g));
}
BENCHMARK(BM_inertia_kneser_7_3)->Unit(benchmark::kMillisecond);

void BM_spectrum_kneser_7_3(benchmark::State& state) {
    const Graph g = gen_kneser(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(numeric_spectrum(g, 1e-9));
}
BENCHMARK(BM_spectrum_kneser_7_3)->Unit(benchmark::kMillisecond);

void BM_chromatic_kneser_5_2(benchmark::State& state) {
    const Graph g = gen_kneser(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_chromatic_kneser_5_2)->Unit(benchmark::kMicrosecond);

void BM_independence_kneser_7_3(benchmark::State& state) {
    const Graph g = gen_kneser(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_independence_kneser_7_3)->Unit(benchmark::kMillisecond);

void BM_mis_enumeration_kneser_7_3(benchmark::State& state) {
    const Graph g = gen_kneser(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_independent_sets(g));
}
BENCHMARK(BM_mis_enumeration_kneser_7_3)->Unit(benchmark::kMillisecond);

void BM_chif_kneser_5_2(benchmark::State& state) {
    const Graph g = gen_kneser(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(fractional_chromatic(g));
}
BENCHMARK(BM_chif_kneser_5_2)->Unit(benchmark::kMillisecond);

// the flagship LP: 35 rows, 6127 set columns
void BM_chif_kneser_7_3(benchmark::State& state) {
    const Graph g = gen_kneser(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(fractional_chromatic(g));
}
BENCHMARK(BM_chif_kneser_7_3)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_graph6_roundtrip_gp_15_4(benchmark::State& state) {
    const std::string g6 = encode_graph6(gen_generalized_petersen(15, 4));
    for (auto _ : state) benchmark::DoNotOptimize(encode_graph6(parse_graph6(g6)));
}
BENCHMARK(BM_graph6_roundtrip_gp_15_4);

}  // namespace

BENCHMARK_MAIN();
