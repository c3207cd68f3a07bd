#include <benchmark/benchmark.h>

#include "lat2red/algorithms.hpp"
#include "lat2red/baselines.hpp"
#include "lat2red/gen.hpp"
#include "lat2red/halfgcd.hpp"

namespace {

using namespace lat2red;

Basis hnf_instance(std::size_t n1) {
    GenConfig cfg;
    cfg.seed = 42;
    cfg.form = Form::hnf;
    cfg.n1_dec = n1;
    cfg.n2_dec = n1 / 2;
    return generate(cfg);
}

Basis general_instance(std::size_t n, mpq_class kappa) {
    GenConfig cfg;
    cfg.seed = 42;
    cfg.form = Form::general;
    cfg.n1_dec = n;
    cfg.kappa_target = kappa;
    return generate(cfg);
}

void run(benchmark::State& state, const char* alg, NormKind norm, const Basis& B) {
    for (auto _ : state) benchmark::DoNotOptimize(run_algorithm(alg, norm, B));
    state.counters["digits"] = static_cast<double>(state.range(0));
}

void BM_CrossEucHnf(benchmark::State& state) {
    run(state, "crosseuc", NormKind::linf, hnf_instance(static_cast<std::size_t>(state.range(0))));
}
void BM_HVecSbpHnf(benchmark::State& state) {
    run(state, "hvecsbp", NormKind::linf, hnf_instance(static_cast<std::size_t>(state.range(0))));
}
void BM_GolEucHnf(benchmark::State& state) {
    run(state, "goleuc", NormKind::linf, hnf_instance(static_cast<std::size_t>(state.range(0))));
}
void BM_HalfGaussianSbpHnf(benchmark::State& state) {
    run(state, "halfgaussiansbp", NormKind::l2, hnf_instance(static_cast<std::size_t>(state.range(0))));
}
void BM_HVecSbpGeneral(benchmark::State& state) {
    run(state, "hvecsbp", NormKind::linf, general_instance(static_cast<std::size_t>(state.range(0)), mpq_class(1, 2)));
}
void BM_HgcdHnfHVecSbpGeneral(benchmark::State& state) {
    run(state, "hgcd-hnf-hvecsbp", NormKind::linf,
        general_instance(static_cast<std::size_t>(state.range(0)), mpq_class(1, 2)));
}

void BM_XgcdClassical(benchmark::State& state) {
    const Basis B = hnf_instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(xgcd_classical(B.a.v1, B.b.v1));
}
void BM_XgcdHgcd(benchmark::State& state) {
    const Basis B = hnf_instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(xgcd_hgcd(B.a.v1, B.b.v1));
}

}  // namespace

BENCHMARK(BM_CrossEucHnf)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HVecSbpHnf)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GolEucHnf)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HalfGaussianSbpHnf)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HVecSbpGeneral)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HgcdHnfHVecSbpGeneral)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_XgcdClassical)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_XgcdHgcd)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
