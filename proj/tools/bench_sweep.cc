// Times the (n, t) sweep kernel: serial reference loop (jobs = 0) against the
// OpenMP path at increasing thread counts.  The work item is one exact
// evaluation of pi H_n on the critical line, the dominant cost in the zero
// counting sweeps.

#include "shq/analysis.hh"
#include "shq/sweep.hh"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void sweep_once(unsigned jobs) {
    shq::precision_guard pg(128);
    shq::critical_data cd = shq::thresholds(shq::real(1), shq::real(3));
    const std::size_t count = 48;
    const unsigned n = 40;
    std::vector<shq::real> out(count);
    shq::parallel_map(count, 256, jobs, [&](std::size_t i) {
        shq::real t = cd.T * static_cast<long>(i + 1) / static_cast<long>(count + 1);
        out[i] = shq::parity_component(shq::exact_pi_h(cd, n, t), n);
    });
    benchmark::DoNotOptimize(out);
}

void bm_serial(benchmark::State& state) {
    for (auto _ : state)
        sweep_once(0);
}

void bm_parallel(benchmark::State& state) {
    for (auto _ : state)
        sweep_once(static_cast<unsigned>(state.range(0)));
}

} // namespace

BENCHMARK(bm_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_parallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
