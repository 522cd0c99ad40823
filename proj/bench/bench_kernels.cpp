#include <benchmark/benchmark.h>

#include "geobohm/kernels.hpp"
#include "geobohm/matching.hpp"

using namespace geobohm;

namespace {

const BubbleParams& bubble() {
    static const BubbleParams p = derive_bubble(0.3, 1.0, 1.0);
    return p;
}

std::vector<TrajectoryJob> jobs() {
    std::vector<TrajectoryJob> j;
    for (double x : linspace(-3.0, -1.5, 16)) j.push_back({Region::I, x});
    for (double x : linspace(-0.5, 0.5, 16)) j.push_back({Region::II, x});
    for (double x : linspace(1.5, 3.0, 16)) j.push_back({Region::III, x});
    return j;
}

const TrajectoryConstants& constants() {
    static const BarrierSpec s;
    static const TrajectoryConstants tc = trajectory_constants(solve_coefficients(s, zeta_terms(s, bubble())), s, bubble());
    return tc;
}

template <bool Parallel>
void BM_PhaseGrid(benchmark::State& st) {
    const auto r = linspace(-5.0, 5.0, static_cast<int>(st.range(0)));
    for (auto _ : st) {
        auto out = Parallel ? parallel::phase_grid(r, bubble()) : serial::phase_grid(r, bubble());
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_Trajectories(benchmark::State& st) {
    const auto j = jobs();
    for (auto _ : st) {
        auto out = Parallel ? parallel::trajectories(j, 0.0, 3.0, static_cast<int>(st.range(0)), constants(), RegionIIModel::full)
                            : serial::trajectories(j, 0.0, 3.0, static_cast<int>(st.range(0)), constants(), RegionIIModel::full);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_Sweep(benchmark::State& st) {
    const auto a = linspace(2.0, 10.0, static_cast<int>(st.range(0)));
    const std::vector<double> n0 = {0.5, 0.7, 1.0, 2.0};
    for (auto _ : st) {
        auto out = Parallel ? parallel::sweep(SweepRegime::wide, a, n0, 1e-3, 1.0)
                            : serial::sweep(SweepRegime::wide, a, n0, 1e-3, 1.0);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_Fig2(benchmark::State& st) {
    const auto xs = linspace(0.0, 5.0, static_cast<int>(st.range(0)));
    for (auto _ : st) {
        auto out = Parallel ? parallel::fig2(xs) : serial::fig2(xs);
        benchmark::DoNotOptimize(out.rows.data());
    }
}

}  // namespace

BENCHMARK(BM_PhaseGrid<false>)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhaseGrid<true>)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Trajectories<false>)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Trajectories<true>)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Sweep<false>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<true>)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Fig2<false>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fig2<true>)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
