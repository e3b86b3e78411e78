#include <benchmark/benchmark.h>

#include "rlrs/decision.hpp"
#include "rlrs/hardness.hpp"
#include "rlrs/kernels.hpp"

using namespace rlrs;
using namespace rlrs::kernels;

namespace {

Rational R(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

const UnitAngle& gauss() {
    static const UnitAngle a = UnitAngle::make(R(3, 5), R(4, 5));
    return a;
}

const FixedTurn& turn() {
    static const FixedTurn f = gauss().fixed();
    return f;
}

BallTermParams params() {
    HardnessParams hp = compute_params(gauss(), Rational(1), R(1, 20));
    return ball_term_params(hp);
}

template <PrefixMin (*F)(const FixedTurn&, uint64_t, uint64_t)>
void BM_prefix_min(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(F(turn(), 1, static_cast<uint64_t>(st.range(0))));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <ScanReport (*F)(const FixedTurn&, uint64_t, uint64_t, const BallTermParams&)>
void BM_ball_term_scan(benchmark::State& st) {
    BallTermParams p = params();
    for (auto _ : st) benchmark::DoNotOptimize(F(turn(), 1, static_cast<uint64_t>(st.range(0)), p));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <SampleGap (*F)(const FixedTurn&, uint64_t, const std::vector<std::vector<long double>>&,
                         const BallTermParams&)>
void BM_sample_gap(benchmark::State& st) {
    BallTermParams p = params();
    p.psi = 0.1L;
    std::vector<std::vector<long double>> pts{{2.1L, 1.9L, 0, 0, 0, 2}, {2.05L, 1.95L, 0.01L, 0, 0.02L, 1.99L}};
    for (auto _ : st) benchmark::DoNotOptimize(F(turn(), static_cast<uint64_t>(st.range(0)), pts, p));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <std::vector<uint64_t> (*F)(const std::vector<FixedTurn>&, const std::vector<std::vector<FixedTurn>>&,
                                     long double, uint64_t)>
void BM_kronecker(benchmark::State& st) {
    std::vector<std::vector<FixedTurn>> targets;
    for (long k = 1; k <= 20; ++k) targets.push_back({fixed_turn_exact(R(k, 21))});
    for (auto _ : st)
        benchmark::DoNotOptimize(F({turn()}, targets, 1e-3L, static_cast<uint64_t>(st.range(0))));
}

template <BruteForceReport (*F)(const Lrr&, const Region&, Property, uint64_t, size_t, uint64_t,
                                std::optional<uint64_t>)>
void BM_brute_force(benchmark::State& st) {
    Lrr fib = make_lrr({Rational(1), Rational(1)});
    Region r{InitialConfig{{Rational(1), Rational(1)}}, R(1, 10), Topology::open};
    for (auto _ : st)
        benchmark::DoNotOptimize(
            F(fib, r, Property::positivity, static_cast<uint64_t>(st.range(0)), 64, 1, std::nullopt));
}

}  // namespace

BENCHMARK(BM_prefix_min<prefix_min_serial>)->Name("prefix_min/serial")->Arg(1 << 20);
BENCHMARK(BM_prefix_min<prefix_min_omp>)->Name("prefix_min/omp")->Arg(1 << 20);
BENCHMARK(BM_ball_term_scan<ball_term_scan_serial>)->Name("ball_term_scan/serial")->Arg(1 << 18);
BENCHMARK(BM_ball_term_scan<ball_term_scan_omp>)->Name("ball_term_scan/omp")->Arg(1 << 18);
BENCHMARK(BM_sample_gap<ball_sample_gap_serial>)->Name("sample_gap/serial")->Arg(1 << 17);
BENCHMARK(BM_sample_gap<ball_sample_gap_omp>)->Name("sample_gap/omp")->Arg(1 << 17);
BENCHMARK(BM_kronecker<kronecker_hits_serial>)->Name("kronecker/serial")->Arg(1 << 18);
BENCHMARK(BM_kronecker<kronecker_hits_omp>)->Name("kronecker/omp")->Arg(1 << 18);
BENCHMARK(BM_brute_force<brute_force_check_serial>)->Name("brute_force/serial")->Arg(2000);
BENCHMARK(BM_brute_force<brute_force_check>)->Name("brute_force/omp")->Arg(2000);

BENCHMARK_MAIN();
