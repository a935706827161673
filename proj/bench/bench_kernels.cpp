#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "biarc/biarc.hpp"
#include "biarc/collide.hpp"
#include "biarc/kernels.hpp"
#include "biarc/oracle.hpp"

using namespace biarc;

namespace {

const ConvexHitbox kSquare = ConvexHitbox::square(0.34);

std::vector<Obstacle> scatter(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> x(-1.0, 6.0), y(-3.0, 3.0);
    std::vector<Obstacle> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(make_point({x(rng), y(rng)}));
    return out;
}

std::vector<Biarc> fan(std::size_t n) {
    std::vector<Biarc> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = -2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(n);
        out.push_back(biarc_equal_chord(Pose(0, 0, 0), Pose(5.0, y, 0.3 * y)));
    }
    return out;
}

// Obstacles well away from the curve near the origin, so no early exit shortens the work.
std::vector<Obstacle> far_points(std::size_t n) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> x(-50.0, 50.0);
    std::vector<Obstacle> out;
    out.reserve(n);
    while (out.size() < n) {
        const Vec2 p{x(rng), x(rng)};
        if (p.norm() > 10.0) out.push_back(make_point(p));
    }
    return out;
}

void BM_AnyCollisionSerial(benchmark::State& state) {
    const Biarc b = biarc_equal_chord(Pose(0, 0, 0), Pose(2, 1, 0.5));
    const std::vector<Obstacle> obs = far_points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::any_collision_serial(b, kSquare, obs, true));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AnyCollisionParallel(benchmark::State& state) {
    const Biarc b = biarc_equal_chord(Pose(0, 0, 0), Pose(2, 1, 0.5));
    const std::vector<Obstacle> obs = far_points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::any_collision_parallel(b, kSquare, obs, true));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchSerial(benchmark::State& state) {
    const std::vector<Biarc> bs = fan(static_cast<std::size_t>(state.range(0)));
    const std::vector<Obstacle> obs = scatter(500, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::batch_collision_serial(bs, kSquare, obs, false));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
    const std::vector<Biarc> bs = fan(static_cast<std::size_t>(state.range(0)));
    const std::vector<Obstacle> obs = scatter(500, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::batch_collision_parallel(bs, kSquare, obs, false));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AgreementSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::agreement_serial(7, 64, nullptr));
}

void BM_AgreementParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::agreement_parallel(7, 64, nullptr));
}

// Single biarc against one nearby point: closed form vs 1 cm sampling.
void BM_ClosedForm(benchmark::State& state) {
    const Biarc b = biarc_equal_chord(Pose(0, 0, 0), Pose(1, 0.2, 0.6));
    const std::vector<Obstacle> obs{make_point({0.5, 0.45})};
    for (auto _ : state) benchmark::DoNotOptimize(biarc_collision(b, kSquare, obs, true));
}

void BM_SamplingOracle(benchmark::State& state) {
    const Biarc b = biarc_equal_chord(Pose(0, 0, 0), Pose(1, 0.2, 0.6));
    const Obstacle o = make_point({0.5, 0.45});
    const oracle::OracleConfig cm(0.01, 0.01, 2e-3);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::swept_collision_oracle(b, kSquare, o, cm));
}

}  // namespace

BENCHMARK(BM_AnyCollisionSerial)->Arg(500)->Arg(5000)->Arg(50000);
BENCHMARK(BM_AnyCollisionParallel)->Arg(500)->Arg(5000)->Arg(50000);
BENCHMARK(BM_BatchSerial)->Arg(16)->Arg(256);
BENCHMARK(BM_BatchParallel)->Arg(16)->Arg(256);
BENCHMARK(BM_AgreementSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AgreementParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedForm);
BENCHMARK(BM_SamplingOracle)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
