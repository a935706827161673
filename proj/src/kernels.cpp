#include "biarc/kernels.hpp"

#include <omp.h>

namespace biarc::kernels {

bool any_collision_serial(const Biarc& b, const ConvexHitbox& h, std::span<const Obstacle> obstacles, bool is_first) {
    return biarc_collision(b, h, obstacles, is_first);
}

bool any_collision_parallel(const Biarc& b, const ConvexHitbox& h, std::span<const Obstacle> obstacles,
                            bool is_first) {
    if (obstacles.empty()) return false;
    const ArcSweep first(b.arc_a(), h);
    const ArcSweep second(b.arc_b(), h);
    const auto n = static_cast<std::ptrdiff_t>(obstacles.size());
    bool hit = false;
#pragma omp parallel for reduction(|| : hit) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Obstacle& o = obstacles[static_cast<std::size_t>(i)];
        hit = hit || first.collides(o, is_first) || second.collides(o, false);
    }
    return hit;
}

std::vector<std::uint8_t> batch_collision_serial(std::span<const Biarc> biarcs, const ConvexHitbox& h,
                                                 std::span<const Obstacle> obstacles, bool is_first) {
    std::vector<std::uint8_t> out(biarcs.size());
    for (std::size_t i = 0; i < biarcs.size(); ++i) {
        out[i] = biarc_collision(biarcs[i], h, obstacles, is_first) ? 1 : 0;
    }
    return out;
}

std::vector<std::uint8_t> batch_collision_parallel(std::span<const Biarc> biarcs, const ConvexHitbox& h,
                                                   std::span<const Obstacle> obstacles, bool is_first) {
    std::vector<std::uint8_t> out(biarcs.size());
    const auto n = static_cast<std::ptrdiff_t>(biarcs.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = biarc_collision(biarcs[k], h, obstacles, is_first) ? 1 : 0;
    }
    return out;
}

std::mt19937_64 case_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

namespace {

void tally(AgreementReport& r, const oracle::CaseOutcome& c) {
    ++r.trials;
    if (!c.decisive) return;
    ++r.decisive;
    if (c.sampled) ++r.collisions;
    if (c.sampled != c.closed_form) ++r.disagreements;
}

}  // namespace

AgreementReport agreement_serial(std::uint64_t seed, std::size_t trials, const ConvexHitbox* fixed_hitbox,
                                 const oracle::OracleConfig& cfg) {
    AgreementReport r;
    for (std::size_t i = 0; i < trials; ++i) {
        std::mt19937_64 rng = case_rng(seed, i);
        tally(r, oracle::evaluate_case(oracle::random_case(rng, fixed_hitbox), cfg));
    }
    return r;
}

AgreementReport agreement_parallel(std::uint64_t seed, std::size_t trials, const ConvexHitbox* fixed_hitbox,
                                   const oracle::OracleConfig& cfg) {
    std::vector<oracle::CaseOutcome> outcomes(trials);
    const auto n = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        std::mt19937_64 rng = case_rng(seed, static_cast<std::size_t>(i));
        outcomes[static_cast<std::size_t>(i)] = oracle::evaluate_case(oracle::random_case(rng, fixed_hitbox), cfg);
    }
    AgreementReport r;
    for (const auto& c : outcomes) tally(r, c);
    return r;
}

}  // namespace biarc::kernels
