#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "biarc/biarc.hpp"
#include "biarc/collide.hpp"
#include "biarc/oracle.hpp"

/// Batch kernels. Each has a serial reference and an OpenMP version that must
/// return identical results; tests compare the two and the benchmark times them.
namespace biarc::kernels {

/// Whether a biarc hits any obstacle in the list.
bool any_collision_serial(const Biarc& b, const ConvexHitbox& h, std::span<const Obstacle> obstacles, bool is_first);
bool any_collision_parallel(const Biarc& b, const ConvexHitbox& h, std::span<const Obstacle> obstacles, bool is_first);

/// Collision flag for each biarc in a batch (one byte per biarc).
std::vector<std::uint8_t> batch_collision_serial(std::span<const Biarc> biarcs, const ConvexHitbox& h,
                                                 std::span<const Obstacle> obstacles, bool is_first);
std::vector<std::uint8_t> batch_collision_parallel(std::span<const Biarc> biarcs, const ConvexHitbox& h,
                                                   std::span<const Obstacle> obstacles, bool is_first);

struct AgreementReport {
    std::size_t trials = 0;
    std::size_t decisive = 0;       ///< cases with |clearance| >= margin
    std::size_t disagreements = 0;  ///< decisive cases where the two methods differ
    std::size_t collisions = 0;     ///< decisive cases the oracle reports as colliding
    bool operator==(const AgreementReport&) const = default;
};

/// Runs `trials` random cases drawn from `seed`. Case i uses its own generator
/// seeded from (seed, i), so the serial and parallel runs see the same cases.
AgreementReport agreement_serial(std::uint64_t seed, std::size_t trials, const ConvexHitbox* fixed_hitbox,
                                 const oracle::OracleConfig& cfg = {});
AgreementReport agreement_parallel(std::uint64_t seed, std::size_t trials, const ConvexHitbox* fixed_hitbox,
                                   const oracle::OracleConfig& cfg = {});

/// Generator for case `index` of a run seeded with `seed`.
std::mt19937_64 case_rng(std::uint64_t seed, std::size_t index);

}  // namespace biarc::kernels
