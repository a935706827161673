#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "biarc/collide.hpp"
#include "biarc/lattice.hpp"

namespace biarc {

struct ScenarioParams {
    double lateral_step = 0.2;
    int h_max = 15;
    double horizon_m = 25.0;
    double spacing_m = 0.5;
    double speed_mps = 1.67;
    double replan_period_s = 0.05;
    double eta_l = 2.0;
    double eta_k = 2.0;
    std::uint64_t seed = 0;
    bool operator==(const ScenarioParams&) const = default;
};

struct Scenario {
    std::string name;
    ConvexHitbox hitbox = ConvexHitbox::square(0.34);
    std::vector<Vec2> waypoints;
    std::vector<Obstacle> obstacles;
    ScenarioParams params;

    /// Throws std::invalid_argument for non-positive speed or period, fewer than
    /// two waypoints, or non-finite geometry.
    void validate() const;
};

enum class RunStatus { success, no_path, timeout };

const char* to_string(RunStatus s);

struct MetricsReport {
    double plan_ms_median = 0.0;
    double plan_ms_max = 0.0;
    double path_m = 0.0;
    double time_s = 0.0;
    double prox_m = 0.0;
    bool success = false;
    RunStatus status = RunStatus::no_path;
    std::size_t cycles = 0;  ///< planning calls, including the initial plan and a failed last one
};

struct SimOptions {
    /// Run a search from scratch every period (edge-cost cache cleared first)
    /// instead of the incremental composition.
    bool force_full_replan = false;
    /// Arclength step for the proximity metric.
    double proximity_ds = 0.01;
};

struct SimulationRun {
    MetricsReport metrics;
    std::vector<ArcSegment> executed;  ///< pieces of plan actually driven, in order
};

/// Closed-loop run: the robot follows the current plan at constant speed and
/// replans every period until it reaches the end of the last waypoint column
/// (within 5 cm), the planner fails, or 4x the nominal travel time elapses.
SimulationRun simulate(const Scenario& sc, const SimOptions& options = {});
MetricsReport run_scenario(const Scenario& sc, const SimOptions& options = {});

/// Smallest hitbox-to-obstacle distance over the given poses (0 on contact).
double min_proximity(std::span<const Pose> trace, const ConvexHitbox& h, std::span<const Obstacle> obstacles);

/// Poses every `ds` along each piece, both ends included.
std::vector<Pose> sample_trace(std::span<const ArcSegment> pieces, double ds);

}  // namespace biarc
