#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biarc/biarc.hpp"
#include "biarc/collide.hpp"
#include "biarc/replan.hpp"

namespace biarc {

struct Waypoint {
    Vec2 position;
    double theta;
};

/// Reference path: ordered waypoints with headings and cumulative arclength.
class WaypointPath {
public:
    /// Throws std::invalid_argument for fewer than two waypoints or repeated positions.
    WaypointPath(std::vector<Waypoint> points, double spacing);

    std::size_t size() const { return points_.size(); }
    const Waypoint& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Waypoint> points() const { return points_; }
    double spacing() const { return spacing_; }
    /// Distance along the waypoint polyline from waypoint 0 to waypoint i.
    double cumulative(std::size_t i) const { return cumulative_[i]; }
    double total_length() const { return cumulative_.back(); }

private:
    std::vector<Waypoint> points_;
    std::vector<double> cumulative_;
    double spacing_;
};

/// Samples the polyline every `spacing` meters of arclength, always keeping
/// the final point. Headings follow the polyline segment under each sample.
/// Throws std::invalid_argument for a zero-length polyline or non-positive spacing.
WaypointPath build_waypoints_from_polyline(std::span<const Vec2> points, double spacing);

/// Lateral copies of the waypoint path; node (i, j) sits j steps to the left of waypoint i.
struct Lattice {
    const WaypointPath* waypoints;
    double lateral_step;
    int half_width;
};

/// Throws std::out_of_range for i outside the path or |j| > half_width.
Pose lattice_node_pose(const Lattice& lattice, int i, int j);

struct LatticeNode {
    int i;
    int j;
    bool operator==(const LatticeNode&) const = default;
};

inline constexpr double kBlockedCost = kInf;

struct PlannerParams {
    double lateral_step = 0.2;
    int h_max = 15;
    double horizon = 25.0;
    ReplanParams replan{};
    /// Use N_W - 1 - i + |j| (counting from the last waypoint) instead of the
    /// horizon-relative i_e - i + |j|.
    bool literal_heuristic = false;
    /// Obstacle count from which collision checks use the OpenMP kernel.
    std::size_t parallel_threshold = 4096;
};

struct PlanResult {
    std::vector<Biarc> biarcs;      ///< robot -> nodes[0] -> nodes[1] -> ...
    std::vector<LatticeNode> nodes;
    double cost = kBlockedCost;
    double plan_ms = 0.0;
    int width = 0;                  ///< lattice half-width used
    bool incremental = false;       ///< produced by composition rather than search
};

/// Lattice planner state for one reference path and one obstacle set.
class PlanSession {
public:
    PlanSession(WaypointPath waypoints, ConvexHitbox hitbox, std::vector<Obstacle> obstacles,
                PlannerParams params = {});

    const WaypointPath& waypoints() const { return waypoints_; }
    const ConvexHitbox& hitbox() const { return hitbox_; }
    std::span<const Obstacle> obstacles() const { return obstacles_; }
    const PlannerParams& params() const { return params_; }
    Lattice lattice() const { return {&waypoints_, params_.lateral_step, params_.h_max}; }

    /// Replacing the obstacles or the waypoints drops cached costs and the current plan.
    void set_obstacles(std::vector<Obstacle> obstacles);
    void set_waypoints(WaypointPath waypoints);
    void clear_cache();

    Pose node_pose(int i, int j) const;

    /// 1 + |j| + |k| for a collision-free equal-chord edge (i, j) -> (i + 1, k),
    /// kBlockedCost otherwise. Cached.
    double edge_cost(int i, int j, int k);

    /// Least-cost path from `start` to column i_e within half-width h.
    std::optional<PlanResult> astar(const Pose& start, int h);

    /// Updates progress, then searches with h = 0, 1, ..., h_max. Throws NoPathError.
    PlanResult plan(const Pose& robot);

    /// Recomputes (i_b, i_e) from the robot position.
    std::pair<int, int> update_progress(const Pose& robot);

    /// Reuses the previous plan behind a replanned head biarc; falls back to plan().
    PlanResult incremental_replan(const Pose& robot);

    int i_b() const { return i_b_; }
    int i_e() const { return i_e_; }
    const std::optional<PlanResult>& current_plan() const { return current_; }

    struct Stats {
        std::size_t astar_calls = 0;
        std::size_t edge_evaluations = 0;
        std::size_t cache_hits = 0;
        std::size_t incremental_accepted = 0;
        std::size_t incremental_fallbacks = 0;
    };
    const Stats& stats() const { return stats_; }
    void reset_stats() { stats_ = {}; }

private:
    bool collides(const Biarc& b, bool is_first) const;
    double heuristic(int i, int j) const;
    std::size_t cache_index(int i, int j, int k) const;
    void reset_cache();

    WaypointPath waypoints_;
    ConvexHitbox hitbox_;
    std::vector<Obstacle> obstacles_;
    PlannerParams params_;
    std::vector<double> cache_;  // NaN = not evaluated
    int i_b_ = 0;
    int i_e_ = 0;
    bool progressed_ = false;
    std::optional<PlanResult> current_;
    Stats stats_;
};

}  // namespace biarc
