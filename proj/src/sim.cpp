#include "biarc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "biarc/errors.hpp"
#include "biarc/oracle.hpp"

namespace biarc {

namespace {

constexpr double kGoalTolerance = 0.05;

bool finite(Vec2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double polyline_length(std::span<const Vec2> pts) {
    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += distance(pts[i - 1], pts[i]);
    return total;
}

// Walks `dist` along the plan from its start, appending the driven pieces.
// Returns the pose reached and the plan length left over.
std::pair<Pose, double> advance(const PlanResult& plan, double dist, std::vector<ArcSegment>& driven) {
    double left = dist;
    double remaining = 0.0;
    Pose pose = plan.biarcs.front().start_pose();
    for (const Biarc& b : plan.biarcs) {
        for (const ArcSegment* arc : {&b.arc_a(), &b.arc_b()}) {
            const double len = arc->length();
            if (left <= 0.0) {
                remaining += len;
                continue;
            }
            const double take = std::min(left, len);
            if (take > 0.0) driven.push_back(arc->sub_arc(0.0, take));
            pose = arc->pose_at(take);
            left -= take;
            remaining += len - take;
        }
    }
    return {pose, remaining};
}

}  // namespace

void Scenario::validate() const {
    if (!(params.speed_mps > 0.0)) throw std::invalid_argument("speed must be positive");
    if (!(params.replan_period_s > 0.0)) throw std::invalid_argument("replan period must be positive");
    if (!(params.spacing_m > 0.0)) throw std::invalid_argument("waypoint spacing must be positive");
    if (waypoints.size() < 2) throw std::invalid_argument("scenario needs at least two waypoints");
    for (const Vec2& p : waypoints) {
        if (!finite(p)) throw std::invalid_argument("waypoint is not finite");
    }
    for (const Obstacle& o : obstacles) {
        const bool ok = std::visit(
            [](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, PointObstacle>) return finite(v.p);
                if constexpr (std::is_same_v<T, SegmentObstacle>) return finite(v.a) && finite(v.b);
                if constexpr (std::is_same_v<T, LineObstacle>) return finite(v.point) && finite(v.direction);
            },
            o);
        if (!ok) throw std::invalid_argument("obstacle is not finite");
    }
}

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::success: return "success";
        case RunStatus::no_path: return "no_path";
        case RunStatus::timeout: return "timeout";
    }
    return "unknown";
}

std::vector<Pose> sample_trace(std::span<const ArcSegment> pieces, double ds) {
    if (!(ds > 0.0)) throw std::invalid_argument("sample spacing must be positive");
    std::vector<Pose> out;
    for (const ArcSegment& a : pieces) {
        const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(a.length() / ds)));
        for (std::size_t i = 0; i <= n; ++i) {
            out.push_back(a.pose_at(a.length() * static_cast<double>(i) / static_cast<double>(n)));
        }
    }
    return out;
}

double min_proximity(std::span<const Pose> trace, const ConvexHitbox& h, std::span<const Obstacle> obstacles) {
    if (trace.empty()) throw std::invalid_argument("proximity needs a non-empty trace");
    double best = kInf;
    for (const Pose& p : trace) {
        const std::vector<Vec2> poly = hitbox_at(h, p);
        for (const Obstacle& o : obstacles) {
            best = std::min(best, oracle::distance(poly, o));
            if (best == 0.0) return 0.0;
        }
    }
    return best;
}

SimulationRun simulate(const Scenario& sc, const SimOptions& options) {
    sc.validate();
    const ScenarioParams& p = sc.params;
    SimulationRun run;
    MetricsReport& m = run.metrics;

    PlannerParams pp;
    pp.lateral_step = p.lateral_step;
    pp.h_max = p.h_max;
    pp.horizon = p.horizon_m;
    pp.replan = ReplanParams(p.eta_l, p.eta_k);
    PlanSession session(build_waypoints_from_polyline(sc.waypoints, p.spacing_m), sc.hitbox, sc.obstacles, pp);
    const int last_column = static_cast<int>(session.waypoints().size()) - 1;
    const Waypoint& w0 = session.waypoints()[0];
    Pose robot(w0.position, w0.theta);

    const double timeout = 4.0 * polyline_length(sc.waypoints) / p.speed_mps;
    const double step = p.speed_mps * p.replan_period_s;
    std::vector<double> plan_times;
    std::size_t attempts = 0;
    double t = 0.0;

    auto finish = [&](RunStatus status) {
        m.status = status;
        m.success = status == RunStatus::success;
        m.plan_ms_median = median(plan_times);
        m.plan_ms_max = plan_times.empty() ? 0.0 : *std::max_element(plan_times.begin(), plan_times.end());
        m.cycles = attempts;
        m.time_s = t;
        m.path_m = 0.0;
        for (const ArcSegment& a : run.executed) m.path_m += a.length();
        const std::vector<Pose> poses =
            run.executed.empty() ? std::vector<Pose>{robot} : sample_trace(run.executed, options.proximity_ds);
        m.prox_m = sc.obstacles.empty() ? kInf : min_proximity(poses, sc.hitbox, sc.obstacles);
        return run;
    };

    PlanResult plan;
    ++attempts;
    try {
        plan = session.plan(robot);
    } catch (const NoPathError&) {
        return finish(RunStatus::no_path);
    }
    plan_times.push_back(plan.plan_ms);

    for (;;) {
        const bool ends_at_goal = plan.nodes.back().i == last_column;
        double plan_len = 0.0;
        for (const Biarc& b : plan.biarcs) plan_len += b.length();
        if (ends_at_goal && plan_len <= kGoalTolerance) return finish(RunStatus::success);

        const double d = std::min(step, plan_len);
        const auto [pose, remaining] = advance(plan, d, run.executed);
        robot = pose;
        // A plan shorter than one step that does not reach the goal leaves the robot waiting.
        t += ends_at_goal && plan_len <= step ? d / p.speed_mps : p.replan_period_s;
        if (ends_at_goal && remaining <= kGoalTolerance) return finish(RunStatus::success);
        if (t > timeout) return finish(RunStatus::timeout);

        ++attempts;
        try {
            if (options.force_full_replan) {
                session.clear_cache();
                plan = session.plan(robot);
            } else {
                plan = session.incremental_replan(robot);
            }
        } catch (const NoPathError&) {
            return finish(RunStatus::no_path);
        }
        plan_times.push_back(plan.plan_ms);
    }
}

MetricsReport run_scenario(const Scenario& sc, const SimOptions& options) { return simulate(sc, options).metrics; }

}  // namespace biarc
