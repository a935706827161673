#include "biarc/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "biarc/errors.hpp"
#include "biarc/kernels.hpp"

namespace biarc {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

WaypointPath::WaypointPath(std::vector<Waypoint> points, double spacing)
    : points_(std::move(points)), spacing_(spacing) {
    if (points_.size() < 2) throw std::invalid_argument("waypoint path needs at least two waypoints");
    cumulative_.assign(points_.size(), 0.0);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        points_[i].theta = wrap_angle(points_[i].theta);
        if (i == 0) continue;
        const double d = distance(points_[i - 1].position, points_[i].position);
        if (!(d > 0.0)) throw std::invalid_argument("consecutive waypoints coincide");
        cumulative_[i] = cumulative_[i - 1] + d;
    }
}

WaypointPath build_waypoints_from_polyline(std::span<const Vec2> pts, double spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("waypoint spacing must be positive");
    std::vector<Vec2> clean;
    for (const Vec2& p : pts) {
        if (clean.empty() || distance(clean.back(), p) > 1e-12) clean.push_back(p);
    }
    if (clean.size() < 2) throw std::invalid_argument("polyline has zero length");
    std::vector<double> cum(clean.size(), 0.0);
    for (std::size_t i = 1; i < clean.size(); ++i) cum[i] = cum[i - 1] + distance(clean[i - 1], clean[i]);
    const double total = cum.back();
    const double eps = 1e-9 * spacing;

    std::vector<Waypoint> out;
    std::size_t seg = 0;
    auto sample = [&](double s) {
        while (seg + 2 < clean.size() && s >= cum[seg + 1]) ++seg;
        const Vec2 d = clean[seg + 1] - clean[seg];
        const double t = (s - cum[seg]) / (cum[seg + 1] - cum[seg]);
        out.push_back({clean[seg] + d * t, d.angle()});
    };
    for (std::size_t k = 0;; ++k) {
        const double s = static_cast<double>(k) * spacing;
        if (s >= total - eps) break;
        sample(s);
    }
    const Vec2 last_dir = clean.back() - clean[clean.size() - 2];
    out.push_back({clean.back(), last_dir.angle()});
    return WaypointPath(std::move(out), spacing);
}

Pose lattice_node_pose(const Lattice& lat, int i, int j) {
    if (i < 0 || static_cast<std::size_t>(i) >= lat.waypoints->size()) {
        throw std::out_of_range("waypoint index " + std::to_string(i) + " outside the path");
    }
    if (std::abs(j) > lat.half_width) {
        throw std::out_of_range("lateral index " + std::to_string(j) + " outside the lattice");
    }
    const Waypoint& w = (*lat.waypoints)[static_cast<std::size_t>(i)];
    const Vec2 left{-std::sin(w.theta), std::cos(w.theta)};
    return Pose(w.position + left * (j * lat.lateral_step), w.theta);
}

PlanSession::PlanSession(WaypointPath waypoints, ConvexHitbox hitbox, std::vector<Obstacle> obstacles,
                         PlannerParams params)
    : waypoints_(std::move(waypoints)),
      hitbox_(std::move(hitbox)),
      obstacles_(std::move(obstacles)),
      params_(params) {
    if (params_.h_max < 0) throw std::invalid_argument("h_max must be non-negative");
    if (!(params_.lateral_step > 0.0)) throw std::invalid_argument("lateral step must be positive");
    if (!(params_.horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    reset_cache();
}

void PlanSession::reset_cache() {
    const std::size_t width = static_cast<std::size_t>(2 * params_.h_max + 1);
    cache_.assign(waypoints_.size() * width * width, std::numeric_limits<double>::quiet_NaN());
}

void PlanSession::clear_cache() { reset_cache(); }

void PlanSession::set_obstacles(std::vector<Obstacle> obstacles) {
    obstacles_ = std::move(obstacles);
    current_.reset();
    reset_cache();
}

void PlanSession::set_waypoints(WaypointPath waypoints) {
    waypoints_ = std::move(waypoints);
    current_.reset();
    progressed_ = false;
    i_b_ = i_e_ = 0;
    reset_cache();
}

Pose PlanSession::node_pose(int i, int j) const { return lattice_node_pose(lattice(), i, j); }

bool PlanSession::collides(const Biarc& b, bool is_first) const {
    if (obstacles_.size() >= params_.parallel_threshold) {
        return kernels::any_collision_parallel(b, hitbox_, obstacles_, is_first);
    }
    return kernels::any_collision_serial(b, hitbox_, obstacles_, is_first);
}

std::size_t PlanSession::cache_index(int i, int j, int k) const {
    const std::size_t width = static_cast<std::size_t>(2 * params_.h_max + 1);
    return (static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j + params_.h_max)) * width +
           static_cast<std::size_t>(k + params_.h_max);
}

double PlanSession::edge_cost(int i, int j, int k) {
    if (i < 0 || static_cast<std::size_t>(i + 1) >= waypoints_.size()) {
        throw std::out_of_range("edge leaves the waypoint path");
    }
    if (std::abs(j) > params_.h_max || std::abs(k) > params_.h_max) {
        throw std::out_of_range("edge leaves the lattice");
    }
    double& slot = cache_[cache_index(i, j, k)];
    if (!std::isnan(slot)) {
        ++stats_.cache_hits;
        return slot;
    }
    ++stats_.edge_evaluations;
    double cost = kBlockedCost;
    try {
        const Biarc b = biarc_equal_chord(node_pose(i, j), node_pose(i + 1, k));
        if (!collides(b, false)) cost = 1.0 + std::abs(j) + std::abs(k);
    } catch (const PoleError&) {
    }
    slot = cost;
    return cost;
}

double PlanSession::heuristic(int i, int j) const {
    if (params_.literal_heuristic) {
        return static_cast<double>(static_cast<int>(waypoints_.size()) - 1 - i + std::abs(j));
    }
    // Zero on the goal column keeps the estimate admissible there.
    if (i >= i_e_) return 0.0;
    return static_cast<double>(i_e_ - i + std::abs(j));
}

std::pair<int, int> PlanSession::update_progress(const Pose& robot) {
    const std::size_t n = waypoints_.size();
    const std::size_t first = progressed_ ? static_cast<std::size_t>(std::max(0, i_b_ - 2)) : 0;
    double best = kInf, s_robot = 0.0;
    for (std::size_t m = first; m + 1 < n; ++m) {
        const Vec2 a = waypoints_[m].position, b = waypoints_[m + 1].position;
        const Vec2 d = b - a;
        const double t = std::clamp((robot.position() - a).dot(d) / d.squared_norm(), 0.0, 1.0);
        const double dist = distance(robot.position(), a + d * t);
        if (dist < best) {
            best = dist;
            s_robot = waypoints_.cumulative(m) + t * d.norm();
        }
    }
    int ib = static_cast<int>(n) - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (waypoints_.cumulative(i) > s_robot + 1e-9) {
            ib = static_cast<int>(i);
            break;
        }
    }
    int ie = static_cast<int>(n) - 1;
    const double base = waypoints_.cumulative(static_cast<std::size_t>(ib));
    if (waypoints_.total_length() - base >= params_.horizon) {
        for (std::size_t i = static_cast<std::size_t>(ib); i < n; ++i) {
            if (waypoints_.cumulative(i) - base > params_.horizon) {
                ie = static_cast<int>(i);
                break;
            }
        }
    }
    i_b_ = ib;
    i_e_ = ie;
    progressed_ = true;
    return {ib, ie};
}

std::optional<PlanResult> PlanSession::astar(const Pose& start, int h) {
    ++stats_.astar_calls;
    const auto t0 = std::chrono::steady_clock::now();
    h = std::clamp(h, 0, params_.h_max);
    const int width = 2 * h + 1;
    const int columns = i_e_ - i_b_ + 1;
    const std::size_t count = static_cast<std::size_t>(columns * width);
    auto index = [&](int i, int j) { return static_cast<std::size_t>((i - i_b_) * width + (j + h)); };

    std::vector<double> g(count, kInf);
    std::vector<int> parent(count, -2);  // -1: start, -2: unreached
    std::vector<Biarc> start_edges(static_cast<std::size_t>(width));
    std::vector<char> closed(count, 0);

    // (f, |j|, i, j); std::greater pops the smallest tuple first.
    using Entry = std::tuple<double, int, int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

    for (int j = -h; j <= h; ++j) {
        const Pose target = node_pose(i_b_, j);
        if (distance(start.position(), target.position()) <= 1e-12) continue;
        try {
            Biarc b = biarc_equal_chord(start, target);
            if (collides(b, true)) continue;
            const double cost = 1.0 + std::abs(j);
            const std::size_t id = index(i_b_, j);
            g[id] = cost;
            parent[id] = -1;
            start_edges[static_cast<std::size_t>(j + h)] = b;
            open.emplace(cost + heuristic(i_b_, j), std::abs(j), i_b_, j);
        } catch (const PoleError&) {
        }
    }

    int goal = -1;
    while (!open.empty()) {
        [[maybe_unused]] const auto [f, aj, i, j] = open.top();
        open.pop();
        const std::size_t id = index(i, j);
        if (closed[id]) continue;
        closed[id] = 1;
        if (i == i_e_) {
            goal = static_cast<int>(id);
            break;
        }
        for (int k = -h; k <= h; ++k) {
            const double c = edge_cost(i, j, k);
            if (c == kBlockedCost) continue;
            const std::size_t nid = index(i + 1, k);
            if (closed[nid]) continue;
            const double ng = g[id] + c;
            if (ng < g[nid]) {
                g[nid] = ng;
                parent[nid] = static_cast<int>(id);
                open.emplace(ng + heuristic(i + 1, k), std::abs(k), i + 1, k);
            }
        }
    }
    if (goal < 0) return std::nullopt;

    PlanResult r;
    r.width = h;
    r.cost = g[static_cast<std::size_t>(goal)];
    for (int id = goal; id >= 0; id = parent[static_cast<std::size_t>(id)]) {
        r.nodes.push_back({i_b_ + id / width, id % width - h});
    }
    std::reverse(r.nodes.begin(), r.nodes.end());
    r.biarcs.push_back(start_edges[static_cast<std::size_t>(r.nodes.front().j + h)]);
    for (std::size_t n = 1; n < r.nodes.size(); ++n) {
        r.biarcs.push_back(biarc_equal_chord(node_pose(r.nodes[n - 1].i, r.nodes[n - 1].j),
                                             node_pose(r.nodes[n].i, r.nodes[n].j)));
    }
    r.plan_ms = elapsed_ms(t0);
    return r;
}

PlanResult PlanSession::plan(const Pose& robot) {
    const auto t0 = std::chrono::steady_clock::now();
    update_progress(robot);
    for (int h = 0; h <= params_.h_max; ++h) {
        std::optional<PlanResult> r = astar(robot, h);
        if (r) {
            r->plan_ms = elapsed_ms(t0);
            current_ = *r;
            return *r;
        }
    }
    current_.reset();
    throw NoPathError("no collision-free path within lateral half-width " + std::to_string(params_.h_max));
}

PlanResult PlanSession::incremental_replan(const Pose& robot) {
    if (!current_) return plan(robot);
    const auto t0 = std::chrono::steady_clock::now();
    const PlanResult prev = *current_;
    const auto [ib, ie] = update_progress(robot);

    auto fallback = [&]() {
        ++stats_.incremental_fallbacks;
        PlanResult r = plan(robot);
        r.plan_ms = elapsed_ms(t0);
        current_->plan_ms = r.plan_ms;
        return r;
    };

    const auto it = std::find_if(prev.nodes.begin(), prev.nodes.end(), [&](const LatticeNode& n) { return n.i == ib; });
    if (it == prev.nodes.end()) return fallback();
    const std::size_t idx = static_cast<std::size_t>(it - prev.nodes.begin());

    PlanResult r;
    r.width = prev.width;
    r.incremental = true;
    try {
        r.biarcs.push_back(replan_select(prev.biarcs[idx], robot, params_.replan));
    } catch (const std::exception&) {
        return fallback();
    }
    r.nodes.assign(prev.nodes.begin() + static_cast<std::ptrdiff_t>(idx), prev.nodes.end());
    r.biarcs.insert(r.biarcs.end(), prev.biarcs.begin() + static_cast<std::ptrdiff_t>(idx) + 1, prev.biarcs.end());
    while (r.nodes.back().i > ie) {
        r.nodes.pop_back();
        r.biarcs.pop_back();
    }
    while (r.nodes.back().i < ie) {
        const LatticeNode last = r.nodes.back();
        const LatticeNode next{last.i + 1, 0};
        try {
            r.biarcs.push_back(biarc_equal_chord(node_pose(last.i, last.j), node_pose(next.i, next.j)));
        } catch (const PoleError&) {
            return fallback();
        }
        r.nodes.push_back(next);
    }
    // Same result as path_collision: every piece after the head is an
    // equal-chord lattice edge checked with is_first = false, which is exactly
    // what edge_cost caches for the current obstacle set.
    if (collides(r.biarcs.front(), true)) return fallback();
    for (std::size_t n = 1; n < r.nodes.size(); ++n) {
        if (edge_cost(r.nodes[n - 1].i, r.nodes[n - 1].j, r.nodes[n].j) == kBlockedCost) return fallback();
    }

    r.cost = 1.0 + std::abs(r.nodes.front().j);
    for (std::size_t n = 1; n < r.nodes.size(); ++n) {
        r.cost += 1.0 + std::abs(r.nodes[n - 1].j) + std::abs(r.nodes[n].j);
    }
    ++stats_.incremental_accepted;
    r.plan_ms = elapsed_ms(t0);
    current_ = r;
    return r;
}

}  // namespace biarc
