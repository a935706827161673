#pragma once

#include <span>
#include <variant>
#include <vector>

#include "biarc/biarc.hpp"
#include "biarc/geometry.hpp"
#include "biarc/interval_set.hpp"

namespace biarc {

/// Convex robot footprint in the body frame, vertices counterclockwise.
class ConvexHitbox {
public:
    /// Throws std::invalid_argument unless the vertices form a strictly convex
    /// counterclockwise polygon with at least three vertices.
    explicit ConvexHitbox(std::vector<Vec2> vertices);

    /// Axis-aligned rectangle centered on the body origin.
    static ConvexHitbox rectangle(double length, double width);
    static ConvexHitbox square(double side) { return rectangle(side, side); }

    std::span<const Vec2> vertices() const { return vertices_; }
    /// Largest distance from the body origin to a vertex.
    double reach() const { return reach_; }

private:
    std::vector<Vec2> vertices_;
    double reach_ = 0.0;
};

struct PointObstacle {
    Vec2 p;
};

struct SegmentObstacle {
    Vec2 a;
    Vec2 b;
};

struct LineObstacle {
    Vec2 point;
    Vec2 direction;  ///< unit
};

using Obstacle = std::variant<PointObstacle, SegmentObstacle, LineObstacle>;

Obstacle make_point(Vec2 p);
/// Throws std::invalid_argument when the endpoints coincide.
Obstacle make_segment(Vec2 a, Vec2 b);
/// Normalizes the direction; throws std::invalid_argument for a zero direction.
Obstacle make_line(Vec2 point, Vec2 direction);

/// Line written as p = x u + h u_perp with h >= 0, u_perp = u rotated by +90 degrees.
struct LineParam {
    Vec2 u;
    double h;
};

/// Parametrizes the line through `point` with direction `unit_dir`, relative to the origin.
LineParam line_param(Vec2 point, Vec2 unit_dir);

/// A polygon edge as a line parameter plus its coordinate range along u.
struct EdgeFrame {
    LineParam line;
    double x_lo;
    double x_hi;
};

/// Body-frame vertices placed at `pose`.
std::vector<Vec2> hitbox_at(const ConvexHitbox& h, const Pose& pose);

/// Closed containment test for a convex counterclockwise polygon.
bool point_in_hitbox(std::span<const Vec2> world_vertices, Vec2 p);

/// Convex hull of the hitbox at both poses. The poses must share a heading
/// (within 1e-9 rad); throws HeadingMismatchError otherwise.
std::vector<Vec2> straight_sweep_hull(const ConvexHitbox& h, const Pose& start, const Pose& end);

/// Convex hull (counterclockwise, collinear points dropped) of a point set.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

/// Obstacle test against a static convex polygon; touching counts.
bool straight_collision(std::span<const Vec2> hull, const Obstacle& o);

/// Rotations, in t = tan(rotation/2), swept by an edge that starts at angle
/// mu = atan2(s_mu, c_mu) short of alignment and turns by theta_d.
TIntervalSet t_interval_motion(double theta_d, double c_mu, double s_mu);

/// Rotations at which the edge segment [x_a1, x_a2] of a line at distance h_a
/// from the rotation center crosses a fixed line at distance h_b.
/// Throws DegenerateCenterError when h_a + h_b < 1e-12.
TIntervalSet t_intervals_edge(double h_a, double h_b, double x_a1, double x_a2);

/// Rotations at which the full rotating line at distance h_a crosses the fixed
/// segment [x_b1, x_b2] of a line at distance h_b.
/// Throws DegenerateCenterError when h_a + h_b < 1e-12.
TIntervalSet t_intervals_obstacle(double h_a, double h_b, double x_b1, double x_b2);

/// Which formula branch produced an interval set; used to check case coverage.
enum class IntervalBranch {
    monotone,              ///< two increasing branches: h_a > h_b for edges, h_a < h_b for obstacles
    equal_distance,        ///< h_a == h_b
    both_below,            ///< range entirely <= -threshold
    below_to_inside,       ///< lower end <= -threshold, upper end inside
    straddles,             ///< range covers both thresholds
    inside,                ///< range strictly within (-threshold, threshold): empty
    inside_to_above,       ///< lower end inside, upper end >= threshold
    both_above,            ///< range entirely >= threshold
};

IntervalBranch edge_interval_branch(double h_a, double h_b, double x_a1, double x_a2);
IntervalBranch obstacle_interval_branch(double h_a, double h_b, double x_b1, double x_b2);

/// Entry test of a point through one hitbox edge during an arc. The edge and
/// `p` are both expressed relative to the rotation center, with the hitbox at
/// the arc's mid pose. Throws StraightArcError for straight arcs.
bool arc_edge_point_entry(const ArcSegment& arc, const EdgeFrame& edge, Vec2 p);

/// Precomputed data for sweeping one hitbox along one arc; reused for many obstacles.
class ArcSweep {
public:
    ArcSweep(const ArcSegment& arc, const ConvexHitbox& h);

    /// True when the swept hitbox touches the obstacle. With `check_start`, an
    /// obstacle already inside the hitbox at the start pose also counts; without
    /// it only entries during the motion do. Straight motions test the full hull.
    bool collides(const Obstacle& o, bool check_start) const;

    bool straight() const { return straight_; }

private:
    bool point_hits(Vec2 p, bool check_start) const;
    bool segment_hits(const SegmentObstacle& s, bool check_start) const;
    bool line_hits(const LineObstacle& l, bool check_start) const;
    bool point_entry(Vec2 rel) const;

    bool straight_ = false;
    std::vector<Vec2> hull_;         // straight motions
    std::vector<Vec2> start_world_;  // hitbox at the start pose
    Vec2 bound_center_;
    double bound_radius_ = 0.0;

    // Circular motions, everything relative to the rotation center.
    Vec2 center_;
    double theta_d_ = 0.0;
    double cos_half_ = 1.0;
    double cos_d_ = 1.0;
    double sin_d_ = 0.0;
    double r_min_ = 0.0;
    double r_max_ = 0.0;
    std::vector<EdgeFrame> edges_;
};

bool arc_collision(const ArcSegment& arc, const ConvexHitbox& h, const Obstacle& o, bool check_start_containment);

bool biarc_collision(const Biarc& b, const ConvexHitbox& h, std::span<const Obstacle> obstacles, bool is_first);

bool path_collision(std::span<const Biarc> plan, const ConvexHitbox& h, std::span<const Obstacle> obstacles);

}  // namespace biarc
