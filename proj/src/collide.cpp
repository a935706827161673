#include "biarc/collide.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "biarc/errors.hpp"

namespace biarc {

namespace {

constexpr double kEqualDistance = 1e-12;
constexpr double kCenterTol = 1e-12;
constexpr double kIntervalGap = 1e-12;

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = d.squared_norm();
    double t = len2 > 0.0 ? (p - a).dot(d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + d * t);
}

double point_line_distance(Vec2 p, Vec2 point, Vec2 unit_dir) {
    return std::abs(unit_dir.cross(p - point));
}

bool ranges_overlap(double a_lo, double a_hi, double b_lo, double b_hi) {
    return a_lo <= b_hi && b_lo <= a_hi;
}

// Smallest distance from the origin to a convex polygon (zero if inside).
double origin_polygon_distance(std::span<const Vec2> poly) {
    if (point_in_hitbox(poly, Vec2{})) return 0.0;
    double best = kInf;
    for (std::size_t j = 0; j < poly.size(); ++j) {
        best = std::min(best, point_segment_distance(Vec2{}, poly[j], poly[(j + 1) % poly.size()]));
    }
    return best;
}

// The two roots t of x = ((h1 + h2) t^2 + h2 - h1) / (2 t), computed without
// cancellation; `lo` <= `hi` for the returned pair is not implied.
struct Roots {
    double minus;
    double plus;
};

Roots half_tangent_roots(double h1, double h2, double x) {
    const double sum = h1 + h2;
    const double r = std::sqrt(std::max(0.0, x * x + h1 * h1 - h2 * h2));
    if (x >= 0.0) {
        const double big = x + r;
        const double plus = big / sum;
        const double minus = big != 0.0 ? (h2 - h1) / big : 0.0;
        return {minus, plus};
    }
    const double big = x - r;
    return {big / sum, (h2 - h1) / big};
}

enum class Relation { below, inside, above };

Relation relate(double x, double threshold) {
    if (x <= -threshold) return Relation::below;
    if (x >= threshold) return Relation::above;
    return Relation::inside;
}

IntervalBranch classify(double x1, double x2, double threshold) {
    const Relation r1 = relate(x1, threshold);
    const Relation r2 = relate(x2, threshold);
    if (r1 == Relation::below) {
        if (r2 == Relation::below) return IntervalBranch::both_below;
        if (r2 == Relation::inside) return IntervalBranch::below_to_inside;
        return IntervalBranch::straddles;
    }
    if (r1 == Relation::inside) {
        return r2 == Relation::inside ? IntervalBranch::inside : IntervalBranch::inside_to_above;
    }
    return IntervalBranch::both_above;
}

// Rotations t at which the rotating line (distance h1) meets the fixed line
// (distance h2) at a point whose coordinate on the rotating line is in [x1, x2].
TIntervalSet rotating_line_interval(double h1, double h2, double x1, double x2) {
    if (h1 + h2 < kCenterTol) {
        throw DegenerateCenterError("both lines pass through the rotation center");
    }
    if (x1 > x2) throw std::invalid_argument("coordinate range must satisfy x1 <= x2");
    if (std::abs(h1 - h2) <= kEqualDistance) {
        const double h = 0.5 * (h1 + h2);
        return TIntervalSet{{x1 / h, x2 / h}, {0.0, 0.0}};
    }
    if (h1 > h2) {
        const Roots r1 = half_tangent_roots(h1, h2, x1);
        const Roots r2 = half_tangent_roots(h1, h2, x2);
        return TIntervalSet{{r1.minus, r2.minus}, {r1.plus, r2.plus}};
    }
    const double threshold = std::sqrt(h2 * h2 - h1 * h1);
    TIntervalSet::Storage parts;
    if (x2 >= threshold) {
        const Roots top = half_tangent_roots(h1, h2, x2);
        const Roots low = half_tangent_roots(h1, h2, std::max(x1, threshold));
        parts.push_back({top.minus, low.minus});
        parts.push_back({low.plus, top.plus});
    }
    if (x1 <= -threshold) {
        const Roots bottom = half_tangent_roots(h1, h2, x1);
        const Roots high = half_tangent_roots(h1, h2, std::min(x2, -threshold));
        parts.push_back({bottom.minus, high.minus});
        parts.push_back({high.plus, bottom.plus});
    }
    return TIntervalSet(std::span<const TInterval>(parts.data(), parts.size()));
}

double half_tangent(double c, double s) {
    // tan(angle/2) from the angle's cosine and sine, picking the stable form.
    if (c >= 0.0) return s / (1.0 + c);
    if (s == 0.0) return kInf;
    return (1.0 - c) / s;
}

TIntervalSet motion_interval(double theta_d, double cos_d, double sin_d, double c_mu, double s_mu) {
    if (std::abs(theta_d) >= kTwoPi) return TIntervalSet::all();
    // Rotation runs from -mu to -mu + theta_d.
    const double t_start = half_tangent(c_mu, -s_mu);
    const double c_end = c_mu * cos_d + s_mu * sin_d;
    const double s_end = -s_mu * cos_d + c_mu * sin_d;
    const double t_end = half_tangent(c_end, s_end);
    const double t_minus = theta_d >= 0.0 ? t_start : t_end;
    const double t_plus = theta_d >= 0.0 ? t_end : t_start;
    if (t_minus <= t_plus) return TIntervalSet{{t_minus, t_plus}};
    return TIntervalSet{{-kInf, t_plus}, {t_minus, kInf}};
}

bool separated_on_axis(Vec2 axis, std::span<const Vec2> poly, Vec2 a, Vec2 b) {
    double lo = kInf, hi = -kInf;
    for (const Vec2& p : poly) {
        const double d = axis.dot(p);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    const double sa = axis.dot(a), sb = axis.dot(b);
    return std::max(sa, sb) < lo || std::min(sa, sb) > hi;
}

bool straddles_line(std::span<const Vec2> poly, Vec2 point, Vec2 dir) {
    bool neg = false, pos = false;
    for (const Vec2& p : poly) {
        const double side = dir.cross(p - point);
        if (side == 0.0) return true;
        (side < 0.0 ? neg : pos) = true;
    }
    return neg && pos;
}

}  // namespace

ConvexHitbox::ConvexHitbox(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw std::invalid_argument("hitbox needs at least three vertices");
    double turning = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2 e0 = vertices_[(j + 1) % n] - vertices_[j];
        const Vec2 e1 = vertices_[(j + 2) % n] - vertices_[(j + 1) % n];
        const double cr = e0.cross(e1);
        if (!(cr > 1e-12)) {
            throw std::invalid_argument("hitbox must be strictly convex and counterclockwise");
        }
        turning += std::atan2(cr, e0.dot(e1));
        reach_ = std::max(reach_, vertices_[j].norm());
    }
    if (std::abs(turning - kTwoPi) > 1e-6) {
        throw std::invalid_argument("hitbox vertices wind more than once");
    }
}

ConvexHitbox ConvexHitbox::rectangle(double length, double width) {
    const double x = 0.5 * length, y = 0.5 * width;
    return ConvexHitbox({{-x, -y}, {x, -y}, {x, y}, {-x, y}});
}

Obstacle make_point(Vec2 p) { return PointObstacle{p}; }

Obstacle make_segment(Vec2 a, Vec2 b) {
    if (a == b) throw std::invalid_argument("segment endpoints coincide");
    return SegmentObstacle{a, b};
}

Obstacle make_line(Vec2 point, Vec2 direction) {
    const double n = direction.norm();
    if (!(n > 0.0)) throw std::invalid_argument("line direction is zero");
    // Keep near-unit input untouched so normalizing twice is a no-op.
    if (std::abs(n - 1.0) <= 1e-12) return LineObstacle{point, direction};
    return LineObstacle{point, direction / n};
}

LineParam line_param(Vec2 point, Vec2 unit_dir) {
    const double h = unit_dir.perp().dot(point);
    if (h < 0.0) return {-unit_dir, -h};
    return {unit_dir, h};
}

std::vector<Vec2> hitbox_at(const ConvexHitbox& h, const Pose& pose) {
    std::vector<Vec2> out;
    out.reserve(h.vertices().size());
    const double c = std::cos(pose.theta()), s = std::sin(pose.theta());
    for (const Vec2& v : h.vertices()) {
        out.push_back({pose.x() + c * v.x - s * v.y, pose.y() + s * v.x + c * v.y});
    }
    return out;
}

bool point_in_hitbox(std::span<const Vec2> poly, Vec2 p) {
    const std::size_t n = poly.size();
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2 a = poly[j];
        const Vec2 b = poly[(j + 1) % n];
        if ((b - a).cross(p - a) < 0.0) return false;
    }
    return true;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    auto turn = [](Vec2 o, Vec2 a, Vec2 b) { return (a - o).cross(b - o); };
    for (const Vec2& p : pts) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Vec2> straight_sweep_hull(const ConvexHitbox& h, const Pose& start, const Pose& end) {
    if (std::abs(wrap_angle(start.theta() - end.theta())) > 1e-9) {
        throw HeadingMismatchError("straight sweep requires equal start and end headings");
    }
    std::vector<Vec2> pts = hitbox_at(h, start);
    const Vec2 shift = end.position() - start.position();
    const std::size_t n = pts.size();
    for (std::size_t j = 0; j < n; ++j) pts.push_back(pts[j] + shift);
    return convex_hull(std::move(pts));
}

bool straight_collision(std::span<const Vec2> hull, const Obstacle& o) {
    if (const auto* p = std::get_if<PointObstacle>(&o)) {
        return point_in_hitbox(hull, p->p);
    }
    if (const auto* s = std::get_if<SegmentObstacle>(&o)) {
        const std::size_t n = hull.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Vec2 axis = (hull[(j + 1) % n] - hull[j]).perp();
            if (separated_on_axis(axis, hull, s->a, s->b)) return false;
        }
        return !separated_on_axis((s->b - s->a).perp(), hull, s->a, s->b);
    }
    const auto& l = std::get<LineObstacle>(o);
    return straddles_line(hull, l.point, l.direction);
}

TIntervalSet t_interval_motion(double theta_d, double c_mu, double s_mu) {
    return motion_interval(theta_d, std::cos(theta_d), std::sin(theta_d), c_mu, s_mu);
}

TIntervalSet t_intervals_edge(double h_a, double h_b, double x_a1, double x_a2) {
    return rotating_line_interval(h_a, h_b, x_a1, x_a2);
}

TIntervalSet t_intervals_obstacle(double h_a, double h_b, double x_b1, double x_b2) {
    // Along the fixed line the crossing sits at minus the coordinate it would
    // have on a rotating line with the two distances swapped.
    return rotating_line_interval(h_b, h_a, -x_b2, -x_b1);
}

IntervalBranch edge_interval_branch(double h_a, double h_b, double x_a1, double x_a2) {
    if (std::abs(h_a - h_b) <= kEqualDistance) return IntervalBranch::equal_distance;
    if (h_a > h_b) return IntervalBranch::monotone;
    return classify(x_a1, x_a2, std::sqrt(h_b * h_b - h_a * h_a));
}

IntervalBranch obstacle_interval_branch(double h_a, double h_b, double x_b1, double x_b2) {
    if (std::abs(h_a - h_b) <= kEqualDistance) return IntervalBranch::equal_distance;
    if (h_a < h_b) return IntervalBranch::monotone;
    return classify(x_b1, x_b2, std::sqrt(h_a * h_a - h_b * h_b));
}

namespace {

bool entry_through_edge(const EdgeFrame& e, Vec2 p, double n2, double cos_half) {
    const double h = e.line.h;
    const double rad = n2 - h * h;
    if (rad < 0.0) return false;
    const double r = std::sqrt(rad);
    const Vec2 up = e.line.u.perp();
    for (double x : {r, -r}) {
        if (x < e.x_lo || x > e.x_hi) continue;
        if (p.dot(e.line.u * x + up * h) >= n2 * cos_half) return true;
    }
    return false;
}

}  // namespace

bool arc_edge_point_entry(const ArcSegment& arc, const EdgeFrame& edge, Vec2 p) {
    if (arc.is_straight()) throw StraightArcError("entry test needs a circular arc");
    return entry_through_edge(edge, p, p.squared_norm(), std::cos(0.5 * arc.spanned_angle()));
}

ArcSweep::ArcSweep(const ArcSegment& arc, const ConvexHitbox& h) {
    const Pose start = arc.start();
    start_world_ = hitbox_at(h, start);
    const double half = 0.5 * arc.length();
    bound_center_ = arc.pose_at(half).position();
    bound_radius_ = half + h.reach();
    straight_ = arc.is_straight() || arc.length() == 0.0;
    if (straight_) {
        const Pose end(arc.end_pose().position(), start.theta());
        hull_ = straight_sweep_hull(h, start, end);
        return;
    }
    center_ = arc.center();
    theta_d_ = arc.spanned_angle();
    cos_half_ = std::cos(0.5 * theta_d_);
    cos_d_ = std::cos(theta_d_);
    sin_d_ = std::sin(theta_d_);
    std::vector<Vec2> rel = hitbox_at(h, arc.pose_at(half));
    for (Vec2& v : rel) {
        v -= center_;
        r_max_ = std::max(r_max_, v.norm());
    }
    r_min_ = origin_polygon_distance(rel);
    const std::size_t n = rel.size();
    edges_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2 p0 = rel[j];
        const Vec2 p1 = rel[(j + 1) % n];
        const LineParam lp = line_param(p0, (p1 - p0).normalized());
        const double x0 = lp.u.dot(p0), x1 = lp.u.dot(p1);
        edges_.push_back({lp, std::min(x0, x1), std::max(x0, x1)});
    }
}

bool ArcSweep::point_entry(Vec2 rel) const {
    const double n2 = rel.squared_norm();
    for (const EdgeFrame& e : edges_) {
        if (entry_through_edge(e, rel, n2, cos_half_)) return true;
    }
    return false;
}

bool ArcSweep::point_hits(Vec2 p, bool check_start) const {
    if (distance(p, bound_center_) > bound_radius_ * (1.0 + 1e-12)) return false;
    if (straight_) return point_in_hitbox(hull_, p);
    if (check_start && point_in_hitbox(start_world_, p)) return true;
    const Vec2 rel = p - center_;
    const double r = rel.norm();
    if (r > r_max_ * (1.0 + 1e-12) || r < r_min_ * (1.0 - 1e-12)) return false;
    return point_entry(rel);
}

bool ArcSweep::segment_hits(const SegmentObstacle& s, bool check_start) const {
    if (point_segment_distance(bound_center_, s.a, s.b) > bound_radius_ * (1.0 + 1e-12)) return false;
    if (straight_) return straight_collision(hull_, s);
    if (check_start && (point_in_hitbox(start_world_, s.a) || point_in_hitbox(start_world_, s.b))) {
        return true;
    }
    const Vec2 ra = s.a - center_;
    const Vec2 rb = s.b - center_;
    if (point_segment_distance(Vec2{}, ra, rb) > r_max_ * (1.0 + 1e-12)) return false;
    if (std::max(ra.norm(), rb.norm()) < r_min_ * (1.0 - 1e-12)) return false;
    if (point_entry(ra) || point_entry(rb)) return true;

    const LineParam lb = line_param(ra, (rb - ra).normalized());
    const double xb0 = lb.u.dot(ra), xb1 = lb.u.dot(rb);
    const double x_b1 = std::min(xb0, xb1), x_b2 = std::max(xb0, xb1);
    const double ch = std::cos(0.5 * theta_d_), sh = std::sin(0.5 * theta_d_);
    for (const EdgeFrame& e : edges_) {
        const Vec2 ua = e.line.u;
        const double c = ua.dot(lb.u), sn = ua.cross(lb.u);
        // Shift from the mid-arc frame to the start of the rotation.
        const TIntervalSet motion =
            motion_interval(theta_d_, cos_d_, sin_d_, c * ch - sn * sh, sn * ch + c * sh);
        const double ha = e.line.h, hb = lb.h;
        if (ha + hb < kCenterTol) {
            if (e.x_lo <= 0.0 && 0.0 <= e.x_hi && x_b1 <= 0.0 && 0.0 <= x_b2) return true;
            if (motion.contains(0.0) && ranges_overlap(e.x_lo, e.x_hi, x_b1, x_b2)) return true;
            if (motion.contains(kInf) && ranges_overlap(-e.x_hi, -e.x_lo, x_b1, x_b2)) return true;
            continue;
        }
        if (std::abs(ha - hb) <= kEqualDistance) {
            // Drop the shared aligned rotation t = 0 and test it with the actual ranges.
            const double h = 0.5 * (ha + hb);
            const TIntervalSet crossing = TIntervalSet{{e.x_lo / h, e.x_hi / h}}.intersect(
                TIntervalSet{{-x_b2 / h, -x_b1 / h}});
            if (crossing.intersects(motion, kIntervalGap)) return true;
            if (motion.contains(0.0) && ranges_overlap(e.x_lo, e.x_hi, x_b1, x_b2)) return true;
            continue;
        }
        const TIntervalSet crossing =
            t_intervals_edge(ha, hb, e.x_lo, e.x_hi).intersect(t_intervals_obstacle(ha, hb, x_b1, x_b2));
        if (crossing.intersects(motion, kIntervalGap)) return true;
    }
    return false;
}

bool ArcSweep::line_hits(const LineObstacle& l, bool check_start) const {
    if (point_line_distance(bound_center_, l.point, l.direction) > bound_radius_ * (1.0 + 1e-12)) {
        return false;
    }
    if (straight_) return straddles_line(hull_, l.point, l.direction);
    if (check_start && straddles_line(start_world_, l.point, l.direction)) return true;
    const LineParam lb = line_param(l.point - center_, l.direction);
    if (lb.h > r_max_ * (1.0 + 1e-12)) return false;
    const double ch = std::cos(0.5 * theta_d_), sh = std::sin(0.5 * theta_d_);
    for (const EdgeFrame& e : edges_) {
        const Vec2 ua = e.line.u;
        const double c = ua.dot(lb.u), sn = ua.cross(lb.u);
        const TIntervalSet motion =
            motion_interval(theta_d_, cos_d_, sin_d_, c * ch - sn * sh, sn * ch + c * sh);
        if (e.line.h + lb.h < kCenterTol) {
            if (e.x_lo <= 0.0 && 0.0 <= e.x_hi) return true;
            if (motion.contains(0.0) || motion.contains(kInf)) return true;
            continue;
        }
        if (t_intervals_edge(e.line.h, lb.h, e.x_lo, e.x_hi).intersects(motion, kIntervalGap)) return true;
    }
    return false;
}

bool ArcSweep::collides(const Obstacle& o, bool check_start) const {
    if (const auto* p = std::get_if<PointObstacle>(&o)) return point_hits(p->p, check_start);
    if (const auto* s = std::get_if<SegmentObstacle>(&o)) return segment_hits(*s, check_start);
    return line_hits(std::get<LineObstacle>(o), check_start);
}

bool arc_collision(const ArcSegment& arc, const ConvexHitbox& h, const Obstacle& o, bool check_start_containment) {
    return ArcSweep(arc, h).collides(o, check_start_containment);
}

bool biarc_collision(const Biarc& b, const ConvexHitbox& h, std::span<const Obstacle> obstacles, bool is_first) {
    if (obstacles.empty()) return false;
    const ArcSweep first(b.arc_a(), h);
    const ArcSweep second(b.arc_b(), h);
    for (const Obstacle& o : obstacles) {
        if (first.collides(o, is_first) || second.collides(o, false)) return true;
    }
    return false;
}

bool path_collision(std::span<const Biarc> plan, const ConvexHitbox& h, std::span<const Obstacle> obstacles) {
    for (std::size_t i = 0; i < plan.size(); ++i) {
        if (biarc_collision(plan[i], h, obstacles, i == 0)) return true;
    }
    return false;
}

}  // namespace biarc
