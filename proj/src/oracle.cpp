#include "biarc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "biarc/errors.hpp"

namespace biarc::oracle {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double seg_point_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = d.squared_norm();
    const double t = len2 > 0.0 ? std::clamp((p - a).dot(d) / len2, 0.0, 1.0) : 0.0;
    return (p - (a + d * t)).norm();
}

// Even-odd ray casting, with boundary points counted as inside.
bool inside_polygon(std::span<const Vec2> poly, Vec2 p) {
    const std::size_t n = poly.size();
    bool in = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2 a = poly[i], b = poly[j];
        if (seg_point_distance(p, a, b) == 0.0) return true;
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) in = !in;
        }
    }
    return in;
}

double orient(Vec2 a, Vec2 b, Vec2 c) { return (b - a).cross(c - a); }

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    const double d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
    const double d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    if (d1 == 0 && on_segment(q1, q2, p1)) return true;
    if (d2 == 0 && on_segment(q1, q2, p2)) return true;
    if (d3 == 0 && on_segment(p1, p2, q1)) return true;
    if (d4 == 0 && on_segment(p1, p2, q2)) return true;
    return false;
}

double boundary_distance(std::span<const Vec2> poly, Vec2 p) {
    double best = kInfinity;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        best = std::min(best, seg_point_distance(p, poly[i], poly[(i + 1) % poly.size()]));
    }
    return best;
}

// Smallest overlap of the projections of polygon and segment over candidate axes.
double overlap_depth(std::span<const Vec2> poly, Vec2 a, Vec2 b) {
    std::vector<Vec2> axes;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        axes.push_back((poly[(i + 1) % poly.size()] - poly[i]).perp().normalized());
    }
    axes.push_back((b - a).perp().normalized());
    double depth = kInfinity;
    for (const Vec2& ax : axes) {
        double lo = kInfinity, hi = -kInfinity;
        for (const Vec2& p : poly) {
            lo = std::min(lo, ax.dot(p));
            hi = std::max(hi, ax.dot(p));
        }
        const double s0 = std::min(ax.dot(a), ax.dot(b)), s1 = std::max(ax.dot(a), ax.dot(b));
        depth = std::min(depth, std::min(hi - s0, s1 - lo));
    }
    return std::max(depth, 0.0);
}

}  // namespace

OracleConfig::OracleConfig(double ds, double dtheta_max, double clearance_margin)
    : ds_(ds), dtheta_max_(dtheta_max), clearance_margin_(clearance_margin) {
    if (!(ds > 0.0) || !(dtheta_max > 0.0) || !(clearance_margin > 0.0)) {
        throw std::invalid_argument("oracle resolution and margin must be positive");
    }
}

std::vector<Pose> sample_poses(const ArcSegment& arc, double ds, double dtheta_max) {
    const double len = arc.length();
    double step = ds;
    if (std::abs(arc.curvature()) > 0.0) step = std::min(step, dtheta_max / std::abs(arc.curvature()));
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(len / step)));
    std::vector<Pose> out;
    out.reserve(n + 1);
    // Direct evaluation of the circle, independent of ArcSegment::pose_at.
    const Pose s0 = arc.start();
    const double k = arc.curvature();
    for (std::size_t i = 0; i <= n; ++i) {
        const double s = len * static_cast<double>(i) / static_cast<double>(n);
        const double th = s0.theta() + k * s;
        if (std::abs(k) < 1e-9) {
            const double mid = s0.theta() + 0.5 * k * s;
            out.emplace_back(s0.x() + s * std::cos(mid), s0.y() + s * std::sin(mid), th);
        } else {
            out.emplace_back(s0.x() + (std::sin(th) - std::sin(s0.theta())) / k,
                             s0.y() - (std::cos(th) - std::cos(s0.theta())) / k, th);
        }
    }
    return out;
}

std::vector<Pose> sample_poses(const Biarc& b, double ds, double dtheta_max) {
    std::vector<Pose> out = sample_poses(b.arc_a(), ds, dtheta_max);
    const std::vector<Pose> second = sample_poses(b.arc_b(), ds, dtheta_max);
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

double signed_distance(std::span<const Vec2> poly, const Obstacle& o) {
    if (const auto* p = std::get_if<PointObstacle>(&o)) {
        const double d = boundary_distance(poly, p->p);
        return inside_polygon(poly, p->p) ? -d : d;
    }
    if (const auto* s = std::get_if<SegmentObstacle>(&o)) {
        bool hit = inside_polygon(poly, s->a) || inside_polygon(poly, s->b);
        for (std::size_t i = 0; i < poly.size() && !hit; ++i) {
            hit = segments_intersect(poly[i], poly[(i + 1) % poly.size()], s->a, s->b);
        }
        if (hit) return -overlap_depth(poly, s->a, s->b);
        double best = kInfinity;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Vec2 p0 = poly[i], p1 = poly[(i + 1) % poly.size()];
            best = std::min({best, seg_point_distance(p0, s->a, s->b), seg_point_distance(s->a, p0, p1),
                             seg_point_distance(s->b, p0, p1)});
        }
        return best;
    }
    const auto& l = std::get<LineObstacle>(o);
    const Vec2 n = l.direction.perp().normalized();
    double lo = kInfinity, hi = -kInfinity;
    for (const Vec2& p : poly) {
        const double d = n.dot(p - l.point);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (lo > 0.0) return lo;
    if (hi < 0.0) return -hi;
    return -std::min(hi, -lo);
}

double distance(std::span<const Vec2> poly, const Obstacle& o) {
    return std::max(0.0, signed_distance(poly, o));
}

namespace {

template <class Motion>
double clearance_impl(const Motion& m, const ConvexHitbox& h, const Obstacle& o, const OracleConfig& cfg) {
    double best = kInfinity;
    for (const Pose& p : sample_poses(m, cfg.ds(), cfg.dtheta_max())) {
        best = std::min(best, signed_distance(hitbox_at(h, p), o));
    }
    return best;
}

template <class Motion>
bool collision_impl(const Motion& m, const ConvexHitbox& h, const Obstacle& o, const OracleConfig& cfg) {
    for (const Pose& p : sample_poses(m, cfg.ds(), cfg.dtheta_max())) {
        if (signed_distance(hitbox_at(h, p), o) <= 0.0) return true;
    }
    return false;
}

}  // namespace

bool swept_collision_oracle(const ArcSegment& m, const ConvexHitbox& h, const Obstacle& o, const OracleConfig& cfg) {
    return collision_impl(m, h, o, cfg);
}

bool swept_collision_oracle(const Biarc& m, const ConvexHitbox& h, const Obstacle& o, const OracleConfig& cfg) {
    return collision_impl(m, h, o, cfg);
}

double signed_clearance_oracle(const ArcSegment& m, const ConvexHitbox& h, const Obstacle& o,
                               const OracleConfig& cfg) {
    return clearance_impl(m, h, o, cfg);
}

double signed_clearance_oracle(const Biarc& m, const ConvexHitbox& h, const Obstacle& o, const OracleConfig& cfg) {
    return clearance_impl(m, h, o, cfg);
}

namespace {

// Sum of chords between points ds apart along one arc, plus the closing chord to its end.
double arc_polyline_length(const ArcSegment& arc, double ds) {
    const Vec2 p0 = arc.start().position();
    const Vec2 u = arc.start().heading();
    const Vec2 n = u.perp();
    const double k = arc.curvature(), total = arc.length();
    // Local offset (sin(ks) / k, (1 - cos(ks)) / k) from the half angle, without cancellation.
    auto point = [&](double s) {
        if (k == 0.0) return p0 + u * s;
        double sh, ch;
        ::sincos(0.5 * k * s, &sh, &ch);
        return p0 + u * (2.0 * sh * ch / k) + n * (2.0 * sh * sh / k);
    };
    double sum = 0.0;
    Vec2 prev = p0;
    for (std::size_t i = 1;; ++i) {
        const double s = static_cast<double>(i) * ds;
        if (s >= total - 1e-9 * ds) break;
        const Vec2 q = point(s);
        sum += std::sqrt((q - prev).squared_norm());
        prev = q;
    }
    return sum + biarc::distance(prev, point(total));
}

}  // namespace

double polyline_length_oracle(const Biarc& b, double ds) {
    if (!(ds > 0.0)) throw std::invalid_argument("sample spacing must be positive");
    return arc_polyline_length(b.arc_a(), ds) + arc_polyline_length(b.arc_b(), ds);
}

std::vector<AlphaRow> alpha_scan(const ChordFrame& frame, std::span<const double> alphas) {
    std::vector<AlphaRow> rows;
    rows.reserve(alphas.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (double a : alphas) {
        try {
            const BiarcMetrics m = biarc_metrics(biarc_with_alpha(frame, a));
            rows.push_back({a, m.l_a, m.l_b, m.l, m.k_a, m.k_b, m.dk, false});
        } catch (const PoleError&) {
            rows.push_back({a, nan, nan, nan, nan, nan, nan, true});
        }
    }
    return rows;
}

namespace {

ConvexHitbox random_hitbox(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) < 0.3) {
        return ConvexHitbox::rectangle(0.1 + 0.5 * unit(rng), 0.1 + 0.4 * unit(rng));
    }
    const Vec2 offset{0.1 * (unit(rng) - 0.5), 0.1 * (unit(rng) - 0.5)};
    for (;;) {
        const int n = 3 + static_cast<int>(unit(rng) * 6);
        std::vector<Vec2> pts;
        for (int i = 0; i < n; ++i) {
            const double ang = kTwoPi * unit(rng);
            const double r = 0.08 + 0.22 * unit(rng);
            pts.push_back(offset + unit_vector(ang) * r);
        }
        std::vector<Vec2> hull = convex_hull(pts);
        if (hull.size() < 3) continue;
        try {
            return ConvexHitbox(hull);
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace

ValidationCase random_case(std::mt19937_64& rng, const ConvexHitbox* fixed_hitbox) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ConvexHitbox hb = fixed_hitbox ? *fixed_hitbox : random_hitbox(rng);
    const double pick = unit(rng);
    double k = 0.0;
    if (pick < 0.1) {
        k = 0.0;
    } else if (pick < 0.2) {
        k = 0.02 * (unit(rng) - 0.5);
    } else {
        k = 8.0 * (unit(rng) - 0.5);
    }
    double len = 0.05 + 1.5 * unit(rng);
    if (std::abs(k) * len > 1.9 * kPi) len = 1.9 * kPi / std::abs(k);
    const ArcSegment arc(Pose(0.0, 0.0, kTwoPi * unit(rng)), k, len);

    // Place obstacles around the swept region.
    const Vec2 mid = arc.pose_at(0.5 * len).position();
    const double spread = 0.5 * len + hb.reach() + 0.1;
    auto near_point = [&] {
        const double r = spread * std::sqrt(unit(rng));
        return mid + unit_vector(kTwoPi * unit(rng)) * r;
    };
    const double kind = unit(rng);
    Obstacle o = make_point(near_point());
    if (kind > 0.4 && kind < 0.75) {
        const Vec2 a = near_point();
        const Vec2 b = a + unit_vector(kTwoPi * unit(rng)) * (0.05 + 0.8 * unit(rng));
        o = make_segment(a, b);
    } else if (kind >= 0.75) {
        o = make_line(near_point(), unit_vector(kTwoPi * unit(rng)));
    }
    return {arc, hb, o};
}

CaseOutcome evaluate_case(const ValidationCase& c, const OracleConfig& cfg) {
    CaseOutcome out{};
    out.closed_form = arc_collision(c.arc, c.hitbox, c.obstacle, true);
    out.clearance = signed_clearance_oracle(c.arc, c.hitbox, c.obstacle, cfg);
    out.sampled = out.clearance <= 0.0;
    out.decisive = std::abs(out.clearance) >= cfg.clearance_margin();
    return out;
}

}  // namespace biarc::oracle
