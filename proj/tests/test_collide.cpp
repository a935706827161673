#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "biarc/collide.hpp"
#include "biarc/errors.hpp"
#include "biarc/oracle.hpp"
#include "support.hpp"

using namespace biarc;

namespace {

bool same_vertex_set(std::vector<Vec2> a, std::vector<Vec2> b, double tol) {
    if (a.size() != b.size()) return false;
    for (const Vec2& p : a) {
        const auto it = std::find_if(b.begin(), b.end(), [&](Vec2 q) { return distance(p, q) <= tol; });
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

// Gift wrapping, kept separate from the monotone-chain hull under test.
std::vector<Vec2> gift_wrap(const std::vector<Vec2>& pts) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x < pts[start].x || (pts[i].x == pts[start].x && pts[i].y < pts[start].y)) start = i;
    }
    std::vector<Vec2> hull;
    std::size_t cur = start;
    do {
        hull.push_back(pts[cur]);
        std::size_t next = (cur + 1) % pts.size();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double cr = (pts[next] - pts[cur]).cross(pts[i] - pts[cur]);
            if (cr < 0.0 || (cr == 0.0 && distance(pts[cur], pts[i]) > distance(pts[cur], pts[next]))) next = i;
        }
        cur = next;
    } while (cur != start && hull.size() <= pts.size());
    return hull;
}

bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    auto orient = [](Vec2 a, Vec2 b, Vec2 c) {
        const double v = (b - a).cross(c - a);
        return v > 0 ? 1 : v < 0 ? -1 : 0;
    };
    auto on = [](Vec2 a, Vec2 b, Vec2 c) {
        return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
               c.y <= std::max(a.y, b.y);
    };
    const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2), o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    return (o1 == 0 && on(p1, p2, q1)) || (o2 == 0 && on(p1, p2, q2)) || (o3 == 0 && on(q1, q2, p1)) ||
           (o4 == 0 && on(q1, q2, p2));
}

// Crossing-number point-in-polygon, independent of the half-plane test under test.
bool inside_polygon(const std::vector<Vec2>& poly, Vec2 p) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        if ((poly[i].y > p.y) != (poly[j].y > p.y) &&
            p.x < (poly[j].x - poly[i].x) * (p.y - poly[i].y) / (poly[j].y - poly[i].y) + poly[i].x) {
            in = !in;
        }
    }
    return in;
}

// Compares set membership with a rotation predicate just off every endpoint
// and at scattered rotations.
template <class Pred>
void expect_matches_rotation(const TIntervalSet& s, Pred pred, const char* label) {
    std::vector<double> probes;
    for (const TInterval& it : s.intervals()) {
        for (double e : {it.lo, it.hi}) {
            if (!std::isfinite(e)) continue;
            probes.push_back(e - 1e-6);
            probes.push_back(e + 1e-6);
        }
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> phi(-kPi, kPi);
    for (int i = 0; i < 2000; ++i) probes.push_back(std::tan(0.5 * phi(rng)));
    for (double t : probes) {
        bool near_end = false;
        for (const TInterval& it : s.intervals()) {
            near_end = near_end || std::abs(t - it.lo) < 1e-7 || std::abs(t - it.hi) < 1e-7;
        }
        if (near_end) continue;
        EXPECT_EQ(s.contains(t), pred(test::rotation_of(t))) << label << " t=" << t << " set " << s;
    }
}

void expect_interval(const TInterval& got, double lo, double hi, double tol = 1e-12) {
    if (std::isinf(lo)) EXPECT_EQ(got.lo, lo);
    else EXPECT_NEAR(got.lo, lo, tol);
    if (std::isinf(hi)) EXPECT_EQ(got.hi, hi);
    else EXPECT_NEAR(got.hi, hi, tol);
}

ConvexHitbox rotated_half_turn(const ConvexHitbox& h) {
    std::vector<Vec2> v;
    for (Vec2 p : h.vertices()) v.push_back(-p);
    return ConvexHitbox(v);
}

Obstacle transform_obstacle(const Obstacle& o, double rot, Vec2 shift) {
    auto tf = [&](Vec2 p) { return p.rotated(rot) + shift; };
    if (const auto* p = std::get_if<PointObstacle>(&o)) return make_point(tf(p->p));
    if (const auto* s = std::get_if<SegmentObstacle>(&o)) return make_segment(tf(s->a), tf(s->b));
    const auto& l = std::get<LineObstacle>(o);
    return make_line(tf(l.point), l.direction.rotated(rot));
}

}  // namespace

TEST(ConvexHitbox, Validation) {
    EXPECT_THROW(ConvexHitbox({{0, 0}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(ConvexHitbox({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);  // clockwise
    EXPECT_THROW(ConvexHitbox({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), std::invalid_argument);  // collinear
    EXPECT_THROW(ConvexHitbox({{0, 0}, {2, 0}, {0.5, 0.2}, {2, 2}, {0, 2}}), std::invalid_argument);  // reflex
    const ConvexHitbox sq = ConvexHitbox::square(0.34);
    EXPECT_EQ(sq.vertices().size(), 4u);
    EXPECT_NEAR(sq.reach(), 0.17 * std::sqrt(2.0), 1e-15);
}

TEST(HitboxAt, IdentityTranslationRotation) {
    const ConvexHitbox sq = ConvexHitbox::square(2.0);
    const std::vector<Vec2> body(sq.vertices().begin(), sq.vertices().end());
    EXPECT_TRUE(same_vertex_set(hitbox_at(sq, Pose()), body, 0.0));
    std::vector<Vec2> shifted;
    for (Vec2 v : body) shifted.push_back(v + Vec2{3, -1});
    EXPECT_TRUE(same_vertex_set(hitbox_at(sq, Pose(3, -1, 0)), shifted, 1e-15));
    const std::vector<Vec2> turned = hitbox_at(sq, Pose(0, 0, kPi / 2));
    EXPECT_TRUE(same_vertex_set(turned, body, 1e-15));
    for (std::size_t j = 0; j < body.size(); ++j) {
        EXPECT_NEAR(turned[j].x, -body[j].y, 1e-15);
        EXPECT_NEAR(turned[j].y, body[j].x, 1e-15);
    }
}

TEST(PointInHitbox, ClosedSquare) {
    const std::vector<Vec2> sq = hitbox_at(ConvexHitbox::square(2.0), Pose());
    EXPECT_TRUE(point_in_hitbox(sq, {0, 0}));
    EXPECT_FALSE(point_in_hitbox(sq, {5, 5}));
    EXPECT_TRUE(point_in_hitbox(sq, {1, 1}));
    EXPECT_TRUE(point_in_hitbox(sq, {1, 0.3}));
    EXPECT_FALSE(point_in_hitbox(sq, {1 + 1e-12, 0.3}));
}

TEST(StraightSweepHull, AxisAlignedMoveIsRectangle) {
    const ConvexHitbox sq = ConvexHitbox::square(1.0);
    const std::vector<Vec2> hull = straight_sweep_hull(sq, Pose(0, 0, 0), Pose(3, 0, 0));
    EXPECT_TRUE(same_vertex_set(hull, {{-0.5, -0.5}, {3.5, -0.5}, {3.5, 0.5}, {-0.5, 0.5}}, 1e-15));
}

TEST(StraightSweepHull, DiagonalMoveIsHexagon) {
    const ConvexHitbox sq = ConvexHitbox::square(1.0);
    const std::vector<Vec2> hull = straight_sweep_hull(sq, Pose(0, 0, 0), Pose(2, 1.5, 0));
    std::vector<Vec2> pts = hitbox_at(sq, Pose(0, 0, 0));
    for (Vec2 v : hitbox_at(sq, Pose(2, 1.5, 0))) pts.push_back(v);
    EXPECT_EQ(hull.size(), 6u);
    EXPECT_TRUE(same_vertex_set(hull, gift_wrap(pts), 1e-15));
}

TEST(StraightSweepHull, ZeroMoveAndHeadingMismatch) {
    const ConvexHitbox sq = ConvexHitbox::square(1.0);
    EXPECT_TRUE(same_vertex_set(straight_sweep_hull(sq, Pose(1, 1, 0.3), Pose(1, 1, 0.3)),
                                hitbox_at(sq, Pose(1, 1, 0.3)), 1e-15));
    EXPECT_THROW(straight_sweep_hull(sq, Pose(0, 0, 0), Pose(1, 0, 0.1)), HeadingMismatchError);
}

TEST(StraightCollision, Examples) {
    const std::vector<Vec2> rect{{0, 0}, {4, 0}, {4, 1}, {0, 1}};
    EXPECT_TRUE(straight_collision(rect, make_point({2, 0.5})));
    EXPECT_FALSE(straight_collision(rect, make_point({2, 1.5})));
    EXPECT_TRUE(straight_collision(rect, make_segment({1, -1}, {2, 2})));
    EXPECT_FALSE(straight_collision(rect, make_segment({5, -1}, {6, 2})));
    EXPECT_FALSE(straight_collision(rect, make_line({0, 2}, {1, 0})));
    EXPECT_TRUE(straight_collision(rect, make_line({0, 1}, {1, 0})));  // touching
    EXPECT_TRUE(straight_collision(rect, make_line({2, 0}, {1, 1})));
}

TEST(StraightCollision, SegmentsMatchIntersectionOracle) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 20000; ++i) {
        std::vector<Vec2> pts;
        for (int k = 0; k < 6; ++k) pts.push_back({u(rng), u(rng)});
        const std::vector<Vec2> hull = convex_hull(pts);
        if (hull.size() < 3) continue;
        const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
        bool expected = inside_polygon(hull, a) || inside_polygon(hull, b);
        for (std::size_t j = 0; j < hull.size(); ++j) {
            expected = expected || segments_intersect(a, b, hull[j], hull[(j + 1) % hull.size()]);
        }
        ASSERT_EQ(straight_collision(hull, make_segment(a, b)), expected);
    }
}

TEST(ConvexHull, MatchesGiftWrapping) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 2000; ++i) {
        std::vector<Vec2> pts;
        for (int k = 0; k < 12; ++k) pts.push_back({u(rng), u(rng)});
        ASSERT_TRUE(same_vertex_set(convex_hull(pts), gift_wrap(pts), 0.0));
    }
}

TEST(MotionInterval, Examples) {
    const TIntervalSet q = t_interval_motion(kPi / 2, 1.0, 0.0);
    ASSERT_EQ(q.intervals().size(), 1u);
    expect_interval(q.intervals()[0], 0.0, 1.0);
    const TIntervalSet r = t_interval_motion(-kPi / 2, 1.0, 0.0);
    ASSERT_EQ(r.intervals().size(), 1u);
    expect_interval(r.intervals()[0], -1.0, 0.0);
    const TIntervalSet w = t_interval_motion(1.5 * kPi, 1.0, 0.0);
    ASSERT_EQ(w.intervals().size(), 2u);
    expect_interval(w.intervals()[0], -kInf, -1.0);
    expect_interval(w.intervals()[1], 0.0, kInf);
    EXPECT_TRUE(t_interval_motion(kTwoPi, 1.0, 0.0).is_all());
    EXPECT_TRUE(t_interval_motion(-7.0, 0.6, 0.8).is_all());
}

TEST(MotionInterval, MatchesExplicitRotationRange) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> ang(-kPi, kPi), span(-1.99 * kPi, 1.99 * kPi);
    for (int i = 0; i < 3000; ++i) {
        const double mu = ang(rng), td = span(rng);
        const TIntervalSet s = t_interval_motion(td, std::cos(mu), std::sin(mu));
        // Rotations run from -mu to -mu + td.
        const double lo = std::min(-mu, -mu + td), hi = std::max(-mu, -mu + td);
        expect_matches_rotation(
            s,
            [&](double phi) {
                for (int k = -3; k <= 3; ++k) {
                    const double p = phi + k * kTwoPi;
                    if (p >= lo && p <= hi) return true;
                }
                return false;
            },
            "motion");
        if (HasFailure()) return;
    }
}

TEST(EdgeInterval, EqualDistances) {
    EXPECT_EQ(edge_interval_branch(1, 1, -1, 2), IntervalBranch::equal_distance);
    const TIntervalSet s = t_intervals_edge(1, 1, -1, 2);
    ASSERT_EQ(s.intervals().size(), 1u);
    expect_interval(s.intervals()[0], -1.0, 2.0);
    expect_matches_rotation(s, [](double p) { return test::edge_meets_line(1, 1, -1, 2, p); }, "edge eq");
}

TEST(EdgeInterval, FartherEdgeTwoBranches) {
    EXPECT_EQ(edge_interval_branch(2, 1, -1, 2), IntervalBranch::monotone);
    const TIntervalSet s = t_intervals_edge(2, 1, -1, 2);
    ASSERT_EQ(s.intervals().size(), 2u);
    const double r7 = std::sqrt(7.0);
    expect_interval(s.intervals()[0], -1.0, (2.0 - r7) / 3.0);
    expect_interval(s.intervals()[1], 1.0 / 3.0, (2.0 + r7) / 3.0);
    EXPECT_NEAR(s.intervals()[0].hi, -0.2152504370215302, 1e-15);
    EXPECT_NEAR(s.intervals()[1].hi, 1.5485837703548635, 1e-15);
    expect_matches_rotation(s, [](double p) { return test::edge_meets_line(2, 1, -1, 2, p); }, "edge gt");
}

TEST(EdgeInterval, NearerEdgeInsideToAbove) {
    EXPECT_EQ(edge_interval_branch(1, 2, -1, 2), IntervalBranch::inside_to_above);
    const TIntervalSet s = t_intervals_edge(1, 2, -1, 2);
    ASSERT_EQ(s.intervals().size(), 1u);
    expect_interval(s.intervals()[0], 1.0 / 3.0, 1.0);
    expect_matches_rotation(s, [](double p) { return test::edge_meets_line(1, 2, -1, 2, p); }, "edge lt");
}

TEST(ObstacleInterval, EqualDistances) {
    EXPECT_EQ(obstacle_interval_branch(1, 1, -1, 2), IntervalBranch::equal_distance);
    const TIntervalSet s = t_intervals_obstacle(1, 1, -1, 2);
    ASSERT_EQ(s.intervals().size(), 1u);
    expect_interval(s.intervals()[0], -2.0, 1.0);
    expect_matches_rotation(s, [](double p) { return test::line_meets_segment(1, 1, -1, 2, p); }, "obs eq");
}

TEST(ObstacleInterval, FartherLineStraddles) {
    EXPECT_EQ(obstacle_interval_branch(2, 1, -2, 2), IntervalBranch::straddles);
    const TIntervalSet s = t_intervals_obstacle(2, 1, -2, 2);
    ASSERT_EQ(s.intervals().size(), 2u);
    expect_interval(s.intervals()[0], -1.0, -1.0 / 3.0);
    expect_interval(s.intervals()[1], 1.0 / 3.0, 1.0);
    expect_matches_rotation(s, [](double p) { return test::line_meets_segment(2, 1, -2, 2, p); }, "obs gt");
}

TEST(ObstacleInterval, NearerLineTwoBranches) {
    EXPECT_EQ(obstacle_interval_branch(1, 2, -1, 2), IntervalBranch::monotone);
    const TIntervalSet s = t_intervals_obstacle(1, 2, -1, 2);
    ASSERT_EQ(s.intervals().size(), 2u);
    const double r7 = std::sqrt(7.0);
    expect_interval(s.intervals()[0], (-2.0 - r7) / 3.0, -1.0 / 3.0);
    expect_interval(s.intervals()[1], (-2.0 + r7) / 3.0, 1.0);
    expect_matches_rotation(s, [](double p) { return test::line_meets_segment(1, 2, -1, 2, p); }, "obs lt");
}

TEST(IntervalBranches, EveryThresholdCaseMatchesRotation) {
    struct Case {
        double x1, x2;
        IntervalBranch branch;
    };
    // Threshold sqrt(2^2 - 1^2) = sqrt(3) for both the nearer edge and the farther obstacle line.
    const Case cases[] = {
        {-3.0, -2.0, IntervalBranch::both_below}, {-3.0, 0.5, IntervalBranch::below_to_inside},
        {-3.0, 3.0, IntervalBranch::straddles},   {-1.0, 1.0, IntervalBranch::inside},
        {-1.0, 2.5, IntervalBranch::inside_to_above}, {2.0, 3.0, IntervalBranch::both_above},
    };
    for (const Case& c : cases) {
        EXPECT_EQ(edge_interval_branch(1, 2, c.x1, c.x2), c.branch);
        const TIntervalSet e = t_intervals_edge(1, 2, c.x1, c.x2);
        expect_matches_rotation(e, [&](double p) { return test::edge_meets_line(1, 2, c.x1, c.x2, p); }, "edge");
        EXPECT_EQ(obstacle_interval_branch(2, 1, c.x1, c.x2), c.branch);
        const TIntervalSet o = t_intervals_obstacle(2, 1, c.x1, c.x2);
        expect_matches_rotation(o, [&](double p) { return test::line_meets_segment(2, 1, c.x1, c.x2, p); }, "obs");
        EXPECT_EQ(e.empty(), c.branch == IntervalBranch::inside);
        EXPECT_EQ(o.empty(), c.branch == IntervalBranch::inside);
    }
}

TEST(IntervalBranches, RandomDistancesMatchRotation) {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> h(0.0, 2.0), x(-3.0, 3.0);
    for (int i = 0; i < 400; ++i) {
        const double ha = h(rng), hb = h(rng);
        double x1 = x(rng), x2 = x(rng);
        if (x1 > x2) std::swap(x1, x2);
        expect_matches_rotation(t_intervals_edge(ha, hb, x1, x2),
                                [&](double p) { return test::edge_meets_line(ha, hb, x1, x2, p); }, "edge");
        expect_matches_rotation(t_intervals_obstacle(ha, hb, x1, x2),
                                [&](double p) { return test::line_meets_segment(ha, hb, x1, x2, p); }, "obs");
        if (HasFailure()) return;
    }
}

TEST(IntervalBranches, DegenerateCenterRejected) {
    EXPECT_THROW(t_intervals_edge(0.0, 0.0, -1, 1), DegenerateCenterError);
    EXPECT_THROW(t_intervals_obstacle(1e-13, 1e-13, -1, 1), DegenerateCenterError);
    EXPECT_THROW(t_intervals_edge(1, 2, 1, -1), std::invalid_argument);
}

TEST(LineParam, NonNegativeDistance) {
    const LineParam a = line_param({0, -2}, {1, 0});
    EXPECT_DOUBLE_EQ(a.h, 2.0);
    EXPECT_DOUBLE_EQ(a.u.x, -1.0);
    const LineParam b = line_param({3, 2}, {1, 0});
    EXPECT_DOUBLE_EQ(b.h, 2.0);
    EXPECT_DOUBLE_EQ(b.u.x, 1.0);
}

TEST(ArcEdgePointEntry, Examples) {
    const ArcSegment quarter(Pose(0, 0, 0), 1.0, kPi / 2);
    // Edge on the line x = 1, y in [-0.5, 0.5].
    const EdgeFrame edge{{{0.0, -1.0}, 1.0}, -0.5, 0.5};
    const double deg10 = kPi / 18;
    EXPECT_TRUE(arc_edge_point_entry(quarter, edge, unit_vector(deg10) * 1.1));
    EXPECT_FALSE(arc_edge_point_entry(quarter, edge, {0.5, 0.0}));  // |P| < h
    EXPECT_FALSE(arc_edge_point_entry(quarter, edge, {1.3, 0.0}));  // beyond the edge's far vertex radius
    EXPECT_THROW(arc_edge_point_entry(ArcSegment(Pose(), 0.0, 1.0), edge, {1, 0}), StraightArcError);
}

TEST(ArcEdgePointEntry, MatchesDenseRotation) {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(-1.5, 1.5), span(0.1, 1.9 * kPi);
    const EdgeFrame edge{{{0.0, -1.0}, 1.0}, -0.5, 0.5};
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const double td = span(rng);
        const ArcSegment arc(Pose(), 1.0, td);
        const Vec2 p{u(rng), u(rng)};
        // Rotate the edge through [-td/2, td/2]; the point lies on it when the
        // rotated-back point changes side of x = 1 with its y inside the range.
        bool hit = false, near = false;
        Vec2 prev = p.rotated(0.5 * td);
        const int steps = static_cast<int>(td / 1e-4) + 1;
        for (int k = 1; k <= steps; ++k) {
            const Vec2 q = p.rotated(0.5 * td - td * k / steps);
            const double f0 = prev.x - 1.0, f1 = q.x - 1.0;
            if ((f0 <= 0.0) != (f1 <= 0.0)) {
                const double y = prev.y + (q.y - prev.y) * f0 / (f0 - f1);
                if (std::abs(std::abs(y) - 0.5) < 1e-3) near = true;
                hit = hit || std::abs(y) <= 0.5;
            }
            prev = q;
        }
        if (std::abs(p.norm() - 1.0) < 1e-3 || near) continue;
        EXPECT_EQ(arc_edge_point_entry(arc, edge, p), hit) << p.x << ", " << p.y << " span " << td;
        ++checked;
    }
    EXPECT_GT(checked, 250);
}

TEST(ArcCollision, Examples) {
    const ConvexHitbox sq = ConvexHitbox::square(0.34);
    const ArcSegment arc(Pose(0, 0, 0), 1.0, 1.0);
    EXPECT_FALSE(arc_collision(arc, sq, make_point({10, 10}), true));
    EXPECT_TRUE(arc_collision(arc, sq, make_point({0.05, 0.05}), true));
    EXPECT_TRUE(arc_collision(arc, sq, make_point(arc.pose_at(0.5).position()), false));
    EXPECT_FALSE(arc_collision(arc, sq, make_line({0, 5}, {1, 0}), true));
    EXPECT_TRUE(arc_collision(arc, sq, make_line({0, 0.5}, {1, 0}), false));
    EXPECT_TRUE(arc_collision(arc, sq, make_segment({0.3, -1}, {0.3, 1}), false));
}

TEST(BiarcCollision, StartContainmentOnlyWhenFirst) {
    // Large hitbox, short arc: a point at the body origin stays inside throughout.
    const ConvexHitbox big = ConvexHitbox::square(2.0);
    const Biarc b(ArcSegment(Pose(0, 0, 0), 0.5, 0.1), ArcSegment(ArcSegment(Pose(0, 0, 0), 0.5, 0.1).end_pose(), -0.5, 0.1));
    const std::vector<Obstacle> obs{make_point({0.0, 0.0})};
    EXPECT_FALSE(biarc_collision(b, big, obs, false));
    EXPECT_TRUE(biarc_collision(b, big, obs, true));
    EXPECT_FALSE(biarc_collision(b, big, {}, true));
}

TEST(PathCollision, Examples) {
    const ConvexHitbox sq = ConvexHitbox::square(0.34);
    const std::vector<Obstacle> obs{make_point({3.0, 0.0})};
    EXPECT_FALSE(path_collision({}, sq, obs));
    const std::vector<Biarc> one{biarc_equal_chord(Pose(0, 0, 0), Pose(4, 0, 0))};
    EXPECT_TRUE(path_collision(one, sq, obs));
    const std::vector<Biarc> two{biarc_equal_chord(Pose(0, 1, 0), Pose(2, 1, 0)),
                                 biarc_equal_chord(Pose(2, 1, 0), Pose(4, 1, 0))};
    EXPECT_FALSE(path_collision(two, sq, obs));
}

TEST(PathCollision, EqualsFoldOfBiarcChecks) {
    std::mt19937_64 rng(56);
    std::uniform_real_distribution<double> u(-1, 1);
    const ConvexHitbox sq = ConvexHitbox::square(0.34);
    for (int i = 0; i < 200; ++i) {
        std::vector<Pose> poses{Pose(0, 0, 0)};
        for (int k = 1; k <= 4; ++k) poses.push_back(Pose(k, 0.5 * u(rng), 0.5 * u(rng)));
        std::vector<Biarc> plan;
        for (int k = 0; k < 4; ++k) plan.push_back(biarc_equal_chord(poses[k], poses[k + 1]));
        std::vector<Obstacle> obs;
        for (int k = 0; k < 3; ++k) obs.push_back(make_point({2.0 + 2.0 * u(rng), u(rng)}));
        bool expected = false;
        for (std::size_t k = 0; k < plan.size(); ++k) expected = expected || biarc_collision(plan[k], sq, obs, k == 0);
        ASSERT_EQ(path_collision(plan, sq, obs), expected);
    }
}

class SweepProperties : public ::testing::Test {
protected:
    static bool decisive(const ArcSegment& arc, const ConvexHitbox& h, const Obstacle& o) {
        return std::abs(oracle::signed_clearance_oracle(arc, h, o)) >= 2e-3;
    }
};

TEST_F(SweepProperties, ContainmentMonotonicity) {
    std::mt19937_64 rng(57);
    int implications = 0;
    for (int i = 0; i < 1500; ++i) {
        const oracle::ValidationCase c = oracle::random_case(rng);
        Vec2 centroid{};
        for (Vec2 v : c.hitbox.vertices()) centroid += v;
        centroid = centroid / static_cast<double>(c.hitbox.vertices().size());
        std::vector<Vec2> inner;
        for (Vec2 v : c.hitbox.vertices()) inner.push_back(centroid + (v - centroid) * 0.7);
        const ConvexHitbox small(inner);
        const bool hit_small = arc_collision(c.arc, small, c.obstacle, true);
        const bool hit_big = arc_collision(c.arc, c.hitbox, c.obstacle, true);
        if (hit_small) {
            ++implications;
            ASSERT_TRUE(hit_big);
        }
    }
    EXPECT_GT(implications, 100);
}

TEST_F(SweepProperties, ReversalInvariance) {
    std::mt19937_64 rng(58);
    int checked = 0;
    for (int i = 0; i < 1500; ++i) {
        const oracle::ValidationCase c = oracle::random_case(rng);
        if (!decisive(c.arc, c.hitbox, c.obstacle)) continue;
        const bool fwd = arc_collision(c.arc, c.hitbox, c.obstacle, true);
        const bool back = arc_collision(c.arc.reversed(), rotated_half_turn(c.hitbox), c.obstacle, true);
        ASSERT_EQ(fwd, back) << i;
        ++checked;
    }
    EXPECT_GT(checked, 1300);
}

TEST_F(SweepProperties, RigidInvariance) {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> ang(-kPi, kPi), sh(-20, 20);
    int checked = 0;
    for (int i = 0; i < 1500; ++i) {
        const oracle::ValidationCase c = oracle::random_case(rng);
        if (!decisive(c.arc, c.hitbox, c.obstacle)) continue;
        const double rot = ang(rng);
        const Vec2 shift{sh(rng), sh(rng)};
        const Pose s = c.arc.start();
        const ArcSegment moved(Pose(s.position().rotated(rot) + shift, s.theta() + rot), c.arc.curvature(),
                               c.arc.length());
        ASSERT_EQ(arc_collision(c.arc, c.hitbox, c.obstacle, true),
                  arc_collision(moved, c.hitbox, transform_obstacle(c.obstacle, rot, shift), true))
            << i;
        ++checked;
    }
    EXPECT_GT(checked, 1300);
}

TEST_F(SweepProperties, SplitEquivalence) {
    std::mt19937_64 rng(60);
    int checked = 0;
    for (int i = 0; i < 1500; ++i) {
        const oracle::ValidationCase c = oracle::random_case(rng);
        if (!decisive(c.arc, c.hitbox, c.obstacle)) continue;
        const double half = 0.5 * c.arc.length();
        const bool whole = arc_collision(c.arc, c.hitbox, c.obstacle, true);
        const bool split = arc_collision(c.arc.sub_arc(0.0, half), c.hitbox, c.obstacle, true) ||
                           arc_collision(c.arc.sub_arc(half, c.arc.length()), c.hitbox, c.obstacle, true);
        ASSERT_EQ(whole, split) << i;
        ++checked;
    }
    EXPECT_GT(checked, 1300);
}

TEST_F(SweepProperties, OracleAgreementSmoke) {
    std::mt19937_64 rng(61);
    int decisive_cases = 0;
    for (int i = 0; i < 1000; ++i) {
        const oracle::ValidationCase c = oracle::random_case(rng);
        const oracle::CaseOutcome r = oracle::evaluate_case(c);
        if (!r.decisive) continue;
        ++decisive_cases;
        ASSERT_EQ(r.closed_form, r.sampled) << i;
    }
    EXPECT_GT(decisive_cases, 950);
}
