#include "biarc/biarc.hpp"

#include <algorithm>
#include <stdexcept>

#include "biarc/errors.hpp"

namespace biarc {

namespace {

// |delta| this close to pi means the arc must leave straight away from its target.
constexpr double kPoleDelta = 0.5e-9;
// Half-width of the alpha window around the degenerate-family poles.
constexpr double kPoleAlpha = 1e-9;

double checked_delta(double delta) {
    if (kPi - std::abs(delta) < kPoleDelta) {
        throw PoleError("biarc arc would have infinite length");
    }
    return delta;
}

// Arc leaving `start` that ends at `target`.
ArcSegment arc_to_point(const Pose& start, Vec2 target) {
    const Vec2 d = target - start.position();
    const double dist = d.norm();
    const double delta = checked_delta(wrap_angle(start.theta() - d.angle()));
    return ArcSegment(start, -2.0 * std::sin(delta) / dist, dist / sinc(delta));
}

// Arc leaving `from` that arrives at `end` with end's heading.
ArcSegment arc_from_point(Vec2 from, const Pose& end) {
    const Vec2 d = end.position() - from;
    const double dist = d.norm();
    const double delta = checked_delta(wrap_angle(end.theta() - d.angle()));
    return ArcSegment(Pose(from, end.theta() - 2.0 * delta), 2.0 * std::sin(delta) / dist,
                      dist / sinc(delta));
}

}  // namespace

ChordFrame chord_frame(const Pose& a, const Pose& b) {
    const Vec2 ab = b.position() - a.position();
    const double chord = ab.norm();
    if (!(chord > 1e-12)) {
        throw CoincidentEndpointsError("chord endpoints coincide");
    }
    ChordFrame f;
    f.a = a;
    f.b = b;
    f.u = ab / chord;
    f.v = f.u.perp();
    f.chord = chord;
    f.mid = a.position() + ab * 0.5;
    const double psi = ab.angle();
    f.phi_a = wrap_angle(a.theta() - psi);
    f.phi_b = wrap_angle(b.theta() - psi);
    f.gamma = f.phi_b - f.phi_a;
    f.phi_m = 0.5 * (f.phi_a + f.phi_b);
    f.alpha_ha = f.phi_m + f.phi_a;
    f.alpha_hb = f.phi_m + f.phi_b;
    return f;
}

JointLocus joint_locus(const ChordFrame& frame) {
    if (frame.degenerate()) {
        return LineLocus{frame.a.position(), frame.u};
    }
    const double half = 0.5 * frame.gamma;
    const double s = std::sin(half);
    const Vec2 center = frame.mid + frame.v * (0.5 * frame.chord * std::cos(half) / s);
    return CircleLocus{center, 0.5 * frame.chord / std::abs(s)};
}

Pose Biarc::pose_at(double s) const {
    if (s <= arc_a_.length()) return arc_a_.pose_at(s);
    return arc_b_.pose_at(s - arc_a_.length());
}

bool Biarc::has_corner() const {
    return std::abs(wrap_angle(arc_a_.end_pose().theta() - arc_b_.start().theta())) > 1e-9;
}

BiarcMetrics biarc_metrics(const Biarc& b) {
    BiarcMetrics m{};
    m.l_a = b.arc_a().length();
    m.l_b = b.arc_b().length();
    m.l = m.l_a + m.l_b;
    m.k_a = b.arc_a().curvature();
    m.k_b = b.arc_b().curvature();
    m.dk = m.k_b - m.k_a;
    return m;
}

Biarc biarc_through_joint(const Pose& a, const Pose& b, Vec2 joint) {
    const double chord = distance(a.position(), b.position());
    const double tol = 1e-12 * std::max(1.0, chord);
    if (distance(joint, a.position()) <= tol) {
        return Biarc(ArcSegment(a, 0.0, 0.0), arc_from_point(a.position(), b));
    }
    if (distance(joint, b.position()) <= tol) {
        return Biarc(arc_to_point(a, b.position()), ArcSegment(b, 0.0, 0.0));
    }
    const ArcSegment first = arc_to_point(a, joint);
    const ArcSegment second = arc_from_point(joint, b);
    const double joint_heading = a.theta() + first.spanned_angle();
    if (std::abs(wrap_angle(joint_heading - second.start().theta())) > 1e-6) {
        throw std::invalid_argument("joint point is not on the joint locus");
    }
    // Take the joint heading from the first arc so the tangent is continuous by construction.
    return Biarc(first, ArcSegment(Pose(joint, joint_heading), second.curvature(), second.length()));
}

Vec2 joint_for_alpha(const ChordFrame& frame, double alpha) {
    const Vec2 pa = frame.a.position();
    const Vec2 pb = frame.b.position();
    if (frame.degenerate()) {
        return pa * (0.5 - alpha) + pb * (0.5 + alpha);
    }
    const double half = 0.5 * frame.gamma;
    const double s = std::sin(half);
    const double radius = 0.5 * frame.chord / std::abs(s);
    // Start from the equal-chord joint and rotate about the center; this avoids
    // subtracting two large vectors when the locus radius is huge.
    const Vec2 equal = frame.mid - frame.v * (0.5 * frame.chord * std::tan(0.25 * frame.gamma));
    const Vec2 e = frame.v * (s > 0.0 ? -1.0 : 1.0);
    const double sh = std::sin(0.5 * alpha);
    return equal + (e * (-2.0 * sh * sh) + e.perp() * std::sin(alpha)) * radius;
}

Biarc biarc_with_alpha(const ChordFrame& frame, double alpha) {
    if (frame.degenerate() && std::abs(std::abs(alpha) - 0.5) < kPoleAlpha &&
        std::abs(std::sin(frame.phi_a)) > 1e-12) {
        throw PoleError("alpha at an infinite-curvature pole of the degenerate family");
    }
    if (!frame.degenerate()) {
        // Snap the single-arc limits so rounding in the rotation cannot leave a sliver arc.
        if (std::abs(wrap_angle(alpha - 0.5 * frame.gamma)) < 1e-12) {
            return biarc_through_joint(frame.a, frame.b, frame.b.position());
        }
        if (std::abs(wrap_angle(alpha + 0.5 * frame.gamma)) < 1e-12) {
            return biarc_through_joint(frame.a, frame.b, frame.a.position());
        }
    }
    return biarc_through_joint(frame.a, frame.b, joint_for_alpha(frame, alpha));
}

Biarc biarc_equal_chord(const ChordFrame& frame) {
    const Vec2 joint = frame.degenerate()
                           ? frame.mid
                           : frame.mid - frame.v * (0.5 * frame.chord * std::tan(0.25 * frame.gamma));
    return biarc_through_joint(frame.a, frame.b, joint);
}

Biarc biarc_equal_chord(const Pose& a, const Pose& b) { return biarc_equal_chord(chord_frame(a, b)); }

std::vector<double> sample_stations(const Biarc& b, double ds) {
    if (!(ds > 0.0)) throw std::invalid_argument("sample spacing must be positive");
    const double total = b.length();
    const double eps = 1e-9 * ds;
    std::vector<double> s;
    for (std::size_t k = 0;; ++k) {
        const double sk = static_cast<double>(k) * ds;
        if (sk >= total - eps) break;
        s.push_back(sk);
    }
    s.push_back(total);
    const double joint = b.arc_a().length();
    const bool present = std::any_of(s.begin(), s.end(),
                                     [&](double x) { return std::abs(x - joint) <= eps; });
    if (!present) s.insert(std::upper_bound(s.begin(), s.end(), joint), joint);
    return s;
}

std::vector<Pose> sample_biarc(const Biarc& b, double ds) {
    const std::vector<double> stations = sample_stations(b, ds);
    std::vector<Pose> out;
    out.reserve(stations.size());
    for (double s : stations) out.push_back(b.pose_at(s));
    return out;
}

}  // namespace biarc
