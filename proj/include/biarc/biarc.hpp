#pragma once

#include <span>
#include <variant>
#include <vector>

#include "biarc/geometry.hpp"

namespace biarc {

/// Chord-relative description of a pair of poses A, B.
struct ChordFrame {
    Pose a;
    Pose b;
    Vec2 u;         ///< unit vector A -> B
    Vec2 v;         ///< u rotated by +90 degrees
    double chord;   ///< |AB|
    Vec2 mid;       ///< midpoint of AB
    double phi_a;   ///< heading at A relative to AB, in (-pi, pi]
    double phi_b;   ///< heading at B relative to AB, in (-pi, pi]
    double gamma;   ///< phi_b - phi_a, in (-2pi, 2pi)
    double phi_m;   ///< (phi_a + phi_b) / 2
    double alpha_ha;
    double alpha_hb;

    /// True when the headings agree modulo 2pi, so the joint locus is the line AB.
    bool degenerate() const { return std::abs(wrap_angle(gamma)) < kDegenerateGamma; }

    static constexpr double kDegenerateGamma = 1e-9;
};

/// Throws CoincidentEndpointsError when |AB| <= 1e-12.
ChordFrame chord_frame(const Pose& a, const Pose& b);

struct CircleLocus {
    Vec2 center;
    double radius;
};

struct LineLocus {
    Vec2 point;      ///< A
    Vec2 direction;  ///< unit, A -> B
};

/// Every admissible joint point of a biarc from A to B lies on this circle or line.
using JointLocus = std::variant<CircleLocus, LineLocus>;

JointLocus joint_locus(const ChordFrame& frame);

/// Two circular arcs (or straight segments) sharing a tangent at the joint.
class Biarc {
public:
    Biarc() = default;
    Biarc(ArcSegment arc_a, ArcSegment arc_b) : arc_a_(arc_a), arc_b_(arc_b) {}

    const ArcSegment& arc_a() const { return arc_a_; }
    const ArcSegment& arc_b() const { return arc_b_; }

    Pose start_pose() const { return arc_a_.start(); }
    Pose end_pose() const { return arc_b_.end_pose(); }
    Vec2 joint() const { return arc_b_.start().position(); }
    double length() const { return arc_a_.length() + arc_b_.length(); }

    /// Pose at arclength s measured from the start of arc_a.
    Pose pose_at(double s) const;

    /// True when the heading jumps at the joint. Only the single-arc limits of
    /// the alpha family (joint at A or B) produce this.
    bool has_corner() const;

private:
    ArcSegment arc_a_;
    ArcSegment arc_b_;
};

struct BiarcMetrics {
    double l_a;
    double l_b;
    double l;
    double k_a;
    double k_b;
    double dk;  ///< k_b - k_a
};

BiarcMetrics biarc_metrics(const Biarc& b);

/// Builds the biarc from A to B whose joint is `joint`. The joint must lie on
/// the joint locus of (a, b). Throws PoleError when either arc would have to
/// leave its endpoint straight away from the other endpoint (infinite length).
///
/// A joint coinciding with A or B yields a zero-length arc there and the other
/// arc connects A to B alone; the tangent then jumps at that endpoint.
Biarc biarc_through_joint(const Pose& a, const Pose& b, Vec2 joint);

/// Joint point for parameter alpha.
///
/// Non-degenerate frames: alpha is the angle at the locus center measured from
/// the equal-chord joint, counterclockwise; alpha = -gamma/2 gives J = A and
/// alpha = gamma/2 gives J = B. Degenerate frames (equal headings): alpha is
/// dimensionless and J = A (1/2 - alpha) + B (1/2 + alpha).
Vec2 joint_for_alpha(const ChordFrame& frame, double alpha);

/// Member of the one-parameter biarc family. Throws PoleError within 1e-9 of
/// an infinite-length pole.
Biarc biarc_with_alpha(const ChordFrame& frame, double alpha);

/// The alpha = 0 member: joint on the perpendicular bisector of AB.
Biarc biarc_equal_chord(const Pose& a, const Pose& b);
Biarc biarc_equal_chord(const ChordFrame& frame);

/// Poses every `ds` of arclength plus the joint and the end pose, in order of
/// increasing arclength. A joint that coincides with a grid sample is emitted once.
std::vector<Pose> sample_biarc(const Biarc& b, double ds);

/// Arclength positions used by sample_biarc.
std::vector<double> sample_stations(const Biarc& b, double ds);

}  // namespace biarc
