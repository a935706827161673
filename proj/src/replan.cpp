#include "biarc/replan.hpp"

#include <stdexcept>

#include "biarc/errors.hpp"

namespace biarc {

namespace {

constexpr double kPointTol = 1e-9;
constexpr double kFullTurn = kTwoPi - 1e-9;

// Reflection of `p` across the line through `origin` with unit direction `dir`.
Vec2 reflect(Vec2 p, Vec2 origin, Vec2 dir) {
    const Vec2 foot = origin + dir * (p - origin).dot(dir);
    return foot * 2.0 - p;
}

}  // namespace

ReplanParams::ReplanParams(double eta_l, double eta_k) : eta_l_(eta_l), eta_k_(eta_k) {
    if (!(eta_l > 1.0) || !(eta_k > 1.0)) {
        throw std::invalid_argument("replan ratios must exceed 1");
    }
}

ReplanCandidate replan_candidate_detailed(const Biarc& prev, const Pose& a_prime) {
    const Pose target = prev.end_pose();
    const Vec2 b = target.position();
    const ChordFrame frame = chord_frame(a_prime, target);
    const JointLocus locus = joint_locus(frame);
    const ArcSegment& second = prev.arc_b();

    const bool arc_is_line = second.is_straight();
    // Same test joint_locus uses, so the variant below always matches.
    const bool locus_is_line = frame.degenerate();

    ReplanCandidate out;
    Vec2 joint;
    if (arc_is_line && locus_is_line) {
        out.kind = ReplanCase::lines;
        return out;
    }
    if (arc_is_line) {
        out.kind = ReplanCase::reflect_on_arc_line;
        const Vec2 c_new = std::get<CircleLocus>(locus).center;
        joint = reflect(b, c_new, target.heading().perp());
    } else if (locus_is_line) {
        out.kind = ReplanCase::reflect_on_locus_line;
        joint = reflect(b, second.center(), frame.v);
    } else {
        const Vec2 c_new = std::get<CircleLocus>(locus).center;
        const Vec2 c_old = second.center();
        const Vec2 w = c_new - c_old;
        const double wn = w.norm();
        if (wn < kPointTol) {
            out.kind = ReplanCase::concentric;
            joint = joint_for_alpha(frame, 0.0);
        } else {
            out.kind = ReplanCase::circle_circle;
            joint = reflect(b, c_old, w / wn);
        }
    }

    if (distance(joint, b) < kPointTol || distance(joint, a_prime.position()) < kPointTol) {
        return out;
    }
    try {
        Biarc cand = biarc_through_joint(a_prime, target, joint);
        if (std::abs(cand.arc_a().spanned_angle()) >= kFullTurn ||
            std::abs(cand.arc_b().spanned_angle()) >= kFullTurn) {
            return out;
        }
        out.biarc = cand;
    } catch (const PoleError&) {
    } catch (const std::invalid_argument&) {
        // Rounding pushed a near-tangent joint off the locus.
    }
    return out;
}

std::optional<Biarc> replan_candidate(const Biarc& prev, const Pose& a_prime) {
    return replan_candidate_detailed(prev, a_prime).biarc;
}

ReplanChoice replan_select_detailed(const Biarc& prev, const Pose& a_prime, const ReplanParams& params) {
    const std::optional<Biarc> cand = replan_candidate(prev, a_prime);
    std::optional<Biarc> fresh;
    try {
        fresh = biarc_equal_chord(a_prime, prev.end_pose());
    } catch (const PoleError&) {
        if (!cand) throw;
        return {*cand, true};
    }
    if (!cand) return {*fresh, false};
    const BiarcMetrics mc = biarc_metrics(*cand);
    const BiarcMetrics mf = biarc_metrics(*fresh);
    if (mc.l > params.eta_l() * mf.l || std::abs(mc.dk) > params.eta_k() * std::abs(mf.dk)) {
        return {*fresh, false};
    }
    return {*cand, true};
}

Biarc replan_select(const Biarc& prev, const Pose& a_prime, const ReplanParams& params) {
    return replan_select_detailed(prev, a_prime, params).biarc;
}

}  // namespace biarc
