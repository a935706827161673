#pragma once

#include <optional>

#include "biarc/biarc.hpp"

namespace biarc {

/// Quality bounds for accepting a replanned biarc over a fresh equal-chord one.
class ReplanParams {
public:
    ReplanParams() = default;
    /// Both ratios must exceed 1; throws std::invalid_argument otherwise.
    ReplanParams(double eta_l, double eta_k);

    double eta_l() const { return eta_l_; }
    double eta_k() const { return eta_k_; }

private:
    double eta_l_ = 2.0;
    double eta_k_ = 2.0;
};

/// Which pair of loci produced the candidate joint.
enum class ReplanCase {
    circle_circle,  ///< second-arc circle meets the new joint circle
    concentric,     ///< the two circles coincide; equal-chord joint used
    reflect_on_arc_line,    ///< previous second arc is straight
    reflect_on_locus_line,  ///< new start heading equals the goal heading
    lines,          ///< both loci are lines; no candidate
};

struct ReplanCandidate {
    std::optional<Biarc> biarc;
    ReplanCase kind = ReplanCase::lines;
};

/// Candidate biarc from `a_prime` to the end pose of `prev` whose second arc lies
/// on the circle (or line) carrying prev's second arc. Empty when both loci are
/// lines, when the new joint falls on B or on a_prime, or when an arc would span
/// a full turn.
ReplanCandidate replan_candidate_detailed(const Biarc& prev, const Pose& a_prime);
std::optional<Biarc> replan_candidate(const Biarc& prev, const Pose& a_prime);

struct ReplanChoice {
    Biarc biarc;
    bool used_candidate = false;
};

/// Keeps the candidate unless it is missing, longer than eta_l times the
/// equal-chord biarc, or has a curvature jump larger than eta_k times it.
ReplanChoice replan_select_detailed(const Biarc& prev, const Pose& a_prime, const ReplanParams& params);
Biarc replan_select(const Biarc& prev, const Pose& a_prime, const ReplanParams& params);

}  // namespace biarc
