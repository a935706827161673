#pragma once

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "biarc/geometry.hpp"

namespace biarc::test {

inline Pose random_pose(std::mt19937_64& rng, double extent = 5.0) {
    std::uniform_real_distribution<double> pos(-extent, extent);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    return Pose(pos(rng), pos(rng), ang(rng));
}

/// Pose with a position at least `min_gap` away from `other`.
inline Pose random_pose_away(std::mt19937_64& rng, const Pose& other, double min_gap = 1e-3, double extent = 5.0) {
    for (;;) {
        Pose p = random_pose(rng, extent);
        if (distance(p.position(), other.position()) > min_gap) return p;
    }
}

inline double angle_diff(double a, double b) { return std::abs(wrap_angle(a - b)); }

inline ::testing::AssertionResult poses_near(const Pose& a, const Pose& b, double pos_tol, double ang_tol) {
    const double dp = distance(a.position(), b.position());
    const double da = angle_diff(a.theta(), b.theta());
    if (dp <= pos_tol && da <= ang_tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "(" << a.x() << ", " << a.y() << ", " << a.theta() << ") vs (" << b.x()
                                         << ", " << b.y() << ", " << b.theta() << "): position error " << dp
                                         << ", heading error " << da;
}

// Rotation oracles in the frame where both lines share direction u = (1, 0)
// at zero rotation and sit at distances h_a (rotating) and h_b (fixed).

/// Whether the rotating edge [x1, x2] of line a meets line b after rotating by phi.
inline bool edge_meets_line(double h_a, double h_b, double x1, double x2, double phi) {
    const double s = std::sin(phi), c = std::cos(phi);
    const double f1 = x1 * s + h_a * c - h_b;
    const double f2 = x2 * s + h_a * c - h_b;
    return std::min(f1, f2) <= 0.0 && std::max(f1, f2) >= 0.0;
}

/// Whether the rotated full line a meets the fixed segment [x1, x2] of line b.
inline bool line_meets_segment(double h_a, double h_b, double x1, double x2, double phi) {
    const double s = std::sin(phi), c = std::cos(phi);
    const double g1 = -x1 * s + h_b * c - h_a;
    const double g2 = -x2 * s + h_b * c - h_a;
    return std::min(g1, g2) <= 0.0 && std::max(g1, g2) >= 0.0;
}

inline double rotation_of(double t) { return 2.0 * std::atan(t); }

}  // namespace biarc::test
