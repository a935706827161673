#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "biarc/biarc.hpp"
#include "biarc/collide.hpp"

/// Brute-force references. Everything here samples poses densely and tests the
/// placed polygon directly; nothing depends on the closed-form sweep.
namespace biarc::oracle {

class OracleConfig {
public:
    OracleConfig() = default;
    /// All values must be positive; throws std::invalid_argument otherwise.
    OracleConfig(double ds, double dtheta_max, double clearance_margin);

    double ds() const { return ds_; }
    double dtheta_max() const { return dtheta_max_; }
    double clearance_margin() const { return clearance_margin_; }

private:
    double ds_ = 1e-3;
    double dtheta_max_ = 1e-3;
    double clearance_margin_ = 2e-3;
};

/// Poses along the arc, evenly spaced, no further apart than ds in arclength
/// or dtheta_max in heading. Both endpoints included.
std::vector<Pose> sample_poses(const ArcSegment& arc, double ds, double dtheta_max);
std::vector<Pose> sample_poses(const Biarc& b, double ds, double dtheta_max);

/// Distance between a convex polygon and an obstacle when they are disjoint,
/// minus the smallest separating translation when they overlap; zero on contact.
double signed_distance(std::span<const Vec2> polygon, const Obstacle& o);

/// Unsigned distance between a convex polygon and an obstacle (zero when touching or overlapping).
double distance(std::span<const Vec2> polygon, const Obstacle& o);

bool swept_collision_oracle(const ArcSegment& motion, const ConvexHitbox& h, const Obstacle& o,
                            const OracleConfig& cfg = {});
bool swept_collision_oracle(const Biarc& motion, const ConvexHitbox& h, const Obstacle& o,
                            const OracleConfig& cfg = {});

/// Minimum signed distance over the sampled poses.
double signed_clearance_oracle(const ArcSegment& motion, const ConvexHitbox& h, const Obstacle& o,
                               const OracleConfig& cfg = {});
double signed_clearance_oracle(const Biarc& motion, const ConvexHitbox& h, const Obstacle& o,
                               const OracleConfig& cfg = {});

/// Sum of chord lengths between points ds apart along each arc of the biarc.
double polyline_length_oracle(const Biarc& b, double ds);

struct AlphaRow {
    double alpha;
    double l_a;
    double l_b;
    double l;
    double k_a;
    double k_b;
    double dk;
    bool pole;  ///< construction failed; numeric fields are NaN
};

std::vector<AlphaRow> alpha_scan(const ChordFrame& frame, std::span<const double> alphas);

/// One randomized sweep-vs-obstacle trial.
struct ValidationCase {
    ArcSegment arc;
    ConvexHitbox hitbox;
    Obstacle obstacle;
};

/// Random arc (some straight), random convex hitbox unless `fixed_hitbox` is
/// given, and a point, segment, or line obstacle placed near the swept region.
ValidationCase random_case(std::mt19937_64& rng, const ConvexHitbox* fixed_hitbox = nullptr);

struct CaseOutcome {
    bool closed_form;
    bool sampled;
    double clearance;
    bool decisive;  ///< |clearance| >= margin
};

/// Compares the closed form (start containment enabled) against the oracle.
CaseOutcome evaluate_case(const ValidationCase& c, const OracleConfig& cfg = {});

}  // namespace biarc::oracle
