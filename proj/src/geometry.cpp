#include "biarc/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace biarc {

ArcSegment::ArcSegment(Pose start, double curvature, double length)
    : start_(start), curvature_(curvature), length_(length) {
    if (!(length >= 0.0) || !std::isfinite(length)) {
        throw std::invalid_argument("arc length must be finite and non-negative");
    }
    if (!std::isfinite(curvature)) {
        throw std::invalid_argument("arc curvature must be finite");
    }
}

Pose ArcSegment::pose_at(double s) const {
    const double slack = 1e-12 * std::max(1.0, length_);
    if (s < -slack || s > length_ + slack || std::isnan(s)) {
        throw std::out_of_range("arclength " + std::to_string(s) + " outside [0, " +
                                std::to_string(length_) + "]");
    }
    s = std::clamp(s, 0.0, length_);
    const double half = 0.5 * curvature_ * s;
    const double chord = s * sinc(half);
    const double dir = start_.theta() + half;
    return Pose(start_.x() + chord * std::cos(dir), start_.y() + chord * std::sin(dir),
                start_.theta() + curvature_ * s);
}

ArcSegment ArcSegment::reversed() const {
    const Pose end = end_pose();
    return ArcSegment(Pose(end.position(), end.theta() + kPi), -curvature_, length_);
}

ArcSegment ArcSegment::sub_arc(double s0, double s1) const {
    if (s1 < s0) throw std::invalid_argument("sub_arc expects s0 <= s1");
    const Pose a = pose_at(s0);
    return ArcSegment(a, curvature_, std::min(s1, length_) - std::max(s0, 0.0));
}

}  // namespace biarc
