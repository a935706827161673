#pragma once

#include <cmath>
#include <numbers>

namespace biarc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
    constexpr double squared_norm() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
    /// Rotated by +90 degrees.
    constexpr Vec2 perp() const { return {-y, x}; }
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
    Vec2 normalized() const { return *this / norm(); }
    double angle() const { return std::atan2(y, x); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Maps an angle into (-pi, pi].
inline double wrap_angle(double a) {
    double r = std::remainder(a, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

/// Unnormalized sinc, sin(x)/x, with a Taylor branch near zero.
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
    }
    return std::sin(x) / x;
}

/// Planar position and heading. The heading is always kept in (-pi, pi].
class Pose {
public:
    Pose() = default;
    Pose(double x, double y, double theta) : p_(x, y), theta_(wrap_angle(theta)) {}
    Pose(Vec2 p, double theta) : p_(p), theta_(wrap_angle(theta)) {}

    double x() const { return p_.x; }
    double y() const { return p_.y; }
    double theta() const { return theta_; }
    Vec2 position() const { return p_; }
    Vec2 heading() const { return unit_vector(theta_); }

    /// Expresses `local` (given in this pose's frame) in the world frame.
    Vec2 to_world(Vec2 local) const { return p_ + local.rotated(theta_); }

    bool operator==(const Pose&) const = default;

private:
    Vec2 p_{};
    double theta_ = 0.0;
};

/// Circular arc or straight segment: start pose, signed curvature, length.
/// Positive curvature turns counterclockwise; zero curvature is a straight line.
class ArcSegment {
public:
    ArcSegment() = default;
    ArcSegment(Pose start, double curvature, double length);

    const Pose& start() const { return start_; }
    double curvature() const { return curvature_; }
    double length() const { return length_; }

    /// Signed heading change over the whole arc.
    double spanned_angle() const { return curvature_ * length_; }
    bool is_straight() const { return std::abs(curvature_) < kStraightCurvature; }
    /// Center of rotation; only meaningful for non-straight arcs.
    Vec2 center() const { return start_.position() + start_.heading().perp() / curvature_; }

    /// Pose after travelling `s` along the arc. Throws std::out_of_range unless 0 <= s <= length.
    Pose pose_at(double s) const;
    Pose end_pose() const { return pose_at(length_); }
    /// The same path traversed from end to start with the heading flipped by pi,
    /// so a body frame attached to it is rotated by pi relative to this arc's.
    ArcSegment reversed() const;
    /// The sub-arc covering [s0, s1].
    ArcSegment sub_arc(double s0, double s1) const;

    static constexpr double kStraightCurvature = 1e-12;

private:
    Pose start_{};
    double curvature_ = 0.0;
    double length_ = 0.0;
};

}  // namespace biarc
