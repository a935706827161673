#pragma once

#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>

#include <boost/container/small_vector.hpp>

namespace biarc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval over the extended reals.
struct TInterval {
    double lo;
    double hi;
    bool operator==(const TInterval&) const = default;
};

/// Finite union of closed intervals in t = tan(rotation / 2).
///
/// t = +inf and t = -inf describe the same rotation (pi). The canonical form
/// keeps intervals sorted and merged and, whenever one infinite end is present,
/// also carries the other one (as a degenerate interval if needed), so set
/// operations never disagree about the rotation pi.
class TIntervalSet {
public:
    using Storage = boost::container::small_vector<TInterval, 4>;

    TIntervalSet() = default;
    TIntervalSet(std::initializer_list<TInterval> items);
    explicit TIntervalSet(std::span<const TInterval> items);

    static TIntervalSet all() { return TIntervalSet{{-kInf, kInf}}; }
    static TIntervalSet point(double t) { return TIntervalSet{{t, t}}; }

    std::span<const TInterval> intervals() const { return {items_.data(), items_.size()}; }
    bool empty() const { return items_.empty(); }
    bool contains(double t) const;
    bool is_all() const;

    TIntervalSet unite(const TIntervalSet& o) const;
    TIntervalSet intersect(const TIntervalSet& o) const;

    /// True when the sets share a point, or come within `gap` of each other.
    bool intersects(const TIntervalSet& o, double gap = 0.0) const;

    bool operator==(const TIntervalSet&) const = default;

private:
    void canonicalize();
    Storage items_;
};

std::ostream& operator<<(std::ostream& os, const TIntervalSet& s);

}  // namespace biarc
