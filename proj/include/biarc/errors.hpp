#pragma once

#include <stdexcept>
#include <string>

namespace biarc {

/// Two poses whose positions are too close to define a chord.
class CoincidentEndpointsError : public std::invalid_argument {
public:
    explicit CoincidentEndpointsError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested biarc would have infinite length or curvature.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Straight sweep requested between poses of different heading.
class HeadingMismatchError : public std::invalid_argument {
public:
    explicit HeadingMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Interval computation with both lines passing through the rotation center.
class DegenerateCenterError : public std::domain_error {
public:
    explicit DegenerateCenterError(const std::string& what) : std::domain_error(what) {}
};

/// Entry test called on a zero-curvature arc.
class StraightArcError : public std::invalid_argument {
public:
    explicit StraightArcError(const std::string& what) : std::invalid_argument(what) {}
};

/// The planner exhausted every lattice width without finding a path.
class NoPathError : public std::runtime_error {
public:
    explicit NoPathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biarc
