// Planar identities for points on a common circle around a pin, in binary64.

#pragma once

#include <cstdint>

#include "pinlab/errors.hpp"

namespace pinlab {

struct PlanarPoint {
    double x1 = 0;
    double x2 = 0;
};

struct Direction {
    double e1 = 1;
    double e2 = 0;
    /// Unit vector along (a, b); throws SingularityError for the zero vector.
    static Direction along(double a, double b);
};

[[nodiscard]] double norm(const PlanarPoint& p);
[[nodiscard]] double distance(const PlanarPoint& a, const PlanarPoint& b);

/// e . x; throws ContractError unless |e| = 1 within 1e-12.
[[nodiscard]] double project(const Direction& e, const PlanarPoint& x);

struct ChordGap {
    double measured = 0;   // |e1 . (y - z)| with e1 the unit vector from x to y
    double predicted = 0;  // |y - z|^2 / (2 |x - y|)
};
/// Requires x != y and |x - y| = |x - z| to 1e-9 relative; y = z gives (0, 0).
[[nodiscard]] ChordGap chord_projection_gap(const PlanarPoint& x, const PlanarPoint& y, const PlanarPoint& z);

struct DirectionGap {
    double gap = 0;    // |e1 - e3|, e3 the unit vector from x to the chord midpoint
    double bound = 0;  // |y - z| / |x - y|
};
/// Same preconditions as chord_projection_gap, and additionally y != z.
[[nodiscard]] DirectionGap midpoint_direction_gap(const PlanarPoint& x, const PlanarPoint& y, const PlanarPoint& z);

/// The point at distance d from x on the ray from x through p.
/// Throws SingularityError when p = x, DomainError unless d > 0.
[[nodiscard]] PlanarPoint project_to_sphere(const PlanarPoint& x, double d, const PlanarPoint& p);

struct GeometryCheckReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double chord_worst_relative = 0;      // max |measured - predicted| / predicted
    std::uint64_t chord_failures = 0;     // relative error above 1e-9
    std::uint64_t direction_failures = 0; // gap >= bound
    double sphere_worst_radius = 0;       // max | |x-y| - d | / scale
    double sphere_worst_offset = 0;       // max | |y-p| - |d - |x-p|| | / scale
    double sphere_worst_idempotence = 0;  // max |P(P(p)) - P(p)| / scale
    std::uint64_t sphere_failures = 0;    // any of the three above 1e-12
    double linearity_worst = 0;
    std::uint64_t linearity_failures = 0;
    [[nodiscard]] bool passed() const {
        return chord_failures == 0 && direction_failures == 0 && sphere_failures == 0 && linearity_failures == 0;
    }
};

/// Seeded random circle triples: radius log-uniform in [1e-3, 1e3], pin at
/// scale radius from the origin, angular separation in [0.01, pi - 0.01].
/// Sphere-map errors are measured relative to the configuration scale
/// max(|x|, |p|, d).
[[nodiscard]] GeometryCheckReport geometry_check(std::uint64_t trials, std::uint64_t seed);

}  // namespace pinlab
