#include "pinlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace pinlab {

namespace {

PlanarPoint sub(const PlanarPoint& a, const PlanarPoint& b) { return {a.x1 - b.x1, a.x2 - b.x2}; }

void require_circle(const PlanarPoint& x, const PlanarPoint& y, const PlanarPoint& z) {
    const double rxy = distance(x, y);
    if (rxy == 0) throw ContractError("pin coincides with y");
    const double rxz = distance(x, z);
    if (std::abs(rxy - rxz) > 1e-9 * rxy)
        throw ContractError("y and z are not equidistant from the pin: " + std::to_string(rxy) + " vs " +
                            std::to_string(rxz));
}

// Uniform double in [0, 1) from 53 random bits, independent of <random> distributions.
double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace

Direction Direction::along(double a, double b) {
    const double n = std::hypot(a, b);
    if (n == 0) throw SingularityError("direction of the zero vector");
    return {a / n, b / n};
}

double norm(const PlanarPoint& p) { return std::hypot(p.x1, p.x2); }
double distance(const PlanarPoint& a, const PlanarPoint& b) { return norm(sub(a, b)); }

double project(const Direction& e, const PlanarPoint& x) {
    if (std::abs(std::hypot(e.e1, e.e2) - 1.0) > 1e-12) throw ContractError("direction is not a unit vector");
    return e.e1 * x.x1 + e.e2 * x.x2;
}

ChordGap chord_projection_gap(const PlanarPoint& x, const PlanarPoint& y, const PlanarPoint& z) {
    require_circle(x, y, z);
    const PlanarPoint yz = sub(y, z);
    if (yz.x1 == 0 && yz.x2 == 0) return {0, 0};
    const PlanarPoint xy = sub(y, x);
    const double rxy = norm(xy);
    const Direction e1{xy.x1 / rxy, xy.x2 / rxy};
    const double chord = norm(yz);
    return {std::abs(e1.e1 * yz.x1 + e1.e2 * yz.x2), chord * chord / (2 * rxy)};
}

DirectionGap midpoint_direction_gap(const PlanarPoint& x, const PlanarPoint& y, const PlanarPoint& z) {
    require_circle(x, y, z);
    const PlanarPoint yz = sub(y, z);
    if (yz.x1 == 0 && yz.x2 == 0) throw ContractError("y = z");
    const Direction e1 = Direction::along(y.x1 - x.x1, y.x2 - x.x2);
    const PlanarPoint mid{(y.x1 + z.x1) / 2, (y.x2 + z.x2) / 2};
    const Direction e3 = Direction::along(mid.x1 - x.x1, mid.x2 - x.x2);
    return {std::hypot(e1.e1 - e3.e1, e1.e2 - e3.e2), norm(yz) / distance(x, y)};
}

PlanarPoint project_to_sphere(const PlanarPoint& x, double d, const PlanarPoint& p) {
    if (!(d > 0) || !std::isfinite(d)) throw DomainError("radius must be positive and finite");
    const PlanarPoint v = sub(p, x);
    const double n = norm(v);
    if (n == 0) throw SingularityError("p coincides with the pin");
    return {x.x1 + d * (v.x1 / n), x.x2 + d * (v.x2 / n)};
}

GeometryCheckReport geometry_check(std::uint64_t trials, std::uint64_t seed) {
    GeometryCheckReport rep;
    rep.trials = trials;
    rep.seed = seed;
    std::mt19937_64 g(seed);
    constexpr double pi = std::numbers::pi;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const double R = std::pow(10.0, -3.0 + 6.0 * unit(g));
        const PlanarPoint x{R * (2 * unit(g) - 1), R * (2 * unit(g) - 1)};
        const double alpha = 2 * pi * unit(g);
        const double sep = (0.01 + (pi - 0.02) * unit(g)) * (unit(g) < 0.5 ? -1.0 : 1.0);
        const PlanarPoint y{x.x1 + R * std::cos(alpha), x.x2 + R * std::sin(alpha)};
        const PlanarPoint z{x.x1 + R * std::cos(alpha + sep), x.x2 + R * std::sin(alpha + sep)};

        const ChordGap cg = chord_projection_gap(x, y, z);
        const double rel = std::abs(cg.measured - cg.predicted) / cg.predicted;
        rep.chord_worst_relative = std::max(rep.chord_worst_relative, rel);
        if (!(rel <= 1e-9)) ++rep.chord_failures;

        const DirectionGap dg = midpoint_direction_gap(x, y, z);
        if (!(dg.gap < dg.bound)) ++rep.direction_failures;

        const PlanarPoint p{x.x1 + R * (2 * unit(g) - 1), x.x2 + R * (2 * unit(g) - 1)};
        if (p.x1 == x.x1 && p.x2 == x.x2) continue;
        const double d = R * std::pow(10.0, -1.0 + 2.0 * unit(g));
        const PlanarPoint q = project_to_sphere(x, d, p);
        const PlanarPoint qq = project_to_sphere(x, d, q);
        const double scale = std::max({norm(x), norm(p), d});
        const double e_radius = std::abs(distance(x, q) - d) / scale;
        const double e_offset = std::abs(distance(q, p) - std::abs(d - distance(x, p))) / scale;
        const double e_idem = distance(q, qq) / scale;
        rep.sphere_worst_radius = std::max(rep.sphere_worst_radius, e_radius);
        rep.sphere_worst_offset = std::max(rep.sphere_worst_offset, e_offset);
        rep.sphere_worst_idempotence = std::max(rep.sphere_worst_idempotence, e_idem);
        if (!(e_radius <= 1e-12 && e_offset <= 1e-12 && e_idem <= 1e-12)) ++rep.sphere_failures;

        const Direction e = Direction::along(std::cos(alpha), std::sin(alpha));
        const double a = 2 * unit(g) - 1;
        const double b = 2 * unit(g) - 1;
        const PlanarPoint combo{a * y.x1 + b * z.x1, a * y.x2 + b * z.x2};
        const double lhs = project(e, combo);
        const double rhs = a * project(e, y) + b * project(e, z);
        const double lscale = std::max({1.0, norm(y), norm(z)});
        const double e_lin = std::abs(lhs - rhs) / lscale;
        rep.linearity_worst = std::max(rep.linearity_worst, e_lin);
        if (!(e_lin <= 1e-12)) ++rep.linearity_failures;
    }
    return rep;
}

}  // namespace pinlab
