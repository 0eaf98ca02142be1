// Test-only brute-force oracles. They evaluate the defining inequalities of
// each notion directly on a rational grid, independent of the library's
// segment-wise shortcuts.
#pragma once

#include <functional>
#include <vector>

#include "pinlab/profile.hpp"

namespace oracle {

using pinlab::ComplexityProfile;
using pinlab::Rational;

// Grid points lo, lo + 1/den, ..., hi (lo and hi must lie on the grid).
inline std::vector<Rational> grid(const Rational& lo, const Rational& hi, int den) {
    std::vector<Rational> pts;
    for (long long k = (lo * den).floor(); Rational(k, den) <= hi; ++k) pts.emplace_back(k, den);
    return pts;
}

// Every c in [a, b]: f(c) - f(a) >= c - a.
inline bool yellow(const ComplexityProfile& p, const Rational& a, const Rational& b, int den) {
    const Rational fa = p.eval(a);
    for (const auto& c : grid(a, b, den))
        if (p.eval(c) - fa < c - a) return false;
    return true;
}

// Every c in [a, b]: f(b) - f(c) <= b - c.
inline bool teal(const ComplexityProfile& p, const Rational& a, const Rational& b, int den) {
    const Rational fb = p.eval(b);
    for (const auto& c : grid(a, b, den))
        if (fb - p.eval(c) > b - c) return false;
    return true;
}

// Growth rate on every grid step inside [a, b] at least 2 / exactly 0.
inline bool steps_all(const ComplexityProfile& p, const Rational& a, const Rational& b, int den,
                      const std::function<bool(const Rational&, const Rational&)>& ok) {
    const auto pts = grid(a, b, den);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!ok(p.eval(pts[i + 1]) - p.eval(pts[i]), pts[i + 1] - pts[i])) return false;
    return true;
}

inline bool red(const ComplexityProfile& p, const Rational& a, const Rational& b, int den) {
    return steps_all(p, a, b, den, [](const Rational& df, const Rational& dx) { return df >= dx * 2; });
}

inline bool blue(const ComplexityProfile& p, const Rational& a, const Rational& b, int den) {
    return steps_all(p, a, b, den, [](const Rational& df, const Rational&) { return df == 0; });
}

// All increment sequences of length h over {0..cap}, lexicographic.
inline void for_each_profile(int h, int cap, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(static_cast<std::size_t>(h), 0);
    while (true) {
        fn(v);
        int i = h - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == cap) v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return;
        ++v[static_cast<std::size_t>(i)];
    }
}

inline bool dim_at_least_one(const std::vector<int>& inc) {
    long long f = 0;
    for (std::size_t s = 0; s < inc.size(); ++s) {
        f += inc[s];
        if (f < static_cast<long long>(s + 1)) return false;
    }
    return true;
}

}  // namespace oracle
