// Complexity profiles: integer-breakpoint piecewise-linear non-decreasing
// functions f on [0, horizon] with f(0) = 0, and the five interval colors.
//
// Most of the calculus is phrased through the excess g(x) = f(x) - x:
//   [a,b] yellow  <=>  g(a) = min g on [a,b]
//   [a,b] teal    <=>  g(b) = min g on [a,b]
//   [a,b] green   <=>  yellow and teal and b - a <= t
//   [a,b] red     <=>  every unit segment meeting (a,b) has increment >= 2
//   [a,b] blue    <=>  every unit segment meeting (a,b) has increment 0

#pragma once

#include <cstdint>
#include <vector>

#include "pinlab/errors.hpp"
#include "pinlab/rational.hpp"

namespace pinlab {

class ComplexityProfile {
public:
    ComplexityProfile(std::vector<int> increments, int slope_cap = 2);

    [[nodiscard]] int horizon() const noexcept { return static_cast<int>(inc_.size()); }
    [[nodiscard]] int slope_cap() const noexcept { return cap_; }
    [[nodiscard]] const std::vector<int>& increments() const noexcept { return inc_; }

    /// Increment of the unit segment [s-1, s], 1 <= s <= horizon.
    [[nodiscard]] int delta(int s) const noexcept { return inc_[static_cast<std::size_t>(s - 1)]; }
    /// f at an integer point 0 <= s <= horizon.
    [[nodiscard]] std::int64_t at(int s) const noexcept { return sums_[static_cast<std::size_t>(s)]; }
    /// g = f - id at an integer point.
    [[nodiscard]] std::int64_t excess_at(int s) const noexcept { return sums_[static_cast<std::size_t>(s)] - s; }

    /// f(a) by linear interpolation; throws DomainError outside [0, horizon].
    [[nodiscard]] Rational eval(const Rational& a) const;
    /// g(a) = f(a) - a; same domain as eval.
    [[nodiscard]] Rational excess(const Rational& a) const;

    /// The same profile restricted to [0, r].
    [[nodiscard]] ComplexityProfile prefix(int r) const;

    friend bool operator==(const ComplexityProfile& a, const ComplexityProfile& b) {
        return a.cap_ == b.cap_ && a.inc_ == b.inc_;
    }

private:
    std::vector<int> inc_;
    std::vector<std::int64_t> sums_;
    int cap_;
};

struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational lo, Rational hi);
    [[nodiscard]] Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct ColorSet {
    bool yellow = false;
    bool teal = false;
    bool red = false;
    bool blue = false;
    bool green = false;
    friend bool operator==(const ColorSet&, const ColorSet&) = default;
};

/// Exact colors of `interval`; conditions are decided at the endpoints and the
/// interior integer breakpoints. `t` only affects green.
[[nodiscard]] ColorSet classify(const ComplexityProfile& profile, const Interval& interval, const Rational& t);

/// True iff f(s) >= d*s for every integer s in [s0, horizon].
[[nodiscard]] bool has_dim_at_least(const ComplexityProfile& profile, const Rational& d, int s0);

}  // namespace pinlab
