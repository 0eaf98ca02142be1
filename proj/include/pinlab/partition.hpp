// Partition procedures over a complexity profile: greedy admissible partitions,
// the red/blue/green partition with its green tiling, the yellow-only
// partition used when no red-green-blue sequence exists, and the doubling
// ("good") partitions of the distance side.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinlab/profile.hpp"

namespace pinlab {

// ---- greedy primitives -----------------------------------------------------

/// Largest d in [c, cap] with [c, d] yellow (d = c when g drops immediately).
[[nodiscard]] Rational yellow_extent(const ComplexityProfile& p, const Rational& c, const Rational& cap);

/// Largest d in [c, cap] with [c, d] teal, i.e. the largest argmin of g on [c, cap].
[[nodiscard]] Rational teal_extent(const ComplexityProfile& p, const Rational& c, const Rational& cap);

/// Right end of the longest green interval [a, d] with d <= bound; a when none exists.
[[nodiscard]] Rational green_reach(const ComplexityProfile& p, const Rational& a, const Rational& t,
                                   const Rational& bound);

/// Smallest c in [x, bound) that starts a nondegenerate green interval inside [0, bound].
[[nodiscard]] std::optional<Rational> next_green_start(const ComplexityProfile& p, const Rational& x,
                                                       const Rational& t, const Rational& bound);

// ---- partitions ------------------------------------------------------------

enum class PartitionRule { Admissible, Good };

struct Partition {
    PartitionRule rule = PartitionRule::Admissible;
    std::vector<Rational> breakpoints;
    std::vector<ColorSet> colors;
    long long budget = 0;  // M for admissible partitions, unused for good ones
    Rational r;
    Rational t;            // 0 for good partitions

    [[nodiscard]] std::size_t size() const noexcept { return colors.size(); }
    [[nodiscard]] Interval interval(std::size_t i) const { return {breakpoints[i], breakpoints[i + 1]}; }
    /// Index of the last interval; the partition has k + 1 intervals.
    [[nodiscard]] long long k() const noexcept { return static_cast<long long>(colors.size()) - 1; }
};

/// Greedy partition of [a, b]: each step takes the largest d <= min(c + t, b)
/// with [c, d] yellow or teal. Throws AdmissibilityError when k exceeds M.
[[nodiscard]] Partition admissible_partition(const ComplexityProfile& p, const Rational& a, const Rational& b,
                                             const Rational& t, long long M);

/// Greedy doubling partition of [1, r]: each step takes the largest d <= min(2c, r)
/// with [c, d] yellow or teal. For r = 1 the partition is empty.
[[nodiscard]] Partition good_partition(const ComplexityProfile& p, int r);

struct AdmissibleAudit {
    bool covers = true;          // breakpoints strictly increase from lo to hi
    bool within_budget = true;   // k <= M
    bool colored = true;         // every interval yellow or teal
    bool short_steps = true;     // every length <= t
    bool spread_literal = true;  // a_{i+2} > a_i + t for every consecutive pair
    bool spread = true;          // same, except pairs ending at hi
    [[nodiscard]] bool admissible() const { return covers && within_budget && colored && short_steps; }
};
[[nodiscard]] AdmissibleAudit audit_admissible(const ComplexityProfile& p, const Partition& part, const Rational& lo,
                                               const Rational& hi);

struct GoodAudit {
    bool covers = true;          // breakpoints strictly increase from 1 to r
    bool colored = true;         // every interval yellow or teal
    bool doubling = true;        // a_{i+1} <= 2 a_i
    bool spread_literal = true;  // a_{i+2} > 2 a_i for every consecutive pair
    bool spread = true;          // same, except pairs ending at r
    [[nodiscard]] bool good() const { return covers && colored && doubling; }
};
[[nodiscard]] GoodAudit audit_good(const ComplexityProfile& p, const Partition& part, int r);

// ---- red / blue / green ----------------------------------------------------

enum class RgbColor { Red, Blue, Green };

struct RgbInterval {
    Interval span;
    RgbColor color;
};

struct GreenRun {
    std::size_t first = 0;  // index of the first green interval
    std::size_t last = 0;   // index of the last green interval (inclusive)
    Rational length;
    std::optional<std::size_t> red;   // preceding red interval, if any
    std::optional<std::size_t> blue;  // following blue interval, if any
    [[nodiscard]] bool flanked() const { return red.has_value() && blue.has_value(); }
};

struct RgbPartition {
    int r = 0;
    Rational t;
    std::vector<RgbInterval> intervals;
    std::vector<GreenRun> green_runs;  // maximal runs of consecutive green intervals
};

/// Green tiling of [0, r] completed by red, blue and blue-then-red gaps.
/// Throws StructureViolation when a gap fits none of these shapes.
[[nodiscard]] RgbPartition rgb_partition(const ComplexityProfile& p, int r, const Rational& t);

/// First red-green...green-blue sequence; throws StructureViolation if its green length is below t.
[[nodiscard]] std::optional<GreenRun> find_rgb_sequence(const RgbPartition& rgb, const Rational& t);

/// Integer points b in (0, r) where a red segment meets a blue one.
[[nodiscard]] std::vector<int> red_blue_junctions(const ComplexityProfile& p, int r);

struct NoRgbPartition {
    Partition partition;
    Rational bad_length;    // total length of non-yellow intervals
    Rational yellow_from;   // start of the yellow-only stretch
};

/// Admissible partition of [0, r] whose tail from the first red interval is
/// yellow only; the part before it reuses the green and blue tiles (cut to
/// length t), so every interval there is teal. Throws ContractError if a
/// red-green-blue sequence exists.
[[nodiscard]] NoRgbPartition no_rgb_admissible_partition(const ComplexityProfile& p, int r, const Rational& t,
                                                         long long M);

[[nodiscard]] const char* color_name(RgbColor c);

}  // namespace pinlab
