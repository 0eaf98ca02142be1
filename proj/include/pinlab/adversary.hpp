// Exhaustive, prefix-tree and seeded random searches over profile space for
// counterexamples to the bound evaluators, plus the structural audit of the
// partition procedures.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pinlab/bounds.hpp"

namespace pinlab {

enum class Constraint { None, DimGt1, DimGeD };
enum class SearchMode { Exhaustive, Dp, Random };

struct SearchSpec {
    int horizon = 1;
    int slope_cap = 2;
    Constraint constraint = Constraint::None;
    Rational d = 1;  // dimension for DimGeD and for the pinned theorem
    TheoremId theorem = TheoremId::ProjMain;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t count = 0;  // random mode sample size
    int r_min = 0;            // smallest precision evaluated; 0 means horizon
    unsigned threads = 0;     // 0 means hardware concurrency
    std::size_t max_listed = 1000;
};

struct Witness {
    std::vector<int> increments;  // profile truncated to [0, r]
    int r = 0;
    std::optional<Rational> t;
    Rational gap;
    std::string note;  // failure message for anomalies
};

struct SearchReport {
    std::uint64_t profiles_checked = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t skipped = 0;  // evaluations rejected by a theorem hypothesis
    std::uint64_t counterexample_count = 0;
    std::vector<Witness> counterexamples;  // first max_listed in canonical order
    std::uint64_t anomaly_count = 0;       // structural failures inside the evaluators
    std::vector<Witness> anomalies;
    std::optional<Rational> min_gap;
    std::optional<Witness> argmin;
};

/// Throws CapacityError when the enumeration guard for `spec` is exceeded.
void check_guard(const SearchSpec& spec);

/// Whether a full increment sequence satisfies `spec.constraint`.
[[nodiscard]] bool satisfies(const SearchSpec& spec, const std::vector<int>& increments);

/// Calls `sink` for every profile `spec` enumerates, in canonical order.
void enumerate_profiles(const SearchSpec& spec, const std::function<void(const ComplexityProfile&)>& sink);

[[nodiscard]] SearchReport verify_theorem(const SearchSpec& spec);

/// The k smallest-gap witnesses, ascending by (gap, r, increments, t).
[[nodiscard]] std::vector<Witness> tightness_frontier(const SearchSpec& spec, std::size_t k);

/// Gap list of one profile at precision r: one entry per t for the projection
/// theorem, a single entry otherwise. Hypothesis failures yield no entry.
struct GapEntry {
    std::optional<Rational> t;
    Rational gap;
};
[[nodiscard]] std::vector<GapEntry> evaluate_gaps(const SearchSpec& spec, const ComplexityProfile& q, int r);

struct StructureReport {
    std::uint64_t profiles = 0;
    std::uint64_t cases = 0;                     // (profile, r, t) triples inspected
    std::map<std::string, std::uint64_t> counts;  // violation kind -> occurrences
    std::map<std::string, std::string> first;     // violation kind -> first offending case
    [[nodiscard]] std::uint64_t count(const std::string& kind) const {
        auto it = counts.find(kind);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Audits every prefix of every profile up to `horizon`, for all integer t in [1, r]:
/// the red/blue/green partition, its junction and run properties, greedy
/// admissible partitions, and good partitions.
[[nodiscard]] StructureReport verify_structure(int horizon, int slope_cap, unsigned threads = 0);

}  // namespace pinlab
