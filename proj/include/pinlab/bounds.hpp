// Bound evaluators on complexity profiles.
//
// Every evaluator returns the bound the theorem promises ("guaranteed") and
// the value a concrete partition certifies ("certified"). In idealized mode
// the comparison is exact; slack mode adds eps*r + c*log2(r) of room.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinlab/partition.hpp"

namespace pinlab {

enum class TheoremId { ProjPartition, ProjMain, DistPartition, DistMain, PinnedEffDim };

[[nodiscard]] const char* theorem_name(TheoremId id);
/// Accepts the names produced by theorem_name; throws std::invalid_argument otherwise.
[[nodiscard]] TheoremId parse_theorem(const std::string& name);
/// Upper-bound theorems need certified <= guaranteed, the others certified >= guaranteed.
[[nodiscard]] bool is_upper_bound(TheoremId id);

struct SlackOptions {
    bool slack = false;  // idealized when false
    Rational eps = 0;
    Rational c_log = 0;
};

/// eps*r + c*log2(r), the log term rounded down to a multiple of 2^-20.
[[nodiscard]] Rational slack_allowance(const SlackOptions& s, int r);

struct BoundReport {
    TheoremId theorem = TheoremId::ProjMain;
    int r = 0;
    std::optional<Rational> t;
    std::optional<Rational> d;
    Rational guaranteed;
    Rational certified;
    Rational adjustment = 0;  // credit added to certified before comparing (pivot rounding)
    Rational allowance = 0;   // slack-mode room
    SlackOptions slack;
    std::optional<Partition> partition;
    std::optional<RgbPartition> rgb;
    std::vector<std::pair<std::string, std::string>> params;  // ordered extra diagnostics
    std::vector<std::string> assumptions;                     // hypotheses taken on faith

    /// Signed margin: >= 0 iff the bound holds.
    [[nodiscard]] Rational gap() const;
    [[nodiscard]] bool holds() const { return gap() >= 0; }
};

/// Sum over non-teal intervals of f(a_{i+1}) - f(a_i) - (a_{i+1} - a_i).
/// Throws ContractError unless `part` is admissible on [0, r].
[[nodiscard]] Rational partition_projection_bound(const ComplexityProfile& p, const Partition& part, int r);

/// Same sum for a good partition of [1, r]. Throws ContractError unless `part` is good.
[[nodiscard]] Rational partition_distance_bound(const ComplexityProfile& p, const Partition& part, int r);

/// Total length of the non-teal intervals.
[[nodiscard]] Rational bad_length(const Partition& part);

struct ProjectionOptions {
    std::optional<long long> C;  // defaults to ceil(r/t)
    int s0 = 0;                  // f(s) >= s is required from s0 on
    SlackOptions slack;
};

[[nodiscard]] BoundReport projection_upper_bound(const ComplexityProfile& p, int r, const Rational& t,
                                                 const ProjectionOptions& opt = {});

struct DistanceOptions {
    int s0 = 0;
    SlackOptions slack;
};

[[nodiscard]] BoundReport distance_lower_bound(const ComplexityProfile& p, int r, const DistanceOptions& opt = {});

[[nodiscard]] BoundReport pinned_effdim_bound(const ComplexityProfile& p, const Rational& d, int r,
                                              const DistanceOptions& opt = {});

}  // namespace pinlab
