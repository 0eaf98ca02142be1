#include "pinlab/adversary.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace pinlab {

namespace {

// ---- witness ordering --------------------------------------------------------

bool witness_less(const Witness& a, const Witness& b) {
    if (a.gap != b.gap) return a.gap < b.gap;
    if (a.r != b.r) return a.r < b.r;
    if (a.increments != b.increments) return a.increments < b.increments;
    if (a.t.has_value() != b.t.has_value()) return !a.t.has_value();
    if (a.t && *a.t != *b.t) return *a.t < *b.t;
    return a.note < b.note;
}

// Keeps the k smallest witnesses in ascending order.
void keep_smallest(std::vector<Witness>& v, Witness w, std::size_t k) {
    if (k == 0) return;
    if (v.size() >= k && !witness_less(w, v.back())) return;
    auto pos = std::upper_bound(v.begin(), v.end(), w, witness_less);
    v.insert(pos, std::move(w));
    if (v.size() > k) v.pop_back();
}

std::string describe(const std::vector<int>& incs, int r, std::optional<int> t) {
    std::ostringstream os;
    os << "increments=[";
    for (std::size_t i = 0; i < incs.size(); ++i) os << (i ? "," : "") << incs[i];
    os << "] r=" << r;
    if (t) os << " t=" << *t;
    return os.str();
}

using detail::run_indexed;
using detail::worker_count;

// ---- constraints and the prefix tree ----------------------------------------

// Whether the last increment keeps f(s) >= d*s; earlier ones are assumed checked.
bool prefix_ok(const SearchSpec& spec, const std::vector<int>& incs, std::int64_t f) {
    const int s = static_cast<int>(incs.size());
    switch (spec.constraint) {
        case Constraint::None: return true;
        case Constraint::DimGt1: return f >= s;
        case Constraint::DimGeD: return Rational(f) >= spec.d * s;
    }
    return true;
}

// Seeded sequential sampling: each increment is uniform over the values that
// keep the constraint satisfiable. Uniform draws use rejection, so results do
// not depend on the standard library's distribution implementations.
std::vector<std::vector<int>> draw_samples(const SearchSpec& spec) {
    std::vector<std::vector<int>> samples;
    std::mt19937_64 rng(spec.seed);
    auto below = [&](std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = rng();
            if (x >= threshold) return x % n;
        }
    };
    for (std::uint64_t i = 0; i < spec.count; ++i) {
        std::vector<int> incs;
        std::int64_t f = 0;
        bool dead = false;
        for (int s = 0; s < spec.horizon && !dead; ++s) {
            std::vector<int> allowed;
            for (int v = 0; v <= spec.slope_cap; ++v) {
                incs.push_back(v);
                if (prefix_ok(spec, incs, f + v)) allowed.push_back(v);
                incs.pop_back();
            }
            if (allowed.empty()) {
                dead = true;
                break;
            }
            const int v = allowed[below(allowed.size())];
            incs.push_back(v);
            f += v;
        }
        if (!dead) samples.push_back(std::move(incs));
    }
    return samples;
}

std::size_t shard_depth(int horizon, int cap, unsigned threads) {
    std::size_t depth = 0;
    double width = 1;
    while (static_cast<int>(depth) < horizon && width < 8.0 * threads) {
        width *= cap + 1;
        ++depth;
    }
    return std::max<std::size_t>(depth, 1);
}

// Depth-first walk below `incs` (whose running sum is f), visiting every
// constraint-satisfying node including `incs` itself.
template <class Visit>
void dfs(const SearchSpec& spec, std::vector<int>& incs, std::int64_t f, Visit& visit) {
    visit(incs);
    if (static_cast<int>(incs.size()) == spec.horizon) return;
    for (int v = 0; v <= spec.slope_cap; ++v) {
        incs.push_back(v);
        if (prefix_ok(spec, incs, f + v)) dfs(spec, incs, f + v, visit);
        incs.pop_back();
    }
}

// Passing prefixes of exactly `depth` increments, lexicographic; shallower
// passing prefixes go to `shallow`.
std::vector<std::vector<int>> frontier_prefixes(const SearchSpec& spec, std::size_t depth,
                                                std::vector<std::vector<int>>& shallow) {
    std::vector<std::vector<int>> out;
    std::vector<int> incs;
    std::function<void(std::int64_t)> rec = [&](std::int64_t f) {
        if (incs.size() == depth) {
            out.push_back(incs);
            return;
        }
        if (!incs.empty()) shallow.push_back(incs);
        for (int v = 0; v <= spec.slope_cap; ++v) {
            incs.push_back(v);
            if (prefix_ok(spec, incs, f + v)) rec(f + v);
            incs.pop_back();
        }
    };
    rec(0);
    return out;
}

// ---- search accumulation -----------------------------------------------------

struct Accumulator {
    SearchReport rep;
    std::vector<Witness> frontier;
    std::size_t frontier_k = 0;
    std::size_t listed = 0;

    void add(const std::vector<int>& incs, int r, const GapEntry& e) {
        ++rep.evaluations;
        Witness w{incs, r, e.t, e.gap, {}};
        if (!rep.min_gap || witness_less(w, *rep.argmin)) {
            rep.min_gap = e.gap;
            rep.argmin = w;
        }
        if (e.gap < 0) {
            ++rep.counterexample_count;
            keep_smallest(rep.counterexamples, w, listed);
        }
        if (frontier_k) keep_smallest(frontier, std::move(w), frontier_k);
    }

    void merge(Accumulator&& o) {
        rep.profiles_checked += o.rep.profiles_checked;
        rep.evaluations += o.rep.evaluations;
        rep.skipped += o.rep.skipped;
        rep.counterexample_count += o.rep.counterexample_count;
        rep.anomaly_count += o.rep.anomaly_count;
        for (auto& w : o.rep.counterexamples) keep_smallest(rep.counterexamples, std::move(w), listed);
        for (auto& w : o.rep.anomalies) keep_smallest(rep.anomalies, std::move(w), listed);
        for (auto& w : o.frontier) keep_smallest(frontier, std::move(w), frontier_k);
        if (o.rep.argmin && (!rep.argmin || witness_less(*o.rep.argmin, *rep.argmin))) {
            rep.min_gap = o.rep.min_gap;
            rep.argmin = std::move(o.rep.argmin);
        }
    }
};

struct GapOutcome {
    std::vector<GapEntry> entries;
    std::uint64_t skipped = 0;
    std::vector<std::pair<std::optional<Rational>, std::string>> anomalies;
};

GapOutcome evaluate_all(const SearchSpec& spec, const ComplexityProfile& q, int r) {
    GapOutcome out;
    auto guarded = [&](std::optional<Rational> t, auto&& fn) {
        try {
            out.entries.push_back({t, fn()});
        } catch (const ContractError&) {
            ++out.skipped;
        } catch (const std::exception& e) {
            out.anomalies.emplace_back(t, e.what());
        }
    };
    switch (spec.theorem) {
        case TheoremId::ProjMain:
            for (int t = 1; t <= r; ++t)
                guarded(Rational(t), [&] { return projection_upper_bound(q, r, t).gap(); });
            break;
        case TheoremId::DistMain:
            guarded(std::nullopt, [&] { return distance_lower_bound(q, r).gap(); });
            break;
        case TheoremId::PinnedEffDim:
            guarded(std::nullopt, [&] { return pinned_effdim_bound(q, spec.d, r).gap(); });
            break;
        default:
            throw std::invalid_argument(std::string("theorem ") + theorem_name(spec.theorem) + " is not searchable");
    }
    return out;
}

void evaluate_into(const SearchSpec& spec, Accumulator& acc, const std::vector<int>& prefix) {
    const int r = static_cast<int>(prefix.size());
    const ComplexityProfile q(prefix, spec.slope_cap);
    ++acc.rep.profiles_checked;
    GapOutcome g = evaluate_all(spec, q, r);
    acc.rep.skipped += g.skipped;
    for (const auto& e : g.entries) acc.add(prefix, r, e);
    for (auto& [t, msg] : g.anomalies) {
        ++acc.rep.anomaly_count;
        keep_smallest(acc.rep.anomalies, Witness{prefix, r, t, Rational(0), msg}, acc.listed);
    }
}

int effective_r_min(const SearchSpec& spec) {
    return spec.r_min <= 0 ? spec.horizon : std::min(spec.r_min, spec.horizon);
}

// The prefix of length r of a full profile is evaluated only for the
// extension that fills the remaining steps with slope_cap, so every passing
// prefix is evaluated exactly once and counts agree with the tree walk.
bool canonical_extension(const SearchSpec& spec, const std::vector<int>& incs, int r) {
    for (std::size_t i = static_cast<std::size_t>(r); i < incs.size(); ++i)
        if (incs[i] != spec.slope_cap) return false;
    return true;
}

Accumulator run_search(const SearchSpec& spec, std::size_t frontier_k) {
    check_guard(spec);
    if (spec.mode == SearchMode::Random && spec.count == 0) throw std::invalid_argument("random mode needs count > 0");
    const unsigned threads = worker_count(spec.threads);
    const int r_min = effective_r_min(spec);
    auto fresh = [&] {
        Accumulator a;
        a.frontier_k = frontier_k;
        a.listed = spec.max_listed;
        return a;
    };

    Accumulator total = fresh();
    if (spec.mode == SearchMode::Random) {
        const auto samples = draw_samples(spec);
        const std::size_t chunk = 64;
        const std::size_t n = (samples.size() + chunk - 1) / chunk;
        std::vector<Accumulator> parts(n, fresh());
        run_indexed(n, threads, [&](std::size_t i) {
            for (std::size_t j = i * chunk; j < std::min(samples.size(), (i + 1) * chunk); ++j)
                for (int r = r_min; r <= spec.horizon; ++r)
                    evaluate_into(spec, parts[i], {samples[j].begin(), samples[j].begin() + r});
        });
        for (auto& p : parts) total.merge(std::move(p));
        return total;
    }

    const std::size_t depth = shard_depth(spec.horizon, spec.slope_cap, threads);
    std::vector<std::vector<int>> shallow;
    const auto shards = frontier_prefixes(spec, depth, shallow);

    if (spec.mode == SearchMode::Dp) {
        for (const auto& pre : shallow)
            if (static_cast<int>(pre.size()) >= r_min) evaluate_into(spec, total, pre);
        std::vector<Accumulator> parts(shards.size(), fresh());
        run_indexed(shards.size(), threads, [&](std::size_t i) {
            std::vector<int> incs = shards[i];
            std::int64_t f = 0;
            for (int v : incs) f += v;
            auto visit = [&](const std::vector<int>& node) {
                if (static_cast<int>(node.size()) >= r_min) evaluate_into(spec, parts[i], node);
            };
            dfs(spec, incs, f, visit);
        });
        for (auto& p : parts) total.merge(std::move(p));
        return total;
    }

    // Exhaustive: odometer over every full increment sequence under each shard prefix.
    std::vector<std::vector<int>> shard_all;
    {
        // shards of the unconstrained space, filtered per full profile
        SearchSpec open = spec;
        open.constraint = Constraint::None;
        std::vector<std::vector<int>> ignored;
        shard_all = frontier_prefixes(open, depth, ignored);
    }
    std::vector<Accumulator> parts(shard_all.size(), fresh());
    run_indexed(shard_all.size(), threads, [&](std::size_t i) {
        std::vector<int> incs(static_cast<std::size_t>(spec.horizon), 0);
        std::copy(shard_all[i].begin(), shard_all[i].end(), incs.begin());
        const std::size_t free_from = shard_all[i].size();
        for (;;) {
            if (satisfies(spec, incs))
                for (int r = r_min; r <= spec.horizon; ++r)
                    if (canonical_extension(spec, incs, r))
                        evaluate_into(spec, parts[i], {incs.begin(), incs.begin() + r});
            std::size_t pos = incs.size();
            while (pos > free_from && incs[pos - 1] == spec.slope_cap) incs[--pos] = 0;
            if (pos == free_from) break;
            ++incs[pos - 1];
        }
    });
    for (auto& p : parts) total.merge(std::move(p));
    return total;
}

}  // namespace

void check_guard(const SearchSpec& spec) {
    if (spec.horizon < 1) throw std::invalid_argument("horizon must be positive");
    if (spec.slope_cap < 1) throw std::invalid_argument("slope_cap must be positive");
    if (spec.mode == SearchMode::Random) return;
    double size = 1;
    double nodes = 0;
    for (int s = 0; s < spec.horizon; ++s) {
        size *= spec.slope_cap + 1;
        nodes += size;
    }
    if (spec.mode == SearchMode::Exhaustive && size > 1e8)
        throw CapacityError("exhaustive search over " + std::to_string(static_cast<long long>(size)) +
                            " profiles exceeds the 1e8 guard");
    if (spec.mode == SearchMode::Dp && nodes > 1e9)
        throw CapacityError("prefix-tree search exceeds the 1e9 node guard");
}

bool satisfies(const SearchSpec& spec, const std::vector<int>& increments) {
    std::vector<int> pre;
    std::int64_t f = 0;
    for (int v : increments) {
        pre.push_back(v);
        f += v;
        if (!prefix_ok(spec, pre, f)) return false;
    }
    return true;
}

void enumerate_profiles(const SearchSpec& spec, const std::function<void(const ComplexityProfile&)>& sink) {
    check_guard(spec);
    if (spec.mode == SearchMode::Random) {
        for (const auto& incs : draw_samples(spec)) sink(ComplexityProfile(incs, spec.slope_cap));
        return;
    }
    std::vector<int> incs(static_cast<std::size_t>(spec.horizon), 0);
    for (;;) {
        if (satisfies(spec, incs)) sink(ComplexityProfile(incs, spec.slope_cap));
        std::size_t pos = incs.size();
        while (pos > 0 && incs[pos - 1] == spec.slope_cap) incs[--pos] = 0;
        if (pos == 0) break;
        ++incs[pos - 1];
    }
}

std::vector<GapEntry> evaluate_gaps(const SearchSpec& spec, const ComplexityProfile& q, int r) {
    return evaluate_all(spec, q.prefix(r), r).entries;
}

SearchReport verify_theorem(const SearchSpec& spec) { return run_search(spec, 0).rep; }

std::vector<Witness> tightness_frontier(const SearchSpec& spec, std::size_t k) {
    if (k == 0) return {};
    return run_search(spec, k).frontier;
}

// ---- structure audit ------------------------------------------------------------

namespace {

struct StructureAcc {
    StructureReport rep;
    void flag(const std::string& kind, const std::vector<int>& incs, int r, std::optional<int> t) {
        if (rep.counts[kind]++ == 0) rep.first[kind] = describe(incs, r, t);
    }
    void merge(StructureAcc&& o) {
        rep.profiles += o.rep.profiles;
        rep.cases += o.rep.cases;
        for (auto& [k, v] : o.rep.counts) {
            if (rep.counts[k] == 0 && v > 0) rep.first[k] = o.rep.first[k];
            rep.counts[k] += v;
        }
    }
};

void audit_node(StructureAcc& acc, const std::vector<int>& incs, int cap) {
    const int r = static_cast<int>(incs.size());
    const ComplexityProfile q(incs, cap);
    ++acc.rep.profiles;

    try {
        const Partition gp = good_partition(q, r);
        const GoodAudit ga = audit_good(q, gp, r);
        if (!ga.covers) acc.flag("good-cover", incs, r, std::nullopt);
        if (!ga.colored) acc.flag("good-yellow-or-teal", incs, r, std::nullopt);
        if (!ga.doubling) acc.flag("good-doubling", incs, r, std::nullopt);
        if (!ga.spread) acc.flag("good-spread", incs, r, std::nullopt);
        if (!ga.spread_literal) acc.flag("good-spread-literal", incs, r, std::nullopt);
    } catch (const std::exception&) {
        acc.flag("good-construction", incs, r, std::nullopt);
    }

    const auto junctions = red_blue_junctions(q, r);
    for (int t = 1; t <= r; ++t) {
        ++acc.rep.cases;
        const Rational tr(t);
        try {
            const RgbPartition rgb = rgb_partition(q, r, tr);
            Rational at = 0;
            bool cover = true;
            bool colors = true;
            for (const auto& iv : rgb.intervals) {
                if (iv.span.lo != at) cover = false;
                at = iv.span.hi;
                const ColorSet c = classify(q, iv.span, tr);
                if ((iv.color == RgbColor::Red && !c.red) || (iv.color == RgbColor::Blue && !c.blue) ||
                    (iv.color == RgbColor::Green && !c.green))
                    colors = false;
            }
            if (at != r) cover = false;
            if (!cover) acc.flag("rgb-cover", incs, r, t);
            if (!colors) acc.flag("rgb-color", incs, r, t);
            for (int b : junctions) {
                const bool interior = std::any_of(rgb.intervals.begin(), rgb.intervals.end(), [&](const RgbInterval& iv) {
                    return iv.color == RgbColor::Green && iv.span.lo < b && Rational(b) < iv.span.hi;
                });
                if (!interior) acc.flag("junction-not-interior", incs, r, t);
            }
            for (const auto& run : rgb.green_runs)
                if (run.flanked() && run.length < tr) acc.flag("rgb-run-short", incs, r, t);
        } catch (const std::exception&) {
            acc.flag("rgb-construction", incs, r, t);
        }

        const long long M = 3 * ((r + t - 1) / t);
        try {
            const Partition ap = admissible_partition(q, 0, r, tr, M);
            const AdmissibleAudit aa = audit_admissible(q, ap, 0, r);
            if (!aa.covers) acc.flag("admissible-cover", incs, r, t);
            if (!aa.colored) acc.flag("admissible-yellow-or-teal", incs, r, t);
            if (!aa.short_steps) acc.flag("admissible-step-length", incs, r, t);
            if (!aa.within_budget) acc.flag("admissible-count", incs, r, t);
            if (!aa.spread) acc.flag("admissible-spread", incs, r, t);
            if (!aa.spread_literal) acc.flag("admissible-spread-literal", incs, r, t);
        } catch (const AdmissibilityError&) {
            acc.flag("admissible-count", incs, r, t);
        } catch (const std::exception&) {
            acc.flag("admissible-construction", incs, r, t);
        }
    }
}

}  // namespace

StructureReport verify_structure(int horizon, int slope_cap, unsigned threads) {
    SearchSpec spec;
    spec.horizon = horizon;
    spec.slope_cap = slope_cap;
    spec.mode = SearchMode::Dp;
    check_guard(spec);
    const unsigned workers = worker_count(threads);
    const std::size_t depth = shard_depth(horizon, slope_cap, workers);
    std::vector<std::vector<int>> shallow;
    const auto shards = frontier_prefixes(spec, depth, shallow);

    StructureAcc total;
    for (const auto& pre : shallow) audit_node(total, pre, slope_cap);
    std::vector<StructureAcc> parts(shards.size());
    run_indexed(shards.size(), workers, [&](std::size_t i) {
        std::vector<int> incs = shards[i];
        std::int64_t f = 0;
        for (int v : incs) f += v;
        auto visit = [&](const std::vector<int>& node) { audit_node(parts[i], node, slope_cap); };
        dfs(spec, incs, f, visit);
    });
    for (auto& p : parts) total.merge(std::move(p));
    return total.rep;
}

}  // namespace pinlab
