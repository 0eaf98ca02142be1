#include "pinlab/partition.hpp"

#include <algorithm>
#include <string>

namespace pinlab {

namespace {

Rational g_int(const ComplexityProfile& p, std::int64_t k) { return Rational(p.excess_at(static_cast<int>(k))); }

void check_range(const ComplexityProfile& p, const Rational& a, const Rational& b) {
    if (a < 0 || b > p.horizon() || !(a < b))
        throw DomainError("range [" + a.str() + ", " + b.str() + "] not inside [0, " + std::to_string(p.horizon()) + "]");
}

// Greedy step shared by the admissible and good procedures.
Rational greedy_step(const ComplexityProfile& p, const Rational& c, const Rational& cap) {
    const Rational d = max(yellow_extent(p, c, cap), teal_extent(p, c, cap));
    if (!(d > c)) throw StructureViolation("greedy step stalled at " + c.str());
    return d;
}

Partition greedy_admissible(const ComplexityProfile& p, const Rational& a, const Rational& b, const Rational& t) {
    Partition part;
    part.rule = PartitionRule::Admissible;
    part.t = t;
    part.breakpoints.push_back(a);
    for (Rational c = a; c < b;) {
        const Rational d = greedy_step(p, c, min(c + t, b));
        part.colors.push_back(classify(p, {c, d}, t));
        part.breakpoints.push_back(d);
        c = d;
    }
    return part;
}

bool inside(const Rational& x, const Interval& iv) { return iv.lo < x && x < iv.hi; }

}  // namespace

Rational yellow_extent(const ComplexityProfile& p, const Rational& c, const Rational& cap) {
    const Rational level = p.excess(c);
    const std::int64_t last = cap.ceil();
    for (std::int64_t k = c.floor() + 1; k <= last; ++k) {
        if (p.delta(static_cast<int>(k)) != 0) continue;
        // g falls with slope -1 on [k-1, k]
        const Rational s0 = max(c, Rational(k - 1));
        const Rational cross = s0 + (p.excess(s0) - level);
        if (cross < min(cap, Rational(k))) return cross;
    }
    return cap;
}

Rational teal_extent(const ComplexityProfile& p, const Rational& c, const Rational& cap) {
    Rational best = c;
    Rational best_g = p.excess(c);
    for (std::int64_t k = c.floor() + 1; k < cap; ++k) {
        const Rational gk = g_int(p, k);
        if (gk <= best_g) {
            best = k;
            best_g = gk;
        }
    }
    if (p.excess(cap) <= best_g) best = cap;
    return best;
}

Rational green_reach(const ComplexityProfile& p, const Rational& a, const Rational& t, const Rational& bound) {
    const Rational y = yellow_extent(p, a, min(a + t, bound));
    const Rational level = p.excess(a);
    if (y > a && p.excess(y) == level) return y;
    for (std::int64_t k = y.ceil() - 1; k > a; --k)
        if (g_int(p, k) == level) return k;
    return a;
}

std::optional<Rational> next_green_start(const ComplexityProfile& p, const Rational& x, const Rational& t,
                                         const Rational& bound) {
    const std::int64_t end = bound.ceil();
    for (std::int64_t k = x.floor() + 1; k <= end; ++k) {
        const Rational lo = max(x, Rational(k - 1));
        const Rational hi = min(bound, Rational(k));
        if (!(lo < hi)) continue;
        const int dk = p.delta(static_cast<int>(k));
        if (dk == 0) continue;  // g falls right after every point of the segment
        if (dk == 1) {
            if (green_reach(p, lo, t, bound) > lo) return lo;
            continue;
        }
        // Rising segment: the feasible starts form a closed set whose least
        // element is lo or a point where a tightness equation holds.
        std::vector<Rational> cand{lo};
        const Rational g0 = g_int(p, k - 1);
        const Rational rise(dk - 1);
        for (std::int64_t j = k + 1; j <= end; ++j) {
            // return to the level of an integer point j
            const Rational c = Rational(k - 1) + (g_int(p, j) - g0) / rise;
            if (lo <= c && c < hi) cand.push_back(c);
            // return exactly at c + t on segment [j-1, j]
            const int dj = p.delta(static_cast<int>(j));
            const Rational coef(dk - dj);
            if (coef == 0) continue;
            const Rational rhs = g_int(p, j - 1) - g0 + rise * (k - 1) + Rational(dj - 1) * (t - (j - 1));
            const Rational e = rhs / coef;
            if (lo <= e && e < hi && Rational(j - 1) <= e + t && e + t <= Rational(j)) cand.push_back(e);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (const Rational& c : cand)
            if (green_reach(p, c, t, bound) > c) return c;
    }
    return std::nullopt;
}

Partition admissible_partition(const ComplexityProfile& p, const Rational& a, const Rational& b, const Rational& t,
                               long long M) {
    check_range(p, a, b);
    if (t <= 0) throw DomainError("t must be positive");
    Partition part = greedy_admissible(p, a, b, t);
    part.budget = M;
    part.r = b;
    if (part.k() > M)
        throw AdmissibilityError("admissible partition needs k = " + std::to_string(part.k()) + " > M = " +
                                     std::to_string(M),
                                 part.k(), M);
    return part;
}

Partition good_partition(const ComplexityProfile& p, int r) {
    if (r < 1 || r > p.horizon()) throw DomainError("r outside [1, horizon]");
    Partition part;
    part.rule = PartitionRule::Good;
    part.r = r;
    part.breakpoints.push_back(1);
    const Rational big_t(r);  // green flag is irrelevant for the doubling rule
    for (Rational c = 1; c < r;) {
        const Rational d = greedy_step(p, c, min(c * 2, Rational(r)));
        part.colors.push_back(classify(p, {c, d}, big_t));
        part.breakpoints.push_back(d);
        c = d;
    }
    if (part.colors.empty()) part.breakpoints.clear();
    return part;
}

AdmissibleAudit audit_admissible(const ComplexityProfile& p, const Partition& part, const Rational& lo,
                                 const Rational& hi) {
    AdmissibleAudit a;
    const auto& bp = part.breakpoints;
    if (bp.size() < 2 || bp.front() != lo || bp.back() != hi || part.colors.size() + 1 != bp.size()) {
        a.covers = false;
        return a;
    }
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        if (!(bp[i] < bp[i + 1])) {
            a.covers = false;
            return a;
        }
    }
    a.within_budget = part.k() <= part.budget;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const ColorSet c = classify(p, {bp[i], bp[i + 1]}, part.t);
        if (!c.yellow && !c.teal) a.colored = false;
        if (bp[i + 1] - bp[i] > part.t) a.short_steps = false;
        if (i + 2 < bp.size() && !(bp[i + 2] > bp[i] + part.t)) {
            a.spread_literal = false;
            if (bp[i + 2] != hi) a.spread = false;
        }
    }
    return a;
}

GoodAudit audit_good(const ComplexityProfile& p, const Partition& part, int r) {
    GoodAudit a;
    const auto& bp = part.breakpoints;
    if (r == 1) {
        a.covers = bp.empty() && part.colors.empty();
        return a;
    }
    if (bp.size() < 2 || bp.front() != 1 || bp.back() != r || part.colors.size() + 1 != bp.size()) {
        a.covers = false;
        return a;
    }
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        if (!(bp[i] < bp[i + 1])) {
            a.covers = false;
            return a;
        }
    }
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const ColorSet c = classify(p, {bp[i], bp[i + 1]}, Rational(r));
        if (!c.yellow && !c.teal) a.colored = false;
        if (bp[i + 1] > bp[i] * 2) a.doubling = false;
        if (i + 2 < bp.size() && !(bp[i + 2] > bp[i] * 2)) {
            a.spread_literal = false;
            if (bp[i + 2] != r) a.spread = false;
        }
    }
    return a;
}

namespace {

void fill_gap(const ComplexityProfile& p, const Rational& b, const Rational& c, std::vector<RgbInterval>& out) {
    const std::int64_t first = b.floor() + 1;
    const std::int64_t last = c.ceil();
    bool all_red = true;
    bool all_blue = true;
    for (std::int64_t k = first; k <= last; ++k) {
        const int dk = p.delta(static_cast<int>(k));
        all_red = all_red && dk >= 2;
        all_blue = all_blue && dk == 0;
    }
    if (all_red) {
        out.push_back({{b, c}, RgbColor::Red});
        return;
    }
    if (all_blue) {
        out.push_back({{b, c}, RgbColor::Blue});
        return;
    }
    std::int64_t s = first;
    while (s <= last && p.delta(static_cast<int>(s)) == 0) ++s;
    bool tail_red = s > first;
    for (std::int64_t k = s; k <= last; ++k) tail_red = tail_red && p.delta(static_cast<int>(k)) >= 2;
    if (!tail_red)
        throw StructureViolation("gap [" + b.str() + ", " + c.str() + "] is neither red, blue, nor blue-then-red");
    const Rational split(s - 1);
    out.push_back({{b, split}, RgbColor::Blue});
    out.push_back({{split, c}, RgbColor::Red});
}

}  // namespace

RgbPartition rgb_partition(const ComplexityProfile& p, int r, const Rational& t) {
    if (r < 1 || r > p.horizon()) throw DomainError("r outside [1, horizon]");
    if (t <= 0 || t > r) throw DomainError("t must lie in (0, r]");
    RgbPartition out;
    out.r = r;
    out.t = t;
    const Rational R(r);
    Rational x = 0;
    while (x < R) {
        const auto c = next_green_start(p, x, t, R);
        if (!c) break;
        if (x < *c) fill_gap(p, x, *c, out.intervals);
        const Rational d = green_reach(p, *c, t, R);
        if (!classify(p, {*c, d}, t).green)
            throw StructureViolation("merged interval [" + c->str() + ", " + d.str() + "] is not green");
        out.intervals.push_back({{*c, d}, RgbColor::Green});
        x = d;
    }
    if (x < R) fill_gap(p, x, R, out.intervals);

    const auto& iv = out.intervals;
    for (std::size_t i = 0; i < iv.size();) {
        if (iv[i].color != RgbColor::Green) {
            ++i;
            continue;
        }
        GreenRun run;
        run.first = i;
        run.length = 0;
        while (i < iv.size() && iv[i].color == RgbColor::Green) run.length += iv[i++].span.length();
        run.last = i - 1;
        if (run.first > 0 && iv[run.first - 1].color == RgbColor::Red) run.red = run.first - 1;
        if (i < iv.size() && iv[i].color == RgbColor::Blue) run.blue = i;
        out.green_runs.push_back(run);
    }
    return out;
}

std::optional<GreenRun> find_rgb_sequence(const RgbPartition& rgb, const Rational& t) {
    for (const GreenRun& run : rgb.green_runs) {
        if (!run.flanked()) continue;
        if (run.length < t)
            throw StructureViolation("red-green-blue run of green length " + run.length.str() + " < t = " + t.str());
        return run;
    }
    return std::nullopt;
}

std::vector<int> red_blue_junctions(const ComplexityProfile& p, int r) {
    std::vector<int> out;
    for (int b = 1; b < r; ++b)
        if (p.delta(b) >= 2 && p.delta(b + 1) == 0) out.push_back(b);
    return out;
}

NoRgbPartition no_rgb_admissible_partition(const ComplexityProfile& p, int r, const Rational& t, long long M) {
    const RgbPartition rgb = rgb_partition(p, r, t);
    if (find_rgb_sequence(rgb, t)) throw ContractError("profile has a red-green-blue sequence");

    Rational a = 0;
    bool have_red = false;
    for (const auto& iv : rgb.intervals) {
        if (iv.color == RgbColor::Red) {
            a = iv.span.lo;
            have_red = true;
            break;
        }
    }
    if (!have_red)
        for (const auto& iv : rgb.intervals)
            if (iv.color == RgbColor::Blue) a = iv.span.hi;

    NoRgbPartition out;
    const Rational R(r);
    out.partition.rule = PartitionRule::Admissible;
    out.partition.t = t;
    out.partition.breakpoints.push_back(0);
    // Before a only green and blue tiles occur, and both are teal; blue tiles
    // are cut into pieces of length at most t.
    for (const auto& iv : rgb.intervals) {
        if (iv.span.hi > a) break;
        if (iv.color == RgbColor::Red) throw StructureViolation("red interval before the yellow tail");
        for (Rational c = iv.span.lo; c < iv.span.hi;) {
            const Rational d = iv.color == RgbColor::Green ? iv.span.hi : min(c + t, iv.span.hi);
            out.partition.colors.push_back(classify(p, {c, d}, t));
            out.partition.breakpoints.push_back(d);
            c = d;
        }
    }
    out.yellow_from = a;
    out.bad_length = 0;
    for (std::size_t i = 0; i < out.partition.size(); ++i)
        if (!out.partition.colors[i].yellow) out.bad_length += out.partition.interval(i).length();

    for (Rational c = a; c < R;) {
        Rational d = yellow_extent(p, c, min(c + t, R));
        for (const auto& iv : rgb.intervals) {
            if (iv.color == RgbColor::Green && inside(d, iv.span)) {
                d = iv.span.lo;
                break;
            }
        }
        if (!(d > c)) throw StructureViolation("yellow-only step stalled at " + c.str());
        out.partition.colors.push_back(classify(p, {c, d}, t));
        out.partition.breakpoints.push_back(d);
        c = d;
    }
    out.partition.budget = M;
    out.partition.r = R;
    if (out.partition.k() > M)
        throw AdmissibilityError("yellow-tail partition needs k = " + std::to_string(out.partition.k()) +
                                     " > M = " + std::to_string(M),
                                 out.partition.k(), M);
    return out;
}

const char* color_name(RgbColor c) {
    switch (c) {
        case RgbColor::Red: return "red";
        case RgbColor::Blue: return "blue";
        case RgbColor::Green: return "green";
    }
    return "?";
}

}  // namespace pinlab
