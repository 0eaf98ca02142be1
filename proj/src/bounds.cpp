#include "pinlab/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace pinlab {

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::ProjPartition: return "proj-partition";
        case TheoremId::ProjMain: return "proj-main";
        case TheoremId::DistPartition: return "dist-partition";
        case TheoremId::DistMain: return "dist-main";
        case TheoremId::PinnedEffDim: return "pinned-effdim";
    }
    return "?";
}

TheoremId parse_theorem(const std::string& name) {
    for (TheoremId id : {TheoremId::ProjPartition, TheoremId::ProjMain, TheoremId::DistPartition, TheoremId::DistMain,
                         TheoremId::PinnedEffDim})
        if (name == theorem_name(id)) return id;
    throw std::invalid_argument("unknown theorem id '" + name + "'");
}

bool is_upper_bound(TheoremId id) { return id == TheoremId::ProjPartition || id == TheoremId::ProjMain; }

Rational slack_allowance(const SlackOptions& s, int r) {
    if (!s.slack) return 0;
    constexpr std::int64_t scale = 1 << 20;
    const double lg = r > 1 ? std::log2(static_cast<double>(r)) : 0.0;
    const auto ticks = static_cast<std::int64_t>(std::floor(s.c_log.to_double() * lg * scale));
    return s.eps * r + Rational(ticks, scale);
}

Rational BoundReport::gap() const {
    if (is_upper_bound(theorem)) return guaranteed + allowance - certified;
    return certified + adjustment + allowance - guaranteed;
}

Rational bad_length(const Partition& part) {
    Rational b = 0;
    for (std::size_t i = 0; i < part.size(); ++i)
        if (!part.colors[i].teal) b += part.interval(i).length();
    return b;
}

namespace {

Rational bad_sum(const ComplexityProfile& p, const Partition& part) {
    Rational s = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (part.colors[i].teal) continue;
        const Interval iv = part.interval(i);
        s += p.eval(iv.hi) - p.eval(iv.lo) - iv.length();
    }
    return s;
}

void check_dim_one(const ComplexityProfile& q, int s0, const char* label) {
    if (!has_dim_at_least(q, 1, s0))
        throw ContractError(std::string(label) + " violated: f(s) < s for some s >= " + std::to_string(s0));
}

Partition concat(Partition head, const Partition& tail) {
    if (head.breakpoints.empty()) return tail;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        head.colors.push_back(tail.colors[i]);
        head.breakpoints.push_back(tail.breakpoints[i + 1]);
    }
    return head;
}

std::string pstr(const Rational& x) { return x.str(); }

// Distance-side certificate without the dimension-one precondition check; shared with
// the pinned evaluator, which applies its own hypothesis.
BoundReport distance_core(const ComplexityProfile& q, int r, const SlackOptions& slack) {
    BoundReport rep;
    rep.theorem = TheoremId::DistMain;
    rep.r = r;
    rep.slack = slack;
    rep.allowance = slack_allowance(slack, r);
    const Partition part = good_partition(q, r);
    const Rational fr(q.at(r));
    const Rational B = bad_length(part);
    const Rational cond = min(fr - B, B * (q.slope_cap() - 1));
    rep.certified = fr - cond;
    rep.guaranteed = fr / 2;
    rep.params = {{"B", pstr(B)}, {"conditional_bound", pstr(cond)}, {"partition_sum", pstr(bad_sum(q, part))}};
    rep.partition = part;
    return rep;
}

}  // namespace

Rational partition_projection_bound(const ComplexityProfile& p, const Partition& part, int r) {
    const AdmissibleAudit a = audit_admissible(p, part, 0, r);
    if (!a.admissible()) throw ContractError("partition is not admissible on [0, " + std::to_string(r) + "]");
    return bad_sum(p, part);
}

Rational partition_distance_bound(const ComplexityProfile& p, const Partition& part, int r) {
    const GoodAudit a = audit_good(p, part, r);
    if (!a.good()) throw ContractError("partition is not a good partition of [1, " + std::to_string(r) + "]");
    return bad_sum(p, part);
}

BoundReport projection_upper_bound(const ComplexityProfile& p, int r, const Rational& t, const ProjectionOptions& opt) {
    if (r < 1 || r > p.horizon()) throw DomainError("r outside [1, horizon]");
    if (t <= 0 || t > r) throw DomainError("t must lie in (0, r]");
    const ComplexityProfile q = p.prefix(r);
    check_dim_one(q, opt.s0, "dimension above one");
    const long long C = opt.C.value_or((Rational(r) / t).ceil());
    if (C < 1 || t * C < r) throw ContractError("scale hypothesis t >= r/C violated for C = " + std::to_string(C));

    BoundReport rep;
    rep.theorem = TheoremId::ProjMain;
    rep.r = r;
    rep.t = t;
    rep.slack = opt.slack;
    rep.allowance = slack_allowance(opt.slack, r);
    rep.assumptions = {"direction e is random relative to x up to precision t (profile-free hypothesis)",
                       "oracle constructions enter only through the per-interval color bounds"};
    const Rational fr(q.at(r));
    rep.guaranteed = fr - (Rational(r) + t) / 2;

    RgbPartition rgb = rgb_partition(q, r, t);
    const auto run = find_rgb_sequence(rgb, t);
    if (!run) {
        const NoRgbPartition nr = no_rgb_admissible_partition(q, r, t, 5 * C);
        rep.certified = partition_projection_bound(q, nr.partition, r);
        // The teal prefix adds nothing, so the yellow tail caps the sum at g(r) - g(a).
        const Rational tail = q.excess(Rational(r)) - q.excess(nr.yellow_from);
        rep.params = {{"case", "no-rgb"},
                      {"C", std::to_string(C)},
                      {"k", std::to_string(nr.partition.k())},
                      {"yellow_from", pstr(nr.yellow_from)},
                      {"bad_length", pstr(nr.bad_length)},
                      {"tail_bound", pstr(tail)}};
        rep.partition = nr.partition;
        rep.rgb = std::move(rgb);
        return rep;
    }

    // Earliest adjacent green pair spanning at least t, else a single green of length t.
    const auto& iv = rgb.intervals;
    std::optional<std::size_t> pick;
    bool pair = false;
    for (std::size_t i = 0; i < iv.size() && !pick; ++i) {
        if (iv[i].color != RgbColor::Green) continue;
        if (i + 1 < iv.size() && iv[i + 1].color == RgbColor::Green && iv[i + 1].span.hi >= iv[i].span.lo + t) {
            pick = i;
            pair = true;
        } else if (iv[i].span.length() == t) {
            pick = i;
        }
    }
    if (!pick) throw StructureViolation("red-green-blue sequence without a green pair spanning t");
    const Rational a = iv[*pick].span.lo;
    const Rational c = pair ? iv[*pick + 1].span.hi : iv[*pick].span.hi;

    Partition comp;
    comp.rule = PartitionRule::Admissible;
    comp.t = t;
    if (a > 0) comp = admissible_partition(q, 0, a, t, 3 * C);
    else comp.breakpoints.push_back(0);
    for (std::size_t j = *pick; j <= *pick + (pair ? 1 : 0); ++j) {
        comp.colors.push_back(classify(q, iv[j].span, t));
        comp.breakpoints.push_back(iv[j].span.hi);
    }
    if (c < r) comp = concat(std::move(comp), admissible_partition(q, c, r, t, 3 * C));
    comp.budget = 10 * C;
    comp.r = r;
    comp.t = t;
    if (comp.k() > comp.budget)
        throw AdmissibilityError("composite partition exceeds 10C intervals", comp.k(), comp.budget);

    const Rational B = bad_length(comp);
    const Rational L = c - a;
    rep.certified = min(fr - B - t, B * (q.slope_cap() - 1));
    rep.params = {{"case", "rgb"},
                  {"C", std::to_string(C)},
                  {"pair_start", pstr(a)},
                  {"pair_end", pstr(c)},
                  {"pair_kind", pair ? "two" : "single"},
                  {"B", pstr(B)},
                  {"L", pstr(L)},
                  {"partition_sum", pstr(partition_projection_bound(q, comp, r))}};
    rep.partition = std::move(comp);
    rep.rgb = std::move(rgb);
    return rep;
}

BoundReport distance_lower_bound(const ComplexityProfile& p, int r, const DistanceOptions& opt) {
    if (r < 1 || r > p.horizon()) throw DomainError("r outside [1, horizon]");
    const ComplexityProfile q = p.prefix(r);
    check_dim_one(q, opt.s0, "dimension at least one, f(s) >= s");
    BoundReport rep = distance_core(q, r, opt.slack);
    rep.assumptions = {"x is independent of y at every precision (profile-free hypothesis)",
                       "direction (x - y)/|x - y| is random relative to y (profile-free hypothesis)"};
    return rep;
}

BoundReport pinned_effdim_bound(const ComplexityProfile& p, const Rational& d, int r, const DistanceOptions& opt) {
    if (r < 1 || r > p.horizon()) throw DomainError("r outside [1, horizon]");
    if (d < 0) throw DomainError("d must be non-negative");
    const ComplexityProfile q = p.prefix(r);
    if (!has_dim_at_least(q, d, opt.s0))
        throw ContractError("dimension hypothesis violated: f(s) < d*s for some s >= " + std::to_string(opt.s0));

    const Rational half = d * r / 2;
    int pivot = 0;
    for (int s = r - 1; s >= 1; --s) {
        if (Rational(q.at(s)) <= half) {
            pivot = s;
            break;
        }
    }
    if (pivot < 1) throw ContractError("no pivot precision s in [1, r) with f(s) <= d*r/2");

    const BoundReport at_pivot = distance_core(q, pivot, opt.slack);
    BoundReport rep;
    rep.theorem = TheoremId::PinnedEffDim;
    rep.r = r;
    rep.t = Rational(pivot);
    rep.d = d;
    rep.slack = opt.slack;
    rep.allowance = slack_allowance(opt.slack, r);
    rep.certified = at_pivot.certified + Rational(r, 2);
    rep.guaranteed = d * r / 4 + Rational(r, 2);
    const Rational deficit = half - q.at(pivot);
    rep.adjustment = deficit / 2;
    const bool quarter = 4 * pivot >= r;
    rep.params = {{"pivot", std::to_string(pivot)},
                  {"pivot_deficit", pstr(deficit)},
                  {"pivot_at_least_quarter", quarter ? "true" : "false"},
                  {"distance_certified_at_pivot", pstr(at_pivot.certified)},
                  {"guaranteed_normalized", pstr(rep.guaranteed / r)},
                  {"certified_normalized", pstr(rep.certified / r)}};
    rep.assumptions = {"x has dimension above one relative to the oracle (profile-free hypothesis)",
                       "direction is random relative to x and the oracle",
                       "x is independent of y relative to the oracle",
                       "direction is random relative to y and the oracle"};
    rep.partition = at_pivot.partition;
    return rep;
}

}  // namespace pinlab
