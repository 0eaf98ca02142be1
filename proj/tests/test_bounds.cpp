#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pinlab/bounds.hpp"

using namespace pinlab;

namespace {

std::vector<int> ceil_profile(const Rational& d, int horizon) {
    std::vector<int> inc;
    std::int64_t prev = 0;
    for (int s = 1; s <= horizon; ++s) {
        const std::int64_t f = (d * s).ceil();
        inc.push_back(static_cast<int>(f - prev));
        prev = f;
    }
    return inc;
}

Partition admissible_from(const ComplexityProfile& p, std::vector<Rational> bps, Rational t, long long M) {
    Partition part;
    part.rule = PartitionRule::Admissible;
    part.breakpoints = std::move(bps);
    part.t = t;
    part.budget = M;
    part.r = part.breakpoints.back();
    for (std::size_t i = 0; i + 1 < part.breakpoints.size(); ++i)
        part.colors.push_back(classify(p, part.interval(i), t));
    return part;
}

std::string param(const BoundReport& r, const std::string& key) {
    for (const auto& [k, v] : r.params)
        if (k == key) return v;
    return "";
}

// Non-teal sum recomputed with the grid oracle.
Rational oracle_bad_sum(const ComplexityProfile& p, const Partition& part) {
    Rational s = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
        const Interval iv = part.interval(i);
        if (!oracle::teal(p, iv.lo, iv.hi, 4)) s += p.eval(iv.hi) - p.eval(iv.lo) - iv.length();
    }
    return s;
}

Rational oracle_bad_length(const ComplexityProfile& p, const Partition& part) {
    Rational s = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
        const Interval iv = part.interval(i);
        if (!oracle::teal(p, iv.lo, iv.hi, 4)) s += iv.length();
    }
    return s;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("theorem names round-trip") {
    for (TheoremId id : {TheoremId::ProjPartition, TheoremId::ProjMain, TheoremId::DistPartition, TheoremId::DistMain,
                         TheoremId::PinnedEffDim})
        CHECK(parse_theorem(theorem_name(id)) == id);
    CHECK_THROWS_AS((void)parse_theorem("proj"), std::invalid_argument);
    CHECK(is_upper_bound(TheoremId::ProjMain));
    CHECK_FALSE(is_upper_bound(TheoremId::DistMain));
}

TEST_CASE("partition projection bound examples") {
    const ComplexityProfile hump({2, 2, 0, 0});
    CHECK(partition_projection_bound(hump, admissible_from(hump, {0, 2, 4}, 2, 6), 4) == Rational(2));
    CHECK(partition_projection_bound(hump, admissible_from(hump, {0, 1, 3, 4}, 2, 6), 4) == Rational(1));
    const ComplexityProfile zero({0, 0, 0, 0});
    CHECK(partition_projection_bound(zero, admissible_from(zero, {0, 2, 4}, 2, 6), 4) == Rational(0));
    CHECK(partition_projection_bound(zero, admissible_from(zero, {0, 1, 2, 3, 4}, 1, 6), 4) == Rational(0));

    // too long a step, and a missing endpoint
    CHECK_THROWS_AS((void)partition_projection_bound(hump, admissible_from(hump, {0, 4}, 2, 6), 4), ContractError);
    CHECK_THROWS_AS((void)partition_projection_bound(hump, admissible_from(hump, {0, 2}, 2, 6), 4), ContractError);
    CHECK_THROWS_AS((void)partition_projection_bound(hump, admissible_from(hump, {0, 1, 2, 3, 4}, 1, 2), 4),
                    ContractError);
}

TEST_CASE("projection bound examples") {
    const BoundReport hump = projection_upper_bound(ComplexityProfile({2, 2, 0, 0}), 4, 2);
    CHECK(hump.certified == Rational(1));
    CHECK(hump.guaranteed == Rational(1));
    CHECK(hump.gap() == Rational(0));
    CHECK(hump.holds());
    CHECK(param(hump, "case") == "rgb");
    CHECK(param(hump, "B") == "1/1");

    const BoundReport id = projection_upper_bound(ComplexityProfile(std::vector<int>(8, 1)), 8, 2);
    CHECK(id.certified == Rational(0));
    CHECK(id.guaranteed == Rational(3));
    CHECK(param(id, "case") == "no-rgb");

    const BoundReport steep = projection_upper_bound(ComplexityProfile(std::vector<int>(8, 2)), 8, 2);
    CHECK(steep.certified == Rational(8));
    CHECK(steep.guaranteed == Rational(11));
    CHECK(steep.holds());
}

TEST_CASE("projection bound hypotheses") {
    CHECK_THROWS_AS((void)projection_upper_bound(ComplexityProfile({0, 0, 0, 0}), 4, 2), ContractError);
    // s0 skips the early deficit
    CHECK_NOTHROW((void)projection_upper_bound(ComplexityProfile({0, 2, 2, 2}), 4, 2, {std::nullopt, 2, {}}));
    ProjectionOptions small_c;
    small_c.C = 1;
    CHECK_THROWS_AS((void)projection_upper_bound(ComplexityProfile({1, 1, 1, 1}), 4, 2, small_c), ContractError);
    CHECK_THROWS_AS((void)projection_upper_bound(ComplexityProfile({1, 1}), 3, 1), DomainError);
    CHECK_THROWS_AS((void)projection_upper_bound(ComplexityProfile({1, 1}), 2, 3), DomainError);
    try {
        (void)projection_upper_bound(ComplexityProfile({0, 1, 1}), 3, 1);
        FAIL("expected ContractError");
    } catch (const ContractError& e) {
        CHECK(std::string(e.what()).find("dimension above one") != std::string::npos);
    }
}

TEST_CASE("distance bound examples") {
    const BoundReport hump = distance_lower_bound(ComplexityProfile({2, 2, 0, 0}), 4);
    CHECK(param(hump, "B") == "1/1");
    CHECK(hump.certified == Rational(3));
    CHECK(hump.guaranteed == Rational(2));

    const BoundReport id = distance_lower_bound(ComplexityProfile(std::vector<int>(8, 1)), 8);
    CHECK(param(id, "B") == "0/1");
    CHECK(id.certified == Rational(8));
    CHECK(id.guaranteed == Rational(4));

    const BoundReport steep = distance_lower_bound(ComplexityProfile(std::vector<int>(8, 2)), 8);
    CHECK(param(steep, "B") == "7/1");
    CHECK(steep.certified == Rational(9));
    CHECK(steep.guaranteed == Rational(8));

    CHECK_THROWS_AS((void)distance_lower_bound(ComplexityProfile({0, 0, 0, 0}), 4), ContractError);
}

TEST_CASE("pinned bound examples") {
    const BoundReport id = pinned_effdim_bound(ComplexityProfile(std::vector<int>(8, 1)), 1, 8);
    CHECK(param(id, "pivot") == "4");
    CHECK(id.guaranteed / 8 == Rational(3, 4));
    CHECK(id.holds());

    const BoundReport full = pinned_effdim_bound(ComplexityProfile(std::vector<int>(8, 2)), 2, 8);
    CHECK(param(full, "pivot") == "4");
    CHECK(full.guaranteed / 8 == Rational(1));

    const Rational d(6, 5);
    const BoundReport six = pinned_effdim_bound(ComplexityProfile(ceil_profile(d, 40)), d, 40);
    CHECK(six.guaranteed / 40 == Rational(4, 5));
    CHECK(param(six, "guaranteed_normalized") == "4/5");

    CHECK_THROWS_AS((void)pinned_effdim_bound(ComplexityProfile({2, 2}), 1, 2), ContractError);
    CHECK_THROWS_AS((void)pinned_effdim_bound(ComplexityProfile({1, 1}), 1, 1), ContractError);
    CHECK_THROWS_AS((void)pinned_effdim_bound(ComplexityProfile({1, 1}), Rational(-1), 2), DomainError);
}

TEST_CASE("pinned guaranteed value is non-decreasing in d") {
    for (int r : {4, 9, 16, 40}) {
        Rational prev = -1;
        for (int k = 10; k <= 20; ++k) {
            const Rational d(k, 10);
            // f(s) = 2s satisfies every dimension hypothesis with d <= 2
            const BoundReport rep = pinned_effdim_bound(ComplexityProfile(std::vector<int>(40, 2)), d, r);
            CHECK(rep.guaranteed >= prev);
            prev = rep.guaranteed;
        }
    }
}

TEST_CASE("slack allowance") {
    CHECK(slack_allowance({}, 8) == Rational(0));
    CHECK(slack_allowance({true, Rational(1, 10), 1}, 8) == Rational(19, 5));
    CHECK(slack_allowance({true, 0, 0}, 8) == Rational(0));
    const Rational five = slack_allowance({true, 0, 1}, 5);
    CHECK(five.den() <= (1 << 20));
    CHECK(five.to_double() <= std::log2(5.0));
    CHECK(five.to_double() > std::log2(5.0) - 1e-6);

    BoundReport rep = projection_upper_bound(ComplexityProfile({2, 2, 0, 0}), 4, 2, {std::nullopt, 0, {true, 1, 0}});
    CHECK(rep.allowance == Rational(4));
    CHECK(rep.gap() == Rational(4));
}

TEST_CASE("projection bound holds and matches oracle sums, exhaustive horizon <= 8") {
    long long evaluated = 0, tight = 0;
    for (int h = 1; h <= 8; ++h)
        oracle::for_each_profile(h, 2, [&](const std::vector<int>& inc) {
            if (!oracle::dim_at_least_one(inc)) return;
            const ComplexityProfile p(inc);
            for (int t = 1; t <= h; ++t) {
                const BoundReport rep = projection_upper_bound(p, h, t);
                REQUIRE(rep.partition);
                REQUIRE(audit_admissible(p, *rep.partition, 0, h).admissible());
                const Rational fr(p.at(h));
                REQUIRE(rep.guaranteed == fr - Rational(h + t, 2));
                if (param(rep, "case") == "no-rgb") {
                    REQUIRE(rep.certified == oracle_bad_sum(p, *rep.partition));
                    bool all_yellow = true;
                    for (const auto& c : rep.partition->colors) all_yellow = all_yellow && c.yellow;
                    if (all_yellow) REQUIRE(rep.certified == fr - h);
                    REQUIRE(rep.certified <= fr - h);
                } else {
                    const Rational B = oracle_bad_length(p, *rep.partition);
                    REQUIRE(rep.certified == min(fr - B - t, B));
                }
                REQUIRE(rep.holds());
                if (rep.gap() == 0) ++tight;
                ++evaluated;
            }
        });
    CHECK(evaluated > 1000);
    MESSAGE("projection evaluations: ", evaluated, ", tight: ", tight);
}

TEST_CASE("distance bound holds and matches the oracle, exhaustive horizon <= 10") {
    for (int h = 1; h <= 10; ++h)
        oracle::for_each_profile(h, 2, [&](const std::vector<int>& inc) {
            if (!oracle::dim_at_least_one(inc)) return;
            const ComplexityProfile p(inc);
            const BoundReport rep = distance_lower_bound(p, h);
            const Rational fr(p.at(h));
            const Rational B = oracle_bad_length(p, *rep.partition);
            REQUIRE(rep.certified == fr - min(fr - B, B));
            REQUIRE(rep.guaranteed == fr / 2);
            REQUIRE(rep.holds());
            REQUIRE(partition_distance_bound(p, *rep.partition, h) == oracle_bad_sum(p, *rep.partition));
        });
}

TEST_CASE("pinned bound on ceiling profiles") {
    for (const Rational& d : {Rational(1), Rational(6, 5), Rational(3, 2), Rational(2)}) {
        const BoundReport rep = pinned_effdim_bound(ComplexityProfile(ceil_profile(d, 40)), d, 40);
        CHECK(rep.guaranteed / 40 == d / 4 + Rational(1, 2));
        CHECK(rep.holds());
        CHECK(param(rep, "pivot_at_least_quarter") == "true");
    }
}

}
