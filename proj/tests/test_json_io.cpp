#include <doctest.h>

#include "pinlab/json_io.hpp"

using namespace pinlab;

TEST_SUITE("json_io") {

TEST_CASE("profiles round-trip") {
    const ComplexityProfile p({2, 2, 0, 0});
    const json j = to_json(p);
    CHECK(j.dump() == R"({"horizon":4,"slope_cap":2,"increments":[2,2,0,0]})");
    CHECK(profile_from_json(j) == p);
    CHECK(profile_from_json(json::parse(R"({"increments":[1,3],"slope_cap":3})")).slope_cap() == 3);
}

TEST_CASE("malformed profiles are rejected") {
    CHECK_THROWS_AS((void)profile_from_json(json::parse(R"({"horizon":2})")), std::invalid_argument);
    CHECK_THROWS_AS((void)profile_from_json(json::parse(R"({"horizon":3,"increments":[1,1]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)profile_from_json(json::parse(R"({"increments":[1,5]})")), DomainError);
    CHECK_THROWS((void)profile_from_json(json::parse(R"({"increments":["a"]})")));
}

TEST_CASE("rationals serialize as p/q strings") {
    CHECK(rational_from_json(json("3/6")) == Rational(1, 2));
    CHECK(rational_from_json(json(4)) == Rational(4));
    CHECK_THROWS_AS((void)rational_from_json(json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS((void)rational_from_json(json("1/0")), std::invalid_argument);
}

TEST_CASE("partition encoding") {
    const ComplexityProfile p({2, 2, 0, 0});
    const json j = to_json(admissible_partition(p, 0, 4, 2, 6));
    CHECK(j["rule"] == "A");
    CHECK(j["breakpoints"] == json::parse(R"(["0/1","2/1","4/1"])"));
    CHECK(j["colors"][0]["yellow"] == true);
    CHECK(j["colors"][0]["teal"] == false);
    CHECK(j["params"]["t"] == "2/1");
    CHECK(j["params"]["M"] == 6);
    CHECK(j["params"]["k"] == 1);
    const json g = to_json(good_partition(p, 4));
    CHECK(g["rule"] == "G");
    CHECK_FALSE(g["params"].contains("t"));
}

TEST_CASE("bound report encoding") {
    const BoundReport rep = projection_upper_bound(ComplexityProfile({2, 2, 0, 0}), 4, 2);
    const json j = to_json(rep);
    CHECK(j["theorem_id"] == "proj-main");
    CHECK(j["guaranteed"] == "1/1");
    CHECK(j["certified"] == "1/1");
    CHECK(j["gap"] == "0/1");
    CHECK(j["holds"] == true);
    CHECK(j["params"]["t"] == "2/1");
    CHECK(j["params"]["d"].is_null());
    CHECK(j["params"]["case"] == "rgb");
    CHECK(j["witness"].contains("partition"));
    CHECK(j["witness"].contains("rgb"));
    CHECK(bound_csv_header() == "theorem_id,r,t,d,guaranteed,certified");
    CHECK(bound_csv_row(rep) == "proj-main,4,2/1,,1/1,1/1");
}

TEST_CASE("search report encoding is stable") {
    SearchSpec s;
    s.theorem = TheoremId::DistMain;
    s.horizon = 6;
    s.constraint = Constraint::DimGt1;
    const json a = to_json(verify_theorem(s));
    const json b = to_json(verify_theorem(s));
    CHECK(a.dump() == b.dump());
    CHECK(a["counterexamples"].empty());
    CHECK(a["counterexample_count"] == 0);
    CHECK(to_json(s)["constraint"] == "dim_gt_1");
    CHECK(to_json(s)["r_min"] == 6);
    CHECK_FALSE(to_json(s).contains("seed"));
}

TEST_CASE("experiment config round-trip") {
    const json in = json::parse(R"({
        "fractal": {"kind": "product_cantor", "digits_a": [0, 2], "base_a": 3, "depth": 5},
        "pins": {"sampling": "grid", "count": 9, "margin": 1.0},
        "scales": {"j_min": 2, "j_max": 6},
        "seed": 5,
        "tolerance": 0.05})");
    const ExperimentConfig c = experiment_from_json(in);
    CHECK(c.fractal.digits_b == std::vector<int>{0, 2});
    CHECK(c.fractal.base_b == 3);
    CHECK(c.sampling == PinSampling::Grid);
    CHECK(c.pin_count == 9);
    CHECK(c.j_min == 2);
    CHECK(c.seed == 5);
    const json out = to_json(c);
    CHECK(experiment_from_json(out).fractal.depth == 5);
    CHECK(to_json(experiment_from_json(out)).dump() == out.dump());

    const ExperimentConfig fc = experiment_from_json(
        json::parse(R"({"fractal": {"kind": "four_corner", "contraction": 0.3, "depth": 4}})"));
    CHECK(fc.fractal.kind == FractalKind::FourCorner);
    CHECK(fc.pin_count == 64);
    CHECK_THROWS_AS((void)experiment_from_json(json::parse(R"({"fractal": {"kind": "koch", "depth": 2}})")),
                    std::invalid_argument);
    CHECK_THROWS((void)experiment_from_json(json::parse(R"({"pins": {}})")));
}

TEST_CASE("pin CSV") {
    ExperimentConfig c;
    c.fractal.depth = 3;
    c.pin_count = 3;
    const std::string csv = pins_csv(run_experiment(c));
    CHECK(csv.rfind("pin_x,pin_y,estimate\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

}
