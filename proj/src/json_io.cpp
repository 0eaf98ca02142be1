#include "pinlab/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace pinlab {

namespace {

json opt_rational(const std::optional<Rational>& r) { return r ? json(r->str()) : json(nullptr); }

json incs_json(const std::vector<int>& v) { return json(v); }

const char* sampling_name(PinSampling s) { return s == PinSampling::Random ? "random" : "grid"; }

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

json to_json(const ComplexityProfile& p) {
    return json{{"horizon", p.horizon()}, {"slope_cap", p.slope_cap()}, {"increments", p.increments()}};
}

ComplexityProfile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("increments")) throw std::invalid_argument("profile needs an increments array");
    const auto incs = j.at("increments").get<std::vector<int>>();
    const int cap = j.value("slope_cap", 2);
    if (j.contains("horizon") && j.at("horizon").get<int>() != static_cast<int>(incs.size()))
        throw std::invalid_argument("horizon does not match the number of increments");
    return ComplexityProfile(incs, cap);
}

json to_json(const ColorSet& c) {
    return json{{"yellow", c.yellow}, {"teal", c.teal}, {"red", c.red}, {"blue", c.blue}, {"green", c.green}};
}

json to_json(const Partition& p) {
    json bps = json::array();
    for (const auto& b : p.breakpoints) bps.push_back(b.str());
    json cols = json::array();
    for (const auto& c : p.colors) cols.push_back(to_json(c));
    json params = json::object();
    params["r"] = p.r.str();
    if (p.rule == PartitionRule::Admissible) {
        params["t"] = p.t.str();
        params["M"] = p.budget;
    }
    params["k"] = p.k();
    return json{{"rule", p.rule == PartitionRule::Admissible ? "A" : "G"},
                {"breakpoints", bps},
                {"colors", cols},
                {"params", params}};
}

json to_json(const RgbPartition& p) {
    json ivs = json::array();
    for (const auto& iv : p.intervals)
        ivs.push_back(json{{"lo", iv.span.lo.str()}, {"hi", iv.span.hi.str()}, {"color", color_name(iv.color)}});
    json runs = json::array();
    for (const auto& run : p.green_runs) {
        json jr{{"first", run.first}, {"last", run.last}, {"length", run.length.str()}};
        jr["red"] = run.red ? json(*run.red) : json(nullptr);
        jr["blue"] = run.blue ? json(*run.blue) : json(nullptr);
        runs.push_back(jr);
    }
    return json{{"r", p.r}, {"t", p.t.str()}, {"intervals", ivs}, {"green_runs", runs}};
}

json to_json(const BoundReport& r) {
    json params = json::object();
    params["r"] = r.r;
    params["t"] = opt_rational(r.t);
    params["d"] = opt_rational(r.d);
    params["mode"] = r.slack.slack ? "slack" : "idealized";
    params["eps"] = r.slack.eps.str();
    params["c_log"] = r.slack.c_log.str();
    for (const auto& [k, v] : r.params) params[k] = v;
    json out{{"theorem_id", theorem_name(r.theorem)},
             {"guaranteed", r.guaranteed.str()},
             {"certified", r.certified.str()},
             {"adjustment", r.adjustment.str()},
             {"allowance", r.allowance.str()},
             {"gap", r.gap().str()},
             {"holds", r.holds()},
             {"params", params},
             {"assumptions", r.assumptions}};
    json witness = json::object();
    if (r.partition) witness["partition"] = to_json(*r.partition);
    if (r.rgb) witness["rgb"] = to_json(*r.rgb);
    out["witness"] = witness;
    return out;
}

std::string bound_csv_header() { return "theorem_id,r,t,d,guaranteed,certified"; }

std::string bound_csv_row(const BoundReport& r) {
    std::ostringstream os;
    os << theorem_name(r.theorem) << ',' << r.r << ',' << (r.t ? r.t->str() : "") << ','
       << (r.d ? r.d->str() : "") << ',' << r.guaranteed.str() << ',' << r.certified.str();
    return os.str();
}

const char* constraint_name(Constraint c) {
    switch (c) {
        case Constraint::None: return "none";
        case Constraint::DimGt1: return "dim_gt_1";
        case Constraint::DimGeD: return "dim_ge_d";
    }
    return "?";
}

const char* mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::Exhaustive: return "exhaustive";
        case SearchMode::Dp: return "dp";
        case SearchMode::Random: return "random";
    }
    return "?";
}

json to_json(const Witness& w) {
    json j{{"increments", incs_json(w.increments)}, {"r", w.r}, {"t", opt_rational(w.t)}, {"gap", w.gap.str()}};
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

json to_json(const SearchSpec& s) {
    json j{{"theorem_id", theorem_name(s.theorem)},
           {"horizon", s.horizon},
           {"slope_cap", s.slope_cap},
           {"constraint", constraint_name(s.constraint)},
           {"d", s.d.str()},
           {"mode", mode_name(s.mode)},
           {"r_min", s.r_min <= 0 ? s.horizon : s.r_min}};
    if (s.mode == SearchMode::Random) {
        j["seed"] = s.seed;
        j["count"] = s.count;
    }
    return j;
}

json to_json(const SearchReport& r) {
    json ce = json::array();
    for (const auto& w : r.counterexamples) ce.push_back(to_json(w));
    json an = json::array();
    for (const auto& w : r.anomalies) an.push_back(to_json(w));
    return json{{"profiles_checked", r.profiles_checked},
                {"evaluations", r.evaluations},
                {"skipped", r.skipped},
                {"counterexample_count", r.counterexample_count},
                {"counterexamples", ce},
                {"anomaly_count", r.anomaly_count},
                {"anomalies", an},
                {"min_gap", opt_rational(r.min_gap)},
                {"argmin", r.argmin ? to_json(*r.argmin) : json(nullptr)}};
}

json to_json(const StructureReport& r) {
    json counts = json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    json first = json::object();
    for (const auto& [k, v] : r.first) first[k] = v;
    return json{{"profiles", r.profiles}, {"cases", r.cases}, {"violations", counts}, {"first_case", first}};
}

json to_json(const GeometryCheckReport& r) {
    return json{{"trials", r.trials},
                {"seed", r.seed},
                {"passed", r.passed()},
                {"chord", {{"worst_relative_error", r.chord_worst_relative}, {"failures", r.chord_failures}}},
                {"midpoint_direction", {{"failures", r.direction_failures}}},
                {"project_to_sphere",
                 {{"worst_radius_error", r.sphere_worst_radius},
                  {"worst_offset_error", r.sphere_worst_offset},
                  {"worst_idempotence_error", r.sphere_worst_idempotence},
                  {"failures", r.sphere_failures}}},
                {"projection_linearity", {{"worst_error", r.linearity_worst}, {"failures", r.linearity_failures}}}};
}

ExperimentConfig experiment_from_json(const json& j) {
    ExperimentConfig c;
    const json& f = j.at("fractal");
    const std::string kind = f.value("kind", "product_cantor");
    if (kind == "product_cantor") {
        c.fractal.kind = FractalKind::ProductCantor;
        c.fractal.digits_a = f.at("digits_a").get<std::vector<int>>();
        c.fractal.base_a = f.at("base_a").get<int>();
        c.fractal.digits_b = f.value("digits_b", c.fractal.digits_a);
        c.fractal.base_b = f.value("base_b", c.fractal.base_a);
    } else if (kind == "four_corner") {
        c.fractal.kind = FractalKind::FourCorner;
        c.fractal.contraction = f.at("contraction").get<double>();
    } else {
        throw std::invalid_argument("unknown fractal kind '" + kind + "'");
    }
    c.fractal.depth = f.at("depth").get<int>();
    if (j.contains("pins")) {
        const json& p = j.at("pins");
        const std::string s = p.value("sampling", "random");
        if (s == "random") c.sampling = PinSampling::Random;
        else if (s == "grid") c.sampling = PinSampling::Grid;
        else throw std::invalid_argument("unknown pin sampling '" + s + "'");
        c.pin_count = p.value("count", c.pin_count);
        c.margin = p.value("margin", c.margin);
    }
    if (j.contains("scales")) {
        c.j_min = j.at("scales").value("j_min", c.j_min);
        c.j_max = j.at("scales").value("j_max", c.j_max);
    }
    c.seed = j.value("seed", c.seed);
    c.tolerance = j.value("tolerance", c.tolerance);
    return c;
}

json to_json(const ExperimentConfig& c) {
    json f;
    if (c.fractal.kind == FractalKind::ProductCantor) {
        f = json{{"kind", "product_cantor"},
                 {"digits_a", c.fractal.digits_a},
                 {"base_a", c.fractal.base_a},
                 {"digits_b", c.fractal.digits_b},
                 {"base_b", c.fractal.base_b}};
    } else {
        f = json{{"kind", "four_corner"}, {"contraction", c.fractal.contraction}};
    }
    f["depth"] = c.fractal.depth;
    return json{{"fractal", f},
                {"pins", {{"sampling", sampling_name(c.sampling)}, {"count", c.pin_count}, {"margin", c.margin}}},
                {"scales", {{"j_min", c.j_min}, {"j_max", c.j_max}}},
                {"seed", c.seed},
                {"tolerance", c.tolerance}};
}

json to_json(const ExperimentReport& r) {
    json pins = json::array();
    for (const auto& p : r.pins)
        pins.push_back(json{{"pin", {p.pin.x1, p.pin.x2}},
                            {"estimate", p.fit.slope},
                            {"r2", p.fit.r2},
                            {"scales", p.fit.scales},
                            {"low_resolution", p.fit.low_resolution},
                            {"below_floor", p.below_floor}});
    return json{{"nominal_dim", r.nominal_dim},
                {"floor", r.floor},
                {"tolerance", r.tolerance},
                {"point_count", r.point_count},
                {"j_min", r.j_min},
                {"j_max", r.j_max},
                {"fraction_above", r.fraction_above},
                {"anomalies", r.anomalies},
                {"warnings", r.warnings},
                {"pins", pins}};
}

std::string pins_csv(const ExperimentReport& r) {
    std::string out = "pin_x,pin_y,estimate\n";
    for (const auto& p : r.pins)
        out += fmt_double(p.pin.x1) + "," + fmt_double(p.pin.x2) + "," + fmt_double(p.fit.slope) + "\n";
    return out;
}

}  // namespace pinlab
