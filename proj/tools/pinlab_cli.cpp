// pinlab command-line driver.
//
// Exit status: 0 success, 1 contract/structure error (diagnostic JSON on
// stderr), 2 counterexample or failed check, 64 malformed invocation or input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pinlab/json_io.hpp"

namespace {

using namespace pinlab;

constexpr int kOk = 0;
constexpr int kContract = 1;
constexpr int kCounterexample = 2;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

void emit(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

Rational parse_rational(const std::string& s, const char* what) {
    try {
        return Rational::parse(s);
    } catch (const std::exception& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

ComplexityProfile load_profile(const std::string& path) {
    const json j = read_json_file(path);
    try {
        return profile_from_json(j);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("profile '" + path + "': " + e.what());
    }
}

Partition partition_from_json(const json& j) {
    Partition p;
    const std::string rule = j.at("rule").get<std::string>();
    p.rule = rule == "G" ? PartitionRule::Good : PartitionRule::Admissible;
    for (const auto& b : j.at("breakpoints")) p.breakpoints.push_back(rational_from_json(b));
    const json params = j.value("params", json::object());
    if (params.contains("t")) p.t = rational_from_json(params.at("t"));
    if (params.contains("M")) p.budget = params.at("M").get<long long>();
    if (params.contains("r")) p.r = rational_from_json(params.at("r"));
    p.colors.resize(p.breakpoints.empty() ? 0 : p.breakpoints.size() - 1);
    return p;
}

// Fills colors from the profile, ignoring any stored flags.
void recolor(const ComplexityProfile& prof, Partition& p) {
    const Rational t = p.rule == PartitionRule::Admissible ? p.t : Rational(prof.horizon());
    if (t <= 0) throw UsageError("admissible partition file needs params.t");
    for (std::size_t i = 0; i < p.colors.size(); ++i) p.colors[i] = classify(prof, p.interval(i), t);
}

struct SearchFlags {
    std::string theorem = "proj-main";
    int horizon = 8;
    int slope_cap = 2;
    std::string constraint;
    std::string d = "1";
    bool exhaustive = false;
    bool dp = false;
    bool random = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t count = 0;
    int r_min = 0;
    unsigned threads = 0;
    std::size_t max_listed = 1000;
    std::string out;
};

void add_search_flags(CLI::App* sub, SearchFlags& f) {
    sub->add_option("--theorem", f.theorem, "proj-main | dist-main | pinned-effdim")->required();
    sub->add_option("--horizon", f.horizon, "profile length")->required();
    sub->add_option("--slope-cap", f.slope_cap, "largest increment");
    sub->add_option("--constraint", f.constraint, "none | dim_gt_1 | dim_ge_d (default: the theorem's hypothesis)");
    sub->add_option("--d", f.d, "dimension for dim_ge_d and pinned-effdim, as p/q");
    auto* ex = sub->add_flag("--exhaustive", f.exhaustive, "enumerate every profile (default)");
    auto* dp = sub->add_flag("--dp", f.dp, "walk the prefix tree");
    auto* rnd = sub->add_flag("--random", f.random, "seeded random sampling");
    ex->excludes(dp)->excludes(rnd);
    dp->excludes(rnd);
    sub->add_option("--seed", f.seed, "random-mode seed");
    sub->add_option("--count", f.count, "random-mode sample size");
    sub->add_option("--r-min", f.r_min, "smallest precision evaluated (default: horizon)");
    sub->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    sub->add_option("--max-listed", f.max_listed, "cap on listed counterexamples");
    sub->add_option("--out", f.out, "report path (default stdout)");
}

SearchSpec to_spec(const SearchFlags& f) {
    SearchSpec s;
    try {
        s.theorem = parse_theorem(f.theorem);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    s.horizon = f.horizon;
    s.slope_cap = f.slope_cap;
    s.d = parse_rational(f.d, "--d");
    std::string c = f.constraint;
    if (c.empty()) c = s.theorem == TheoremId::PinnedEffDim ? "dim_ge_d" : "dim_gt_1";
    if (c == "none") s.constraint = Constraint::None;
    else if (c == "dim_gt_1") s.constraint = Constraint::DimGt1;
    else if (c == "dim_ge_d") s.constraint = Constraint::DimGeD;
    else throw UsageError("unknown constraint '" + c + "'");
    s.mode = f.dp ? SearchMode::Dp : (f.random ? SearchMode::Random : SearchMode::Exhaustive);
    if (s.mode == SearchMode::Random) {
        if (!f.seed) throw UsageError("--random requires --seed");
        if (f.count == 0) throw UsageError("--random requires --count > 0");
        s.seed = *f.seed;
        s.count = f.count;
    }
    s.r_min = f.r_min;
    s.threads = f.threads;
    s.max_listed = f.max_listed;
    return s;
}

void diagnose(const char* kind, const std::exception& e, const json& extra = json::object()) {
    json j{{"error", kind}, {"message", e.what()}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pinlab: complexity-profile calculus, bound verification and pinned-distance experiments"};
    app.require_subcommand(1);

    // classify
    std::string profile_path, interval_text, t_text = "1", out_path;
    auto* classify_cmd = app.add_subcommand("classify", "colors of one interval");
    classify_cmd->add_option("--profile", profile_path, "profile JSON")->required();
    classify_cmd->add_option("--interval", interval_text, "lo:hi as rationals, e.g. 1/1:3/1")->required();
    classify_cmd->add_option("--t", t_text, "green length limit")->required();
    classify_cmd->add_option("--out", out_path, "output path (default stdout)");

    // partition
    std::string rule = "A", a_text = "0", b_text, r_text;
    std::optional<long long> budget;
    auto* part_cmd = app.add_subcommand("partition", "greedy partitions");
    part_cmd->add_option("--profile", profile_path, "profile JSON")->required();
    part_cmd->add_option("--rule", rule, "A (admissible), G (good), Y (yellow tail, no red-green-blue)");
    part_cmd->add_option("--a", a_text, "left end for rule A");
    part_cmd->add_option("--b", b_text, "right end for rule A (default horizon)");
    part_cmd->add_option("--r", r_text, "precision for rules G and Y (default horizon)");
    part_cmd->add_option("--t", t_text, "step limit for rules A and Y");
    part_cmd->add_option("--M", budget, "interval budget (default 3*ceil(length/t), 5*ceil(r/t) for Y)");
    part_cmd->add_option("--out", out_path, "output path (default stdout)");

    // rgb
    auto* rgb_cmd = app.add_subcommand("rgb", "red/blue/green partition of [0, r]");
    rgb_cmd->add_option("--profile", profile_path, "profile JSON")->required();
    rgb_cmd->add_option("--r", r_text, "precision (default horizon)");
    rgb_cmd->add_option("--t", t_text, "green length limit")->required();
    rgb_cmd->add_option("--out", out_path, "output path (default stdout)");

    // bound
    std::string theorem = "proj-main", d_text = "1", mode = "idealized", eps_text = "0", clog_text = "0";
    std::string partition_path, csv_path;
    std::optional<long long> big_c;
    int s0 = 0;
    auto* bound_cmd = app.add_subcommand("bound", "evaluate one bound on one profile");
    bound_cmd->add_option("--profile", profile_path, "profile JSON")->required();
    bound_cmd->add_option("--theorem", theorem, "proj-main | dist-main | pinned-effdim | proj-partition | dist-partition");
    bound_cmd->add_option("--r", r_text, "precision (default horizon)");
    bound_cmd->add_option("--t", t_text, "projection precision t");
    bound_cmd->add_option("--d", d_text, "dimension for pinned-effdim");
    bound_cmd->add_option("--C", big_c, "constant with t >= r/C (default ceil(r/t))");
    bound_cmd->add_option("--s0", s0, "precision from which f(s) >= s is required");
    bound_cmd->add_option("--mode", mode, "idealized | slack");
    bound_cmd->add_option("--eps", eps_text, "slack-mode eps as p/q");
    bound_cmd->add_option("--c-log", clog_text, "slack-mode log coefficient as p/q");
    bound_cmd->add_option("--partition", partition_path, "partition JSON for the *-partition theorems");
    bound_cmd->add_option("--csv", csv_path, "append-free CSV row output");
    bound_cmd->add_option("--out", out_path, "output path (default stdout)");

    // verify / frontier
    SearchFlags vf;
    auto* verify_cmd = app.add_subcommand("verify", "search for counterexamples");
    add_search_flags(verify_cmd, vf);
    SearchFlags ff;
    std::size_t k = 10;
    std::string frontier_csv;
    auto* frontier_cmd = app.add_subcommand("frontier", "smallest-gap witnesses");
    add_search_flags(frontier_cmd, ff);
    frontier_cmd->add_option("--k", k, "number of witnesses");
    frontier_cmd->add_option("--csv", frontier_csv, "CSV of increments,r,t,gap");

    // structure
    int s_horizon = 8, s_cap = 2;
    unsigned s_threads = 0;
    auto* structure_cmd = app.add_subcommand("structure", "audit partition invariants on every prefix");
    structure_cmd->add_option("--horizon", s_horizon, "largest profile length")->required();
    structure_cmd->add_option("--slope-cap", s_cap, "largest increment");
    structure_cmd->add_option("--threads", s_threads, "worker threads (0 = all cores)");
    structure_cmd->add_option("--out", out_path, "output path (default stdout)");

    // geometry-check
    std::uint64_t trials = 100000;
    std::optional<std::uint64_t> geo_seed;
    auto* geo_cmd = app.add_subcommand("geometry-check", "randomized check of the circle identities");
    geo_cmd->add_option("--trials", trials, "number of random triples");
    geo_cmd->add_option("--seed", geo_seed, "seed")->required();
    geo_cmd->add_option("--out", out_path, "output path (default stdout)");

    // fractal
    std::string config_path;
    unsigned f_threads = 0;
    auto* fractal_cmd = app.add_subcommand("fractal", "pinned distance-set box-dimension experiment");
    fractal_cmd->add_option("--config", config_path, "experiment config JSON")->required();
    fractal_cmd->add_option("--csv", csv_path, "per-pin CSV path");
    fractal_cmd->add_option("--threads", f_threads, "worker threads (0 = all cores)");
    fractal_cmd->add_option("--out", out_path, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*classify_cmd) {
            const ComplexityProfile prof = load_profile(profile_path);
            const auto colon = interval_text.find(':');
            if (colon == std::string::npos) throw UsageError("--interval must look like lo:hi");
            const Interval iv(parse_rational(interval_text.substr(0, colon), "--interval"),
                              parse_rational(interval_text.substr(colon + 1), "--interval"));
            const ColorSet c = classify(prof, iv, parse_rational(t_text, "--t"));
            emit(out_path, to_json(c));
            return kOk;
        }

        if (*part_cmd) {
            const ComplexityProfile prof = load_profile(profile_path);
            const Rational t = parse_rational(t_text, "--t");
            if (rule == "A") {
                const Rational a = parse_rational(a_text, "--a");
                const Rational b = b_text.empty() ? Rational(prof.horizon()) : parse_rational(b_text, "--b");
                const long long M = budget.value_or(3 * ((b - a) / t).ceil());
                emit(out_path, to_json(admissible_partition(prof, a, b, t, M)));
            } else if (rule == "G") {
                const int r = r_text.empty() ? prof.horizon() : static_cast<int>(parse_rational(r_text, "--r").floor());
                emit(out_path, to_json(good_partition(prof, r)));
            } else if (rule == "Y") {
                const int r = r_text.empty() ? prof.horizon() : static_cast<int>(parse_rational(r_text, "--r").floor());
                const long long M = budget.value_or(5 * (Rational(r) / t).ceil());
                const NoRgbPartition np = no_rgb_admissible_partition(prof, r, t, M);
                json j = to_json(np.partition);
                j["bad_length"] = np.bad_length.str();
                j["yellow_from"] = np.yellow_from.str();
                emit(out_path, j);
            } else {
                throw UsageError("unknown rule '" + rule + "'");
            }
            return kOk;
        }

        if (*rgb_cmd) {
            const ComplexityProfile prof = load_profile(profile_path);
            const int r = r_text.empty() ? prof.horizon() : static_cast<int>(parse_rational(r_text, "--r").floor());
            const Rational t = parse_rational(t_text, "--t");
            const RgbPartition rgb = rgb_partition(prof, r, t);
            json j = to_json(rgb);
            const auto run = find_rgb_sequence(rgb, t);
            j["rgb_sequence"] = run ? json{{"first", run->first}, {"last", run->last}, {"length", run->length.str()}}
                                    : json(nullptr);
            emit(out_path, j);
            return kOk;
        }

        if (*bound_cmd) {
            const ComplexityProfile prof = load_profile(profile_path);
            const int r = r_text.empty() ? prof.horizon() : static_cast<int>(parse_rational(r_text, "--r").floor());
            SlackOptions slack;
            if (mode == "slack") {
                slack.slack = true;
                slack.eps = parse_rational(eps_text, "--eps");
                slack.c_log = parse_rational(clog_text, "--c-log");
            } else if (mode != "idealized") {
                throw UsageError("unknown mode '" + mode + "'");
            }
            TheoremId id;
            try {
                id = parse_theorem(theorem);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            json out;
            std::optional<BoundReport> rep;
            if (id == TheoremId::ProjMain) {
                ProjectionOptions o;
                o.C = big_c;
                o.s0 = s0;
                o.slack = slack;
                rep = projection_upper_bound(prof, r, parse_rational(t_text, "--t"), o);
            } else if (id == TheoremId::DistMain) {
                rep = distance_lower_bound(prof, r, {s0, slack});
            } else if (id == TheoremId::PinnedEffDim) {
                rep = pinned_effdim_bound(prof, parse_rational(d_text, "--d"), r, {s0, slack});
            } else {
                if (partition_path.empty()) throw UsageError("--partition is required for " + theorem);
                Partition p = partition_from_json(read_json_file(partition_path));
                recolor(prof, p);
                const Rational v = id == TheoremId::ProjPartition ? partition_projection_bound(prof, p, r)
                                                                  : partition_distance_bound(prof, p, r);
                out = json{{"theorem_id", theorem}, {"r", r}, {"value", v.str()}, {"partition", to_json(p)}};
            }
            if (rep) {
                out = to_json(*rep);
                if (!csv_path.empty()) write_text(csv_path, bound_csv_header() + "\n" + bound_csv_row(*rep) + "\n");
            }
            emit(out_path, out);
            return kOk;
        }

        if (*verify_cmd) {
            const SearchSpec spec = to_spec(vf);
            const SearchReport rep = verify_theorem(spec);
            emit(vf.out, json{{"spec", to_json(spec)}, {"report", to_json(rep)}});
            return rep.counterexample_count == 0 && rep.anomaly_count == 0 ? kOk : kCounterexample;
        }

        if (*frontier_cmd) {
            const SearchSpec spec = to_spec(ff);
            const auto wit = tightness_frontier(spec, k);
            json arr = json::array();
            for (const auto& w : wit) arr.push_back(to_json(w));
            emit(ff.out, json{{"spec", to_json(spec)}, {"k", k}, {"frontier", arr}});
            if (!frontier_csv.empty()) {
                std::ostringstream os;
                os << "increments,r,t,gap\n";
                for (const auto& w : wit) {
                    for (std::size_t i = 0; i < w.increments.size(); ++i) os << (i ? " " : "") << w.increments[i];
                    os << ',' << w.r << ',' << (w.t ? w.t->str() : "") << ',' << w.gap.str() << '\n';
                }
                write_text(frontier_csv, os.str());
            }
            return kOk;
        }

        if (*structure_cmd) {
            const StructureReport rep = verify_structure(s_horizon, s_cap, s_threads);
            emit(out_path, to_json(rep));
            return kOk;
        }

        if (*geo_cmd) {
            const GeometryCheckReport rep = geometry_check(trials, *geo_seed);
            emit(out_path, to_json(rep));
            return rep.passed() ? kOk : kCounterexample;
        }

        if (*fractal_cmd) {
            ExperimentConfig cfg;
            try {
                cfg = experiment_from_json(read_json_file(config_path));
            } catch (const json::exception& e) {
                throw UsageError("config '" + config_path + "': " + e.what());
            }
            cfg.threads = f_threads;
            const ExperimentReport rep = run_experiment(cfg);
            emit(out_path, json{{"config", to_json(cfg)}, {"report", to_json(rep)}});
            if (!csv_path.empty()) write_text(csv_path, pins_csv(rep));
            return kOk;
        }
    } catch (const UsageError& e) {
        diagnose("usage", e);
        return kUsage;
    } catch (const std::invalid_argument& e) {
        diagnose("usage", e);
        return kUsage;
    } catch (const AdmissibilityError& e) {
        diagnose("admissibility", e, json{{"achieved_k", e.achieved_k}, {"budget", e.budget}});
        return kContract;
    } catch (const ContractError& e) {
        diagnose("contract", e);
        return kContract;
    } catch (const StructureViolation& e) {
        diagnose("structure", e);
        return kContract;
    } catch (const DomainError& e) {
        diagnose("domain", e);
        return kContract;
    } catch (const CapacityError& e) {
        diagnose("capacity", e);
        return kContract;
    } catch (const SingularityError& e) {
        diagnose("singularity", e);
        return kContract;
    } catch (const json::exception& e) {
        diagnose("usage", e);
        return kUsage;
    } catch (const std::exception& e) {
        diagnose("internal", e);
        return kContract;
    }
    return kOk;
}
