#include "pinlab/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "parallel.hpp"

namespace pinlab {

namespace {

constexpr std::size_t kMaxPoints = std::size_t{1} << 26;

void check_digits(const std::vector<int>& digits, int base, const char* axis) {
    if (base < 2) throw DomainError(std::string("base_") + axis + " must be at least 2");
    if (digits.empty()) throw DomainError(std::string("digits_") + axis + " is empty");
    std::set<int> seen;
    for (int d : digits) {
        if (d < 0 || d >= base) throw DomainError(std::string("digit outside [0, base_") + axis + ")");
        if (!seen.insert(d).second) throw DomainError(std::string("repeated digit in digits_") + axis);
    }
}

void validate(const FractalSpec& spec) {
    if (spec.depth < 1) throw DomainError("depth must be at least 1");
    if (spec.kind == FractalKind::ProductCantor) {
        check_digits(spec.digits_a, spec.base_a, "a");
        check_digits(spec.digits_b, spec.base_b, "b");
    } else if (!(spec.contraction > 0 && spec.contraction <= 0.5)) {
        throw DomainError("four-corner contraction must lie in (0, 1/2]");
    }
}

double expected_count(const FractalSpec& spec) {
    const double per = spec.kind == FractalKind::ProductCantor
                           ? static_cast<double>(spec.digits_a.size() * spec.digits_b.size())
                           : 4.0;
    return std::pow(per, spec.depth);
}

// Euclidean distance from a point to an axis-aligned box (0 inside).
double box_distance(const PlanarPoint& p, double x0, double y0, double x1, double y1) {
    const double dx = std::max({x0 - p.x1, 0.0, p.x1 - x1});
    const double dy = std::max({y0 - p.x2, 0.0, p.x2 - y1});
    return std::hypot(dx, dy);
}

double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace

double nominal_dimension(const FractalSpec& spec) {
    validate(spec);
    if (spec.kind == FractalKind::FourCorner) return std::log(4.0) / std::log(1.0 / spec.contraction);
    return std::log(static_cast<double>(spec.digits_a.size())) / std::log(static_cast<double>(spec.base_a)) +
           std::log(static_cast<double>(spec.digits_b.size())) / std::log(static_cast<double>(spec.base_b));
}

double resolution_bits(const FractalSpec& spec) {
    validate(spec);
    if (spec.kind == FractalKind::FourCorner) return spec.depth * std::log2(1.0 / spec.contraction);
    return spec.depth * std::log2(static_cast<double>(std::min(spec.base_a, spec.base_b)));
}

PointSet generate(const FractalSpec& spec) {
    validate(spec);
    if (expected_count(spec) > static_cast<double>(kMaxPoints)) throw DomainError("approximant exceeds 2^26 points");
    PointSet out;
    out.nominal_dim = nominal_dimension(spec);
    out.outside_hypothesis = out.nominal_dim <= 1.0;

    if (spec.kind == FractalKind::ProductCantor) {
        // Exact integer numerators over base^depth, one axis at a time.
        auto axis = [&](const std::vector<int>& digits, int base) {
            std::vector<std::int64_t> num{0};
            for (int k = 0; k < spec.depth; ++k) {
                std::vector<std::int64_t> next;
                next.reserve(num.size() * digits.size());
                for (std::int64_t n : num)
                    for (int d : digits) next.push_back(n * base + d);
                num.swap(next);
            }
            const double den = std::pow(static_cast<double>(base), spec.depth);
            std::vector<double> v;
            v.reserve(num.size());
            for (std::int64_t n : num) v.push_back(static_cast<double>(n) / den);
            return v;
        };
        const auto xs = axis(spec.digits_a, spec.base_a);
        const auto ys = axis(spec.digits_b, spec.base_b);
        out.points.reserve(xs.size() * ys.size());
        for (double x : xs)
            for (double y : ys) out.points.push_back({x, y});
        return out;
    }

    const double lam = spec.contraction;
    const double shift = 1.0 - lam;
    out.points.push_back({0, 0});
    double scale = 1.0;
    for (int k = 0; k < spec.depth; ++k) {
        std::vector<PlanarPoint> next;
        next.reserve(out.points.size() * 4);
        for (const auto& p : out.points)
            for (int c = 0; c < 4; ++c)
                next.push_back({p.x1 + scale * shift * (c & 1), p.x2 + scale * shift * (c >> 1)});
        out.points.swap(next);
        scale *= lam;
    }
    return out;
}

std::vector<double> pinned_distances(const PointSet& set, const PlanarPoint& pin) {
    std::vector<double> d;
    d.reserve(set.points.size());
    for (const auto& p : set.points) d.push_back(distance(pin, p));
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> dedup_sorted(const std::vector<double>& sorted, double tol) {
    std::vector<double> out;
    for (double v : sorted)
        if (out.empty() || v - out.back() >= tol) out.push_back(v);
    return out;
}

BoxFit box_dim_estimate(const std::vector<double>& values, const std::vector<double>& scales) {
    if (values.empty()) throw DomainError("no values to box-count");
    BoxFit fit;
    fit.scales = static_cast<int>(scales.size());
    if (scales.size() < 3) {
        fit.low_resolution = true;
        return fit;
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> xs, ys;
    for (double delta : scales) {
        if (!(delta > 0)) throw DomainError("box size must be positive");
        // floor(v / delta) is monotone in v, so occupied bins are counted in one pass
        std::size_t bins = 0;
        std::int64_t prev = 0;
        for (double v : sorted) {
            const auto b = static_cast<std::int64_t>(std::floor(v / delta));
            if (bins == 0 || b != prev) ++bins;
            prev = b;
        }
        xs.push_back(std::log(1.0 / delta));
        ys.push_back(std::log(static_cast<double>(bins)));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0) throw DomainError("box sizes must differ");
    if (syy == 0) {
        fit.slope = 0;
        fit.r2 = 1;
        return fit;
    }
    const double slope = sxy / sxx;
    fit.r2 = (sxy * sxy) / (sxx * syy);
    fit.slope = std::clamp(slope, 0.0, 1.0);
    return fit;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.pin_count < 1) throw DomainError("pin count must be positive");
    if (cfg.margin < 0) throw DomainError("margin must be non-negative");
    if (cfg.j_min > cfg.j_max) throw DomainError("j_min exceeds j_max");

    const PointSet set = generate(cfg.fractal);
    ExperimentReport rep;
    rep.nominal_dim = set.nominal_dim;
    rep.floor = std::min(1.0, set.nominal_dim / 4 + 0.5);
    rep.tolerance = cfg.tolerance;
    rep.point_count = set.points.size();
    if (set.outside_hypothesis) rep.warnings.push_back("nominal dimension <= 1: outside the theorem's hypothesis");

    rep.j_min = cfg.j_min;
    const int finest = static_cast<int>(std::floor(resolution_bits(cfg.fractal) + 1e-9));
    rep.j_max = std::min(cfg.j_max, finest);
    if (rep.j_max < cfg.j_max)
        rep.warnings.push_back("j_max clamped to " + std::to_string(rep.j_max) + " by the approximant's resolution");
    std::vector<double> scales;
    for (int j = rep.j_min; j <= rep.j_max; ++j) scales.push_back(std::ldexp(1.0, -j));
    if (scales.size() < 3) rep.warnings.push_back("fewer than three usable scales: low resolution");

    double x0 = set.points.front().x1, x1 = x0, y0 = set.points.front().x2, y1 = y0;
    for (const auto& p : set.points) {
        x0 = std::min(x0, p.x1);
        x1 = std::max(x1, p.x1);
        y0 = std::min(y0, p.x2);
        y1 = std::max(y1, p.x2);
    }
    double diam = std::hypot(x1 - x0, y1 - y0);
    if (diam == 0) diam = 1;
    const double keep_out = cfg.margin * diam;
    const double reach = (cfg.margin + 1) * diam;
    const double rx0 = x0 - reach, rx1 = x1 + reach, ry0 = y0 - reach, ry1 = y1 + reach;

    std::vector<PlanarPoint> pins;
    if (cfg.sampling == PinSampling::Random) {
        std::mt19937_64 g(cfg.seed);
        while (pins.size() < static_cast<std::size_t>(cfg.pin_count)) {
            const PlanarPoint p{rx0 + (rx1 - rx0) * unit(g), ry0 + (ry1 - ry0) * unit(g)};
            if (box_distance(p, x0, y0, x1, y1) >= keep_out) pins.push_back(p);
        }
    } else {
        const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(cfg.pin_count))));
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) {
                const PlanarPoint p{rx0 + (rx1 - rx0) * (i + 0.5) / side, ry0 + (ry1 - ry0) * (j + 0.5) / side};
                if (box_distance(p, x0, y0, x1, y1) >= keep_out) pins.push_back(p);
            }
        if (pins.empty()) rep.warnings.push_back("grid produced no pins outside the exclusion margin");
    }

    const double tol = std::ldexp(1.0, -(rep.j_max + 2));
    rep.pins.resize(pins.size());
    detail::run_indexed(pins.size(), detail::worker_count(cfg.threads), [&](std::size_t i) {
        PinResult& res = rep.pins[i];
        res.pin = pins[i];
        res.fit = box_dim_estimate(dedup_sorted(pinned_distances(set, pins[i]), tol), scales);
    });

    std::size_t above = 0;
    for (std::size_t i = 0; i < rep.pins.size(); ++i) {
        PinResult& res = rep.pins[i];
        res.below_floor = res.fit.slope < rep.floor - rep.tolerance;
        if (!res.below_floor) ++above;
        else if (!res.fit.low_resolution) rep.anomalies.push_back(i);
    }
    rep.fraction_above = rep.pins.empty() ? 0.0 : static_cast<double>(above) / static_cast<double>(rep.pins.size());
    return rep;
}

}  // namespace pinlab
