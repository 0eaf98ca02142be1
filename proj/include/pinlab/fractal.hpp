// Desk-scale pinned distance experiments on self-similar planar sets:
// generate a finite approximant, take distances from pins placed away from
// the set, and estimate the box-counting dimension of each distance set.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pinlab/geometry.hpp"

namespace pinlab {

enum class FractalKind { ProductCantor, FourCorner };

struct FractalSpec {
    FractalKind kind = FractalKind::ProductCantor;
    std::vector<int> digits_a{0, 2};
    int base_a = 3;
    std::vector<int> digits_b{0, 2};
    int base_b = 3;
    double contraction = 0.3;  // four-corner ratio
    int depth = 1;
};

[[nodiscard]] double nominal_dimension(const FractalSpec& spec);
/// Finest resolution in binary digits: depth * log2 of the coarsest base.
[[nodiscard]] double resolution_bits(const FractalSpec& spec);

struct PointSet {
    std::vector<PlanarPoint> points;
    double nominal_dim = 0;
    bool outside_hypothesis = false;  // nominal dimension <= 1
};

/// Throws DomainError for malformed specs (empty or out-of-range digits, depth < 1, ...).
[[nodiscard]] PointSet generate(const FractalSpec& spec);

/// Sorted distances from `pin` to every point.
[[nodiscard]] std::vector<double> pinned_distances(const PointSet& set, const PlanarPoint& pin);

struct BoxFit {
    double slope = 0;  // clamped to [0, 1]
    double r2 = 0;
    int scales = 0;
    bool low_resolution = false;  // fewer than three scales
};

/// Least-squares slope of log N(delta) against log(1/delta), where N counts occupied
/// bins floor(v / delta). Identical values give slope 0.
[[nodiscard]] BoxFit box_dim_estimate(const std::vector<double>& values, const std::vector<double>& scales);

/// Collapses sorted values closer than `tol` to their first representative.
[[nodiscard]] std::vector<double> dedup_sorted(const std::vector<double>& sorted, double tol);

enum class PinSampling { Random, Grid };

struct ExperimentConfig {
    FractalSpec fractal;
    PinSampling sampling = PinSampling::Random;
    int pin_count = 64;
    double margin = 0.5;  // exclusion distance from the bounding box, in diameters
    int j_min = 3;
    int j_max = 10;
    std::uint64_t seed = 1;
    double tolerance = 0.1;
    unsigned threads = 0;
};

struct PinResult {
    PlanarPoint pin;
    BoxFit fit;
    bool below_floor = false;  // estimate < floor - tolerance
};

struct ExperimentReport {
    double nominal_dim = 0;
    double floor = 0;  // s/4 + 1/2, capped at 1
    double tolerance = 0;
    int j_min = 0;
    int j_max = 0;  // after clamping to the approximant's resolution
    std::size_t point_count = 0;
    std::vector<PinResult> pins;
    double fraction_above = 0;  // share of pins with estimate >= floor - tolerance
    std::vector<std::size_t> anomalies;  // indices of pins below floor - tolerance
    std::vector<std::string> warnings;
};

[[nodiscard]] ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace pinlab
