#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gdm/landscape.hpp"
#include "gdm/measure_spec.hpp"
#include "gdm/measures.hpp"
#include "gdm/population.hpp"
#include "gdm/rng.hpp"

namespace gdm::scenarios {

/// One of the seven deterministic population arrangements used as validation
/// fixtures. optima_count (2 or 4) applies to cases 2-5 only.
struct FrozenCaseSpec {
    int case_id = 1;
    int optima_count = 2;
    int population_size = 100;
    Landscape landscape = Landscape::cube(-1.0, 1.0, 2);
};

/// Normalized diagonal position of the fifth individual in the reduced
/// five-individual arrangement.
struct ReducedArrangementSpec {
    double x5_hat = 0.5;
};

/// Shrinking-hyperspace convergence benchmark configuration.
struct BenchmarkConfig {
    int optima_count = 2;
    int population_size = 100; // N, divisible by optima_count
    Landscape landscape = Landscape::cube(0.0, 1.0, 2);
    int iterations = 51;  // T >= 2
    int repetitions = 50; // R >= 1
    std::uint64_t seed = 1;

    void validate() const;
};

/// Optimum locations drawn uniformly over the landscape.
struct OptimaSet {
    std::vector<double> positions; // row-major count x dimension
    int count = 0;
    int dimension = 0;

    double position(int i, int k) const {
        return positions[static_cast<std::size_t>(i) * dimension + k];
    }
    std::span<const double> row(int i) const {
        return {positions.data() + static_cast<std::size_t>(i) * dimension,
                static_cast<std::size_t>(dimension)};
    }
};

/// Builds the deterministic population for one frozen case:
///   1: all individuals at the landscape center;
///   2/3: optima at the mid-points between center and corners, equal / 70%-heavy split;
///   4/5: optima at the landscape corners, equal / 70%-heavy split;
///   6: evenly spaced along the main diagonal;
///   7: the full uniform grid.
/// The 70% block goes to the most-negative optimum. Throws on non-integral
/// splits, invalid case/optima combinations, or (case 7) N not a perfect
/// n-th power.
Population frozen_case(const FrozenCaseSpec& spec);

/// Five-individual arrangement on [0,1]^2: four individuals fixed at the
/// corners plus one at (t, t) on the main diagonal, against the static
/// four-corner population. Returns (P5, P4).
std::pair<Population, Population> reduced_arrangement(const ReducedArrangementSpec& spec);

/// optima_count points i.i.d. uniform over the landscape, deterministic per
/// rep_seed.
OptimaSet sample_optima(const BenchmarkConfig& config, std::uint64_t rep_seed);

/// The axis-aligned box around `optimum` at iteration t of T: bounds linearly
/// interpolated from the full landscape (t = 0) down to the degenerate box
/// {optimum} (t = T-1).
Box hyperspace_bounds(std::span<const double> optimum, const Landscape& landscape, int t, int T);

/// Benchmark output for one measure.
struct BenchmarkSeries {
    MeasureSpec measure;
    std::vector<measures::DiversitySeries> repetitions; // R series of length T
    std::vector<double> mean_normalized;                // across repetitions, per iteration
    std::vector<double> std_normalized;                 // sample standard deviation
};

/// Runs the convergence benchmark: per repetition r (seeded seed^r), sample
/// optima, then at each iteration draw every individual uniformly inside its
/// optimum's shrunk box and evaluate every measure; normalization by the
/// running maximum is applied within each repetition before averaging.
/// Repetitions run in parallel; each one is a pure function of its seed, and
/// aggregation walks repetitions in index order, so results are
/// bit-deterministic regardless of scheduling.
std::vector<BenchmarkSeries> benchmark_run(const BenchmarkConfig& config,
                                           std::span<const MeasureSpec> measures);

} // namespace gdm::scenarios
