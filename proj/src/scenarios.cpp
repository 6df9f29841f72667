#include "gdm/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

#include "gdm/errors.hpp"

namespace gdm::scenarios {

void BenchmarkConfig::validate() const {
    if (optima_count < 1) throw std::invalid_argument("optima count must be >= 1");
    if (population_size < 1) throw std::invalid_argument("population size must be >= 1");
    if (population_size % optima_count != 0)
        throw std::invalid_argument("population size must be divisible by the optima count");
    if (iterations < 2) throw std::invalid_argument("iteration count must be >= 2");
    if (repetitions < 1) throw std::invalid_argument("repetition count must be >= 1");
}

namespace {

// Optimum locations for cases 2-5. `corner_fraction` is the distance from the
// center toward each corner: 0.5 for the mid-point cases, 1.0 for the corner
// cases. Ordered most-negative first (lexicographic).
std::vector<std::vector<double>> case_optima(const Landscape& landscape, int optima_count,
                                             double corner_fraction) {
    const int n = landscape.dimension();
    std::vector<double> center(static_cast<std::size_t>(n)), reach(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        center[static_cast<std::size_t>(k)] = 0.5 * (landscape.lower(k) + landscape.upper(k));
        reach[static_cast<std::size_t>(k)] = 0.5 * landscape.width(k) * corner_fraction;
    }

    std::vector<std::vector<double>> optima;
    if (optima_count == 2) {
        std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            a[static_cast<std::size_t>(k)] =
                center[static_cast<std::size_t>(k)] - reach[static_cast<std::size_t>(k)];
            b[static_cast<std::size_t>(k)] =
                center[static_cast<std::size_t>(k)] + reach[static_cast<std::size_t>(k)];
        }
        optima = {a, b};
    } else if (optima_count == 4) {
        if (n != 2)
            throw std::invalid_argument("four optima require a two-dimensional landscape");
        for (int sx : {-1, +1})
            for (int sy : {-1, +1})
                optima.push_back({center[0] + sx * reach[0], center[1] + sy * reach[1]});
        std::sort(optima.begin(), optima.end());
    } else {
        throw std::invalid_argument("cases 2-5 support 2 or 4 optima, not " +
                                    std::to_string(optima_count));
    }
    return optima;
}

// Individuals per optimum: equal split, or 70% on the first optimum with the
// remainder split equally. Throws when the split is not integral.
std::vector<int> case_multiplicities(int population_size, int optima_count, bool heavy_first) {
    std::vector<int> mult(static_cast<std::size_t>(optima_count));
    if (!heavy_first) {
        if (population_size % optima_count != 0)
            throw std::invalid_argument("population size " + std::to_string(population_size) +
                                        " does not split equally over " +
                                        std::to_string(optima_count) + " optima");
        std::fill(mult.begin(), mult.end(), population_size / optima_count);
    } else {
        if ((7 * population_size) % 10 != 0)
            throw std::invalid_argument("70% of population size " +
                                        std::to_string(population_size) + " is not an integer");
        const int first = 7 * population_size / 10;
        const int rest = population_size - first;
        if (rest % (optima_count - 1) != 0)
            throw std::invalid_argument("remaining 30% does not split equally over " +
                                        std::to_string(optima_count - 1) + " optima");
        mult[0] = first;
        std::fill(mult.begin() + 1, mult.end(), rest / (optima_count - 1));
    }
    return mult;
}

Population clustered_population(const Landscape& landscape,
                                const std::vector<std::vector<double>>& optima,
                                const std::vector<int>& multiplicities) {
    std::vector<std::vector<double>> rows;
    for (std::size_t o = 0; o < optima.size(); ++o)
        for (int c = 0; c < multiplicities[o]; ++c) rows.push_back(optima[o]);
    return make_population(rows, landscape);
}

} // namespace

Population frozen_case(const FrozenCaseSpec& spec) {
    const Landscape& ls = spec.landscape;
    const int n = ls.dimension();
    const int count = spec.population_size;
    if (count < 1) throw std::invalid_argument("population size must be positive");

    switch (spec.case_id) {
        case 1: {
            std::vector<double> center(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                center[static_cast<std::size_t>(k)] = 0.5 * (ls.lower(k) + ls.upper(k));
            return clustered_population(ls, {center}, {count});
        }
        case 2:
        case 3:
        case 4:
        case 5: {
            const double fraction = (spec.case_id <= 3) ? 0.5 : 1.0;
            const bool heavy = (spec.case_id == 3 || spec.case_id == 5);
            const auto optima = case_optima(ls, spec.optima_count, fraction);
            const auto mult = case_multiplicities(count, spec.optima_count, heavy);
            return clustered_population(ls, optima, mult);
        }
        case 6: {
            if (count < 2)
                throw std::invalid_argument("the diagonal case needs at least two individuals");
            std::vector<double> flat;
            flat.reserve(static_cast<std::size_t>(count) * n);
            for (int i = 0; i < count; ++i)
                for (int k = 0; k < n; ++k)
                    flat.push_back(i == count - 1
                                       ? ls.upper(k)
                                       : ls.lower(k) +
                                             ls.width(k) * (static_cast<double>(i) / (count - 1)));
            return Population(std::move(flat), ls);
        }
        case 7:
            return uniform_population(ls, count);
        default:
            throw std::invalid_argument("case id must be 1..7, got " +
                                        std::to_string(spec.case_id));
    }
}

std::pair<Population, Population> reduced_arrangement(const ReducedArrangementSpec& spec) {
    if (!(spec.x5_hat >= 0.0 && spec.x5_hat <= 1.0))
        throw std::invalid_argument("x5_hat must lie in [0, 1]");
    const Landscape ls = Landscape::cube(0.0, 1.0, 2);
    const std::vector<std::vector<double>> corners = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto p4 = make_population(corners, ls);
    auto rows = corners;
    rows.push_back({spec.x5_hat, spec.x5_hat});
    auto p5 = make_population(rows, ls);
    return {std::move(p5), std::move(p4)};
}

OptimaSet sample_optima(const BenchmarkConfig& config, std::uint64_t rep_seed) {
    const int n = config.landscape.dimension();
    SplitMix64 rng(rep_seed);
    OptimaSet optima;
    optima.count = config.optima_count;
    optima.dimension = n;
    optima.positions.resize(static_cast<std::size_t>(config.optima_count) * n);
    for (int i = 0; i < config.optima_count; ++i)
        for (int k = 0; k < n; ++k)
            optima.positions[static_cast<std::size_t>(i) * n + k] =
                uniform_in(rng, config.landscape.lower(k), config.landscape.upper(k));
    return optima;
}

Box hyperspace_bounds(std::span<const double> optimum, const Landscape& landscape, int t, int T) {
    const int n = landscape.dimension();
    if (static_cast<int>(optimum.size()) != n)
        throw std::invalid_argument("optimum dimensionality mismatch");
    if (t < 0 || t > T - 1)
        throw std::invalid_argument("iteration " + std::to_string(t) + " outside 0.." +
                                    std::to_string(T - 1));

    Box box;
    box.bounds.resize(static_cast<std::size_t>(n));
    const double shrink = static_cast<double>(t) / (T - 1);
    for (int k = 0; k < n; ++k) {
        const double o = optimum[static_cast<std::size_t>(k)];
        auto& b = box.bounds[static_cast<std::size_t>(k)];
        if (t == 0) {
            b = {landscape.lower(k), landscape.upper(k)};
        } else if (t == T - 1) {
            b = {o, o};
        } else {
            b.lo = o + (1.0 - shrink) * (landscape.lower(k) - o);
            b.hi = o + (1.0 - shrink) * (landscape.upper(k) - o);
        }
    }
    return box;
}

std::vector<BenchmarkSeries> benchmark_run(const BenchmarkConfig& config,
                                           std::span<const MeasureSpec> measures) {
    config.validate();
    for (const auto& spec : measures) {
        spec.validate();
        if (spec.kind == MeasureKind::dpw && config.population_size < 2)
            throw MeasureError("dpw needs a population of at least two individuals");
    }

    const int n = config.landscape.dimension();
    const int count = config.population_size;
    const int per_optimum = count / config.optima_count;
    const int total_iters = config.iterations;
    const int reps = config.repetitions;
    const std::size_t n_measures = measures.size();

    std::vector<BenchmarkSeries> result(n_measures);
    for (std::size_t m = 0; m < n_measures; ++m) {
        result[m].measure = measures[m];
        result[m].repetitions.resize(static_cast<std::size_t>(reps));
    }

    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < reps; ++r) {
        try {
            const std::uint64_t rep_seed = config.seed ^ static_cast<std::uint64_t>(r);
            const OptimaSet optima = sample_optima(config, rep_seed);
            SplitMix64 rng(derive_stream(rep_seed, 1));

            std::vector<std::vector<double>> raw(
                n_measures, std::vector<double>(static_cast<std::size_t>(total_iters)));
            std::vector<double> flat(static_cast<std::size_t>(count) * n);
            std::vector<Box> boxes(static_cast<std::size_t>(config.optima_count));

            for (int t = 0; t < total_iters; ++t) {
                for (int o = 0; o < config.optima_count; ++o)
                    boxes[static_cast<std::size_t>(o)] =
                        hyperspace_bounds(optima.row(o), config.landscape, t, total_iters);
                for (int i = 0; i < count; ++i) {
                    const Box& box = boxes[static_cast<std::size_t>(i / per_optimum)];
                    for (int k = 0; k < n; ++k) {
                        const auto& b = box.bounds[static_cast<std::size_t>(k)];
                        flat[static_cast<std::size_t>(i) * n + k] = uniform_in(rng, b.lo, b.hi);
                    }
                }
                const Population pop(std::vector<double>(flat), config.landscape);
                for (std::size_t m = 0; m < n_measures; ++m)
                    raw[m][static_cast<std::size_t>(t)] = measures::evaluate(measures[m], pop);
            }

            for (std::size_t m = 0; m < n_measures; ++m)
                result[m].repetitions[static_cast<std::size_t>(r)] = measures::nmdf(raw[m]);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    // Cross-repetition aggregation, in repetition order.
    for (std::size_t m = 0; m < n_measures; ++m) {
        auto& series = result[m];
        series.mean_normalized.resize(static_cast<std::size_t>(total_iters));
        series.std_normalized.resize(static_cast<std::size_t>(total_iters));
        for (int t = 0; t < total_iters; ++t) {
            double sum = 0.0;
            for (int r = 0; r < reps; ++r)
                sum += series.repetitions[static_cast<std::size_t>(r)]
                           .normalized[static_cast<std::size_t>(t)];
            const double mean = sum / reps;
            double sq = 0.0;
            for (int r = 0; r < reps; ++r) {
                const double d = series.repetitions[static_cast<std::size_t>(r)]
                                     .normalized[static_cast<std::size_t>(t)] -
                                 mean;
                sq += d * d;
            }
            series.mean_normalized[static_cast<std::size_t>(t)] = mean;
            series.std_normalized[static_cast<std::size_t>(t)] =
                reps > 1 ? std::sqrt(sq / (reps - 1)) : 0.0;
        }
    }
    return result;
}

} // namespace gdm::scenarios
