#include "gdm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gdm/errors.hpp"
#include "gdm/geometry.hpp"

namespace gdm::measures {

int bin_index(double x, double lo, double hi, int bins) {
    const int m = static_cast<int>(std::floor((x - lo) / (hi - lo) * bins));
    return std::clamp(m, 0, bins - 1);
}

GeneHistogram gene_histogram(const Population& population, int bins) {
    if (bins < 1) throw std::invalid_argument("bin count must be >= 1");
    const int n = population.dimension();
    const int count = population.size();

    std::vector<int> counts(static_cast<std::size_t>(bins) * n, 0);
    for (int i = 0; i < count; ++i)
        for (int k = 0; k < n; ++k) {
            const auto& b = population.landscape().gene(k);
            const int m = bin_index(population.gene(i, k), b.lo, b.hi, bins);
            ++counts[static_cast<std::size_t>(m) * n + k];
        }

    GeneHistogram h;
    h.bins = bins;
    h.dimension = n;
    h.fractions.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        h.fractions[i] = static_cast<double>(counts[i]) / count;
    return h;
}

double d_pw(const Population& population) {
    const int count = population.size();
    const int n = population.dimension();
    if (count < 2)
        throw MeasureError("mean pairwise distance is undefined for a single individual");

    const double* data = population.data().data();
    std::vector<double> row_sum(static_cast<std::size_t>(count), 0.0);

#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < count; ++i) {
        const double* a = data + static_cast<std::size_t>(i) * n;
        double s = 0.0;
        for (int j = i + 1; j < count; ++j) {
            const double* b = data + static_cast<std::size_t>(j) * n;
            double d2 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double d = a[k] - b[k];
                d2 += d * d;
            }
            s += std::sqrt(d2);
        }
        row_sum[static_cast<std::size_t>(i)] = s;
    }

    double sum = 0.0;
    for (double s : row_sum) sum += s;
    return 2.0 * sum / (static_cast<double>(count) * (count - 1));
}

double gf_s(const Population& population, int bins) {
    const GeneHistogram h = gene_histogram(population, bins);
    const int n = h.dimension;
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        double gene_entropy = 0.0;
        for (int m = 0; m < bins; ++m) {
            const double p = h.fraction(m, k);
            if (p > 0.0) gene_entropy -= p * std::log(p);
        }
        total += gene_entropy;
    }
    return total / n;
}

double gf_s_normalized(const Population& population, int bins) {
    const int m = std::min(bins, population.size());
    if (m < 2)
        throw MeasureError("entropy normalization is undefined when min(M, N) = 1");
    return gf_s(population, bins) / std::log(static_cast<double>(m));
}

double d_l(const Population& population) {
    const int n = population.dimension();
    const double side =
        std::pow(population.landscape().volume() / population.size(), 1.0 / n);
    return geometry::union_volume(geometry::HypercubeSet(population.data(), n, side));
}

double d_mst(const Population& population) {
    return geometry::emst_length(geometry::PointSet(population.data(), population.dimension()));
}

DiversitySeries nmdf(std::span<const double> raw) {
    if (raw.empty()) throw std::invalid_argument("series must be non-empty");
    if (!(raw[0] > 0.0))
        throw MeasureError("normalization by running maximum requires a positive first value");
    DiversitySeries series;
    series.raw.assign(raw.begin(), raw.end());
    series.normalized.resize(raw.size());
    double running_max = raw[0];
    for (std::size_t t = 0; t < raw.size(); ++t) {
        running_max = std::max(running_max, raw[t]);
        series.normalized[t] = raw[t] / running_max;
    }
    return series;
}

double evaluate(const MeasureSpec& spec, const Population& population) {
    spec.validate();
    switch (spec.kind) {
        case MeasureKind::dpw: return d_pw(population);
        case MeasureKind::gfs: return gf_s(population, spec.bins);
        case MeasureKind::dl: return d_l(population);
        case MeasureKind::dmst: return d_mst(population);
    }
    throw std::logic_error("unhandled measure kind");
}

} // namespace gdm::measures
