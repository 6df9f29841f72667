#pragma once

#include <span>
#include <vector>

#include "gdm/measure_spec.hpp"
#include "gdm/population.hpp"

namespace gdm::measures {

/// Per-gene bin occupation fractions p[m][k] = (count in bin m on gene k)/N.
/// Columns sum to 1 per gene.
struct GeneHistogram {
    int bins = 0;      // M
    int dimension = 0; // n
    std::vector<double> fractions; // bin-major: fractions[m * dimension + k]

    double fraction(int bin, int gene) const {
        return fractions[static_cast<std::size_t>(bin) * dimension + gene];
    }
};

/// A diversity history: raw per-iteration values and their normalization by
/// the running maximum.
struct DiversitySeries {
    std::vector<double> raw;
    std::vector<double> normalized; // normalized[t] = raw[t] / max(raw[0..t])
};

/// Zero-based bin of `x` on a gene spanning [lo, hi] split into `bins`
/// half-open intervals, the top bin closed so x == hi lands in the last bin.
int bin_index(double x, double lo, double hi, int bins);

/// Histogram of the population's gene values over `bins` equal intervals per
/// gene, spanning each gene's landscape bounds.
GeneHistogram gene_histogram(const Population& population, int bins);

/// Mean Euclidean distance over all N(N-1)/2 unordered pairs of individuals.
/// Throws MeasureError for N = 1 (the mean over zero pairs is undefined, not
/// zero). Row contributions are accumulated in parallel into per-row slots
/// and summed in row order, so the value is independent of the thread count.
double d_pw(const Population& population);

/// Shannon entropy of the gene-frequency histogram, averaged over genes:
/// -(1/n) sum_k sum_m p[m][k] ln p[m][k], with 0 ln 0 = 0. Natural logarithm.
double gf_s(const Population& population, int bins);

/// gf_s divided by its maximum ln(min(M, N)); in [0, 1]. Throws MeasureError
/// when min(M, N) = 1 (the maximum is 0).
double gf_s_normalized(const Population& population, int bins);

/// Volume of the union of equal hypercubes centered on the individuals with
/// side l = (V/N)^(1/n), V the landscape volume and N this population's own
/// size (recomputed every call). Cubes are not clipped to the landscape.
double d_l(const Population& population);

/// Total Euclidean minimum spanning tree length over the individuals.
double d_mst(const Population& population);

/// Normalization by the maximum diversity achieved so far:
/// normalized[t] = raw[t] / max(raw[0..t]). Requires raw[0] > 0.
DiversitySeries nmdf(std::span<const double> raw);

/// Uniform dispatch over the four measures; returns the raw (unnormalized)
/// value. gfs uses spec.bins.
double evaluate(const MeasureSpec& spec, const Population& population);

} // namespace gdm::measures
