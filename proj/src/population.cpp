#include "gdm/population.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gdm {

Population::Population(std::vector<double> data, Landscape landscape)
    : data_(std::move(data)), landscape_(std::move(landscape)) {
    const int n = landscape_.dimension();
    if (data_.empty() || data_.size() % static_cast<std::size_t>(n) != 0)
        throw std::invalid_argument("population matrix size is not a multiple of dimensionality " +
                                    std::to_string(n));
    n_individuals_ = static_cast<int>(data_.size() / static_cast<std::size_t>(n));
    for (int i = 0; i < n_individuals_; ++i) {
        for (int k = 0; k < n; ++k) {
            const double x = gene(i, k);
            const auto& b = landscape_.gene(k);
            if (!std::isfinite(x) || x < b.lo - bounds_tolerance || x > b.hi + bounds_tolerance)
                throw std::invalid_argument(
                    "gene value " + std::to_string(x) + " of individual " + std::to_string(i + 1) +
                    ", gene " + std::to_string(k + 1) + " lies outside [" + std::to_string(b.lo) +
                    ", " + std::to_string(b.hi) + "]");
        }
    }
}

Population make_population(const std::vector<std::vector<double>>& rows,
                           const Landscape& landscape) {
    const int n = landscape.dimension();
    if (rows.empty())
        throw std::invalid_argument("population must contain at least one individual");
    std::vector<double> flat;
    flat.reserve(rows.size() * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("individual " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " genes, expected " +
                                        std::to_string(n));
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return Population(std::move(flat), landscape);
}

namespace {

// N^(1/n) rounded and verified exactly; 0 if N is not a perfect n-th power.
int exact_root(int n_individuals, int n) {
    const double guess = std::pow(static_cast<double>(n_individuals), 1.0 / n);
    for (long long g = std::llround(guess) - 1; g <= std::llround(guess) + 1; ++g) {
        if (g < 1) continue;
        long long p = 1;
        for (int k = 0; k < n; ++k) p *= g;
        if (p == n_individuals) return static_cast<int>(g);
    }
    return 0;
}

} // namespace

Population uniform_population(const Landscape& landscape, int n_individuals) {
    const int n = landscape.dimension();
    if (n_individuals < 1)
        throw std::invalid_argument("population size must be positive");
    const int g = exact_root(n_individuals, n);
    if (g < 2)
        throw std::invalid_argument("uniform population requires N = g^n with g >= 2; N = " +
                                    std::to_string(n_individuals) + " is not");

    // g axis values per gene, endpoints exact.
    std::vector<std::vector<double>> axis(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        axis[k].resize(static_cast<std::size_t>(g));
        for (int j = 0; j < g; ++j)
            axis[k][j] = (j == g - 1) ? landscape.upper(k)
                                      : landscape.lower(k) +
                                            landscape.width(k) * (static_cast<double>(j) / (g - 1));
    }

    // Odometer with the last gene fastest: rows come out lexicographic by gene index.
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n_individuals) * n);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n_individuals; ++i) {
        for (int k = 0; k < n; ++k) flat.push_back(axis[k][idx[k]]);
        for (int k = n - 1; k >= 0; --k) {
            if (++idx[k] < g) break;
            idx[k] = 0;
        }
    }
    return Population(std::move(flat), landscape);
}

} // namespace gdm
