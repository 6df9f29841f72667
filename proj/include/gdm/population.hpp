#pragma once

#include <span>
#include <vector>

#include "gdm/landscape.hpp"

namespace gdm {

/// N x n matrix of individual locations tied to a Landscape. Immutable value;
/// every gene is verified to lie inside the landscape's closed box
/// (absolute tolerance 1e-12). Row order carries no meaning: all measures
/// are permutation-invariant over individuals.
class Population {
public:
    /// `data` is row-major (individual-major); throws std::invalid_argument on
    /// shape mismatch or out-of-bounds genes (the message names the offending
    /// individual and gene).
    Population(std::vector<double> data, Landscape landscape);

    int size() const { return n_individuals_; }                 // N
    int dimension() const { return landscape_.dimension(); }   // n
    const Landscape& landscape() const { return landscape_; }

    double gene(int individual, int k) const {
        return data_[static_cast<std::size_t>(individual) * dimension() + k];
    }
    std::span<const double> row(int individual) const {
        return {data_.data() + static_cast<std::size_t>(individual) * dimension(),
                static_cast<std::size_t>(dimension())};
    }
    const std::vector<double>& data() const { return data_; }

    static constexpr double bounds_tolerance = 1e-12;

private:
    std::vector<double> data_;
    Landscape landscape_;
    int n_individuals_ = 0;
};

/// Builds a Population from per-individual rows, validating dimensionality and bounds.
Population make_population(const std::vector<std::vector<double>>& rows,
                           const Landscape& landscape);

/// The full g^n grid over the landscape with g = N^(1/n) points per axis
/// (both bounds included, axis-k spacing (UB_k - LB_k)/(g - 1)). Rows are in
/// lexicographic order by gene index. Requires N to be a perfect n-th power
/// with g >= 2.
Population uniform_population(const Landscape& landscape, int n_individuals);

} // namespace gdm
