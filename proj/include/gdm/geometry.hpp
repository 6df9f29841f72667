#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gdm::geometry {

/// N equal closed axis-aligned hypercubes, given by their centers (row-major
/// N x n) and the common side length. Cubes are never clipped to any
/// landscape: a cube centered on a boundary individual sticks out.
class HypercubeSet {
public:
    HypercubeSet(std::vector<double> centers, int dimension, double side)
        : centers_(std::move(centers)), dimension_(dimension), side_(side) {
        if (dimension_ < 1) throw std::invalid_argument("hypercube dimension must be >= 1");
        if (!(side_ > 0.0)) throw std::invalid_argument("hypercube side must be positive");
        if (centers_.empty() || centers_.size() % static_cast<std::size_t>(dimension_) != 0)
            throw std::invalid_argument("center matrix size is not a multiple of the dimension");
    }

    int count() const { return static_cast<int>(centers_.size() / dimension_); }
    int dimension() const { return dimension_; }
    double side() const { return side_; }
    double center(int i, int k) const {
        return centers_[static_cast<std::size_t>(i) * dimension_ + k];
    }
    const std::vector<double>& centers() const { return centers_; }

private:
    std::vector<double> centers_;
    int dimension_;
    double side_;
};

/// N points in n dimensions, row-major.
class PointSet {
public:
    PointSet(std::vector<double> points, int dimension)
        : points_(std::move(points)), dimension_(dimension) {
        if (dimension_ < 1) throw std::invalid_argument("point dimension must be >= 1");
        if (points_.empty() || points_.size() % static_cast<std::size_t>(dimension_) != 0)
            throw std::invalid_argument("point matrix size is not a multiple of the dimension");
    }

    int count() const { return static_cast<int>(points_.size() / dimension_); }
    int dimension() const { return dimension_; }
    double coord(int i, int k) const {
        return points_[static_cast<std::size_t>(i) * dimension_ + k];
    }
    const std::vector<double>& points() const { return points_; }

private:
    std::vector<double> points_;
    int dimension_;
};

/// Exact n-volume of the union of the cubes (the Klee measure problem for
/// equal cubes). Sweep over compressed coordinates: slabs along the first
/// axis, recursing into the remaining axes; the base case is a 1-D interval
/// union. Exact at desk scale (N up to ~10^3, n up to 3); cost grows
/// exponentially with n. OpenMP-parallel over top-level slabs; the slab
/// volumes are summed in slab order, so the result does not depend on the
/// thread count.
double union_volume(const HypercubeSet& cubes);

/// Same sweep, single-threaded. Kept as the serial reference for tests and
/// the kernel benchmark; returns bit-identical values to union_volume.
double union_volume_serial(const HypercubeSet& cubes);

/// Total edge length of a Euclidean minimum spanning tree over the complete
/// graph on the points. Dense Prim, O(N^2) distance evaluations; the
/// candidate scan is OpenMP-parallel. All MSTs of a graph share the same
/// total weight, so ties in edge weights cannot change the result.
double emst_length(const PointSet& points);

struct McVolume {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t hits = 0;
    std::int64_t samples = 0;
};

/// Hit-or-miss Monte Carlo estimate of the union volume over the bounding box
/// of the cube set, with the binomial standard error. Randomness is a pure
/// function of (seed, sample index), so the estimate is deterministic for a
/// fixed seed no matter how the sample loop is scheduled. Independent
/// verification oracle for union_volume.
McVolume mc_union_volume(const HypercubeSet& cubes, std::int64_t samples, std::uint64_t seed);

/// Single-threaded variant; bit-identical to mc_union_volume by construction.
McVolume mc_union_volume_serial(const HypercubeSet& cubes, std::int64_t samples,
                                std::uint64_t seed);

} // namespace gdm::geometry
