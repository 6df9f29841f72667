#include "gdm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gdm/rng.hpp"

namespace gdm::geometry {

namespace {

// Covered length of a union of 1-D intervals given as (lo, hi) pairs.
// Mutates its argument (sorts by lo).
double interval_union_length(std::vector<std::pair<double, double>>& intervals) {
    if (intervals.empty()) return 0.0;
    std::sort(intervals.begin(), intervals.end());
    double total = 0.0;
    double cur_lo = intervals[0].first;
    double cur_hi = intervals[0].second;
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        const auto& [lo, hi] = intervals[i];
        if (lo > cur_hi) {
            total += cur_hi - cur_lo;
            cur_lo = lo;
            cur_hi = hi;
        } else if (hi > cur_hi) {
            cur_hi = hi;
        }
    }
    return total + (cur_hi - cur_lo);
}

// Axis-major cube extents: lo[k][i], hi[k][i].
struct CubeExtents {
    std::vector<std::vector<double>> lo, hi;
    int dimension = 0;

    explicit CubeExtents(const HypercubeSet& cubes) : dimension(cubes.dimension()) {
        const int n = cubes.dimension();
        const int count = cubes.count();
        const double half = cubes.side() / 2.0;
        lo.assign(n, std::vector<double>(count));
        hi.assign(n, std::vector<double>(count));
        for (int i = 0; i < count; ++i)
            for (int k = 0; k < n; ++k) {
                const double c = cubes.center(i, k);
                lo[k][i] = c - half;
                hi[k][i] = c + half;
            }
    }
};

// Union volume of the cubes in `alive`, restricted to axes [axis, n).
// Every alive cube is known to span the current outer slabs completely.
double measure_axes(const CubeExtents& ext, int axis, const std::vector<int>& alive) {
    if (alive.empty()) return 0.0;
    const auto& lo = ext.lo[static_cast<std::size_t>(axis)];
    const auto& hi = ext.hi[static_cast<std::size_t>(axis)];

    if (axis == ext.dimension - 1) {
        std::vector<std::pair<double, double>> intervals;
        intervals.reserve(alive.size());
        for (int i : alive) intervals.emplace_back(lo[i], hi[i]);
        return interval_union_length(intervals);
    }

    // Compressed slab boundaries along this axis.
    std::vector<double> cuts;
    cuts.reserve(alive.size() * 2);
    for (int i : alive) {
        cuts.push_back(lo[i]);
        cuts.push_back(hi[i]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    std::vector<int> slab_alive;
    slab_alive.reserve(alive.size());
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double a = cuts[s], b = cuts[s + 1];
        slab_alive.clear();
        for (int i : alive)
            if (lo[i] <= a && hi[i] >= b) slab_alive.push_back(i);
        if (!slab_alive.empty()) total += (b - a) * measure_axes(ext, axis + 1, slab_alive);
    }
    return total;
}

double union_volume_impl(const HypercubeSet& cubes, bool parallel) {
    const CubeExtents ext(cubes);
    const int count = cubes.count();

    std::vector<int> all(static_cast<std::size_t>(count));
    std::iota(all.begin(), all.end(), 0);

    if (cubes.dimension() == 1) return measure_axes(ext, 0, all);

    // Top level unrolled so the slabs can run in parallel. Slab volumes land
    // in per-slab slots and are summed in slab order afterwards: the value is
    // independent of the thread count.
    const auto& lo0 = ext.lo[0];
    const auto& hi0 = ext.hi[0];
    std::vector<double> cuts(lo0.begin(), lo0.end());
    cuts.insert(cuts.end(), hi0.begin(), hi0.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const int n_slabs = static_cast<int>(cuts.size()) - 1;
    std::vector<double> slab_volume(static_cast<std::size_t>(n_slabs), 0.0);

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int s = 0; s < n_slabs; ++s) {
        const double a = cuts[static_cast<std::size_t>(s)];
        const double b = cuts[static_cast<std::size_t>(s) + 1];
        std::vector<int> slab_alive;
        for (int i = 0; i < count; ++i)
            if (lo0[static_cast<std::size_t>(i)] <= a && hi0[static_cast<std::size_t>(i)] >= b)
                slab_alive.push_back(i);
        if (!slab_alive.empty())
            slab_volume[static_cast<std::size_t>(s)] = (b - a) * measure_axes(ext, 1, slab_alive);
    }

    double total = 0.0;
    for (double v : slab_volume) total += v;
    return total;
}

} // namespace

double union_volume(const HypercubeSet& cubes) { return union_volume_impl(cubes, true); }

double union_volume_serial(const HypercubeSet& cubes) { return union_volume_impl(cubes, false); }

double emst_length(const PointSet& points) {
    const int count = points.count();
    const int n = points.dimension();
    if (count == 1) return 0.0;

    const double* pts = points.points().data();
    const auto dist2 = [pts, n](int i, int j) {
        double d2 = 0.0;
        const double* a = pts + static_cast<std::size_t>(i) * n;
        const double* b = pts + static_cast<std::size_t>(j) * n;
        for (int k = 0; k < n; ++k) {
            const double d = a[k] - b[k];
            d2 += d * d;
        }
        return d2;
    };

    // Dense Prim from vertex 0. best_d2[j] is the squared distance from j to
    // the tree; ties in the candidate scan break toward the smaller index
    // (the total weight is tie-independent anyway).
    std::vector<double> best_d2(static_cast<std::size_t>(count),
                                std::numeric_limits<double>::infinity());
    std::vector<char> in_tree(static_cast<std::size_t>(count), 0);
    in_tree[0] = 1;
    best_d2[0] = 0.0;

#pragma omp parallel for schedule(static)
    for (int j = 1; j < count; ++j) best_d2[static_cast<std::size_t>(j)] = dist2(0, j);

    double total = 0.0;
    for (int step = 1; step < count; ++step) {
        double min_d2 = std::numeric_limits<double>::infinity();
        int min_idx = -1;
#pragma omp parallel
        {
            double local_d2 = std::numeric_limits<double>::infinity();
            int local_idx = -1;
#pragma omp for schedule(static) nowait
            for (int j = 0; j < count; ++j) {
                if (in_tree[static_cast<std::size_t>(j)]) continue;
                const double d2 = best_d2[static_cast<std::size_t>(j)];
                if (d2 < local_d2 || (d2 == local_d2 && j < local_idx)) {
                    local_d2 = d2;
                    local_idx = j;
                }
            }
#pragma omp critical
            {
                if (local_idx >= 0 &&
                    (local_d2 < min_d2 || (local_d2 == min_d2 && local_idx < min_idx))) {
                    min_d2 = local_d2;
                    min_idx = local_idx;
                }
            }
        }

        total += std::sqrt(min_d2);
        in_tree[static_cast<std::size_t>(min_idx)] = 1;

#pragma omp parallel for schedule(static)
        for (int j = 0; j < count; ++j) {
            if (in_tree[static_cast<std::size_t>(j)]) continue;
            const double d2 = dist2(min_idx, j);
            if (d2 < best_d2[static_cast<std::size_t>(j)]) best_d2[static_cast<std::size_t>(j)] = d2;
        }
    }
    return total;
}

namespace {

// Uniform cell index over [lo, hi) with `cells` cells; clamped for p == hi.
inline int cell_of(double p, double lo, double inv_width, int cells) {
    int c = static_cast<int>((p - lo) * inv_width);
    if (c >= cells) c = cells - 1;
    if (c < 0) c = 0;
    return c;
}

constexpr int max_mc_dimension = 16;

McVolume mc_union_volume_impl(const HypercubeSet& cubes, std::int64_t samples,
                              std::uint64_t seed, bool parallel) {
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
    const int n = cubes.dimension();
    if (n > max_mc_dimension)
        throw std::invalid_argument("mc_union_volume supports at most 16 dimensions");
    const int count = cubes.count();
    const double half = cubes.side() / 2.0;

    // Bounding box of the union.
    std::vector<double> box_lo(static_cast<std::size_t>(n),
                               std::numeric_limits<double>::infinity());
    std::vector<double> box_hi(static_cast<std::size_t>(n),
                               -std::numeric_limits<double>::infinity());
    for (int i = 0; i < count; ++i)
        for (int k = 0; k < n; ++k) {
            box_lo[static_cast<std::size_t>(k)] =
                std::min(box_lo[static_cast<std::size_t>(k)], cubes.center(i, k) - half);
            box_hi[static_cast<std::size_t>(k)] =
                std::max(box_hi[static_cast<std::size_t>(k)], cubes.center(i, k) + half);
        }
    double box_volume = 1.0;
    for (int k = 0; k < n; ++k)
        box_volume *= box_hi[static_cast<std::size_t>(k)] - box_lo[static_cast<std::size_t>(k)];

    // Bucket cubes into a coarse uniform grid so the per-sample membership
    // test scans a short list instead of all N cubes.
    const int cells = std::clamp(static_cast<int>(std::round(
                                     std::pow(static_cast<double>(count), 1.0 / n))),
                                 1, 32);
    std::vector<double> inv_width(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double w = box_hi[static_cast<std::size_t>(k)] - box_lo[static_cast<std::size_t>(k)];
        inv_width[static_cast<std::size_t>(k)] = w > 0.0 ? cells / w : 0.0;
    }
    std::int64_t total_cells = 1;
    for (int k = 0; k < n; ++k) total_cells *= cells;
    std::vector<std::vector<int>> bucket(static_cast<std::size_t>(total_cells));
    {
        std::vector<int> clo(static_cast<std::size_t>(n)), chi(static_cast<std::size_t>(n));
        for (int i = 0; i < count; ++i) {
            for (int k = 0; k < n; ++k) {
                clo[static_cast<std::size_t>(k)] =
                    cell_of(cubes.center(i, k) - half, box_lo[static_cast<std::size_t>(k)],
                            inv_width[static_cast<std::size_t>(k)], cells);
                chi[static_cast<std::size_t>(k)] =
                    cell_of(cubes.center(i, k) + half, box_lo[static_cast<std::size_t>(k)],
                            inv_width[static_cast<std::size_t>(k)], cells);
            }
            std::vector<int> idx(clo);
            while (true) {
                std::int64_t flat = 0;
                for (int k = 0; k < n; ++k) flat = flat * cells + idx[static_cast<std::size_t>(k)];
                bucket[static_cast<std::size_t>(flat)].push_back(i);
                int k = n - 1;
                for (; k >= 0; --k) {
                    if (++idx[static_cast<std::size_t>(k)] <= chi[static_cast<std::size_t>(k)])
                        break;
                    idx[static_cast<std::size_t>(k)] = clo[static_cast<std::size_t>(k)];
                }
                if (k < 0) break;
            }
        }
    }

    std::int64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (parallel)
    for (std::int64_t s = 0; s < samples; ++s) {
        double p[max_mc_dimension];
        std::int64_t flat = 0;
        for (int k = 0; k < n; ++k) {
            const double lo = box_lo[static_cast<std::size_t>(k)];
            const double hi = box_hi[static_cast<std::size_t>(k)];
            const double u = unit_double(counter_bits(
                seed, static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(n) +
                          static_cast<std::uint64_t>(k)));
            p[k] = lo + u * (hi - lo);
            flat = flat * cells + cell_of(p[k], lo, inv_width[static_cast<std::size_t>(k)], cells);
        }
        for (int i : bucket[static_cast<std::size_t>(flat)]) {
            bool inside = true;
            for (int k = 0; k < n; ++k)
                if (std::abs(p[k] - cubes.center(i, k)) > half) {
                    inside = false;
                    break;
                }
            if (inside) {
                ++hits;
                break;
            }
        }
    }

    const double p_hat = static_cast<double>(hits) / static_cast<double>(samples);
    McVolume result;
    result.hits = hits;
    result.samples = samples;
    result.estimate = box_volume * p_hat;
    result.std_error =
        box_volume * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
    return result;
}

} // namespace

McVolume mc_union_volume(const HypercubeSet& cubes, std::int64_t samples, std::uint64_t seed) {
    return mc_union_volume_impl(cubes, samples, seed, true);
}

McVolume mc_union_volume_serial(const HypercubeSet& cubes, std::int64_t samples,
                                std::uint64_t seed) {
    return mc_union_volume_impl(cubes, samples, seed, false);
}

} // namespace gdm::geometry
