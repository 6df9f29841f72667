#include "gdm/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gdm::reference {

double pairwise_mean_distance(const Population& population) {
    const int count = population.size();
    const int n = population.dimension();
    if (count < 2) throw std::invalid_argument("needs at least two individuals");
    double sum = 0.0;
    for (int i = 1; i < count; ++i)
        for (int j = 0; j < i; ++j) {
            double d2 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double d = population.gene(i, k) - population.gene(j, k);
                d2 += d * d;
            }
            sum += std::sqrt(d2);
        }
    return 2.0 * sum / (static_cast<double>(count) * (count - 1));
}

namespace {

double point_distance(const geometry::PointSet& pts, int i, int j) {
    double d2 = 0.0;
    for (int k = 0; k < pts.dimension(); ++k) {
        const double d = pts.coord(i, k) - pts.coord(j, k);
        d2 += d * d;
    }
    return std::sqrt(d2);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

} // namespace

double emst_length_kruskal(const geometry::PointSet& points) {
    const int count = points.count();
    if (count == 1) return 0.0;

    struct Edge {
        double w;
        int i, j;
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(count) * (count - 1) / 2);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) edges.push_back({point_distance(points, i, j), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    UnionFind uf(count);
    double total = 0.0;
    int used = 0;
    for (const Edge& e : edges) {
        if (uf.unite(e.i, e.j)) {
            total += e.w;
            if (++used == count - 1) break;
        }
    }
    return total;
}

double emst_length_exhaustive(const geometry::PointSet& points) {
    const int count = points.count();
    if (count > 9) throw std::invalid_argument("exhaustive spanning-tree search limited to N <= 9");
    if (count == 1) return 0.0;
    if (count == 2) return point_distance(points, 0, 1);

    std::vector<std::vector<double>> w(static_cast<std::size_t>(count),
                                       std::vector<double>(static_cast<std::size_t>(count), 0.0));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                point_distance(points, i, j);

    // Every labeled tree on `count` vertices corresponds to one Pruefer
    // sequence of length count-2 over the vertex labels.
    const int seq_len = count - 2;
    std::vector<int> seq(static_cast<std::size_t>(seq_len), 0);
    std::vector<int> degree(static_cast<std::size_t>(count));
    double best = std::numeric_limits<double>::infinity();

    while (true) {
        std::fill(degree.begin(), degree.end(), 1);
        for (int v : seq) ++degree[static_cast<std::size_t>(v)];

        double total = 0.0;
        std::vector<int> deg = degree;
        // Decode: repeatedly attach the smallest leaf to the next sequence entry.
        std::vector<char> done(static_cast<std::size_t>(count), 0);
        for (int s = 0; s < seq_len; ++s) {
            int leaf = -1;
            for (int v = 0; v < count; ++v)
                if (!done[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
                    leaf = v;
                    break;
                }
            const int to = seq[static_cast<std::size_t>(s)];
            total += w[static_cast<std::size_t>(leaf)][static_cast<std::size_t>(to)];
            done[static_cast<std::size_t>(leaf)] = 1;
            --deg[static_cast<std::size_t>(to)];
        }
        int a = -1, b = -1;
        for (int v = 0; v < count; ++v)
            if (!done[static_cast<std::size_t>(v)]) (a < 0 ? a : b) = v;
        total += w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        best = std::min(best, total);

        int pos = seq_len - 1;
        for (; pos >= 0; --pos) {
            if (++seq[static_cast<std::size_t>(pos)] < count) break;
            seq[static_cast<std::size_t>(pos)] = 0;
        }
        if (pos < 0) break;
    }
    return best;
}

double union_volume_cells(const geometry::HypercubeSet& cubes) {
    const int n = cubes.dimension();
    const int count = cubes.count();
    const double half = cubes.side() / 2.0;
    if (n > 16) throw std::invalid_argument("cell-walk reference limited to 16 dimensions");

    std::vector<std::vector<double>> coords(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        auto& c = coords[static_cast<std::size_t>(k)];
        c.reserve(static_cast<std::size_t>(count) * 2);
        for (int i = 0; i < count; ++i) {
            c.push_back(cubes.center(i, k) - half);
            c.push_back(cubes.center(i, k) + half);
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }

    long long n_cells = 1;
    for (int k = 0; k < n; ++k) {
        n_cells *= static_cast<long long>(coords[static_cast<std::size_t>(k)].size()) - 1;
        if (n_cells > (1LL << 22))
            throw std::invalid_argument("cell-walk reference limited to ~4M cells");
    }
    if (n_cells <= 0) return 0.0;

    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    double total = 0.0;
    for (long long c = 0; c < n_cells; ++c) {
        double cell_volume = 1.0;
        bool covered = false;
        // Cell center in each axis.
        double center[16];
        for (int k = 0; k < n; ++k) {
            const auto& cs = coords[static_cast<std::size_t>(k)];
            const int j = idx[static_cast<std::size_t>(k)];
            cell_volume *= cs[static_cast<std::size_t>(j) + 1] - cs[static_cast<std::size_t>(j)];
            center[k] = 0.5 * (cs[static_cast<std::size_t>(j)] + cs[static_cast<std::size_t>(j) + 1]);
        }
        for (int i = 0; i < count && !covered; ++i) {
            covered = true;
            for (int k = 0; k < n; ++k)
                if (std::abs(center[k] - cubes.center(i, k)) > half) {
                    covered = false;
                    break;
                }
        }
        if (covered) total += cell_volume;

        for (int k = n - 1; k >= 0; --k) {
            if (++idx[static_cast<std::size_t>(k)] <
                static_cast<int>(coords[static_cast<std::size_t>(k)].size()) - 1)
                break;
            idx[static_cast<std::size_t>(k)] = 0;
        }
    }
    return total;
}

} // namespace gdm::reference
