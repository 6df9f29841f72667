// Times the OpenMP kernels against their serial reference implementations on
// synthetic inputs and reports speedups plus the largest observed deviation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gdm/geometry.hpp"
#include "gdm/measures.hpp"
#include "gdm/population.hpp"
#include "gdm/reference.hpp"
#include "gdm/rng.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::vector<double> random_matrix(int rows, int cols, double lo, double hi, std::uint64_t seed) {
    gdm::SplitMix64 rng(seed);
    std::vector<double> m(static_cast<std::size_t>(rows) * cols);
    for (auto& v : m) v = gdm::uniform_in(rng, lo, hi);
    return m;
}

void report(const std::string& label, double serial_s, double parallel_s, double delta) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   |delta| %.3g\n",
                label.c_str(), serial_s * 1e3, parallel_s * 1e3,
                parallel_s > 0 ? serial_s / parallel_s : 0.0, delta);
}

template <typename F>
std::pair<double, double> timed(F&& f) {
    const auto start = clock_type::now();
    const double value = f();
    return {value, seconds_since(start)};
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    // Mean pairwise distance.
    for (int count : quick ? std::vector<int>{200} : std::vector<int>{500, 1500, 3000}) {
        const gdm::Landscape ls = gdm::Landscape::cube(0.0, 1.0, 2);
        const gdm::Population pop(random_matrix(count, 2, 0.0, 1.0, 11), ls);
        const auto [ref, ref_s] = timed([&] { return gdm::reference::pairwise_mean_distance(pop); });
        const auto [par, par_s] = timed([&] { return gdm::measures::d_pw(pop); });
        report("d_pw N=" + std::to_string(count), ref_s, par_s, std::abs(ref - par));
    }

    // Euclidean MST over the complete graph.
    for (int count : quick ? std::vector<int>{200} : std::vector<int>{500, 1500, 3000}) {
        const gdm::geometry::PointSet pts(random_matrix(count, 2, 0.0, 1.0, 23), 2);
        const auto [ref, ref_s] = timed([&] { return gdm::reference::emst_length_kruskal(pts); });
        const auto [par, par_s] = timed([&] { return gdm::geometry::emst_length(pts); });
        report("emst N=" + std::to_string(count), ref_s, par_s, std::abs(ref - par));
    }

    // Union volume of equal cubes (parallel vs serial sweep).
    for (int n : {2, 3}) {
        for (int count : quick ? std::vector<int>{100} : std::vector<int>{200, 600}) {
            const double side = std::pow(1.0 / count, 1.0 / n);
            const gdm::geometry::HypercubeSet cubes(
                random_matrix(count, n, 0.0, 1.0, 37 + static_cast<std::uint64_t>(n)), n, side);
            const auto [ser, ser_s] = timed([&] { return gdm::geometry::union_volume_serial(cubes); });
            const auto [par, par_s] = timed([&] { return gdm::geometry::union_volume(cubes); });
            report("union_volume n=" + std::to_string(n) + " N=" + std::to_string(count), ser_s,
                   par_s, std::abs(ser - par));
        }
    }

    // Monte-Carlo volume sampling (counter-based, so serial == parallel bit-exact).
    {
        const int count = quick ? 50 : 150;
        const std::int64_t samples = quick ? 200000 : 4000000;
        const gdm::geometry::HypercubeSet cubes(random_matrix(count, 2, 0.0, 1.0, 53), 2,
                                                std::sqrt(1.0 / count));
        const auto [ser, ser_s] =
            timed([&] { return gdm::geometry::mc_union_volume_serial(cubes, samples, 7).estimate; });
        const auto [par, par_s] =
            timed([&] { return gdm::geometry::mc_union_volume(cubes, samples, 7).estimate; });
        report("mc_volume samples=" + std::to_string(samples), ser_s, par_s, std::abs(ser - par));
    }

    return 0;
}
