#pragma once

#include "gdm/geometry.hpp"
#include "gdm/population.hpp"

/// Independent serial implementations kept as test oracles and as the
/// baseline side of the kernel benchmark. Each one takes a different route
/// than the production kernel it checks.
namespace gdm::reference {

/// Mean pairwise Euclidean distance as a literal double loop over all
/// unordered pairs.
double pairwise_mean_distance(const Population& population);

/// EMST total length via Kruskal on the explicit sorted edge list with a
/// union-find. O(N^2 log N) time, O(N^2) memory; fine at reference scale.
double emst_length_kruskal(const geometry::PointSet& points);

/// EMST total length by enumerating every labeled spanning tree through its
/// Pruefer sequence and taking the cheapest. N^(N-2) trees; rejects N > 9.
double emst_length_exhaustive(const geometry::PointSet& points);

/// Union volume by walking the full coordinate-compressed cell grid and
/// testing each cell center for coverage. Exponential in n; rejects grids
/// beyond ~4M cells. Exact, and structurally unlike the sweep.
double union_volume_cells(const geometry::HypercubeSet& cubes);

} // namespace gdm::reference
