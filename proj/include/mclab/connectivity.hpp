#pragma once

#include <array>
#include <vector>

#include "mclab/graph.hpp"

namespace mclab {

// The graph description indices used in the experiment studies. Conventions
// for graphs the generator can emit (possibly disconnected):
//   - distances, eccentricity and closeness are per connected component;
//     an isolated vertex has eccentricity 0 and closeness 0;
//   - closeness(v) = (|C|-1) / sum of distances within v's component C;
//   - betweenness is shortest-path betweenness normalized by (N-1)(N-2)/2
//     with the global vertex count N;
//   - centralization is Freeman degree centralization,
//     sum(max_deg - deg(v)) / ((N-1)(N-2)), zero for N < 3;
//   - center/periphery are the argmin/argmax eccentricity sets;
//   - variances are population variances over all N vertices.
struct ConnectivityIndices {
    double degree_mean = 0.0;
    double degree_variance = 0.0;
    int eccentricity_min = 0;
    int eccentricity_max = 0;
    int center_size = 0;
    int periphery_size = 0;
    double centralization = 0.0;
    double closeness_mean = 0.0;
    double closeness_variance = 0.0;
    double betweenness_mean = 0.0;
    double betweenness_variance = 0.0;
};

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

std::vector<int> eccentricities(const Graph& g);
std::vector<double> closeness_centrality(const Graph& g);

// Brandes accumulation parallelized over sources. Per-source contributions
// are reduced in source order, so the result is bit-identical to the serial
// reference regardless of thread count.
std::vector<double> betweenness_centrality(const Graph& g);
std::vector<double> betweenness_centrality_serial(const Graph& g);

// All eleven indices; throws std::invalid_argument on the empty graph.
ConnectivityIndices connectivity_indices(const Graph& g);

// Fixed field order shared by serializers and summaries.
inline constexpr int kIndexCount = 11;
extern const char* const kIndexNames[kIndexCount];
std::array<double, kIndexCount> index_values(const ConnectivityIndices& idx);

}  // namespace mclab
