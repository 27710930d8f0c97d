#include "mclab/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace mclab {

namespace {

// One Brandes source pass: adds the dependency of every vertex on shortest
// paths from src into contrib (raw, ordered-pair counting).
void brandes_source(const Graph& g, int src, std::vector<double>& contrib) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<std::vector<int>> preds(n);
    std::vector<int> order;
    order.reserve(n);

    dist[src] = 0;
    sigma[src] = 1.0;
    std::vector<int> queue{src};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if (dist[w] == dist[v] + 1) {
                sigma[w] += sigma[v];
                preds[w].push_back(v);
            }
        }
    }

    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int w = *it;
        for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        if (w != src) contrib[w] += delta[w];
    }
}

std::vector<double> normalize_betweenness(std::vector<double> raw, int n) {
    // raw counts ordered (s,t) pairs; undirected betweenness halves that and
    // the spec normalizer is (N-1)(N-2)/2, so the net divisor is (N-1)(N-2).
    if (n < 3) return std::vector<double>(n, 0.0);
    const double scale = 1.0 / (static_cast<double>(n - 1) * (n - 2));
    for (double& x : raw) x *= scale;
    return raw;
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[src] = 0;
    std::vector<int> queue{src};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> eccentricities(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> ecc(n, 0);
    for (int v = 0; v < n; ++v) {
        const auto dist = bfs_distances(g, v);
        int e = 0;
        for (int d : dist) e = std::max(e, d);  // -1 (other component) ignored
        ecc[v] = e;
    }
    return ecc;
}

std::vector<double> closeness_centrality(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> closeness(n, 0.0);
    for (int v = 0; v < n; ++v) {
        const auto dist = bfs_distances(g, v);
        long sum = 0;
        int reached = 0;
        for (int d : dist) {
            if (d > 0) {
                sum += d;
                ++reached;
            }
        }
        closeness[v] = sum > 0 ? static_cast<double>(reached) / static_cast<double>(sum) : 0.0;
    }
    return closeness;
}

std::vector<double> betweenness_centrality(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> per_source(n, std::vector<double>(n, 0.0));
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) brandes_source(g, s, per_source[s]);

    std::vector<double> raw(n, 0.0);
    for (int s = 0; s < n; ++s)
        for (int v = 0; v < n; ++v) raw[v] += per_source[s][v];
    return normalize_betweenness(std::move(raw), n);
}

std::vector<double> betweenness_centrality_serial(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> scratch(n, 0.0);
    std::vector<double> raw(n, 0.0);
    for (int s = 0; s < n; ++s) {
        std::fill(scratch.begin(), scratch.end(), 0.0);
        brandes_source(g, s, scratch);
        for (int v = 0; v < n; ++v) raw[v] += scratch[v];
    }
    return normalize_betweenness(std::move(raw), n);
}

namespace {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    Moments m;
    if (xs.empty()) return m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    for (double x : xs) m.variance += (x - m.mean) * (x - m.mean);
    m.variance /= static_cast<double>(xs.size());
    return m;
}

}  // namespace

ConnectivityIndices connectivity_indices(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("connectivity_indices: empty graph");

    ConnectivityIndices idx;

    std::vector<double> degrees(n);
    for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
    const Moments dm = moments(degrees);
    idx.degree_mean = dm.mean;
    idx.degree_variance = dm.variance;

    const auto ecc = eccentricities(g);
    idx.eccentricity_min = *std::min_element(ecc.begin(), ecc.end());
    idx.eccentricity_max = *std::max_element(ecc.begin(), ecc.end());
    idx.center_size = static_cast<int>(std::count(ecc.begin(), ecc.end(), idx.eccentricity_min));
    idx.periphery_size =
        static_cast<int>(std::count(ecc.begin(), ecc.end(), idx.eccentricity_max));

    if (n >= 3) {
        const int dmax = g.max_degree();
        double sum = 0.0;
        for (int v = 0; v < n; ++v) sum += dmax - g.degree(v);
        idx.centralization = sum / (static_cast<double>(n - 1) * (n - 2));
    }

    const Moments cm = moments(closeness_centrality(g));
    idx.closeness_mean = cm.mean;
    idx.closeness_variance = cm.variance;

    const Moments bm = moments(betweenness_centrality(g));
    idx.betweenness_mean = bm.mean;
    idx.betweenness_variance = bm.variance;
    return idx;
}

const char* const kIndexNames[kIndexCount] = {
    "degree_mean",     "degree_variance",     "eccentricity_min",    "eccentricity_max",
    "center_size",     "periphery_size",      "centralization",      "closeness_mean",
    "closeness_variance", "betweenness_mean", "betweenness_variance"};

std::array<double, kIndexCount> index_values(const ConnectivityIndices& idx) {
    return {idx.degree_mean,
            idx.degree_variance,
            static_cast<double>(idx.eccentricity_min),
            static_cast<double>(idx.eccentricity_max),
            static_cast<double>(idx.center_size),
            static_cast<double>(idx.periphery_size),
            idx.centralization,
            idx.closeness_mean,
            idx.closeness_variance,
            idx.betweenness_mean,
            idx.betweenness_variance};
}

}  // namespace mclab
