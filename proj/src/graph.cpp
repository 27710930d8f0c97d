#include "mclab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mclab/rng.hpp"

namespace mclab {

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : n_(vertex_count) {
    if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
    words_ = (n_ + 63) / 64;
    adj_.resize(n_);
    adj_bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        std::uint64_t& word = adj_bits_[static_cast<std::size_t>(u) * words_ + v / 64];
        const std::uint64_t bit = 1ULL << (v % 64);
        if (word & bit)
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        word |= bit;
        adj_bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (adj_bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1ULL;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

Graph Graph::complement() const {
    std::vector<Edge> comp;
    comp.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2 - edges_.size());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) comp.emplace_back(u, v);
    return Graph(n_, comp);
}

Graph Graph::induced_subgraph(const std::vector<int>& vertices) const {
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const int v = vertices[i];
        check_vertex(v);
        if (i > 0 && vertices[i - 1] >= v)
            throw std::invalid_argument("induced_subgraph: vertices must be sorted and unique");
        pos[v] = static_cast<int>(i);
    }
    std::vector<Edge> sub;
    for (auto [u, v] : edges_)
        if (pos[u] >= 0 && pos[v] >= 0) sub.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(vertices.size()), sub);
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("with_edge: self-loop");
    if (has_edge(u, v)) throw std::invalid_argument("with_edge: edge already present");
    std::vector<Edge> edges = edges_;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(n_, edges);
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(keep);
}

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph Graph::path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph Graph::random_gnp(int n, double edge_prob, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < edge_prob) edges.emplace_back(u, v);
    return Graph(n, edges);
}

double density(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("density: undefined for fewer than 2 vertices");
    return 2.0 * static_cast<double>(g.edge_count()) / (static_cast<double>(n) * (n - 1));
}

}  // namespace mclab
