#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mclab {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..N-1. Immutable after construction:
// no self-loops, no duplicate edges, adjacency kept symmetric. "Mutating"
// helpers return a new graph.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range endpoints, self-loops or
    // duplicate edges. Edge orientation in the input is irrelevant.
    Graph(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges normalized to u < v and sorted ascending.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    Graph complement() const;

    // Induced subgraph on `vertices` (must be sorted, unique, in range);
    // vertex i of the result is vertices[i].
    Graph induced_subgraph(const std::vector<int>& vertices) const;

    Graph with_edge(int u, int v) const;     // throws if present or u == v
    Graph without_vertex(int v) const;       // remaining labels shift down

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    static Graph empty(int n) { return Graph(n, {}); }
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph random_gnp(int n, double edge_prob, std::uint64_t seed);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> adj_bits_;  // row-major bitset, stride words_
    int words_ = 0;
};

// 2|E| / (N(N-1)); throws std::invalid_argument for N < 2.
double density(const Graph& g);

}  // namespace mclab
