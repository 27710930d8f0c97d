#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mclab/graph.hpp"

namespace mclab {

struct GraphRecipe {
    int n_node = 1;        // clique size (maximum size when rand_cli)
    int ex_node = 0;       // external noise vertices
    int n_cli = 1;         // number of planted cliques
    bool add_edges = false;  // random links between clique pairs
    bool rand_cli = false;   // clique sizes drawn uniformly in [2, n_node]
    double intra_edge_pct = 0.0;  // per external node: fraction of targets tried
    double inter_edge_pct = 0.0;  // per clique pair: fraction of cross pairs tried
    std::uint64_t rng_seed = 0;

    bool operator==(const GraphRecipe&) const = default;
};

inline int recipe_final_dim(const GraphRecipe& r) { return r.n_node * r.n_cli + r.ex_node; }

struct BenchGraph {
    Graph graph;
    std::vector<std::vector<int>> clique_lists;  // each sorted ascending
    int planted_max_size = 0;
    GraphRecipe recipe;
    // generation log
    long edges_attempted = 0;
    long edges_accepted = 0;
    int isolated_externals = 0;  // externals whose every attempt was rejected
    bool exceeds_embedding_budget = false;  // warning only; the gate is the solver's
};

// Adds (u,v) only if the greedy color bound of the grown graph stays at or
// below baseline_bound. Returns the (possibly unchanged) graph and whether
// the edge went in. Throws std::invalid_argument on self-loops or existing
// edges.
std::pair<Graph, bool> add_guarded_edge(const Graph& g, int u, int v, int baseline_bound);

// Builds a benchmark graph: n_cli vertex-disjoint planted cliques plus
// ex_node noise vertices, random links filtered through the color-bound
// guard so the clique number provably equals planted_max_size, and a final
// seeded label permutation so labels leak no structure.
BenchGraph graph_creation(const GraphRecipe& recipe);

// R = c_m / (d_g - c_m); throws std::invalid_argument unless d_g > c_m >= 1.
double ratio(int c_m, int d_g);

}  // namespace mclab
