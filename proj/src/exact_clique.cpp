#include "mclab/exact_clique.hpp"

#include <bit>
#include <cstdint>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    if (g.vertex_count() > 64)
        throw size_limit_error("exact clique oracle supports at most 64 vertices, got " +
                               std::to_string(g.vertex_count()));
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask(1) << v;
        adj[v] |= Mask(1) << u;
    }
    return adj;
}

// Bron-Kerbosch with pivoting, specialized to track only the maximum size.
// P is the candidate set; |R| is carried as depth.
void expand(const std::vector<Mask>& adj, Mask p, int depth, int& best) {
    if (p == 0) {
        if (depth > best) best = depth;
        return;
    }
    if (depth + std::popcount(p) <= best) return;

    // pivot: candidate with the most candidate neighbors
    int pivot = -1, pivot_cover = -1;
    for (Mask scan = p; scan;) {
        const int u = std::countr_zero(scan);
        scan &= scan - 1;
        const int cover = std::popcount(p & adj[u]);
        if (cover > pivot_cover) {
            pivot_cover = cover;
            pivot = u;
        }
    }

    Mask branch = p & ~adj[pivot];
    while (branch) {
        const int v = std::countr_zero(branch);
        const Mask bit = Mask(1) << v;
        branch &= branch - 1;
        expand(adj, p & adj[v], depth + 1, best);
        p &= ~bit;
        if (depth + std::popcount(p) <= best) return;
    }
}

int max_clique_size_in(const std::vector<Mask>& adj, Mask candidates, int floor_size) {
    int best = floor_size;
    expand(adj, candidates, 0, best);
    return best;
}

}  // namespace

int exact_max_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const auto adj = adjacency_masks(g);
    const Mask all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    return max_clique_size_in(adj, all, 0);
}

std::vector<int> exact_max_clique(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    const auto adj = adjacency_masks(g);
    const Mask all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    const int omega = max_clique_size_in(adj, all, 0);

    // Grow the lexicographically smallest witness: take a vertex exactly when
    // a maximum clique through the current prefix still exists.
    std::vector<int> clique;
    Mask candidates = all;
    int need = omega;
    for (int v = 0; v < n && need > 0; ++v) {
        const Mask bit = Mask(1) << v;
        if (!(candidates & bit)) continue;
        const Mask rest = candidates & adj[v];
        if (1 + max_clique_size_in(adj, rest, 0) >= need) {
            clique.push_back(v);
            candidates = rest;
            --need;
        } else {
            candidates &= ~bit;
        }
    }
    return clique;
}

std::vector<int> exact_max_independent_set(const Graph& g) {
    return exact_max_clique(g.complement());
}

int exact_max_independent_set_size(const Graph& g) {
    return exact_max_clique_size(g.complement());
}

}  // namespace mclab
