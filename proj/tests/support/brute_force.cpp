#include "brute_force.hpp"

#include <bit>
#include <stdexcept>

namespace oracle {

namespace {

SubsetSearch search_subsets(const mclab::Graph& g, bool want_clique) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("subset oracle capped at 20 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    SubsetSearch result;
    result.best_sets.push_back(0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < result.best_size) continue;
        bool feasible = true;
        for (std::uint32_t scan = mask; scan && feasible;) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const std::uint32_t inside = adj[v] & mask;
            // a clique member must see every other member; an IS member none
            feasible = want_clique ? inside == (mask & ~(1u << v)) : inside == 0;
        }
        if (!feasible) continue;
        if (size > result.best_size) {
            result.best_size = size;
            result.best_sets.clear();
        }
        result.best_sets.push_back(mask);
    }
    return result;
}

}  // namespace

SubsetSearch brute_max_cliques(const mclab::Graph& g) { return search_subsets(g, true); }

SubsetSearch brute_max_independent_sets(const mclab::Graph& g) {
    return search_subsets(g, false);
}

std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> set;
    while (mask) {
        set.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return set;
}

std::vector<int> lexicographically_smallest(const SubsetSearch& search) {
    std::vector<int> best;
    for (std::uint32_t mask : search.best_sets) {
        auto set = mask_to_set(mask);
        if (best.empty() || set < best) best = std::move(set);
    }
    return best;
}

}  // namespace oracle
