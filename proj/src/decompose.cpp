#include "mclab/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "mclab/coloring.hpp"

namespace mclab {

namespace {

int alive_degree(const Graph& g, const std::vector<char>& alive, int v) {
    int d = 0;
    for (int u : g.neighbors(v))
        if (alive[u]) ++d;
    return d;
}

// First (label-ascending) pair of alive neighbors of v that are not adjacent
// to each other.
std::optional<RemovalTriple> non_adjacent_pair(const Graph& g, const std::vector<char>& alive,
                                               int v) {
    const auto& nbrs = g.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
        if (!alive[nbrs[a]]) continue;
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
            if (!alive[nbrs[b]]) continue;
            if (!g.has_edge(nbrs[a], nbrs[b])) return RemovalTriple{v, nbrs[a], nbrs[b]};
        }
    }
    return std::nullopt;
}

std::optional<RemovalTriple> max_degree_search(const Graph& g, const std::vector<char>& alive,
                                               const std::vector<char>& protected_set, int depth,
                                               SplitMix64* tie_rng) {
    const int n = g.vertex_count();
    std::vector<int> degree(n, 0);
    std::vector<int> degrees_present;
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        degree[v] = alive_degree(g, alive, v);
        degrees_present.push_back(degree[v]);
    }
    std::sort(degrees_present.begin(), degrees_present.end(), std::greater<int>());
    degrees_present.erase(std::unique(degrees_present.begin(), degrees_present.end()),
                          degrees_present.end());

    const int classes = std::min<int>(depth, static_cast<int>(degrees_present.size()));
    for (int c = 0; c < classes; ++c) {
        const int want = degrees_present[c];
        if (want < 2) break;  // a removable vertex needs two neighbors
        std::vector<RemovalTriple> candidates;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || protected_set[v] || degree[v] != want) continue;
            if (auto t = non_adjacent_pair(g, alive, v)) candidates.push_back(*t);
        }
        if (candidates.empty()) continue;
        if (tie_rng == nullptr || candidates.size() == 1) return candidates.front();
        return candidates[tie_rng->next_below(candidates.size())];
    }
    return std::nullopt;
}

std::optional<RemovalTriple> random_search(const Graph& g, const std::vector<char>& alive,
                                           const std::vector<char>& protected_set, int budget,
                                           SplitMix64& rng) {
    std::vector<int> alive_vertices;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) alive_vertices.push_back(v);
    if (alive_vertices.empty()) return std::nullopt;

    std::vector<int> nbrs;
    for (int probe = 0; probe < budget; ++probe) {
        const int v = alive_vertices[rng.next_below(alive_vertices.size())];
        if (protected_set[v]) continue;
        nbrs.clear();
        for (int u : g.neighbors(v))
            if (alive[u]) nbrs.push_back(u);
        if (nbrs.size() < 2) continue;
        const std::size_t ia = rng.next_below(nbrs.size());
        std::size_t ib = rng.next_below(nbrs.size() - 1);
        if (ib >= ia) ++ib;
        const int a = std::min(nbrs[ia], nbrs[ib]);
        const int b = std::max(nbrs[ia], nbrs[ib]);
        if (!g.has_edge(a, b)) return RemovalTriple{v, a, b};
    }
    return std::nullopt;
}

std::vector<char> all_alive(const Graph& g) {
    return std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 1);
}

}  // namespace

std::optional<RemovalTriple> find_max_degree_removable(const Graph& g,
                                                       const std::vector<char>& protected_set,
                                                       int /*min_cn*/, int depth) {
    return max_degree_search(g, all_alive(g), protected_set, depth, nullptr);
}

std::optional<RemovalTriple> find_random_removable(const Graph& g,
                                                   const std::vector<char>& protected_set,
                                                   int /*min_cn*/, int budget, SplitMix64& rng) {
    if (budget < 1) throw std::invalid_argument("find_random_removable: budget must be >= 1");
    return random_search(g, all_alive(g), protected_set, budget, rng);
}

bool guard_allows_removal(const Graph& g, int v, int min_cn) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("guard_allows_removal: vertex out of range");
    return greedy_chromatic_upper_bound_masked(g, all_alive(g), v, true) >= min_cn;
}

DecomposeResult decompose_is(const Graph& g, const DecomposeConfig& cfg) {
    const int n = g.vertex_count();
    if (cfg.final_dim < 1) throw std::invalid_argument("decompose_is: final_dim must be >= 1");
    if (cfg.final_dim > n)
        throw std::invalid_argument("decompose_is: final_dim exceeds graph size");
    if (cfg.min_cn < 0) throw std::invalid_argument("decompose_is: min_cn must be >= 0");
    if (cfg.max_triple_depth < 1)
        throw std::invalid_argument("decompose_is: max_triple_depth must be >= 1");

    const int probe_budget =
        cfg.random_probe_budget > 0 ? cfg.random_probe_budget : 100 * std::max(1, n);
    SplitMix64 rng(cfg.rng_seed);
    SplitMix64* tie_rng = cfg.deterministic_ties ? nullptr : &rng;

    std::vector<char> alive = all_alive(g);
    std::vector<char> protected_set(n, 0);
    int alive_count = n;

    DecomposeTrace trace;
    bool candidates_dried_up = false;

    while (alive_count > cfg.final_dim && trace.iterations < 2 * n) {
        ++trace.iterations;
        auto triple = max_degree_search(g, alive, protected_set, cfg.max_triple_depth, tie_rng);
        if (!triple) triple = random_search(g, alive, protected_set, probe_budget, rng);
        if (!triple) {
            candidates_dried_up = true;
            break;
        }
        if (greedy_chromatic_upper_bound_masked(g, alive, triple->v, true) >= cfg.min_cn) {
            alive[triple->v] = 0;
            --alive_count;
            trace.removed_vertices.push_back(triple->v);
            protected_set[triple->v1] = 1;
            protected_set[triple->v2] = 1;
        }
        // A blocked candidate just costs an iteration; the 2N cap bounds the
        // retries and the seeded tie-break lets other candidates surface.
    }

    if (alive_count <= cfg.final_dim)
        trace.stop_reason = StopReason::reached_final_dim;
    else if (candidates_dried_up)
        trace.stop_reason = StopReason::no_candidate;
    else
        trace.stop_reason = StopReason::guard_blocked;

    for (int v = 0; v < n; ++v)
        if (protected_set[v]) trace.protected_vertices.push_back(v);

    std::vector<int> survivors;
    survivors.reserve(alive_count);
    for (int v = 0; v < n; ++v)
        if (alive[v]) survivors.push_back(v);
    return DecomposeResult{g.induced_subgraph(survivors), std::move(trace)};
}

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::reached_final_dim: return "reached_final_dim";
        case StopReason::no_candidate: return "no_candidate";
        case StopReason::guard_blocked: return "guard_blocked";
    }
    return "unknown";
}

}  // namespace mclab
