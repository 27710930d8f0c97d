#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mclab/graph.hpp"
#include "mclab/rng.hpp"

namespace mclab {

struct DecomposeConfig {
    int final_dim = 1;          // target vertex count
    int min_cn = 1;             // color-number floor the guard defends
    int max_triple_depth = 5;   // degree classes the structured search visits
    int random_probe_budget = 0;  // random triples to try; 0 -> 100 * N
    std::uint64_t rng_seed = 0;
    bool deterministic_ties = false;  // label order instead of seeded draws
};

enum class StopReason { reached_final_dim, no_candidate, guard_blocked };

struct DecomposeTrace {
    std::vector<int> removed_vertices;    // input labels, removal order
    std::vector<int> protected_vertices;  // the non-removable list, sorted
    int iterations = 0;                   // never exceeds 2 * N(input)
    StopReason stop_reason = StopReason::reached_final_dim;
};

struct DecomposeResult {
    Graph graph;  // induced subgraph on surviving vertices, ascending relabel
    DecomposeTrace trace;
};

struct RemovalTriple {
    int v = -1;   // removal candidate
    int v1 = -1;  // its mutually non-adjacent neighbors, kept as IS candidates
    int v2 = -1;
};

// Shrinks g while trying to keep its maximum independent set: a vertex may
// go only when two of its neighbors are non-adjacent (those two become
// protected) and only while the greedy color bound of the complement stays
// at or above min_cn. g is conventionally the complement of the graph whose
// clique is sought; the algorithm itself is well defined on any input.
// Throws std::invalid_argument if final_dim exceeds the vertex count.
DecomposeResult decompose_is(const Graph& g, const DecomposeConfig& cfg);

// Structured search: walk at most `depth` degree classes from the highest,
// returning a non-protected vertex with a non-adjacent neighbor pair. Ties
// inside a class fall to the smallest label; (v1, v2) is the first valid
// pair in label order.
std::optional<RemovalTriple> find_max_degree_removable(const Graph& g,
                                                       const std::vector<char>& protected_set,
                                                       int min_cn, int depth);

// Random fallback: draws up to `budget` random (vertex, neighbor-pair)
// triples from rng and returns the first structurally valid one.
std::optional<RemovalTriple> find_random_removable(const Graph& g,
                                                   const std::vector<char>& protected_set,
                                                   int min_cn, int budget, SplitMix64& rng);

// True iff removing v keeps the greedy color bound of the complement of
// (g - v) at or above min_cn.
bool guard_allows_removal(const Graph& g, int v, int min_cn);

const char* to_string(StopReason reason);

}  // namespace mclab
