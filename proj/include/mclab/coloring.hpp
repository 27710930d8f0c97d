#pragma once

#include "mclab/graph.hpp"

namespace mclab {

// Number of colors used by largest-degree-first greedy coloring (ties broken
// by ascending label, smallest available color assigned). Deterministic upper
// bound on the chromatic number, hence also >= the clique number. Empty
// graph -> 0.
int greedy_chromatic_upper_bound(const Graph& g);

// Same bound on the subgraph induced by the vertices with keep[v] == true,
// optionally pretending one further vertex is deleted (skip = its label, or
// -1). Avoids materializing subgraphs in the decomposition inner loop.
int greedy_chromatic_upper_bound_masked(const Graph& g, const std::vector<char>& keep, int skip,
                                        bool color_complement);

}  // namespace mclab
