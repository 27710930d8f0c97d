#pragma once

#include <vector>

#include "mclab/graph.hpp"

namespace mclab {

// Clique number via Bron-Kerbosch with pivoting over 64-bit vertex sets.
// Throws size_limit_error for more than 64 vertices; the oracle is meant for
// desk-scale verification, not production solving.
int exact_max_clique_size(const Graph& g);

// The lexicographically smallest maximum clique (sorted vertex lists compared
// element-wise), so results are deterministic even when ties exist.
std::vector<int> exact_max_clique(const Graph& g);

// Clique of the complement.
std::vector<int> exact_max_independent_set(const Graph& g);
int exact_max_independent_set_size(const Graph& g);

}  // namespace mclab
