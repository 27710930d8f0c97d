#pragma once

#include <iosfwd>
#include <string>

#include "mclab/graph.hpp"

namespace mclab {

struct DimacsReadResult {
    Graph graph;
    int merged_duplicate_edges = 0;  // duplicates in the file are merged, not fatal
};

// DIMACS-like text format: "p edge N M" followed by M lines "e u v" with
// 1-based labels. Comment lines start with 'c'. Self-loops are rejected;
// duplicate edges are merged and counted.
DimacsReadResult read_dimacs(std::istream& in);
DimacsReadResult read_dimacs_file(const std::string& path);

// Emits edges in ascending (u,v) order so equal graphs serialize identically.
void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs_file(const std::string& path, const Graph& g);
std::string to_dimacs_string(const Graph& g);

}  // namespace mclab
