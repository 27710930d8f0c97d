#include "mclab/dimacs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mclab {

DimacsReadResult read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long declared_edges = -1;
    std::vector<Edge> edges;
    int duplicates = 0;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_edges) || fmt != "edge" || n < 0)
                throw std::invalid_argument("dimacs: malformed problem line at line " +
                                            std::to_string(line_no));
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw std::invalid_argument("dimacs: edge before problem line at line " +
                                            std::to_string(line_no));
            int u, v;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("dimacs: bad edge at line " + std::to_string(line_no));
            if (u == v)
                throw std::invalid_argument("dimacs: self-loop at line " + std::to_string(line_no));
            edges.emplace_back(std::min(u, v) - 1, std::max(u, v) - 1);
            continue;
        }
        throw std::invalid_argument("dimacs: unknown line tag '" + tag + "' at line " +
                                    std::to_string(line_no));
    }
    if (n < 0) throw std::invalid_argument("dimacs: missing problem line");
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    duplicates = static_cast<int>(edges.end() - last);
    edges.erase(last, edges.end());
    return DimacsReadResult{Graph(n, edges), duplicates};
}

DimacsReadResult read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("dimacs: cannot open '" + path + "' for reading");
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::runtime_error("dimacs: cannot open '" + path + "' for writing");
    write_dimacs(out, g);
}

std::string to_dimacs_string(const Graph& g) {
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

}  // namespace mclab
