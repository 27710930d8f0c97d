#include "mclab/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace mclab {

namespace {

// Shared greedy core. `adjacent` answers adjacency between two alive vertices.
template <typename AdjFn>
int greedy_count(const std::vector<int>& order, int n, AdjFn adjacent) {
    std::vector<int> color(n, -1);
    int used = 0;
    std::vector<char> taken;
    for (int v : order) {
        taken.assign(used + 1, 0);
        for (int u : order) {
            if (color[u] >= 0 && adjacent(v, u)) taken[color[u]] = 1;
        }
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace

int greedy_chromatic_upper_bound(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return greedy_count(order, n, [&](int a, int b) { return g.has_edge(a, b); });
}

int greedy_chromatic_upper_bound_masked(const Graph& g, const std::vector<char>& keep, int skip,
                                        bool color_complement) {
    const int n = g.vertex_count();
    std::vector<int> alive;
    alive.reserve(n);
    for (int v = 0; v < n; ++v)
        if (keep[v] && v != skip) alive.push_back(v);

    std::vector<int> deg(n, 0);
    for (int v : alive) {
        int d = 0;
        for (int u : g.neighbors(v))
            if (keep[u] && u != skip) ++d;
        deg[v] = color_complement ? static_cast<int>(alive.size()) - 1 - d : d;
    }
    std::stable_sort(alive.begin(), alive.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    auto adjacent = [&](int a, int b) { return g.has_edge(a, b) != color_complement; };
    return greedy_count(alive, n, adjacent);
}

}  // namespace mclab
