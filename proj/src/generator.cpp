#include "mclab/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mclab/anneal.hpp"  // kEmbeddingLimit
#include "mclab/coloring.hpp"
#include "mclab/rng.hpp"

namespace mclab {

std::pair<Graph, bool> add_guarded_edge(const Graph& g, int u, int v, int baseline_bound) {
    Graph grown = g.with_edge(u, v);  // validates u != v and non-edge
    if (greedy_chromatic_upper_bound(grown) <= baseline_bound)
        return {std::move(grown), true};
    return {g, false};
}

namespace {

void validate(const GraphRecipe& r) {
    if (r.n_node < 1) throw std::invalid_argument("graph_creation: n_node must be >= 1");
    if (r.n_cli < 1) throw std::invalid_argument("graph_creation: n_cli must be >= 1");
    if (r.ex_node < 0) throw std::invalid_argument("graph_creation: ex_node must be >= 0");
    if (r.rand_cli && r.n_node < 2)
        throw std::invalid_argument("graph_creation: rand_cli needs n_node >= 2");
    if (r.intra_edge_pct < 0.0 || r.intra_edge_pct > 1.0 || r.inter_edge_pct < 0.0 ||
        r.inter_edge_pct > 1.0)
        throw std::invalid_argument("graph_creation: edge percentages must lie in [0,1]");
}

int attempts_for(double pct, long targets, bool at_least_one) {
    const long raw = static_cast<long>(std::ceil(pct * static_cast<double>(targets)));
    const long floor = at_least_one ? 1 : 0;
    return static_cast<int>(std::min<long>(std::max(raw, floor), targets));
}

}  // namespace

BenchGraph graph_creation(const GraphRecipe& recipe) {
    validate(recipe);
    SplitMix64 rng(recipe.rng_seed);
    const int final_dim = recipe_final_dim(recipe);

    // clique sizes; labels are canonical here (cliques first) and get
    // permuted at the very end
    std::vector<int> sizes(recipe.n_cli, recipe.n_node);
    if (recipe.rand_cli)
        for (int& s : sizes)
            s = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(recipe.n_node - 1)));
    const int planted_max = *std::max_element(sizes.begin(), sizes.end());

    std::vector<std::vector<int>> cliques;
    std::vector<Edge> edges;
    int next_label = 0;
    for (int s : sizes) {
        std::vector<int> members(s);
        for (int i = 0; i < s; ++i) members[i] = next_label + i;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) edges.emplace_back(members[i], members[j]);
        cliques.push_back(std::move(members));
        next_label += s;
    }
    std::vector<int> externals;
    for (int v = next_label; v < final_dim; ++v) externals.push_back(v);

    Graph g(final_dim, edges);
    const int baseline_bound = greedy_chromatic_upper_bound(g);

    BenchGraph bench;
    bench.recipe = recipe;
    bench.planted_max_size = planted_max;
    bench.exceeds_embedding_budget = final_dim > kEmbeddingLimit;

    // random links from every external node, each filtered by the guard
    std::vector<int> candidates;
    for (int v : externals) {
        const int tries = attempts_for(recipe.intra_edge_pct, final_dim - 1, true);
        for (int t = 0; t < tries; ++t) {
            candidates.clear();
            for (int u = 0; u < final_dim; ++u)
                if (u != v && !g.has_edge(u, v)) candidates.push_back(u);
            if (candidates.empty()) break;
            const int u = candidates[rng.next_below(candidates.size())];
            ++bench.edges_attempted;
            auto [grown, accepted] = add_guarded_edge(g, v, u, baseline_bound);
            if (accepted) {
                g = std::move(grown);
                ++bench.edges_accepted;
            }
        }
    }

    // optional random links between clique pairs
    if (recipe.add_edges) {
        std::vector<std::pair<int, int>> cross;
        for (std::size_t a = 0; a < cliques.size(); ++a) {
            for (std::size_t b = a + 1; b < cliques.size(); ++b) {
                const long pairs =
                    static_cast<long>(cliques[a].size()) * static_cast<long>(cliques[b].size());
                const int tries = attempts_for(recipe.inter_edge_pct, pairs, false);
                for (int t = 0; t < tries; ++t) {
                    cross.clear();
                    for (int u : cliques[a])
                        for (int w : cliques[b])
                            if (!g.has_edge(u, w)) cross.emplace_back(u, w);
                    if (cross.empty()) break;
                    const auto [u, w] = cross[rng.next_below(cross.size())];
                    ++bench.edges_attempted;
                    auto [grown, accepted] = add_guarded_edge(g, u, w, baseline_bound);
                    if (accepted) {
                        g = std::move(grown);
                        ++bench.edges_accepted;
                    }
                }
            }
        }
    }

    for (int v : externals)
        if (g.degree(v) == 0) ++bench.isolated_externals;

    // seeded relabeling (Fisher-Yates) so clique membership is not readable
    // off the label ranges
    std::vector<int> relabel(final_dim);
    for (int v = 0; v < final_dim; ++v) relabel[v] = v;
    for (int v = final_dim - 1; v > 0; --v)
        std::swap(relabel[v], relabel[rng.next_below(static_cast<std::uint64_t>(v) + 1)]);

    std::vector<Edge> permuted;
    permuted.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) permuted.emplace_back(relabel[u], relabel[v]);
    bench.graph = Graph(final_dim, permuted);
    for (auto& members : cliques) {
        for (int& v : members) v = relabel[v];
        std::sort(members.begin(), members.end());
    }
    bench.clique_lists = std::move(cliques);
    return bench;
}

double ratio(int c_m, int d_g) {
    if (c_m < 1 || d_g <= c_m)
        throw std::invalid_argument("ratio: requires d_g > c_m >= 1");
    return static_cast<double>(c_m) / static_cast<double>(d_g - c_m);
}

}  // namespace mclab
