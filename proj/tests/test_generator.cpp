#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mclab/coloring.hpp"
#include "mclab/dimacs.hpp"
#include "mclab/exact_clique.hpp"
#include "mclab/generator.hpp"
#include "mclab/qubo.hpp"
#include "mclab/rng.hpp"

using namespace mclab;

TEST_CASE("ratio values") {
    CHECK(ratio(30, 100) == doctest::Approx(0.42857142857142855).epsilon(1e-12));
    CHECK(ratio(82, 164) == 1.0);
    CHECK(ratio(1, 2) == 1.0);
    CHECK_THROWS_AS(ratio(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(ratio(0, 3), std::invalid_argument);
}

TEST_CASE("guarded edge addition") {
    // two disjoint triangles: a cross edge keeps the bound at 3
    const Graph two_k3(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto [grown, accepted] = add_guarded_edge(two_k3, 0, 3, 3);
    CHECK(accepted);
    CHECK(grown.has_edge(0, 3));
    CHECK(greedy_chromatic_upper_bound(grown) == 3);

    // completing K4 pushes the bound past 3
    const Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto [same, rejected] = add_guarded_edge(k4_minus, 2, 3, 3);
    CHECK_FALSE(rejected);
    CHECK_FALSE(same.has_edge(2, 3));

    // an empty graph with baseline 1 rejects everything
    auto [unchanged, ok] = add_guarded_edge(Graph::empty(4), 0, 1, 1);
    CHECK_FALSE(ok);

    CHECK_THROWS_AS(add_guarded_edge(two_k3, 0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(add_guarded_edge(two_k3, 0, 1, 3), std::invalid_argument);
}

TEST_CASE("single clique with no extras is exactly K_n") {
    GraphRecipe recipe;
    recipe.n_node = 5;
    recipe.rng_seed = 1;
    const auto bench = graph_creation(recipe);
    CHECK(bench.graph == Graph::complete(5));
    CHECK(bench.clique_lists == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
    CHECK(bench.planted_max_size == 5);
}

TEST_CASE("final dimension arithmetic") {
    GraphRecipe recipe;
    recipe.n_node = 4;
    recipe.ex_node = 3;
    recipe.n_cli = 2;
    CHECK(recipe_final_dim(recipe) == 11);
    recipe.intra_edge_pct = 0.2;
    recipe.rng_seed = 9;
    const auto bench = graph_creation(recipe);
    CHECK(bench.graph.vertex_count() == 11);
}

TEST_CASE("planted cliques are disjoint complete subgraphs with the planted maximum") {
    SplitMix64 seeds(20240815);
    for (int i = 0; i < 200; ++i) {
        GraphRecipe recipe;
        recipe.n_node = 3 + static_cast<int>(seeds.next_below(6));   // 3..8
        recipe.n_cli = 1 + static_cast<int>(seeds.next_below(3));    // 1..3
        const int planted = recipe.n_node * recipe.n_cli;
        recipe.ex_node = static_cast<int>(seeds.next_below(std::max(1, 24 - planted) + 1));
        recipe.add_edges = recipe.n_cli > 1 && seeds.next_bool();
        recipe.rand_cli = seeds.next_bool();
        recipe.intra_edge_pct = 0.1 + 0.5 * seeds.next_double();
        recipe.inter_edge_pct = 0.3 * seeds.next_double();
        recipe.rng_seed = seeds.next();
        if (recipe_final_dim(recipe) > 24) {
            recipe.ex_node = 0;
            if (recipe_final_dim(recipe) > 24) continue;
        }

        const auto bench = graph_creation(recipe);
        std::vector<char> seen(bench.graph.vertex_count(), 0);
        int max_list = 0;
        for (const auto& members : bench.clique_lists) {
            CHECK(is_clique(bench.graph, members));
            max_list = std::max(max_list, static_cast<int>(members.size()));
            for (int v : members) {
                CHECK_FALSE(seen[v]);  // pairwise disjoint
                seen[v] = 1;
            }
            if (!recipe.rand_cli) CHECK(static_cast<int>(members.size()) == recipe.n_node);
        }
        CHECK(max_list == bench.planted_max_size);
        // the guard makes the planted clique provably maximum
        CHECK(exact_max_clique_size(bench.graph) == bench.planted_max_size);
    }
}

TEST_CASE("identical recipes regenerate byte-identical graphs") {
    GraphRecipe recipe;
    recipe.n_node = 6;
    recipe.ex_node = 10;
    recipe.n_cli = 2;
    recipe.add_edges = true;
    recipe.intra_edge_pct = 0.4;
    recipe.inter_edge_pct = 0.2;
    recipe.rng_seed = 555;
    const auto a = graph_creation(recipe);
    const auto b = graph_creation(recipe);
    CHECK(to_dimacs_string(a.graph) == to_dimacs_string(b.graph));
    CHECK(a.clique_lists == b.clique_lists);

    recipe.rng_seed = 556;
    const auto c = graph_creation(recipe);
    CHECK(to_dimacs_string(a.graph) != to_dimacs_string(c.graph));
}

TEST_CASE("density dial is monotone on corpus means") {
    const std::vector<double> dials = {0.1, 0.3, 0.5, 0.7};
    std::vector<double> mean_density;
    for (double dial : dials) {
        double sum = 0.0;
        for (int i = 0; i < 50; ++i) {
            GraphRecipe recipe;
            recipe.n_node = 6;
            recipe.ex_node = 14;
            recipe.intra_edge_pct = dial;
            recipe.rng_seed = 9000 + i;  // same seeds across dials
            sum += density(graph_creation(recipe).graph);
        }
        mean_density.push_back(sum / 50.0);
    }
    for (std::size_t i = 1; i < mean_density.size(); ++i)
        CHECK(mean_density[i] >= mean_density[i - 1]);
}

TEST_CASE("external nodes get link attempts and isolation is recorded") {
    GraphRecipe recipe;
    recipe.n_node = 4;
    recipe.ex_node = 8;
    recipe.intra_edge_pct = 0.0;  // still one attempt each
    recipe.rng_seed = 31;
    const auto bench = graph_creation(recipe);
    CHECK(bench.edges_attempted >= 8);
    int isolated = 0;
    for (int v = 0; v < bench.graph.vertex_count(); ++v)
        if (bench.graph.degree(v) == 0) ++isolated;
    CHECK(bench.isolated_externals == isolated);
}

TEST_CASE("rand_cli sizes stay within [2, n_node]") {
    GraphRecipe recipe;
    recipe.n_node = 7;
    recipe.n_cli = 4;
    recipe.ex_node = 5;
    recipe.rand_cli = true;
    recipe.intra_edge_pct = 0.2;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        recipe.rng_seed = seed;
        const auto bench = graph_creation(recipe);
        int max_size = 0;
        for (const auto& members : bench.clique_lists) {
            CHECK(members.size() >= 2);
            CHECK(members.size() <= 7);
            max_size = std::max(max_size, static_cast<int>(members.size()));
        }
        CHECK(bench.planted_max_size == max_size);
        CHECK(bench.graph.vertex_count() == recipe_final_dim(recipe));
    }
}

TEST_CASE("oversized recipes warn instead of failing") {
    GraphRecipe recipe;
    recipe.n_node = 50;
    recipe.n_cli = 4;  // 200 > 164
    recipe.rng_seed = 3;
    const auto bench = graph_creation(recipe);
    CHECK(bench.exceeds_embedding_budget);
    CHECK(bench.graph.vertex_count() == 200);
}
