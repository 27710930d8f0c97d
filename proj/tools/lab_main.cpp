// lab: generate benchmark graphs, decompose them, solve max-clique instances
// with the local annealer, run the statistical battery on grouped samples,
// and drive full experiment plans.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mclab/annealer_client.hpp"
#include "mclab/coloring.hpp"
#include "mclab/decompose.hpp"
#include "mclab/dimacs.hpp"
#include "mclab/errors.hpp"
#include "mclab/experiment.hpp"
#include "mclab/generator.hpp"
#include "mclab/report.hpp"
#include "mclab/rng.hpp"
#include "mclab/stats.hpp"

namespace {

using nlohmann::json;

// LAB_OUT, when set, overrides whatever --out-dir was given.
std::string resolve_out_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("LAB_OUT"); env != nullptr && *env != '\0') return env;
    return flag_value;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

mclab::GroupedSamples read_grouped_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    mclab::GroupedSamples gs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "group,value" || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("stats: expected 'group,value' at line " +
                                     std::to_string(line_no));
        const std::string label = line.substr(0, comma);
        const double value = std::stod(line.substr(comma + 1));
        auto it = std::find_if(gs.groups.begin(), gs.groups.end(),
                               [&](const auto& g) { return g.first == label; });
        if (it == gs.groups.end()) {
            gs.groups.emplace_back(label, std::vector<double>{value});
        } else {
            it->second.push_back(value);
        }
    }
    return gs;
}

int cmd_generate(const mclab::GraphRecipe& recipe, const std::string& out_dir,
                 const std::string& name) {
    const mclab::BenchGraph bench = mclab::graph_creation(recipe);
    std::filesystem::create_directories(out_dir);
    const std::string graph_path = out_dir + "/" + name + ".col";
    mclab::write_dimacs_file(graph_path, bench.graph);

    json sidecar{{"recipe", mclab::to_json(recipe)},
                 {"clique_lists", bench.clique_lists},
                 {"planted_max_size", bench.planted_max_size},
                 {"density", mclab::density(bench.graph)},
                 {"greedy_chromatic_bound", mclab::greedy_chromatic_upper_bound(bench.graph)},
                 {"edges_attempted", bench.edges_attempted},
                 {"edges_accepted", bench.edges_accepted},
                 {"isolated_externals", bench.isolated_externals},
                 {"exceeds_embedding_budget", bench.exceeds_embedding_budget}};
    write_text(out_dir + "/" + name + ".json", sidecar.dump(2) + "\n");
    std::cout << "wrote " << graph_path << " (" << bench.graph.vertex_count() << " vertices, "
              << bench.graph.edge_count() << " edges, planted clique "
              << bench.planted_max_size << ")\n";
    if (bench.exceeds_embedding_budget)
        std::cout << "warning: exceeds the " << mclab::kEmbeddingLimit
                  << "-vertex embedding budget; the solver will reject it\n";
    return 0;
}

int cmd_decompose(const std::string& in_path, const mclab::DecomposeConfig& cfg,
                  const std::string& out_dir, const std::string& name) {
    const auto read = mclab::read_dimacs_file(in_path);
    if (read.merged_duplicate_edges > 0)
        std::cout << "warning: merged " << read.merged_duplicate_edges
                  << " duplicate edges from " << in_path << "\n";
    const auto result = mclab::decompose_is(read.graph, cfg);
    std::filesystem::create_directories(out_dir);
    mclab::write_dimacs_file(out_dir + "/" + name + ".col", result.graph);
    write_text(out_dir + "/" + name + ".trace.json", mclab::to_json(result.trace).dump(2) + "\n");
    std::cout << read.graph.vertex_count() <<" -> " << result.graph.vertex_count()
              << " vertices in " << result.trace.iterations << " iterations ("
              << mclab::to_string(result.trace.stop_reason) << ")\n";
    return 0;
}

int cmd_solve(const std::string& in_path, const mclab::AnnealConfig& cfg, int max_nodes,
              const std::string& out_dir, const std::string& name) {
    const auto read = mclab::read_dimacs_file(in_path);
    if (read.graph.vertex_count() > max_nodes)
        throw mclab::embedding_limit_error("graph has " +
                                           std::to_string(read.graph.vertex_count()) +
                                           " vertices, --max-nodes is " +
                                           std::to_string(max_nodes));
    mclab::LocalAnnealerClient client;
    const mclab::QuboModel model = mclab::build_mc_qubo(read.graph);
    const auto outcomes = client.sample(model, cfg);

    std::filesystem::create_directories(out_dir);
    std::ofstream out(out_dir + "/" + name + ".jsonl", std::ios::binary);
    if (!out) throw std::runtime_error("cannot open outcome file");
    for (const auto& outcome : outcomes) out << mclab::to_json(outcome).dump() << '\n';

    const auto best = mclab::solve_max_clique(read.graph, client, cfg);
    std::cout << "best repaired clique: " << best.repaired_set.size() << " vertices, energy "
              << best.energy << (best.is_null ? " (null)" : "") << "\n";
    return 0;
}

int cmd_stats(const std::string& csv_path, std::vector<double> alphas,
              const std::string& out_dir) {
    if (alphas.empty()) alphas = {0.05, 0.1, 0.2};
    const auto gs = read_grouped_csv(csv_path);
    const double primary = alphas.front();

    std::ostringstream csv;
    std::ostringstream panels;
    csv << "method,context,statistic,p_value,alpha,reject_null\n";
    auto emit = [&](const std::string& context, const mclab::TestOutcome& t) {
        csv << mclab::to_string(t.method) << ',' << context << ',' << t.statistic << ','
            << (t.p_value ? std::to_string(*t.p_value) : std::string("")) << ',' << t.alpha << ','
            << (t.reject_null ? "true" : "false") << '\n';
        std::cout << mclab::to_string(t.method) << (context.empty() ? "" : " [" + context + "]")
                  << ": statistic=" << t.statistic;
        if (t.p_value) std::cout << " p=" << *t.p_value;
        std::cout << (t.reject_null ? " reject" : " keep") << " (alpha " << t.alpha << ")\n";
    };

    try {
        emit("", mclab::cochran_c(gs, primary));
    } catch (const mclab::error& e) {
        std::cout << "cochran: " << e.what() << "\n";
    }
    for (const auto& [label, values] : gs.groups) {
        try {
            emit(label, mclab::shapiro_wilk(values, primary));
        } catch (const mclab::error& e) {
            std::cout << "shapiro_wilk [" << label << "]: " << e.what() << "\n";
        }
    }
    try {
        const auto anova = mclab::anova_oneway(gs, primary);
        emit("", anova);
        if (anova.reject_null) {
            const auto lsd = mclab::lsd_pairwise(gs, primary);
            panels << mclab::render_matrix_panel(lsd, "LSD") << '\n';
            csv << mclab::matrix_to_csv(lsd);
        }
    } catch (const mclab::error& e) {
        std::cout << "anova: " << e.what() << "\n";
    }
    try {
        const auto kw = mclab::kruskal_wallis(gs, primary);
        emit("", kw);
        if (kw.reject_null) {
            for (const auto& m : mclab::pairwise_mw_matrix(gs, alphas)) {
                panels << mclab::render_matrix_panel(m, "MW a=" + std::to_string(m.alpha).substr(0, 4))
                       << '\n';
                csv << mclab::matrix_to_csv(m);
            }
        }
    } catch (const mclab::error& e) {
        std::cout << "kruskal_wallis: " << e.what() << "\n";
    }

    std::filesystem::create_directories(out_dir);
    write_text(out_dir + "/stats.csv", csv.str());
    write_text(out_dir + "/matrices.txt", panels.str());
    std::cout << "wrote " << out_dir << "/stats.csv and matrices.txt\n";
    return 0;
}

int cmd_experiment(const std::string& plan_path, const std::string& kind_name,
                   std::uint64_t seed, std::vector<double> alphas, int reads, int sweeps,
                   const std::string& out_dir) {
    mclab::ExperimentPlan plan;
    if (!plan_path.empty()) {
        plan = mclab::parse_plan_file(plan_path);
    } else {
        plan = mclab::make_desk_plan(mclab::plan_kind_from_string(kind_name), seed);
    }
    if (seed != 0) plan.master_seed = seed;
    if (!alphas.empty()) plan.alphas = alphas;
    if (reads > 0) plan.anneal.num_reads = reads;
    if (sweeps > 0) plan.anneal.sweeps_per_read = sweeps;

    const auto report = mclab::run_experiment(plan);
    mclab::render_report(report, out_dir);
    std::cout << "experiment " << mclab::to_string(plan.kind) << ": "
              << report.records.size() << " instances ("
              << report.group_summaries.size() << " groups) -> " << out_dir << "\n";
    for (const auto& s : report.group_summaries)
        std::cout << "  " << s.label << ": mean quality " << s.mean_quality << ", null rate "
                  << s.null_rate << (s.incomplete ? " [incomplete]" : "") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QUBO max-clique laboratory"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "create a benchmark graph with planted cliques");
    mclab::GraphRecipe recipe;
    std::string gen_out = "out";
    std::string gen_name = "graph";
    generate->add_option("--n-node", recipe.n_node, "clique size")->required();
    generate->add_option("--ex-node", recipe.ex_node, "external (noise) vertices");
    generate->add_option("--n-cli", recipe.n_cli, "number of planted cliques");
    generate->add_flag("--add-edges", recipe.add_edges, "random links between cliques");
    generate->add_flag("--rand-cli", recipe.rand_cli, "randomize clique sizes in [2, n_node]");
    generate->add_option("--intra-pct", recipe.intra_edge_pct, "external-link percentage [0,1]");
    generate->add_option("--inter-pct", recipe.inter_edge_pct, "clique-pair link percentage [0,1]");
    generate->add_option("--seed", recipe.rng_seed, "RNG seed");
    generate->add_option("--out-dir", gen_out, "output directory");
    generate->add_option("--name", gen_name, "output basename");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "shrink a graph preserving its max IS");
    std::string dec_in;
    std::string dec_out = "out";
    std::string dec_name = "reduced";
    mclab::DecomposeConfig dec_cfg;
    decompose->add_option("--in", dec_in, "input DIMACS file")->required();
    decompose->add_option("--final-dim", dec_cfg.final_dim, "target vertex count")->required();
    decompose->add_option("--min-cn", dec_cfg.min_cn, "color-number floor")->required();
    decompose->add_option("--depth", dec_cfg.max_triple_depth, "degree classes to search");
    decompose->add_option("--probes", dec_cfg.random_probe_budget, "random probe budget (0=100N)");
    decompose->add_option("--seed", dec_cfg.rng_seed, "RNG seed");
    decompose->add_flag("--deterministic", dec_cfg.deterministic_ties, "label-order tie breaks");
    decompose->add_option("--out-dir", dec_out, "output directory");
    decompose->add_option("--name", dec_name, "output basename");

    // solve
    auto* solve = app.add_subcommand("solve", "anneal a max-clique instance");
    std::string solve_in;
    std::string solve_out = "out";
    std::string solve_name = "outcomes";
    mclab::AnnealConfig anneal_cfg;
    int max_nodes = mclab::kEmbeddingLimit;
    solve->add_option("--in", solve_in, "input DIMACS file")->required();
    solve->add_option("--reads", anneal_cfg.num_reads, "annealing reads");
    solve->add_option("--sweeps", anneal_cfg.sweeps_per_read, "sweeps per read");
    solve->add_option("--beta-initial", anneal_cfg.beta_initial, "initial inverse temperature");
    solve->add_option("--beta-final", anneal_cfg.beta_final, "final inverse temperature");
    solve->add_option("--seed", anneal_cfg.rng_seed, "RNG seed");
    solve->add_option("--max-nodes", max_nodes, "embedding gate (default 164)");
    solve->add_option("--out-dir", solve_out, "output directory");
    solve->add_option("--name", solve_name, "output basename");

    // stats
    auto* stats = app.add_subcommand("stats", "run the statistical battery on a CSV");
    std::string stats_in;
    std::string stats_out = "out";
    std::vector<double> stats_alphas;
    stats->add_option("--in", stats_in, "CSV of group,value rows")->required();
    stats->add_option("--alpha", stats_alphas, "significance level (repeatable)");
    stats->add_option("--out-dir", stats_out, "output directory");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run a full experiment plan");
    std::string plan_path;
    std::string kind_name = "ratio_sweep";
    std::string exp_out = "out";
    std::uint64_t master_seed = 0;
    std::vector<double> exp_alphas;
    int reads = 0, sweeps = 0;
    experiment->add_option("--plan", plan_path, "plan file (overrides --kind)");
    experiment->add_option("--kind", kind_name,
                           "built-in desk plan: ratio_sweep, density_sweep, indices_study, "
                           "clique_count, size_study");
    experiment->add_option("--seed", master_seed, "master seed");
    experiment->add_option("--alpha", exp_alphas, "significance level (repeatable)");
    experiment->add_option("--reads", reads, "override annealing reads");
    experiment->add_option("--sweeps", sweeps, "override sweeps per read");
    experiment->add_option("--out-dir", exp_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(recipe, resolve_out_dir(gen_out), gen_name);
        if (decompose->parsed())
            return cmd_decompose(dec_in, dec_cfg, resolve_out_dir(dec_out), dec_name);
        if (solve->parsed())
            return cmd_solve(solve_in, anneal_cfg, max_nodes, resolve_out_dir(solve_out),
                             solve_name);
        if (stats->parsed()) return cmd_stats(stats_in, stats_alphas, resolve_out_dir(stats_out));
        if (experiment->parsed())
            return cmd_experiment(plan_path, kind_name, master_seed, exp_alphas, reads, sweeps,
                                  resolve_out_dir(exp_out));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
