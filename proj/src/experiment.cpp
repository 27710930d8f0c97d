#include "mclab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mclab/annealer_client.hpp"
#include "mclab/errors.hpp"
#include "mclab/exact_clique.hpp"
#include "mclab/rng.hpp"

namespace mclab {

namespace {

constexpr int kOracleVertexCap = 64;

struct Slot {
    int group = 0;
    int replicate = 0;
    int budget = 0;  // replacements this slot may burn
};

// The per-group replacement budget is split across slots so slots stay
// independent (and therefore safely parallel and order-deterministic).
std::vector<Slot> make_slots(const ExperimentPlan& plan) {
    std::vector<Slot> slots;
    for (int gi = 0; gi < static_cast<int>(plan.group_specs.size()); ++gi) {
        const auto& spec = plan.group_specs[gi];
        const int budget = plan.max_null_replacements >= 0 ? plan.max_null_replacements
                                                           : 3 * spec.replicates;
        const int base = budget / spec.replicates;
        const int extra = budget % spec.replicates;
        for (int r = 0; r < spec.replicates; ++r)
            slots.push_back({gi, r, base + (r < extra ? 1 : 0)});
    }
    return slots;
}

void validate_plan(const ExperimentPlan& plan) {
    if (plan.group_specs.empty()) throw plan_validation_error("plan has no groups");
    if (plan.alphas.empty()) throw plan_validation_error("plan has no alpha levels");
    std::vector<std::string> labels;
    for (const auto& spec : plan.group_specs) {
        if (spec.replicates < 1)
            throw plan_validation_error("group '" + spec.label + "' has no replicates");
        if (recipe_final_dim(spec.recipe) > kEmbeddingLimit)
            throw plan_validation_error(
                "group '" + spec.label + "' exceeds the " + std::to_string(kEmbeddingLimit) +
                "-vertex embedding budget (final_dim " +
                std::to_string(recipe_final_dim(spec.recipe)) + ")");
        labels.push_back(spec.label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw plan_validation_error("group labels must be unique");
}

// Generate + solve + replace-nulls loop for one slot. Appends every attempt
// (discarded ones included) to records.
void run_slot(const ExperimentPlan& plan, const Slot& slot, std::vector<RunRecord>& records) {
    const auto& spec = plan.group_specs[slot.group];
    LocalAnnealerClient client;
    int nulls_before = 0;
    for (int attempt = 0;; ++attempt) {
        const std::uint64_t seed = child_seed(plan.master_seed, spec.label,
                                              static_cast<std::uint64_t>(slot.replicate),
                                              static_cast<std::uint64_t>(attempt));
        GraphRecipe recipe = spec.recipe;
        recipe.rng_seed = seed;
        const BenchGraph bench = graph_creation(recipe);

        AnnealConfig cfg = plan.anneal;
        cfg.rng_seed = mix64(seed);
        const SampleOutcome outcome = solve_max_clique(bench.graph, client, cfg);

        RunRecord rec;
        rec.group_label = spec.label;
        rec.replicate_index = slot.replicate;
        rec.attempt = attempt;
        rec.graph_id = spec.label + "-r" + std::to_string(slot.replicate) + "-a" +
                       std::to_string(attempt);
        rec.recipe = recipe;
        rec.planted_max_size = bench.planted_max_size;
        rec.outcome = outcome;
        rec.quality = static_cast<double>(outcome.repaired_set.size()) /
                      static_cast<double>(bench.planted_max_size);
        rec.density = density(bench.graph);
        const int final_dim = bench.graph.vertex_count();
        if (final_dim > bench.planted_max_size)
            rec.ratio = ratio(bench.planted_max_size, final_dim);
        rec.indices = connectivity_indices(bench.graph);
        rec.replaced_null_count = nulls_before;
        if (final_dim <= kOracleVertexCap)
            rec.oracle_clique_size = exact_max_clique_size(bench.graph);

        if (outcome.is_null && attempt < slot.budget) {
            rec.kept = false;
            records.push_back(std::move(rec));
            ++nulls_before;
            continue;
        }
        rec.kept = true;
        rec.exhausted_budget = outcome.is_null;
        records.push_back(std::move(rec));
        return;
    }
}

GroupSummary summarize_group(const ExperimentPlan& plan, int gi,
                             const std::vector<RunRecord>& records) {
    const auto& spec = plan.group_specs[gi];
    GroupSummary s;
    s.label = spec.label;
    std::vector<double> qualities;
    int nulls = 0;
    int index_count = 0;
    for (const auto& rec : records) {
        if (rec.group_label != spec.label) continue;
        ++s.generated;
        if (rec.outcome.is_null) ++nulls;
        if (!rec.kept) {
            ++s.replaced_nulls;
            continue;
        }
        ++s.kept_count;
        if (rec.exhausted_budget) s.incomplete = true;
        if (!rec.outcome.is_null) qualities.push_back(rec.quality);
        ++index_count;
        const auto values = index_values(rec.indices);
        for (int i = 0; i < kIndexCount; ++i) s.mean_indices[i] += values[i];
    }
    s.null_rate = s.generated > 0 ? static_cast<double>(nulls) / s.generated : 0.0;
    if (!qualities.empty()) {
        for (double q : qualities) s.mean_quality += q;
        s.mean_quality /= static_cast<double>(qualities.size());
        if (qualities.size() > 1) {
            for (double q : qualities) {
                const double d = q - s.mean_quality;
                s.quality_variance += d * d;
            }
            s.quality_variance /= static_cast<double>(qualities.size() - 1);
        }
    }
    if (index_count > 0)
        for (double& v : s.mean_indices) v /= static_cast<double>(index_count);
    return s;
}

void run_battery(ExperimentReport& report) {
    const auto& plan = report.plan;
    const double primary_alpha = plan.alphas.front();

    GroupedSamples gs;
    for (const auto& spec : plan.group_specs) {
        std::vector<double> qualities;
        for (const auto& rec : report.records)
            if (rec.kept && rec.group_label == spec.label && !rec.outcome.is_null)
                qualities.push_back(rec.quality);
        if (qualities.size() < 2) {
            report.notes.push_back("group '" + spec.label +
                                   "' has fewer than 2 usable samples; excluded from statistics");
            continue;
        }
        gs.groups.emplace_back(spec.label, std::move(qualities));
    }
    if (gs.group_count() < 2) {
        report.notes.push_back("fewer than 2 usable groups; statistical battery skipped");
        return;
    }

    try {
        report.test_outcomes.push_back({"", cochran_c(gs, primary_alpha)});
    } catch (const error& e) {
        report.notes.push_back(std::string("cochran_c: ") + e.what());
    }
    for (const auto& [label, values] : gs.groups) {
        try {
            report.test_outcomes.push_back({label, shapiro_wilk(values, primary_alpha)});
        } catch (const error& e) {
            report.notes.push_back("shapiro_wilk group '" + label + "': " + e.what());
        }
    }
    try {
        const TestOutcome anova = anova_oneway(gs, primary_alpha);
        for (double alpha : plan.alphas) {
            TestOutcome per_alpha = anova;
            per_alpha.alpha = alpha;
            per_alpha.reject_null = per_alpha.p_value && *per_alpha.p_value < alpha;
            report.test_outcomes.push_back({"", per_alpha});
        }
        if (anova.reject_null) report.lsd_matrix = lsd_pairwise(gs, primary_alpha);
    } catch (const error& e) {
        report.notes.push_back(std::string("anova: ") + e.what());
    }
    try {
        const TestOutcome kw = kruskal_wallis(gs, primary_alpha);
        std::vector<double> rejected_alphas;
        for (double alpha : plan.alphas) {
            TestOutcome per_alpha = kw;
            per_alpha.alpha = alpha;
            per_alpha.reject_null = per_alpha.p_value && *per_alpha.p_value < alpha;
            report.test_outcomes.push_back({"", per_alpha});
            if (per_alpha.reject_null) rejected_alphas.push_back(alpha);
        }
        if (!rejected_alphas.empty())
            report.mw_matrices = pairwise_mw_matrix(gs, rejected_alphas);
        for (double alpha : plan.alphas)
            if (std::find(rejected_alphas.begin(), rejected_alphas.end(), alpha) ==
                rejected_alphas.end())
                report.notes.push_back("kruskal_wallis not rejected at alpha=" +
                                       std::to_string(alpha) + "; no Mann-Whitney matrix");
    } catch (const error& e) {
        report.notes.push_back(std::string("kruskal_wallis: ") + e.what());
    }
}

ExperimentReport run_impl(const ExperimentPlan& plan, bool parallel) {
    validate_plan(plan);
    const auto slots = make_slots(plan);
    std::vector<std::vector<RunRecord>> per_slot(slots.size());

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < static_cast<int>(slots.size()); ++i)
        run_slot(plan, slots[i], per_slot[i]);

    ExperimentReport report;
    report.plan = plan;
    for (auto& slot_records : per_slot)
        for (auto& rec : slot_records) report.records.push_back(std::move(rec));

    for (int gi = 0; gi < static_cast<int>(plan.group_specs.size()); ++gi) {
        auto summary = summarize_group(plan, gi, report.records);
        if (summary.incomplete)
            report.notes.push_back("group '" + summary.label +
                                   "' exhausted its null-replacement budget; kept a null record");
        report.group_summaries.push_back(std::move(summary));
    }
    run_battery(report);
    return report;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentPlan& plan) { return run_impl(plan, true); }

ExperimentReport run_experiment_serial(const ExperimentPlan& plan) {
    return run_impl(plan, false);
}

const char* to_string(PlanKind kind) {
    switch (kind) {
        case PlanKind::ratio_sweep: return "ratio_sweep";
        case PlanKind::density_sweep: return "density_sweep";
        case PlanKind::indices_study: return "indices_study";
        case PlanKind::clique_count: return "clique_count";
        case PlanKind::size_study: return "size_study";
    }
    return "unknown";
}

PlanKind plan_kind_from_string(const std::string& name) {
    for (PlanKind kind : {PlanKind::ratio_sweep, PlanKind::density_sweep,
                          PlanKind::indices_study, PlanKind::clique_count, PlanKind::size_study})
        if (name == to_string(kind)) return kind;
    throw std::invalid_argument("unknown plan kind '" + name + "'");
}

ExperimentPlan make_desk_plan(PlanKind kind, std::uint64_t master_seed) {
    ExperimentPlan plan;
    plan.kind = kind;
    plan.master_seed = master_seed;
    // deliberately budget-starved schedule: a perfect solver would flatten
    // every quality sample to 1.0 and leave the statistics with nothing to
    // separate, so the desk plans run hot and short the way the studied
    // hardware behaves on large inputs
    plan.anneal.num_reads = 24;
    plan.anneal.sweeps_per_read = 30;
    plan.anneal.beta_initial = 0.05;
    plan.anneal.beta_final = 3.0;

    auto group = [](std::string label, int n_node, int ex_node, int n_cli, double intra,
                    double inter, bool add_edges, int replicates) {
        GroupSpec spec;
        spec.label = std::move(label);
        spec.recipe.n_node = n_node;
        spec.recipe.ex_node = ex_node;
        spec.recipe.n_cli = n_cli;
        spec.recipe.intra_edge_pct = intra;
        spec.recipe.inter_edge_pct = inter;
        spec.recipe.add_edges = add_edges;
        spec.replicates = replicates;
        return spec;
    };

    switch (kind) {
        case PlanKind::ratio_sweep:
            // 40-vertex graphs, one clique, ratio descending from 1.0; G1 is
            // the easy reference group.
            plan.group_specs = {
                group("G1", 20, 20, 1, 0.3, 0.0, false, 6),  // ratio 1.00
                group("G2", 17, 23, 1, 0.3, 0.0, false, 6),  // ratio 0.74
                group("G3", 15, 25, 1, 0.3, 0.0, false, 6),  // ratio 0.60
                group("G4", 13, 27, 1, 0.3, 0.0, false, 6),  // ratio 0.48
                group("G5", 10, 30, 1, 0.3, 0.0, false, 6),  // ratio 0.33
                group("G6", 7, 33, 1, 0.3, 0.0, false, 6),   // ratio 0.21
                group("G7", 4, 36, 1, 0.3, 0.0, false, 6),   // ratio 0.11
            };
            break;
        case PlanKind::density_sweep:
            // fixed ratio ~0.43 (12/28), density dial rising
            plan.group_specs = {
                group("D10", 12, 28, 1, 0.10, 0.0, false, 8),
                group("D30", 12, 28, 1, 0.30, 0.0, false, 8),
                group("D50", 12, 28, 1, 0.50, 0.0, false, 8),
                group("D70", 12, 28, 1, 0.70, 0.0, false, 8),
            };
            break;
        case PlanKind::indices_study:
            plan.group_specs = {
                group("SPARSE", 12, 28, 1, 0.15, 0.0, false, 10),
                group("DENSE", 12, 28, 1, 0.60, 0.0, false, 10),
            };
            break;
        case PlanKind::clique_count:
            // same planted size and total size, 1..3 cliques
            plan.group_specs = {
                group("C1", 12, 28, 1, 0.3, 0.0, false, 8),
                group("C2", 12, 16, 2, 0.3, 0.1, true, 8),
                group("C3", 12, 4, 3, 0.3, 0.1, true, 8),
            };
            break;
        case PlanKind::size_study:
            plan.group_specs = {
                group("S30", 9, 21, 1, 0.3, 0.0, false, 6),    // ratio 0.43
                group("S35", 10, 25, 1, 0.3, 0.0, false, 6),   // ratio 0.40
                group("S40", 12, 28, 1, 0.3, 0.0, false, 6),   // ratio 0.43
                group("S40R1", 20, 20, 1, 0.3, 0.0, false, 6), // ratio 1.00
            };
            break;
    }
    return plan;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::invalid_argument("plan: bad boolean for '" + key + "': " + value);
}

}  // namespace

ExperimentPlan parse_plan_text(const std::string& text) {
    ExperimentPlan plan;
    plan.alphas.clear();
    GroupSpec* current = nullptr;
    std::istringstream in(text);
    std::string raw;
    long line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto comment = raw.find('#');
        std::string line = trim(comment == std::string::npos ? raw : raw.substr(0, comment));
        if (line.empty()) continue;
        if (line == "[group]") {
            plan.group_specs.emplace_back();
            current = &plan.group_specs.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("plan: expected key = value at line " +
                                        std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (current == nullptr) {
                if (key == "kind") plan.kind = plan_kind_from_string(value);
                else if (key == "master_seed") plan.master_seed = std::stoull(value);
                else if (key == "alphas") {
                    std::istringstream vs(value);
                    double a;
                    while (vs >> a) plan.alphas.push_back(a);
                } else if (key == "reads") plan.anneal.num_reads = std::stoi(value);
                else if (key == "sweeps") plan.anneal.sweeps_per_read = std::stoi(value);
                else if (key == "beta_initial") plan.anneal.beta_initial = std::stod(value);
                else if (key == "beta_final") plan.anneal.beta_final = std::stod(value);
                else if (key == "max_null_replacements")
                    plan.max_null_replacements = std::stoi(value);
                else
                    throw std::invalid_argument("plan: unknown key '" + key + "'");
            } else {
                if (key == "label") current->label = value;
                else if (key == "replicates") current->replicates = std::stoi(value);
                else if (key == "n_node") current->recipe.n_node = std::stoi(value);
                else if (key == "ex_node") current->recipe.ex_node = std::stoi(value);
                else if (key == "n_cli") current->recipe.n_cli = std::stoi(value);
                else if (key == "add_edges") current->recipe.add_edges = parse_bool(value, key);
                else if (key == "rand_cli") current->recipe.rand_cli = parse_bool(value, key);
                else if (key == "intra_edge_pct")
                    current->recipe.intra_edge_pct = std::stod(value);
                else if (key == "inter_edge_pct")
                    current->recipe.inter_edge_pct = std::stod(value);
                else
                    throw std::invalid_argument("plan: unknown group key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("plan: bad value for '" + key + "' at line " +
                                        std::to_string(line_no));
        }
    }
    if (plan.alphas.empty()) plan.alphas = {0.05, 0.1, 0.2};
    return plan;
}

ExperimentPlan parse_plan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("plan: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_plan_text(buffer.str());
}

}  // namespace mclab
