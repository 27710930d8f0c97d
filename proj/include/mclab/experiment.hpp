#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mclab/anneal.hpp"
#include "mclab/connectivity.hpp"
#include "mclab/generator.hpp"
#include "mclab/stats.hpp"

namespace mclab {

enum class PlanKind { ratio_sweep, density_sweep, indices_study, clique_count, size_study };

struct GroupSpec {
    GraphRecipe recipe;  // template; rng_seed is overwritten per instance
    std::string label;
    int replicates = 1;
};

struct ExperimentPlan {
    PlanKind kind = PlanKind::ratio_sweep;
    std::vector<GroupSpec> group_specs;
    AnnealConfig anneal;
    std::vector<double> alphas = {0.05, 0.1, 0.2};  // first entry is primary
    std::uint64_t master_seed = 0;
    int max_null_replacements = -1;  // -1 -> 3 * group size
};

// One generated-and-solved instance. Discarded null instances stay in the
// record list with kept = false so the accounting is auditable.
struct RunRecord {
    std::string graph_id;
    std::string group_label;
    int replicate_index = 0;
    int attempt = 0;  // replacement counter for this slot
    bool kept = false;
    GraphRecipe recipe;  // with the instance seed filled in
    int planted_max_size = 0;
    SampleOutcome outcome;
    double quality = 0.0;  // |repaired clique| / planted_max_size
    double density = 0.0;
    std::optional<double> ratio;  // undefined when no external vertices exist
    ConnectivityIndices indices;
    int replaced_null_count = 0;  // nulls discarded before this record's slot settled
    bool exhausted_budget = false;
    std::optional<int> oracle_clique_size;  // exact check, skipped above 64 vertices
};

struct GroupSummary {
    std::string label;
    int kept_count = 0;
    int replaced_nulls = 0;
    int generated = 0;
    bool incomplete = false;  // replacement budget ran out on some slot
    double mean_quality = 0.0;
    double quality_variance = 0.0;  // sample variance of kept qualities
    double null_rate = 0.0;         // nulls / generated
    std::array<double, kIndexCount> mean_indices{};  // averaged over kept instances
};

struct LabeledOutcome {
    std::string context;  // e.g. the group a per-group test ran on
    TestOutcome outcome;
};

struct ExperimentReport {
    ExperimentPlan plan;
    std::vector<RunRecord> records;
    std::vector<LabeledOutcome> test_outcomes;
    std::optional<PairwiseMatrix> lsd_matrix;
    std::vector<PairwiseMatrix> mw_matrices;
    std::vector<GroupSummary> group_summaries;
    std::vector<std::string> notes;
};

// Four-step pipeline: generate each group's replicates (child seeds derived
// from the master seed), solve them, replace null outcomes from the same
// template until the budget runs out, then run the battery in order
// Cochran -> Shapiro-Wilk per group -> ANOVA (+ LSD at the primary alpha if
// rejected) -> Kruskal-Wallis (+ Mann-Whitney matrices per alpha where
// rejected). Degenerate statistics surface as notes, not failures.
//
// run_experiment solves the instances in parallel; per-slot seed streams make
// the result independent of scheduling, and run_experiment_serial is the
// reference that must produce an identical report.
ExperimentReport run_experiment(const ExperimentPlan& plan);
ExperimentReport run_experiment_serial(const ExperimentPlan& plan);

// Built-in desk-scale plans (40-vertex instances so the exact oracle can
// audit every solve).
ExperimentPlan make_desk_plan(PlanKind kind, std::uint64_t master_seed);

const char* to_string(PlanKind kind);
PlanKind plan_kind_from_string(const std::string& name);

// Plain-text plan files: "key = value" lines plus one [group] section per
// group; '#' starts a comment. See plans/ratio_sweep_desk.plan.
ExperimentPlan parse_plan_file(const std::string& path);
ExperimentPlan parse_plan_text(const std::string& text);

}  // namespace mclab
