#include "mclab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mclab {

namespace {

using nlohmann::json;

// Fixed decimal formatting keeps the text reports reproducible.
std::string fmt(double v, int digits = 6) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, v);
    return buffer;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("report: cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

json to_json(const GraphRecipe& recipe) {
    return json{{"n_node", recipe.n_node},
                {"ex_node", recipe.ex_node},
                {"n_cli", recipe.n_cli},
                {"add_edges", recipe.add_edges},
                {"rand_cli", recipe.rand_cli},
                {"intra_edge_pct", recipe.intra_edge_pct},
                {"inter_edge_pct", recipe.inter_edge_pct},
                {"rng_seed", recipe.rng_seed}};
}

json to_json(const ConnectivityIndices& idx) {
    json j;
    const auto values = index_values(idx);
    for (int i = 0; i < kIndexCount; ++i) j[kIndexNames[i]] = values[i];
    return j;
}

json to_json(const SampleOutcome& outcome) {
    return json{{"seed", outcome.seed},
                {"energy", outcome.energy},
                {"set", outcome.repaired_set},
                {"decoded_size", outcome.decoded_set.size()},
                {"valid", outcome.valid},
                {"is_null", outcome.is_null},
                {"reads_used", outcome.reads_used}};
}

json to_json(const QuboModel& m) {
    json quad = json::array();
    for (const auto& t : m.quadratic) quad.push_back({t.i, t.j, t.coeff});
    return json{{"num_vars", m.num_vars},
                {"linear", m.linear},
                {"quadratic", quad},
                {"offset", m.offset}};
}

json to_json(const DecomposeTrace& trace) {
    return json{{"removed_vertices", trace.removed_vertices},
                {"protected_vertices", trace.protected_vertices},
                {"iterations", trace.iterations},
                {"stop_reason", to_string(trace.stop_reason)}};
}

json to_json(const RunRecord& record) {
    json j{{"graph_id", record.graph_id},
           {"group", record.group_label},
           {"replicate", record.replicate_index},
           {"attempt", record.attempt},
           {"kept", record.kept},
           {"recipe", to_json(record.recipe)},
           {"planted_max_size", record.planted_max_size},
           {"outcome", to_json(record.outcome)},
           {"quality", record.quality},
           {"density", record.density},
           {"indices", to_json(record.indices)},
           {"replaced_null_count", record.replaced_null_count},
           {"exhausted_budget", record.exhausted_budget}};
    j["ratio"] = record.ratio ? json(*record.ratio) : json(nullptr);
    j["oracle_clique_size"] =
        record.oracle_clique_size ? json(*record.oracle_clique_size) : json(nullptr);
    return j;
}

std::string render_matrix_panel(const PairwiseMatrix& matrix, const std::string& title) {
    // Upper-triangular ✓/X grid: row G1..G(k-1), columns G2..Gk.
    const int k = matrix.size();
    std::size_t width = 4;
    for (const auto& label : matrix.labels) width = std::max(width, label.size() + 2);
    width = std::max(width, title.size() + 2);

    std::ostringstream out;
    auto pad = [&](const std::string& s) {
        out << s;
        for (std::size_t i = s.size(); i < width; ++i) out << ' ';
    };
    pad(title);
    for (int j = 1; j < k; ++j) pad(matrix.labels[j]);
    out << '\n';
    for (int i = 0; i + 1 < k; ++i) {
        pad(matrix.labels[i]);
        for (int j = 1; j < k; ++j) {
            if (j <= i) {
                pad("");
                continue;
            }
            pad(matrix.cell(i, j) == PairDecision::no_significant_difference ? "✓" : "X");
        }
        out << '\n';
    }
    return out.str();
}

std::string matrix_to_csv(const PairwiseMatrix& matrix) {
    std::ostringstream out;
    out << "method,alpha,group_a,group_b,decision\n";
    for (int i = 0; i < matrix.size(); ++i) {
        for (int j = i + 1; j < matrix.size(); ++j) {
            out << to_string(matrix.method) << ',' << fmt(matrix.alpha, 4) << ','
                << matrix.labels[i] << ',' << matrix.labels[j] << ','
                << (matrix.cell(i, j) == PairDecision::significant_difference
                        ? "significant_difference"
                        : "no_significant_difference")
                << '\n';
        }
    }
    return out.str();
}

namespace {

void write_runs(const ExperimentReport& report, const std::string& path) {
    auto out = open_out(path);
    for (const auto& record : report.records) out << to_json(record).dump() << '\n';
}

void write_stats(const ExperimentReport& report, const std::string& path) {
    auto out = open_out(path);
    out << "method,context,statistic,p_value,alpha,reject_null\n";
    for (const auto& [context, t] : report.test_outcomes) {
        out << to_string(t.method) << ',' << context << ',' << fmt(t.statistic, 9) << ','
            << (t.p_value ? fmt(*t.p_value, 9) : std::string("")) << ',' << fmt(t.alpha, 4) << ','
            << (t.reject_null ? "true" : "false") << '\n';
    }
}

void write_matrices(const ExperimentReport& report, const std::string& path) {
    auto out = open_out(path);
    out << "pairwise decision panels (✓ = no significant difference, X = significant)\n\n";
    if (report.lsd_matrix)
        out << render_matrix_panel(*report.lsd_matrix,
                                   "LSD a=" + fmt(report.lsd_matrix->alpha, 2))
            << '\n';
    for (const auto& matrix : report.mw_matrices)
        out << render_matrix_panel(matrix, "MW a=" + fmt(matrix.alpha, 2)) << '\n';
    if (!report.lsd_matrix && report.mw_matrices.empty())
        out << "(no pairwise matrices: omnibus tests did not reject)\n";
}

void write_summary(const ExperimentReport& report, const std::string& path) {
    auto out = open_out(path);
    out << "experiment: " << to_string(report.plan.kind) << '\n';
    out << "master_seed: " << report.plan.master_seed << '\n';
    out << "groups: " << report.plan.group_specs.size() << '\n';
    out << '\n';
    out << "group,kept,generated,replaced_nulls,null_rate,mean_quality,quality_variance,"
           "incomplete\n";
    for (const auto& s : report.group_summaries) {
        out << s.label << ',' << s.kept_count << ',' << s.generated << ',' << s.replaced_nulls
            << ',' << fmt(s.null_rate, 4) << ',' << fmt(s.mean_quality, 6) << ','
            << fmt(s.quality_variance, 6) << ',' << (s.incomplete ? "true" : "false") << '\n';
    }
    out << '\n';
    out << "mean connectivity indices per group\n";
    out << "group";
    for (const char* name : kIndexNames) out << ',' << name;
    out << '\n';
    for (const auto& s : report.group_summaries) {
        out << s.label;
        for (double v : s.mean_indices) out << ',' << fmt(v, 6);
        out << '\n';
    }
    if (report.plan.kind == PlanKind::indices_study && report.group_summaries.size() > 1) {
        out << '\n' << "largest pairwise gap per index\n";
        for (int i = 0; i < kIndexCount; ++i) {
            double lo = report.group_summaries.front().mean_indices[i];
            double hi = lo;
            for (const auto& s : report.group_summaries) {
                lo = std::min(lo, s.mean_indices[i]);
                hi = std::max(hi, s.mean_indices[i]);
            }
            out << kIndexNames[i] << ',' << fmt(hi - lo, 6) << '\n';
        }
    }
    out << '\n' << "notes (" << report.notes.size() << ")\n";
    for (const auto& note : report.notes) out << "- " << note << '\n';
}

}  // namespace

void render_report(const ExperimentReport& report, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_runs(report, out_dir + "/runs.jsonl");
    write_stats(report, out_dir + "/stats.csv");
    write_matrices(report, out_dir + "/matrices.txt");
    write_summary(report, out_dir + "/summary.txt");
}

}  // namespace mclab
