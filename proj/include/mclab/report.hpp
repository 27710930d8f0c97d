#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "mclab/decompose.hpp"
#include "mclab/experiment.hpp"
#include "mclab/qubo.hpp"

namespace mclab {

// JSON records with alphabetical key order (nlohmann default), so repeated
// runs serialize byte-identically.
nlohmann::json to_json(const GraphRecipe& recipe);
nlohmann::json to_json(const ConnectivityIndices& idx);
nlohmann::json to_json(const SampleOutcome& outcome);  // seed, energy, set, valid, is_null
nlohmann::json to_json(const QuboModel& m);            // num_vars, linear, quadratic, offset
nlohmann::json to_json(const DecomposeTrace& trace);
nlohmann::json to_json(const RunRecord& record);

// Writes runs.jsonl, stats.csv, matrices.txt and summary.txt under out_dir
// (created if missing). UTF-8, LF line endings, deterministic field order.
// I/O failures carry the offending path in the exception message.
void render_report(const ExperimentReport& report, const std::string& out_dir);

// The check-mark panel renderer used for matrices.txt (check = no
// significant difference, X = significant), exposed for the stats CLI.
std::string render_matrix_panel(const PairwiseMatrix& matrix, const std::string& title);
std::string matrix_to_csv(const PairwiseMatrix& matrix);

}  // namespace mclab
