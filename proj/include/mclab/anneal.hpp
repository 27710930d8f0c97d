#pragma once

#include <cstdint>
#include <vector>

#include "mclab/graph.hpp"
#include "mclab/qubo.hpp"

namespace mclab {

// Largest model any annealer client accepts, mirroring the 164-node QPU
// embedding budget.
inline constexpr int kEmbeddingLimit = 164;

struct AnnealConfig {
    int num_reads = 100;
    int sweeps_per_read = 2000;
    double beta_initial = 0.05;  // inverse temperature, geometric ramp
    double beta_final = 12.0;
    std::uint64_t rng_seed = 0;
};

struct SampleOutcome {
    Assignment raw_assignment;
    std::vector<int> decoded_set;   // bits set to 1
    std::vector<int> repaired_set;  // decoded minus conflict vertices
    double energy = 0.0;            // of raw_assignment
    bool valid = false;             // decoded set already conflict-free
    bool is_null = false;           // repaired set empty
    int reads_used = 0;
    std::uint64_t seed = 0;  // per-read stream seed
};

// Greedy conflict repair: repeatedly drop the member of s with the most
// conflicts inside s (ties by smallest label) until s is independent in g.
std::vector<int> repair_to_independent_set(const Graph& g, const std::vector<int>& s);

// Single-spin-flip Metropolis simulated annealing, one independent SplitMix64
// stream per read, outcomes sorted by energy ascending (stable in read
// order). Validity and repair are judged against the model's penalty graph:
// the variable pairs carrying a positive quadratic coefficient. For an
// IS-form model that graph is exactly the input graph, so repaired sets are
// independent sets (cliques of the original graph for the MC form).
//
// anneal_sample parallelizes over reads with OpenMP using an incremental
// delta-energy kernel; anneal_sample_reference is the plain-loop kernel that
// recomputes flip gains from scratch. Both produce bit-identical outcomes.
//
// Throws embedding_limit_error for models over kEmbeddingLimit variables and
// std::invalid_argument for a malformed config.
std::vector<SampleOutcome> anneal_sample(const QuboModel& m, const AnnealConfig& cfg);
std::vector<SampleOutcome> anneal_sample_reference(const QuboModel& m, const AnnealConfig& cfg);

}  // namespace mclab
