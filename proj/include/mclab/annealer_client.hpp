#pragma once

#include <vector>

#include "mclab/anneal.hpp"
#include "mclab/qubo.hpp"

namespace mclab {

struct AnnealerCapabilities {
    int max_variables = kEmbeddingLimit;
};

// Abstraction over the sampling backend so a remote annealer can be slotted
// in later. Every implementation rejects models above max_variables with
// embedding_limit_error.
class AnnealerClient {
public:
    virtual ~AnnealerClient() = default;
    virtual AnnealerCapabilities capabilities() const = 0;

    std::vector<SampleOutcome> sample(const QuboModel& m, const AnnealConfig& cfg);

protected:
    virtual std::vector<SampleOutcome> do_sample(const QuboModel& m, const AnnealConfig& cfg) = 0;
};

// Local simulated-annealing backend. The only implementation that ships.
class LocalAnnealerClient final : public AnnealerClient {
public:
    AnnealerCapabilities capabilities() const override { return {}; }

protected:
    std::vector<SampleOutcome> do_sample(const QuboModel& m, const AnnealConfig& cfg) override {
        return anneal_sample(m, cfg);
    }
};

// Builds the maximum-clique QUBO (IS form on the complement, penalties 1/2),
// samples it, and returns the outcome with the largest repaired clique (ties
// by lower energy, then read order). is_null iff that clique is empty.
SampleOutcome solve_max_clique(const Graph& g, AnnealerClient& client, const AnnealConfig& cfg);

}  // namespace mclab
