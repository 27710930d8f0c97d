#include "mclab/annealer_client.hpp"

#include <string>

#include "mclab/errors.hpp"

namespace mclab {

std::vector<SampleOutcome> AnnealerClient::sample(const QuboModel& m, const AnnealConfig& cfg) {
    const int limit = capabilities().max_variables;
    if (m.num_vars > limit)
        throw embedding_limit_error("model has " + std::to_string(m.num_vars) +
                                    " variables, client accepts at most " + std::to_string(limit));
    return do_sample(m, cfg);
}

SampleOutcome solve_max_clique(const Graph& g, AnnealerClient& client, const AnnealConfig& cfg) {
    const QuboModel model = build_mc_qubo(g);
    const auto outcomes = client.sample(model, cfg);

    // Outcomes arrive sorted by energy with read order preserved on ties, so
    // a strict improvement scan realizes the (size, energy, read) preference.
    std::size_t best = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i)
        if (outcomes[i].repaired_set.size() > outcomes[best].repaired_set.size()) best = i;
    return outcomes[best];
}

}  // namespace mclab
