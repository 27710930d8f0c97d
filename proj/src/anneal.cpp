#include "mclab/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mclab/errors.hpp"
#include "mclab/rng.hpp"

namespace mclab {

namespace {

// Model flattened for the sweep kernels: CSR neighbor lists plus the
// precomputed beta ramp and penalty graph.
struct Kernel {
    int n = 0;
    std::vector<double> linear;
    std::vector<int> nbr_offset;  // size n+1
    std::vector<int> nbr;
    std::vector<double> nbr_coeff;
    std::vector<double> betas;
    double offset = 0.0;

    // adjacency among variables with positive quadratic coefficient
    std::vector<int> pen_offset;
    std::vector<int> pen;
};

Kernel make_kernel(const QuboModel& m, const AnnealConfig& cfg) {
    Kernel k;
    k.n = m.num_vars;
    k.linear = m.linear;
    k.offset = m.offset;

    std::vector<int> deg(k.n, 0), pen_deg(k.n, 0);
    for (const auto& t : m.quadratic) {
        ++deg[t.i];
        ++deg[t.j];
        if (t.coeff > 0.0) {
            ++pen_deg[t.i];
            ++pen_deg[t.j];
        }
    }
    k.nbr_offset.assign(k.n + 1, 0);
    k.pen_offset.assign(k.n + 1, 0);
    for (int v = 0; v < k.n; ++v) {
        k.nbr_offset[v + 1] = k.nbr_offset[v] + deg[v];
        k.pen_offset[v + 1] = k.pen_offset[v] + pen_deg[v];
    }
    k.nbr.resize(k.nbr_offset[k.n]);
    k.nbr_coeff.resize(k.nbr_offset[k.n]);
    k.pen.resize(k.pen_offset[k.n]);
    std::vector<int> fill(k.nbr_offset.begin(), k.nbr_offset.end() - 1);
    std::vector<int> pen_fill(k.pen_offset.begin(), k.pen_offset.end() - 1);
    for (const auto& t : m.quadratic) {
        k.nbr[fill[t.i]] = t.j;
        k.nbr_coeff[fill[t.i]++] = t.coeff;
        k.nbr[fill[t.j]] = t.i;
        k.nbr_coeff[fill[t.j]++] = t.coeff;
        if (t.coeff > 0.0) {
            k.pen[pen_fill[t.i]++] = t.j;
            k.pen[pen_fill[t.j]++] = t.i;
        }
    }

    const int sweeps = cfg.sweeps_per_read;
    k.betas.resize(sweeps);
    if (sweeps == 1) {
        k.betas[0] = cfg.beta_initial;
    } else {
        const double step = std::pow(cfg.beta_final / cfg.beta_initial, 1.0 / (sweeps - 1));
        double beta = cfg.beta_initial;
        for (int s = 0; s < sweeps; ++s, beta *= step) k.betas[s] = beta;
    }
    return k;
}

double flip_gain(const Kernel& k, const Assignment& x, int v) {
    double field = k.linear[v];
    for (int e = k.nbr_offset[v]; e < k.nbr_offset[v + 1]; ++e)
        if (x[k.nbr[e]]) field += k.nbr_coeff[e];
    return x[v] ? -field : field;
}

void random_init(const Kernel& k, SplitMix64& rng, Assignment& x) {
    x.resize(k.n);
    for (int v = 0; v < k.n; ++v) x[v] = rng.next_bool() ? 1 : 0;
}

// Incremental kernel: flip gains are kept up to date so a rejected proposal
// costs O(1) and an accepted one O(deg).
void run_read(const Kernel& k, std::uint64_t stream_seed, Assignment& x) {
    SplitMix64 rng(stream_seed);
    random_init(k, rng, x);
    std::vector<double> gain(k.n);
    for (int v = 0; v < k.n; ++v) gain[v] = flip_gain(k, x, v);

    for (double beta : k.betas) {
        for (int v = 0; v < k.n; ++v) {
            const double dE = gain[v];
            if (dE > 0.0 && rng.next_double() >= std::exp(-dE * beta)) continue;
            const double sign = x[v] ? -1.0 : 1.0;  // new minus old value of x[v]
            for (int e = k.nbr_offset[v]; e < k.nbr_offset[v + 1]; ++e) {
                const int u = k.nbr[e];
                gain[u] += (x[u] ? -1.0 : 1.0) * k.nbr_coeff[e] * sign;
            }
            x[v] ^= 1;
            gain[v] = -dE;
        }
    }
}

// Reference kernel: identical proposal/acceptance sequence, flip gains
// recomputed from scratch each proposal.
void run_read_reference(const Kernel& k, std::uint64_t stream_seed, Assignment& x) {
    SplitMix64 rng(stream_seed);
    random_init(k, rng, x);
    for (double beta : k.betas) {
        for (int v = 0; v < k.n; ++v) {
            const double dE = flip_gain(k, x, v);
            if (dE > 0.0 && rng.next_double() >= std::exp(-dE * beta)) continue;
            x[v] ^= 1;
        }
    }
}

SampleOutcome finish_outcome(const QuboModel& m, const Kernel& k, Assignment x,
                             std::uint64_t stream_seed, int reads_used) {
    SampleOutcome out;
    out.raw_assignment = std::move(x);
    out.energy = evaluate(m, out.raw_assignment);
    out.decoded_set = decode_vertex_set(out.raw_assignment);
    out.seed = stream_seed;
    out.reads_used = reads_used;

    // conflict counts inside the decoded set, on the penalty graph
    std::vector<int> conflicts(k.n, 0);
    bool any_conflict = false;
    std::vector<char> in_set(k.n, 0);
    for (int v : out.decoded_set) in_set[v] = 1;
    for (int v : out.decoded_set) {
        for (int e = k.pen_offset[v]; e < k.pen_offset[v + 1]; ++e) {
            if (in_set[k.pen[e]]) {
                ++conflicts[v];
                any_conflict = true;
            }
        }
    }
    out.valid = !any_conflict;
    if (out.valid) {
        out.repaired_set = out.decoded_set;
    } else {
        // greedy max-conflict deletion; ties drop the larger label so small
        // labels survive
        while (true) {
            int worst = -1, worst_conflicts = 0;
            for (int v : out.decoded_set) {
                if (in_set[v] && conflicts[v] > 0 && conflicts[v] >= worst_conflicts) {
                    worst = v;
                    worst_conflicts = conflicts[v];
                }
            }
            if (worst < 0) break;
            in_set[worst] = 0;
            for (int e = k.pen_offset[worst]; e < k.pen_offset[worst + 1]; ++e) {
                const int u = k.pen[e];
                if (in_set[u]) --conflicts[u];
            }
        }
        for (int v : out.decoded_set)
            if (in_set[v]) out.repaired_set.push_back(v);
    }
    out.is_null = out.repaired_set.empty();
    return out;
}

void validate(const QuboModel& m, const AnnealConfig& cfg) {
    if (m.num_vars > kEmbeddingLimit)
        throw embedding_limit_error("model has " + std::to_string(m.num_vars) +
                                    " variables, annealer accepts at most " +
                                    std::to_string(kEmbeddingLimit));
    if (cfg.num_reads < 1) throw std::invalid_argument("anneal: num_reads must be >= 1");
    if (cfg.sweeps_per_read < 1) throw std::invalid_argument("anneal: sweeps_per_read must be >= 1");
    if (!(cfg.beta_initial > 0.0) || !(cfg.beta_final > cfg.beta_initial))
        throw std::invalid_argument("anneal: need beta_final > beta_initial > 0");
}

template <typename ReadFn>
std::vector<SampleOutcome> sample_with(const QuboModel& m, const AnnealConfig& cfg, ReadFn read,
                                       bool parallel) {
    validate(m, cfg);
    const Kernel k = make_kernel(m, cfg);
    std::vector<SampleOutcome> outcomes(cfg.num_reads);

#pragma omp parallel for schedule(static) if (parallel)
    for (int r = 0; r < cfg.num_reads; ++r) {
        const std::uint64_t stream = derive_stream(cfg.rng_seed, static_cast<std::uint64_t>(r));
        Assignment x;
        read(k, stream, x);
        outcomes[r] = finish_outcome(m, k, std::move(x), stream, cfg.num_reads);
    }

    std::stable_sort(outcomes.begin(), outcomes.end(),
                     [](const SampleOutcome& a, const SampleOutcome& b) {
                         return a.energy < b.energy;
                     });
    return outcomes;
}

}  // namespace

std::vector<int> repair_to_independent_set(const Graph& g, const std::vector<int>& s) {
    if (!std::is_sorted(s.begin(), s.end())) {
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        return repair_to_independent_set(g, sorted);
    }
    std::vector<char> in_set(g.vertex_count(), 0);
    std::vector<int> conflicts(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("repair_to_independent_set: vertex out of range");
        in_set[v] = 1;
    }
    for (int v : s)
        for (int u : g.neighbors(v))
            if (in_set[u]) ++conflicts[v];
    while (true) {
        int worst = -1, worst_conflicts = 0;
        for (int v : s) {
            if (in_set[v] && conflicts[v] > 0 && conflicts[v] >= worst_conflicts) {
                worst = v;
                worst_conflicts = conflicts[v];
            }
        }
        if (worst < 0) break;
        in_set[worst] = 0;
        for (int u : g.neighbors(worst))
            if (in_set[u]) --conflicts[u];
    }
    std::vector<int> repaired;
    for (int v : s)
        if (in_set[v]) repaired.push_back(v);
    return repaired;
}

std::vector<SampleOutcome> anneal_sample(const QuboModel& m, const AnnealConfig& cfg) {
    return sample_with(m, cfg, run_read, true);
}

std::vector<SampleOutcome> anneal_sample_reference(const QuboModel& m, const AnnealConfig& cfg) {
    return sample_with(m, cfg, run_read_reference, false);
}

}  // namespace mclab
