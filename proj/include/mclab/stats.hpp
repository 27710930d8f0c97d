#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mclab/errors.hpp"

namespace mclab {

// k >= 2 labeled groups of finite values.
struct GroupedSamples {
    std::vector<std::pair<std::string, std::vector<double>>> groups;

    int group_count() const { return static_cast<int>(groups.size()); }
    int total_size() const;
    std::vector<std::string> labels() const;
};

enum class StatMethod { cochran, shapiro_wilk, anova, lsd, kruskal_wallis, mann_whitney };

struct TestOutcome {
    double statistic = 0.0;
    std::optional<double> p_value;  // absent only for threshold-style methods
    double alpha = 0.05;
    bool reject_null = false;  // p_value < alpha when p_value is present
    StatMethod method = StatMethod::anova;
};

enum class PairDecision { no_significant_difference, significant_difference };

// Upper-triangular matrix of pairwise decisions (i < j).
struct PairwiseMatrix {
    std::vector<std::string> labels;
    double alpha = 0.05;
    StatMethod method = StatMethod::mann_whitney;
    std::vector<PairDecision> cells;  // row-major upper triangle

    PairDecision cell(int i, int j) const;
    int size() const { return static_cast<int>(labels.size()); }
};

// Cochran's C: homogeneity of variances across equally sized groups.
// C = max s_i^2 / sum s_i^2; p-value from the Bonferroni-bounded Beta tail
// (approximate by nature). Unequal sizes -> unsupported_design_error;
// all-zero variances -> degenerate_data_error.
TestOutcome cochran_c(const GroupedSamples& gs, double alpha = 0.05);

// Shapiro-Wilk normality test, standard approximation algorithm for
// 3 <= n <= 5000 (size_limit_error outside, degenerate_data_error for a
// constant sample). The input need not be sorted.
TestOutcome shapiro_wilk(const std::vector<double>& sample, double alpha = 0.05);

// One-way fixed-effects analysis of variance. F = MQF / MQE with
// p from F(k-1, N-k). MQE = 0 with MQF > 0 reports F = inf, p = 0;
// MQF = MQE = 0 -> degenerate_data_error.
TestOutcome anova_oneway(const GroupedSamples& gs, double alpha);

// Fisher's least-significant-difference matrix, meant to run after ANOVA
// rejects: pair (i,j) significant iff |mean_i - mean_j| exceeds
// t(1-alpha/2, N-k) * sqrt(MQE (1/n_i + 1/n_j)).
PairwiseMatrix lsd_pairwise(const GroupedSamples& gs, double alpha);

// Kruskal-Wallis rank test with average ranks and the standard tie
// correction; p from chi-square(k-1). All values tied ->
// degenerate_data_error.
TestOutcome kruskal_wallis(const GroupedSamples& gs, double alpha);

// Mann-Whitney U, two-sided. U = min(U_a, U_b). Exact null distribution when
// both sizes are <= 8 and no ties are present; otherwise normal
// approximation with tie and continuity corrections.
TestOutcome mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b,
                           double alpha);

// One Mann-Whitney matrix per alpha, cells from pairwise tests.
std::vector<PairwiseMatrix> pairwise_mw_matrix(const GroupedSamples& gs,
                                               const std::vector<double>& alphas);

const char* to_string(StatMethod method);

// Average ranks of `values` (ties share the mean rank) plus the tie-group
// sizes, used by both rank tests.
struct RankResult {
    std::vector<double> ranks;
    std::vector<int> tie_counts;  // sizes > 1 only
};
RankResult average_ranks(const std::vector<double>& values);

}  // namespace mclab
