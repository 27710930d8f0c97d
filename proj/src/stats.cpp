#include "mclab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace mclab {

namespace {

double normal_sf(double z) {
    static const boost::math::normal_distribution<double> dist;
    return boost::math::cdf(boost::math::complement(dist, z));
}

double normal_cdf(double z) {
    static const boost::math::normal_distribution<double> dist;
    return boost::math::cdf(dist, z);
}

double normal_quantile(double p) {
    static const boost::math::normal_distribution<double> dist;
    return boost::math::quantile(dist, p);
}

void validate_groups(const GroupedSamples& gs, int min_group_size) {
    if (gs.group_count() < 2) throw std::invalid_argument("need at least 2 groups");
    for (const auto& [label, values] : gs.groups) {
        if (static_cast<int>(values.size()) < min_group_size)
            throw unsupported_design_error("group '" + label + "' has fewer than " +
                                           std::to_string(min_group_size) + " values");
        for (double v : values)
            if (!std::isfinite(v))
                throw std::invalid_argument("group '" + label + "' contains a non-finite value");
    }
}

struct AnovaSums {
    int k = 0;
    int total = 0;
    std::vector<double> means;
    std::vector<int> sizes;
    double mqf = 0.0;  // between-group mean square
    double mqe = 0.0;  // within-group mean square
};

AnovaSums anova_sums(const GroupedSamples& gs) {
    validate_groups(gs, 2);
    AnovaSums s;
    s.k = gs.group_count();
    double grand_sum = 0.0;
    for (const auto& [label, values] : gs.groups) {
        double sum = 0.0;
        for (double v : values) sum += v;
        s.means.push_back(sum / static_cast<double>(values.size()));
        s.sizes.push_back(static_cast<int>(values.size()));
        s.total += static_cast<int>(values.size());
        grand_sum += sum;
    }
    const double grand_mean = grand_sum / static_cast<double>(s.total);
    double ssb = 0.0, ssw = 0.0;
    for (int i = 0; i < s.k; ++i) {
        const double d = s.means[i] - grand_mean;
        ssb += s.sizes[i] * d * d;
        for (double v : gs.groups[i].second) {
            const double e = v - s.means[i];
            ssw += e * e;
        }
    }
    s.mqf = ssb / static_cast<double>(s.k - 1);
    s.mqe = ssw / static_cast<double>(s.total - s.k);
    return s;
}

}  // namespace

int GroupedSamples::total_size() const {
    int n = 0;
    for (const auto& [label, values] : groups) n += static_cast<int>(values.size());
    return n;
}

std::vector<std::string> GroupedSamples::labels() const {
    std::vector<std::string> out;
    out.reserve(groups.size());
    for (const auto& [label, values] : groups) out.push_back(label);
    return out;
}

PairDecision PairwiseMatrix::cell(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == j || j >= size()) throw std::invalid_argument("pairwise cell out of range");
    const int k = size();
    const int index = i * (2 * k - i - 1) / 2 + (j - i - 1);
    return cells[index];
}

RankResult average_ranks(const std::vector<double>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });

    RankResult result;
    result.ranks.assign(n, 0.0);
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (int t = i; t <= j; ++t) result.ranks[order[t]] = rank;
        if (j > i) result.tie_counts.push_back(j - i + 1);
        i = j + 1;
    }
    return result;
}

TestOutcome cochran_c(const GroupedSamples& gs, double alpha) {
    validate_groups(gs, 2);
    const int k = gs.group_count();
    const int n = static_cast<int>(gs.groups.front().second.size());
    std::vector<double> variances;
    for (const auto& [label, values] : gs.groups) {
        if (static_cast<int>(values.size()) != n)
            throw unsupported_design_error("cochran_c requires equal group sizes");
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        variances.push_back(ss / static_cast<double>(values.size() - 1));
    }
    const double vmax = *std::max_element(variances.begin(), variances.end());
    if (vmax == 0.0) throw degenerate_data_error("cochran_c: all group variances are zero");

    // C = vmax / sum; dividing through by vmax keeps the symmetric cases
    // (identical variances -> C = 1/k) exact.
    double normalized_sum = 0.0;
    for (double v : variances) normalized_sum += v / vmax;
    const double c_stat = 1.0 / normalized_sum;

    // Bonferroni bound on the Beta tail of a single variance ratio.
    const double nu = static_cast<double>(n - 1);
    const boost::math::beta_distribution<double> beta(nu / 2.0,
                                                      static_cast<double>(k - 1) * nu / 2.0);
    const double tail = boost::math::cdf(boost::math::complement(beta, c_stat));
    const double p = std::min(1.0, static_cast<double>(k) * tail);

    TestOutcome out;
    out.method = StatMethod::cochran;
    out.statistic = c_stat;
    out.p_value = p;
    out.alpha = alpha;
    out.reject_null = p < alpha;
    return out;
}

namespace {

double poly(const double* coeffs, int count, double x) {
    double value = coeffs[0];
    double xp = 1.0;
    for (int i = 1; i < count; ++i) {
        xp *= x;
        value += coeffs[i] * xp;
    }
    return value;
}

}  // namespace

// Standard Shapiro-Wilk approximation (polynomial weight corrections and a
// normalizing transform of 1-W), valid for 3 <= n <= 5000.
TestOutcome shapiro_wilk(const std::vector<double>& sample, double alpha) {
    static const double c1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
    static const double c2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
    static const double c3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
    static const double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
    static const double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
    static const double c6[3] = {-0.4803, -0.082676, 0.0030302};
    static const double g[2] = {-2.273, 0.459};

    const int n = static_cast<int>(sample.size());
    if (n < 3 || n > 5000)
        throw size_limit_error("shapiro_wilk supports 3 <= n <= 5000, got " + std::to_string(n));
    std::vector<double> x = sample;
    std::sort(x.begin(), x.end());
    if (x.back() <= x.front()) throw degenerate_data_error("shapiro_wilk: constant sample");

    const int half = n / 2;
    std::vector<double> a(half);  // lower-half weight magnitudes
    if (n == 3) {
        a[0] = std::sqrt(0.5);
    } else {
        const double an = static_cast<double>(n);
        double summ2 = 0.0;
        for (int i = 1; i <= half; ++i) {
            a[i - 1] = normal_quantile((i - 0.375) / (an + 0.25));  // negative
            summ2 += a[i - 1] * a[i - 1];
        }
        summ2 *= 2.0;
        const double ssumm2 = std::sqrt(summ2);
        const double rsn = 1.0 / std::sqrt(an);
        const double a1 = poly(c1, 6, rsn) - a[0] / ssumm2;
        double a2 = 0.0;
        double fac;
        int first_plain;  // first index rescaled rather than corrected
        if (n > 5) {
            first_plain = 2;
            a2 = -a[1] / ssumm2 + poly(c2, 6, rsn);
            fac = std::sqrt((summ2 - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1]) /
                            (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
        } else {
            first_plain = 1;
            fac = n > 3 ? std::sqrt((summ2 - 2.0 * a[0] * a[0]) / (1.0 - 2.0 * a1 * a1)) : 1.0;
        }
        for (int i = first_plain; i < half; ++i) a[i] /= -fac;
        a[0] = a1;
        if (n > 5) a[1] = a2;
    }

    // W as the squared correlation between the sorted sample and the
    // antisymmetric weight vector (-a[0], ..., 0, ..., +a[0]).
    double xmean = 0.0;
    for (double v : x) xmean += v;
    xmean /= static_cast<double>(n);
    double sxx = 0.0, saa = 0.0, sax = 0.0;
    for (int i = 0; i < n; ++i) {
        const int j = n - 1 - i;
        double w = 0.0;
        if (i < j)
            w = -a[i];
        else if (i > j)
            w = a[j];
        const double dx = x[i] - xmean;
        sxx += dx * dx;
        saa += w * w;  // weight mean is zero by antisymmetry
        sax += w * dx;
    }
    const double ssassx = std::sqrt(saa * sxx);
    const double w1 = (ssassx - sax) * (ssassx + sax) / (saa * sxx);
    const double w_stat = 1.0 - w1;

    double p;
    if (n == 3) {
        const double pi6 = 1.90985931710274;    // 6/pi
        const double stqr = 1.04719755119660;   // asin(sqrt(3/4))
        p = std::clamp(pi6 * (std::asin(std::sqrt(w_stat)) - stqr), 0.0, 1.0);
    } else {
        const double y = std::log(w1);
        if (n <= 11) {
            const double an = static_cast<double>(n);
            const double gamma = poly(g, 2, an);
            if (y >= gamma) {
                p = 1e-99;  // W in the extreme tail of the transform's domain
            } else {
                const double z = (-std::log(gamma - y) - poly(c3, 4, an)) /
                                 std::exp(poly(c4, 4, an));
                p = normal_sf(z);
            }
        } else {
            const double logn = std::log(static_cast<double>(n));
            p = normal_sf((y - poly(c5, 4, logn)) / std::exp(poly(c6, 3, logn)));
        }
    }

    TestOutcome out;
    out.method = StatMethod::shapiro_wilk;
    out.statistic = w_stat;
    out.p_value = p;
    out.alpha = alpha;
    out.reject_null = p < alpha;
    return out;
}

TestOutcome anova_oneway(const GroupedSamples& gs, double alpha) {
    const AnovaSums s = anova_sums(gs);
    TestOutcome out;
    out.method = StatMethod::anova;
    out.alpha = alpha;
    if (s.mqe == 0.0) {
        if (s.mqf == 0.0) throw degenerate_data_error("anova_oneway: all values identical");
        out.statistic = std::numeric_limits<double>::infinity();
        out.p_value = 0.0;
        out.reject_null = true;
        return out;
    }
    out.statistic = s.mqf / s.mqe;
    const boost::math::fisher_f_distribution<double> f(static_cast<double>(s.k - 1),
                                                       static_cast<double>(s.total - s.k));
    out.p_value = boost::math::cdf(boost::math::complement(f, out.statistic));
    out.reject_null = *out.p_value < alpha;
    return out;
}

PairwiseMatrix lsd_pairwise(const GroupedSamples& gs, double alpha) {
    const AnovaSums s = anova_sums(gs);
    if (s.mqe == 0.0 && s.mqf == 0.0)
        throw degenerate_data_error("lsd_pairwise: all values identical");

    const boost::math::students_t_distribution<double> t(static_cast<double>(s.total - s.k));
    const double t_crit = boost::math::quantile(t, 1.0 - alpha / 2.0);

    PairwiseMatrix matrix;
    matrix.labels = gs.labels();
    matrix.alpha = alpha;
    matrix.method = StatMethod::lsd;
    for (int i = 0; i < s.k; ++i) {
        for (int j = i + 1; j < s.k; ++j) {
            const double lsd =
                t_crit * std::sqrt(s.mqe * (1.0 / s.sizes[i] + 1.0 / s.sizes[j]));
            const bool significant = std::abs(s.means[i] - s.means[j]) > lsd;
            matrix.cells.push_back(significant ? PairDecision::significant_difference
                                               : PairDecision::no_significant_difference);
        }
    }
    return matrix;
}

TestOutcome kruskal_wallis(const GroupedSamples& gs, double alpha) {
    validate_groups(gs, 1);
    const int k = gs.group_count();
    std::vector<double> pooled;
    std::vector<int> group_of;
    for (int gi = 0; gi < k; ++gi) {
        for (double v : gs.groups[gi].second) {
            pooled.push_back(v);
            group_of.push_back(gi);
        }
    }
    const int n = static_cast<int>(pooled.size());
    if (n < 3) throw std::invalid_argument("kruskal_wallis: needs at least 3 values");

    const RankResult ranks = average_ranks(pooled);
    double tie_term = 0.0;
    for (int t : ranks.tie_counts)
        tie_term += static_cast<double>(t) * t * t - t;
    const double divisor =
        1.0 - tie_term / (static_cast<double>(n) * n * n - static_cast<double>(n));
    if (divisor <= 0.0) throw degenerate_data_error("kruskal_wallis: all values tied");

    std::vector<double> rank_sum(k, 0.0);
    std::vector<int> sizes(k, 0);
    for (int i = 0; i < n; ++i) {
        rank_sum[group_of[i]] += ranks.ranks[i];
        ++sizes[group_of[i]];
    }
    double h = 0.0;
    for (int gi = 0; gi < k; ++gi) h += rank_sum[gi] * rank_sum[gi] / sizes[gi];
    h = 12.0 / (static_cast<double>(n) * (n + 1)) * h - 3.0 * (static_cast<double>(n) + 1.0);
    h /= divisor;

    TestOutcome out;
    out.method = StatMethod::kruskal_wallis;
    out.statistic = h;
    const boost::math::chi_squared_distribution<double> chi(static_cast<double>(k - 1));
    out.p_value = boost::math::cdf(boost::math::complement(chi, std::max(h, 0.0)));
    out.alpha = alpha;
    out.reject_null = *out.p_value < alpha;
    return out;
}

namespace {

// Null distribution of U_a: counts[u] over all C(na+nb, na) arrangements.
std::vector<double> mw_exact_counts(int na, int nb) {
    std::vector<std::vector<double>> f(na + 1, std::vector<double>(na * nb + 1, 0.0));
    for (int m = 0; m <= na; ++m) f[m][0] = 1.0;  // n = 0 base case
    for (int n = 1; n <= nb; ++n) {
        // f(m, n, u) = f(m-1, n, u-n) + f(m, n-1, u); update in place over m
        for (int m = 1; m <= na; ++m)
            for (int u = m * n; u >= 1; --u)
                f[m][u] = (u >= n ? f[m - 1][u - n] : 0.0) + f[m][u];
    }
    return f[na];
}

}  // namespace

TestOutcome mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b,
                           double alpha) {
    if (a.empty() || b.empty()) throw std::invalid_argument("mann_whitney_u: empty sample");
    for (double v : a)
        if (!std::isfinite(v)) throw std::invalid_argument("mann_whitney_u: non-finite value");
    for (double v : b)
        if (!std::isfinite(v)) throw std::invalid_argument("mann_whitney_u: non-finite value");

    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    const int n = na + nb;
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const RankResult ranks = average_ranks(pooled);

    double ra = 0.0;
    for (int i = 0; i < na; ++i) ra += ranks.ranks[i];
    const double ua = static_cast<double>(na) * nb + static_cast<double>(na) * (na + 1) / 2.0 - ra;
    const double ub = static_cast<double>(na) * nb - ua;
    const double u = std::min(ua, ub);

    double p;
    const bool has_ties = !ranks.tie_counts.empty();
    if (na <= 8 && nb <= 8 && !has_ties) {
        const auto counts = mw_exact_counts(na, nb);
        double below = 0.0, total = 0.0;
        for (int v = 0; v < static_cast<int>(counts.size()); ++v) {
            total += counts[v];
            if (v <= static_cast<int>(u + 0.5)) below += counts[v];
        }
        p = std::min(1.0, 2.0 * below / total);
    } else {
        double tie_term = 0.0;
        for (int t : ranks.tie_counts)
            tie_term += static_cast<double>(t) * t * t - t;
        const double variance =
            (static_cast<double>(na) * nb / 12.0) *
            (static_cast<double>(n) + 1.0 -
             tie_term / (static_cast<double>(n) * (static_cast<double>(n) - 1.0)));
        if (variance <= 0.0) {
            p = 1.0;  // every value tied: no evidence either way
        } else {
            const double z = (u - static_cast<double>(na) * nb / 2.0 + 0.5) / std::sqrt(variance);
            p = std::clamp(2.0 * normal_cdf(z), 0.0, 1.0);
        }
    }

    TestOutcome out;
    out.method = StatMethod::mann_whitney;
    out.statistic = u;
    out.p_value = p;
    out.alpha = alpha;
    out.reject_null = p < alpha;
    return out;
}

std::vector<PairwiseMatrix> pairwise_mw_matrix(const GroupedSamples& gs,
                                               const std::vector<double>& alphas) {
    validate_groups(gs, 1);
    std::vector<PairwiseMatrix> matrices;
    for (double alpha : alphas) {
        PairwiseMatrix m;
        m.labels = gs.labels();
        m.alpha = alpha;
        m.method = StatMethod::mann_whitney;
        for (int i = 0; i < gs.group_count(); ++i) {
            for (int j = i + 1; j < gs.group_count(); ++j) {
                const auto outcome =
                    mann_whitney_u(gs.groups[i].second, gs.groups[j].second, alpha);
                m.cells.push_back(outcome.reject_null ? PairDecision::significant_difference
                                                      : PairDecision::no_significant_difference);
            }
        }
        matrices.push_back(std::move(m));
    }
    return matrices;
}

const char* to_string(StatMethod method) {
    switch (method) {
        case StatMethod::cochran: return "cochran";
        case StatMethod::shapiro_wilk: return "shapiro_wilk";
        case StatMethod::anova: return "anova";
        case StatMethod::lsd: return "lsd";
        case StatMethod::kruskal_wallis: return "kruskal_wallis";
        case StatMethod::mann_whitney: return "mann_whitney";
    }
    return "unknown";
}

}  // namespace mclab
