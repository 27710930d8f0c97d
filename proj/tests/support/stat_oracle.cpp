#include "stat_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

double gammln(double x) {
    static const double cof[6] = {76.18009172947146,  -86.50532032941677, 24.01409824083091,
                                  -1.231739572450155, 0.1208650973866179e-2, -0.5395239384953e-5};
    double y = x;
    double tmp = x + 5.5;
    tmp -= (x + 0.5) * std::log(tmp);
    double ser = 1.000000000190015;
    for (double c : cof) ser += c / ++y;
    return -tmp + std::log(2.5066282746310005 * ser / x);
}

// regularized lower incomplete gamma by series
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ++ap;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gammln(a));
}

// regularized upper incomplete gamma by continued fraction (Lentz)
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - gammln(a)) * h;
}

double betacf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace

double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double incomplete_gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("incomplete_gamma_q domain");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front =
        std::exp(gammln(a + b) - gammln(a) - gammln(b) + a * std::log(x) + b * std::log(1.0 - x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double chi2_sf(double x, double df) { return incomplete_gamma_q(df / 2.0, x / 2.0); }

double f_sf(double f, double df1, double df2) {
    return incomplete_beta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f));
}

double t_two_sided(double t, double df) {
    return incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

double beta_sf(double x, double a, double b) { return 1.0 - incomplete_beta(a, b, x); }

double counting_rank(const std::vector<double>& pooled, double x) {
    int less = 0, equal = 0;
    for (double v : pooled) {
        if (v < x) ++less;
        if (v == x) ++equal;
    }
    return less + 1 + (equal - 1) * 0.5;
}

StatP anova(const Groups& groups) {
    const int k = static_cast<int>(groups.size());
    long double grand = 0.0L;
    long total = 0;
    std::vector<long double> means;
    for (const auto& g : groups) {
        long double sum = 0.0L;
        for (double v : g) sum += v;
        means.push_back(sum / g.size());
        grand += sum;
        total += static_cast<long>(g.size());
    }
    grand /= total;
    long double ssb = 0.0L, ssw = 0.0L;
    for (int i = 0; i < k; ++i) {
        ssb += static_cast<long double>(groups[i].size()) * (means[i] - grand) * (means[i] - grand);
        for (double v : groups[i]) ssw += (v - means[i]) * (v - means[i]);
    }
    StatP out;
    out.statistic = static_cast<double>((ssb / (k - 1)) / (ssw / (total - k)));
    out.p = f_sf(out.statistic, k - 1, static_cast<double>(total - k));
    return out;
}

StatP kruskal_wallis(const Groups& groups) {
    std::vector<double> pooled;
    for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
    const double n = static_cast<double>(pooled.size());

    long double h = 0.0L;
    for (const auto& g : groups) {
        long double rank_sum = 0.0L;
        for (double v : g) rank_sum += counting_rank(pooled, v);
        h += rank_sum * rank_sum / g.size();
    }
    h = 12.0L / (n * (n + 1.0L)) * h - 3.0L * (n + 1.0L);

    // tie correction from value multiplicities
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    long double tie_term = 0.0L;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const long double m = static_cast<long double>(j - i + 1);
        if (m > 1) tie_term += m * m * m - m;
        i = j + 1;
    }
    h /= 1.0L - tie_term / (static_cast<long double>(n) * n * n - n);

    StatP out;
    out.statistic = static_cast<double>(h);
    out.p = chi2_sf(out.statistic, static_cast<double>(groups.size() - 1));
    return out;
}

StatP mann_whitney(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    const int n = na + nb;

    long double ra = 0.0L;
    for (double v : a) ra += counting_rank(pooled, v);
    const double ua =
        static_cast<double>(na) * nb + na * (na + 1) / 2.0 - static_cast<double>(ra);
    const double u = std::min(ua, static_cast<double>(na) * nb - ua);

    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    bool ties = false;
    long double tie_term = 0.0L;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const long double m = static_cast<long double>(j - i + 1);
        if (m > 1) {
            ties = true;
            tie_term += m * m * m - m;
        }
        i = j + 1;
    }

    StatP out;
    out.statistic = u;
    if (na <= 8 && nb <= 8 && !ties) {
        // enumerate every assignment of pooled order positions to sample a
        long below = 0, total = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != na) continue;
            ++total;
            long rank_sum = 0;
            for (int pos = 0; pos < n; ++pos)
                if (mask & (1u << pos)) rank_sum += pos + 1;
            const double u_mask = na * nb + na * (na + 1) / 2.0 - rank_sum;
            if (u_mask <= u + 1e-9) ++below;
        }
        // two-sided: twice the lower tail P(U_a <= u)
        out.p = std::min(1.0, 2.0 * static_cast<double>(below) / static_cast<double>(total));
    } else {
        const double variance =
            (static_cast<double>(na) * nb / 12.0) *
            (n + 1.0 - static_cast<double>(tie_term) / (static_cast<double>(n) * (n - 1.0)));
        if (variance <= 0.0) {
            out.p = 1.0;
        } else {
            const double z = (u - static_cast<double>(na) * nb / 2.0 + 0.5) / std::sqrt(variance);
            out.p = std::clamp(2.0 * norm_cdf(z), 0.0, 1.0);
        }
    }
    return out;
}

StatP cochran(const Groups& groups) {
    const int k = static_cast<int>(groups.size());
    const int n = static_cast<int>(groups.front().size());
    long double total = 0.0L;
    long double vmax = 0.0L;
    for (const auto& g : groups) {
        long double mean = 0.0L;
        for (double v : g) mean += v;
        mean /= g.size();
        long double ss = 0.0L;
        for (double v : g) ss += (v - mean) * (v - mean);
        const long double variance = ss / (g.size() - 1);
        total += variance;
        vmax = std::max(vmax, variance);
    }
    StatP out;
    out.statistic = static_cast<double>(vmax / total);
    const double nu = n - 1;
    out.p = std::min(1.0, k * beta_sf(out.statistic, nu / 2.0, (k - 1) * nu / 2.0));
    return out;
}

}  // namespace oracle
