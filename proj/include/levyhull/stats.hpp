#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace levyhull::stats {

inline double mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("mean: empty sample");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double sample_variance(const std::vector<double>& v) {
    if (v.size() < 2) throw std::invalid_argument("sample_variance: need at least 2 values");
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

inline double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median: empty sample");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Interval95 {
    double lo = 0.0, hi = 0.0;
    bool overlaps(const Interval95& o) const { return lo <= o.hi && o.lo <= hi; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Normal-approximation 95% confidence interval for the mean.
inline Interval95 ci95_mean(const std::vector<double>& v) {
    const double m = mean(v);
    const double se = std::sqrt(sample_variance(v) / static_cast<double>(v.size()));
    return {m - 1.959963984540054 * se, m + 1.959963984540054 * se};
}

// log C(n, k) via lgamma, stable for the binomial tails below.
inline double log_choose(std::size_t n, std::size_t k) {
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0);
}

// One-sided sign test: p = P(Bin(n, 1/2) >= wins) where n = wins + losses.
// Ties are the caller's responsibility to drop. Returns 1 for an empty sample.
inline double sign_test_p(std::size_t wins, std::size_t losses) {
    const std::size_t n = wins + losses;
    if (n == 0) return 1.0;
    double p = 0.0;
    const double log_half_n = -double(n) * std::log(2.0);
    for (std::size_t k = wins; k <= n; ++k)
        p += std::exp(log_choose(n, k) + log_half_n);
    return std::min(p, 1.0);
}

// Two-sample Kolmogorov-Smirnov statistic (sup |F1 - F2|).
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i; else ++j;
        const double fa = double(i) / double(a.size());
        const double fb = double(j) / double(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

// 5% two-sample KS critical value, asymptotic form.
inline double ks_critical_5pct(std::size_t n, std::size_t m) {
    return 1.3581015157406195 * std::sqrt(double(n + m) / (double(n) * double(m)));
}

inline double harmonic(std::size_t n) {
    double h = 0.0;
    for (std::size_t k = 1; k <= n; ++k) h += 1.0 / double(k);
    return h;
}

} // namespace levyhull::stats
