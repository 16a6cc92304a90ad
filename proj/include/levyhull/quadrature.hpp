#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace levyhull {

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by Newton
// iteration on P_n (the classic recipe; accurate to machine precision for the
// small orders used here).
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(std::size_t n) {
        if (n == 0) throw std::invalid_argument("GaussLegendre: order must be positive");
        nodes.resize(n);
        weights.resize(n);
        const double pi = 3.14159265358979323846;
        for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(pi * (double(i) + 0.75) / (double(n) + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                // evaluate P_n and P_n' by the three-term recurrence
                double p0 = 1.0, p1 = x;
                for (std::size_t k = 2; k <= n; ++k) {
                    const double pk = ((2.0 * double(k) - 1.0) * x * p1 -
                                       (double(k) - 1.0) * p0) / double(k);
                    p0 = p1;
                    p1 = pk;
                }
                dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    double integrate(const std::function<double(double)>& f, double a, double b) const {
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            s += weights[i] * f(c + h * nodes[i]);
        return s * h;
    }
};

inline const GaussLegendre& gauss64() {
    static const GaussLegendre g(64);
    return g;
}

// Quadrature of f over (a, b) after the power substitution x = a + (b-a)*u^p,
// which absorbs an integrable x^(-alpha)-type singularity at the left endpoint.
inline double integrate_power_singular(const std::function<double(double)>& f,
                                       double a, double b, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("integrate_power_singular: p >= 1 required");
    const double w = b - a;
    return gauss64().integrate(
        [&](double u) { return f(a + w * std::pow(u, p)) * w * p * std::pow(u, p - 1.0); },
        0.0, 1.0);
}

} // namespace levyhull
