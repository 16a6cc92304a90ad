#include "levyhull/drift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace levyhull {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

} // namespace

Drift Drift::zero() { return Drift{}; }

Drift Drift::linear(double beta) {
    if (!std::isfinite(beta))
        throw std::invalid_argument("Drift: linear coefficient must be finite");
    Drift d;
    d.kind = Kind::Linear;
    d.beta = beta;
    return d;
}

Drift Drift::quadratic(double gamma) {
    if (!std::isfinite(gamma))
        throw std::invalid_argument("Drift: quadratic coefficient must be finite");
    Drift d;
    d.kind = Kind::Quadratic;
    d.gamma = gamma;
    return d;
}

Drift Drift::parabolic(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::invalid_argument("Drift: parabola needs a positive time scale");
    Drift d;
    d.kind = Kind::Parabolic;
    d.t = t;
    return d;
}

Drift Drift::sampled(std::vector<double> xs, std::vector<double> fs,
                     std::vector<double> slopes) {
    if (xs.size() < 2 || xs.size() != fs.size() || xs.size() != slopes.size())
        throw std::invalid_argument("Drift: sampled tables need equal lengths, at least 2 points");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(fs[i]) || !std::isfinite(slopes[i]))
            throw std::invalid_argument("Drift: sampled tables must be finite");
        if (i > 0 && !(xs[i - 1] < xs[i]))
            throw std::invalid_argument("Drift: sampled abscissae must be strictly increasing");
    }
    Drift d;
    d.kind = Kind::Sampled;
    d.xs = std::move(xs);
    d.fs = std::move(fs);
    d.slopes = std::move(slopes);
    return d;
}

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double a) {
    if (a < xs.front() || a > xs.back())
        throw std::invalid_argument("Drift: query outside the sampled range");
    auto it = std::lower_bound(xs.begin(), xs.end(), a);
    std::size_t j = std::size_t(it - xs.begin());
    if (j < xs.size() && xs[j] == a)
        return ys[j];
    double w = (a - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return ys[j - 1] + w * (ys[j] - ys[j - 1]);
}

} // namespace

double Drift::value(double a) const {
    switch (kind) {
        case Kind::Zero:      return 0.0;
        case Kind::Linear:    return beta * a;
        case Kind::Quadratic: return gamma * a * a;
        case Kind::Parabolic: return -a * a / (2.0 * t);
        case Kind::Sampled:   return interp(xs, fs, a);
    }
    throw std::logic_error("Drift: unknown kind");
}

double Drift::slope(double a) const {
    switch (kind) {
        case Kind::Zero:      return 0.0;
        case Kind::Linear:    return beta;
        case Kind::Quadratic: return 2.0 * gamma * a;
        case Kind::Parabolic: return -a / t;
        case Kind::Sampled:   return interp(xs, slopes, a);
    }
    throw std::logic_error("Drift: unknown kind");
}

bool Drift::concave() const {
    switch (kind) {
        case Kind::Zero:
        case Kind::Linear:    return true;
        case Kind::Quadratic: return gamma <= 0.0;
        case Kind::Parabolic: return true;
        case Kind::Sampled:   return false;
    }
    return false;
}

bool Drift::convex() const {
    switch (kind) {
        case Kind::Zero:
        case Kind::Linear:    return true;
        case Kind::Quadratic: return gamma >= 0.0;
        case Kind::Parabolic: return false;
        case Kind::Sampled:   return false;
    }
    return false;
}

PointSequence add_drift(const JumpPath& path, const Drift& f, std::size_t samples_per_gap) {
    PointSequence pts = path_point_sequence(path, samples_per_gap);
    for (std::size_t i = 0; i < pts.size(); ++i)
        pts.ys[i] += f.value(pts.xs[i]);
    return pts;
}

GridPath add_drift(const GridPath& path, const Drift& f) {
    std::vector<double> v = path.values();
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] += f.value(path.node(k));
    return GridPath(path.t0(), path.h(), std::move(v));
}

namespace {

void check_exceeding_inputs(const Horizon& h, double mu, double u) {
    if (!std::isfinite(mu) || mu <= 0.0)
        throw std::invalid_argument("exceeding_time: threshold rate mu must be positive");
    if (!std::isfinite(u) || u < h.lo || u >= h.hi)
        throw std::invalid_argument("exceeding_time: start point must lie in [lo, hi)");
}

} // namespace

double exceeding_time(const JumpPath& path, const Drift& f, double mu, double u) {
    check_exceeding_inputs(path.horizon(), mu, u);
    const double base = path.value(u) + f.value(u);
    const double rate = f.slope(u) + mu;
    // between jumps the path is flat and, for concave f, the drifted excess
    // only decreases, so the jump skeleton (plus the horizon end) is exact
    for (double a : path.times()) {
        if (a <= u)
            continue;
        double excess = path.value(a) + f.value(a) - base - rate * (a - u);
        if (excess > 0.0)
            return a;
    }
    double hi = path.horizon().hi;
    double excess = path.value(hi) + f.value(hi) - base - rate * (hi - u);
    if (excess > 0.0)
        return hi;
    return kInf;
}

double exceeding_time(const GridPath& path, const Drift& f, double mu, double u) {
    check_exceeding_inputs(Horizon{path.t0(), path.t1()}, mu, u);
    // reference value: the path at the latest node <= u
    std::size_t k0 = std::size_t(std::floor((u - path.t0()) / path.h()));
    if (k0 > path.steps())
        k0 = path.steps();
    while (k0 > 0 && path.node(k0) > u)
        --k0;
    while (k0 < path.steps() && path.node(k0 + 1) <= u)
        ++k0;
    const double base = path.values()[k0] + f.value(u);
    const double rate = f.slope(u) + mu;
    for (std::size_t k = 0; k <= path.steps(); ++k) {
        double a = path.node(k);
        if (a <= u)
            continue;
        double excess = path.values()[k] + f.value(a) - base - rate * (a - u);
        if (excess > 0.0)
            return a;
    }
    return kInf;
}

std::vector<double> exceeding_chain(const JumpPath& path, const Drift& f, double mu,
                                    std::size_t max_count) {
    std::vector<double> chain;
    double u = path.horizon().lo;
    while (chain.size() < max_count) {
        double s = exceeding_time(path, f, mu, u);
        if (!std::isfinite(s))
            break;
        chain.push_back(s);
        if (s >= path.horizon().hi)
            break;
        u = s;
    }
    return chain;
}

std::vector<IsolationVerdict> classify_isolation(const Majorant& m, const ExtremalSet& e,
                                                 const Drift& f, double tol) {
    if (m.vertex_count() == 0)
        throw std::invalid_argument("classify_isolation: empty majorant");
    if (tol <= 0.0) {
        double vr = *std::max_element(m.ys.begin(), m.ys.end()) -
                    *std::min_element(m.ys.begin(), m.ys.end());
        double tr = m.xs.back() - m.xs.front();
        tol = 1e-6 * std::max(tr > 0.0 ? vr / tr : 0.0, 1e-12);
    }

    std::vector<IsolationVerdict> out;
    out.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        double a = e.times[i];
        std::size_t j = m.vertex_at(a);
        if (j == Majorant::npos)
            throw std::invalid_argument("classify_isolation: time is not a majorant vertex");
        IsolationVerdict v;
        v.time = a;
        v.drift_slope = f.slope(a);
        if (j == 0) {
            v.left_slope = kNaN;
            v.predicted_left_isolated = true;   // nothing exists to the left
        } else {
            v.left_slope = m.segment_slope(j - 1);
            v.predicted_left_isolated = std::abs(v.left_slope - v.drift_slope) > tol;
        }
        if (j + 1 == m.vertex_count()) {
            v.right_slope = kNaN;
            v.predicted_right_isolated = true;
        } else {
            v.right_slope = m.segment_slope(j);
            v.predicted_right_isolated = std::abs(v.right_slope - v.drift_slope) > tol;
        }
        v.accumulation_candidate = j > 0 && j + 1 < m.vertex_count() &&
                                   v.drift_slope > v.right_slope &&
                                   v.drift_slope < v.left_slope;
        v.left_gap = i > 0 ? a - e.times[i - 1] : kInf;
        v.right_gap = i + 1 < e.size() ? e.times[i + 1] - a : kInf;
        out.push_back(v);
    }
    return out;
}

namespace {

bool indices_subset(const std::vector<std::size_t>& sub, const std::vector<std::size_t>& sup) {
    std::size_t j = 0;
    for (std::size_t v : sub) {
        while (j < sup.size() && sup[j] < v)
            ++j;
        if (j == sup.size() || sup[j] != v)
            return false;
    }
    return true;
}

} // namespace

bool convex_drift_inclusion_check(const JumpPath& path, const Drift& f,
                                  std::size_t samples_per_gap) {
    if (!f.convex())
        throw std::invalid_argument("convex_drift_inclusion_check: drift must be convex");
    PointSequence base = path_point_sequence(path, samples_per_gap);
    PointSequence drifted = base;
    for (std::size_t i = 0; i < drifted.size(); ++i)
        drifted.ys[i] += f.value(drifted.xs[i]);
    Majorant m0 = upper_hull(base);
    Majorant m1 = upper_hull(drifted);
    return indices_subset(m1.indices, m0.indices);
}

bool convex_drift_inclusion_check(const GridPath& path, const Drift& f) {
    if (!f.convex())
        throw std::invalid_argument("convex_drift_inclusion_check: drift must be convex");
    PointSequence base = path_point_sequence(path);
    PointSequence drifted = base;
    for (std::size_t i = 0; i < drifted.size(); ++i)
        drifted.ys[i] += f.value(drifted.xs[i]);
    Majorant m0 = upper_hull(base);
    Majorant m1 = upper_hull(drifted);
    return indices_subset(m1.indices, m0.indices);
}

} // namespace levyhull
