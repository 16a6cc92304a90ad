#include "levyhull/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levyhull {

namespace {

PotentialField assemble(PointSequence base, double t) {
    PotentialField field;
    field.t = t;
    field.psi0 = base.ys;
    for (std::size_t i = 0; i < base.size(); ++i)
        base.ys[i] -= base.xs[i] * base.xs[i] / (2.0 * t);
    field.skeleton = std::move(base);
    field.hull = upper_hull(field.skeleton);
    return field;
}

void check_time(double t) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::invalid_argument("drifted_potential: evolution time must be positive");
}

} // namespace

PotentialField drifted_potential(const JumpPath& psi0, double t, std::size_t samples_per_gap) {
    check_time(t);
    return assemble(path_point_sequence(psi0, samples_per_gap), t);
}

PotentialField drifted_potential(const GridPath& psi0, double t) {
    check_time(t);
    return assemble(path_point_sequence(psi0), t);
}

std::vector<double> hopf_cole_potential(const PotentialField& field,
                                        const std::vector<double>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i - 1] <= xs[i]))
            throw std::invalid_argument("hopf_cole_potential: query grid must be sorted");

    const Majorant& m = field.hull;
    std::vector<double> out;
    out.reserve(xs.size());
    // the objective's vertex scores are v_j + x a_j / t; as x grows, larger
    // abscissae win, so the best index moves right monotonically
    std::size_t j = 0;
    for (double x : xs) {
        if (!std::isfinite(x))
            throw std::invalid_argument("hopf_cole_potential: non-finite query position");
        auto score = [&](std::size_t k) { return m.ys[k] + x * m.xs[k] / field.t; };
        while (j + 1 < m.vertex_count() && score(j + 1) >= score(j))
            ++j;
        out.push_back(-x * x / (2.0 * field.t) + score(j));
    }
    return out;
}

double inverse_lagrangian(const PotentialField& field, double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("inverse_lagrangian: position must be finite");
    const Majorant& m = field.hull;
    // vertex j maximizes iff the chain slope crosses -x/t there; the
    // rightmost maximizer is the number of segments with slope >= -x/t
    const double target = -x / field.t;
    std::size_t lo = 0, hi = m.segment_count();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (m.segment_slope(mid) >= target)
            lo = mid + 1;
        else
            hi = mid;
    }
    return m.xs[lo];
}

double lagrangian(const PotentialField& field, double a) {
    const Majorant& m = field.hull;
    if (m.vertex_count() < 2)
        throw std::invalid_argument("lagrangian: majorant has no segment");
    if (a < m.xs.front() || a > m.xs.back())
        throw std::invalid_argument("lagrangian: initial position outside the horizon");
    double s = (a >= m.xs.back()) ? majorant_slope(m, a, true) : majorant_slope(m, a, false);
    return -field.t * s;
}

ShockStructure shock_intervals(const PotentialField& field) {
    const Majorant& m = field.hull;
    ShockStructure out;
    out.total_span = m.xs.back() - m.xs.front();
    for (std::size_t j = 0; j + 1 < m.vertex_count(); ++j) {
        bool adjacent = m.indices[j + 1] == m.indices[j] + 1;
        double span = m.xs[j + 1] - m.xs[j];
        if (adjacent) {
            out.regular_mass += span;
        } else {
            ShockInterval s;
            s.a_left = m.xs[j];
            s.a_right = m.xs[j + 1];
            s.x = -field.t * m.segment_slope(j);
            s.mass = span;
            out.shocks.push_back(s);
        }
    }
    return out;
}

} // namespace levyhull
