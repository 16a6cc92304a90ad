#include "levyhull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace levyhull {

namespace {

void require_sorted_points(const PointSequence& pts) {
    if (pts.xs.size() != pts.ys.size() || pts.xs.size() != pts.tags.size())
        throw std::invalid_argument("upper_hull: xs, ys, tags must have equal length");
    if (pts.xs.empty())
        throw std::invalid_argument("upper_hull: point sequence is empty");
    for (std::size_t i = 0; i < pts.xs.size(); ++i) {
        if (!std::isfinite(pts.xs[i]) || !std::isfinite(pts.ys[i]))
            throw std::invalid_argument("upper_hull: non-finite coordinate");
        if (i > 0 && !(pts.xs[i - 1] < pts.xs[i]))
            throw std::invalid_argument("upper_hull: abscissae must be strictly increasing");
    }
}

// Twice the signed area of (o, a, b); positive when the middle point o->a->b
// turns left. For an upper hull the kept turns are strictly right (negative).
double cross(double ox, double oy, double ax, double ay, double bx, double by) {
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

} // namespace

double Majorant::segment_slope(std::size_t i) const {
    if (i + 1 >= xs.size())
        throw std::invalid_argument("Majorant: segment index out of range");
    return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
}

double Majorant::value_at(double a) const {
    if (xs.empty())
        throw std::invalid_argument("Majorant: empty chain");
    if (a < xs.front() || a > xs.back())
        throw std::invalid_argument("Majorant: query abscissa outside the chain");
    auto it = std::lower_bound(xs.begin(), xs.end(), a);
    std::size_t j = std::size_t(it - xs.begin());
    if (j < xs.size() && xs[j] == a)
        return ys[j];
    // a lies strictly inside segment j-1.
    double s = segment_slope(j - 1);
    return ys[j - 1] + s * (a - xs[j - 1]);
}

std::size_t Majorant::vertex_at(double a) const {
    auto it = std::lower_bound(xs.begin(), xs.end(), a);
    if (it != xs.end() && *it == a)
        return std::size_t(it - xs.begin());
    return npos;
}

std::size_t ExtremalSet::argmax_index() const {
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i].is_argmax)
            return i;
    return npos;
}

Majorant upper_hull(const PointSequence& pts, double epsilon) {
    require_sorted_points(pts);
    if (epsilon < 0.0)
        throw std::invalid_argument("upper_hull: epsilon must be nonnegative");

    const std::size_t n = pts.size();
    std::vector<std::size_t> stack;
    stack.reserve(n);
    bool tie = false;
    for (std::size_t i = 0; i < n; ++i) {
        while (stack.size() >= 2) {
            std::size_t o = stack[stack.size() - 2];
            std::size_t a = stack[stack.size() - 1];
            double c = cross(pts.xs[o], pts.ys[o], pts.xs[a], pts.ys[a], pts.xs[i], pts.ys[i]);
            if (c == 0.0)
                tie = true;
            if (c >= -epsilon)
                stack.pop_back();   // middle point is not a strict vertex
            else
                break;
        }
        stack.push_back(i);
    }

    Majorant m;
    m.collinear_tie = tie;
    m.indices = std::move(stack);
    m.xs.reserve(m.indices.size());
    m.ys.reserve(m.indices.size());
    for (std::size_t idx : m.indices) {
        m.xs.push_back(pts.xs[idx]);
        m.ys.push_back(pts.ys[idx]);
    }
    return m;
}

PointSequence path_point_sequence(const JumpPath& path, std::size_t samples_per_gap) {
    const Horizon h = path.horizon();
    const auto& jt = path.times();
    PointSequence pts;
    const std::size_t reserve = jt.size() + 2 + samples_per_gap * (jt.size() + 1);
    pts.xs.reserve(reserve);
    pts.ys.reserve(reserve);
    pts.tags.reserve(reserve);

    auto push = [&](double x, double y, PointSequence::Tag tag) {
        pts.xs.push_back(x);
        pts.ys.push_back(y);
        pts.tags.push_back(tag);
    };
    auto push_samples = [&](double a, double b) {
        for (std::size_t k = 1; k <= samples_per_gap; ++k) {
            double x = a + (b - a) * double(k) / double(samples_per_gap + 1);
            if (x <= a || x >= b)
                continue;   // degenerate spacing on a microscopic gap
            push(x, path.value(x), PointSequence::Tag::Sample);
        }
    };

    push(h.lo, path.initial(), PointSequence::Tag::Sample);
    double prev = h.lo;
    for (double a : jt) {
        push_samples(prev, a);
        double pre = path.left_limit(a);
        double post = path.value(a);
        // the hull sees the single point (a, X*(a)); the tag records which
        // one-sided value realises it, i.e. the jump's sign
        if (post >= pre)
            push(a, post, PointSequence::Tag::PostJump);
        else
            push(a, pre, PointSequence::Tag::PreJump);
        prev = a;
    }
    push_samples(prev, h.hi);
    push(h.hi, path.value(h.hi), PointSequence::Tag::Sample);
    return pts;
}

PointSequence path_point_sequence(const GridPath& path) {
    PointSequence pts;
    const std::size_t n = path.values().size();
    pts.xs.reserve(n);
    pts.ys.reserve(n);
    pts.tags.assign(n, PointSequence::Tag::Sample);
    for (std::size_t k = 0; k < n; ++k) {
        pts.xs.push_back(path.node(k));
        pts.ys.push_back(path.values()[k]);
    }
    return pts;
}

MajorantOfPath concave_majorant_of_path(const JumpPath& path) {
    MajorantOfPath out;
    out.points = path_point_sequence(path);
    out.majorant = upper_hull(out.points);
    return out;
}

MajorantOfPath concave_majorant_of_path(const GridPath& path) {
    MajorantOfPath out;
    out.points = path_point_sequence(path);
    out.majorant = upper_hull(out.points);
    return out;
}

ExtremalSet extremal_times(const PointSequence& pts, const Majorant& m, Side side) {
    ExtremalSet e;
    e.side = side;
    e.times = m.xs;
    e.flags.resize(m.xs.size());

    // T = last time achieving the supremum of the starred values, scanned over
    // the hull vertices (the supremum of a point sequence always sits on its
    // majorant, so restricting to vertices loses nothing).
    std::size_t best = m.indices.empty() ? pts.size() : m.indices.front();
    for (std::size_t k = 1; k < m.indices.size(); ++k) {
        std::size_t i = m.indices[k];
        if (pts.ys[i] >= pts.ys[best])
            best = i;
    }

    for (std::size_t i = 0; i < m.indices.size(); ++i) {
        std::size_t src = m.indices[i];
        ExtremalFlags f;
        switch (pts.tags[src]) {
            case PointSequence::Tag::Sample:   f.is_jump = false; f.jump_sign = 0;  break;
            case PointSequence::Tag::PreJump:  f.is_jump = true;  f.jump_sign = -1; break;
            case PointSequence::Tag::PostJump: f.is_jump = true;  f.jump_sign = +1; break;
        }
        f.is_argmax = (src == best);
        e.flags[i] = f;
    }
    return e;
}

namespace {

JumpPath negate(const JumpPath& p) {
    std::vector<double> sizes = p.sizes();
    for (double& s : sizes) s = -s;
    return JumpPath(p.horizon(), -p.initial(), p.times(), std::move(sizes));
}

GridPath negate(const GridPath& p) {
    std::vector<double> v = p.values();
    for (double& x : v) x = -x;
    return GridPath(p.t0(), p.h(), std::move(v));
}

ExtremalSet flip_to_inferior(ExtremalSet e) {
    e.side = Side::Inferior;
    for (auto& f : e.flags)
        f.jump_sign = -f.jump_sign;   // signs relative to the original path
    return e;
}

} // namespace

ExtremalSet extremal_superior_times(const JumpPath& path) {
    auto mp = concave_majorant_of_path(path);
    return extremal_times(mp.points, mp.majorant, Side::Superior);
}

ExtremalSet extremal_superior_times(const GridPath& path) {
    auto mp = concave_majorant_of_path(path);
    return extremal_times(mp.points, mp.majorant, Side::Superior);
}

ExtremalSet extremal_inferior_times(const JumpPath& path) {
    return flip_to_inferior(extremal_superior_times(negate(path)));
}

ExtremalSet extremal_inferior_times(const GridPath& path) {
    return flip_to_inferior(extremal_superior_times(negate(path)));
}

double majorant_slope(const Majorant& m, double a, bool left_side) {
    if (m.vertex_count() < 2)
        throw std::invalid_argument("majorant_slope: chain has no segment");
    if (a < m.xs.front() || a > m.xs.back())
        throw std::invalid_argument("majorant_slope: abscissa outside the chain");
    if (left_side && a <= m.xs.front())
        throw std::invalid_argument("majorant_slope: no segment to the left of the first vertex");
    if (!left_side && a >= m.xs.back())
        throw std::invalid_argument("majorant_slope: no segment to the right of the last vertex");

    auto it = std::lower_bound(m.xs.begin(), m.xs.end(), a);
    std::size_t j = std::size_t(it - m.xs.begin());
    if (j < m.xs.size() && m.xs[j] == a) {
        // exactly at vertex j
        return left_side ? m.segment_slope(j - 1) : m.segment_slope(j);
    }
    // strictly inside segment j-1: both one-sided slopes agree
    return m.segment_slope(j - 1);
}

double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff_distance: undefined for an empty set");
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] > a[i])
            throw std::invalid_argument("hausdorff_distance: first set is not sorted");
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] > b[i])
            throw std::invalid_argument("hausdorff_distance: second set is not sorted");

    auto directed = [](const std::vector<double>& from, const std::vector<double>& to) {
        double worst = 0.0;
        std::size_t j = 0;
        for (double t : from) {
            while (j + 1 < to.size() && to[j + 1] <= t)
                ++j;
            double d = std::abs(to[j] - t);
            if (j + 1 < to.size())
                d = std::min(d, std::abs(to[j + 1] - t));
            worst = std::max(worst, d);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

double lebesgue_estimate(const std::vector<double>& times, double cell_width) {
    if (!(cell_width > 0.0) || !std::isfinite(cell_width))
        throw std::invalid_argument("lebesgue_estimate: cell width must be positive");
    std::unordered_set<long long> cells;
    cells.reserve(times.size());
    for (double t : times) {
        if (!std::isfinite(t))
            throw std::invalid_argument("lebesgue_estimate: non-finite time");
        cells.insert((long long)std::floor(t / cell_width));
    }
    return double(cells.size()) * cell_width;
}

bool check_clear_condition(const PointSequence& pts, const Majorant& m, double tol) {
    if (tol < 0.0)
        throw std::invalid_argument("check_clear_condition: tolerance must be nonnegative");
    std::size_t vi = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (vi < m.indices.size() && m.indices[vi] == i) {
            ++vi;
            continue;   // vertices touch the chain by definition
        }
        double gap = m.value_at(pts.xs[i]) - pts.ys[i];
        if (gap <= tol)
            return false;   // inclusive: a non-vertex on the chain is never clear
    }
    return true;
}

bool check_clear_condition(const GridPath& path, double tol) {
    auto mp = concave_majorant_of_path(path);
    return check_clear_condition(mp.points, mp.majorant, tol);
}

bool check_clear_condition(const JumpPath& path, double tol) {
    auto mp = concave_majorant_of_path(path);
    return check_clear_condition(mp.points, mp.majorant, tol);
}

} // namespace levyhull
