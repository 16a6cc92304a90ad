#pragma once

#include <cstddef>
#include <vector>

namespace levyhull {

struct Horizon {
    double lo = 0.0;
    double hi = 1.0;
    double length() const { return hi - lo; }
};

// Uniform grid descriptor: nodes t0 + k*h for k = 0..n.
struct Grid {
    double t0 = 0.0;
    double h = 0.0;
    std::size_t n = 0;
};

// Right-continuous pure-jump path on a horizon: finitely many jumps at strictly
// increasing times strictly inside the horizon, constant between jumps.
class JumpPath {
public:
    JumpPath(Horizon horizon, double initial,
             std::vector<double> times, std::vector<double> sizes);

    const Horizon& horizon() const { return horizon_; }
    double initial() const { return initial_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& sizes() const { return sizes_; }
    std::size_t jump_count() const { return times_.size(); }

    double value(double a) const;       // X(a), right-continuous
    double left_limit(double a) const;  // X(a-); equals initial at the left edge
    double star(double a) const;        // max(X(a-), X(a))
    double terminal() const { return value(horizon_.hi); }
    double total_variation() const;

    // Exact membership tests against the stored jump times.
    bool is_jump_time(double a) const;
    int jump_sign(double a) const;      // +1 / -1, 0 when a is not a jump time

private:
    void check_query(double a) const;

    Horizon horizon_;
    double initial_;
    std::vector<double> times_;
    std::vector<double> sizes_;
    std::vector<double> prefix_;        // prefix_[k] = sizes_[0] + ... + sizes_[k-1]
};

// Sampled path on a uniform grid; values[k] is the path at t0 + k*h.
class GridPath {
public:
    GridPath(double t0, double h, std::vector<double> values);

    double t0() const { return t0_; }
    double h() const { return h_; }
    double t1() const { return t0_ + h_ * double(steps()); }
    std::size_t steps() const { return values_.size() - 1; }
    double node(std::size_t k) const { return t0_ + h_ * double(k); }
    const std::vector<double>& values() const { return values_; }
    double value(std::size_t k) const { return values_.at(k); }

private:
    double t0_;
    double h_;
    std::vector<double> values_;
};

// X*(a) = max(X(a-), X(a)). Grid paths carry no jumps, so star == value there.
double star_value(const JumpPath& path, double a);
double star_value(const GridPath& path, double a);

// Time shift theta_T: (theta_T X)(a) = X(T + a). Pure shift of the time axis;
// errors when the shifted horizon no longer intersects the original one.
JumpPath translate_path(const JumpPath& path, double T);
GridPath translate_path(const GridPath& path, double T);

// Reversal at a: s -> X(a) - X((a-s)-) on [0, a - t0]. Jumps land at mirrored
// times a - t with their sizes unchanged; a jump exactly at a becomes the
// initial value of the reversed path.
JumpPath reverse_path(const JumpPath& path, double a);
GridPath reverse_path(const GridPath& path, double a);

// Exact primitive of a piecewise-constant path, Z(t0) = 0.
double integral_value(const JumpPath& path, double a);

// Primitive sampled on a uniform grid. For a JumpPath the node values are the
// exact integral (no quadrature error); for a GridPath the cumulative
// trapezoid rule on its own grid.
GridPath integrate_path(const JumpPath& path, std::size_t steps);
GridPath integrate_path(const GridPath& path);

// Every stride-th node of a grid path, endpoints included; the stride must
// divide the step count. Used to compare grid resolutions along one common
// trajectory instead of across independent draws.
GridPath subsample_path(const GridPath& path, std::size_t stride);

} // namespace levyhull
