#pragma once

#include <cstddef>
#include <vector>

#include "levyhull/hull.hpp"
#include "levyhull/path.hpp"

namespace levyhull {

// Deterministic perturbation f added to a path, with an exact derivative.
// Shapes: zero, linear b*a, quadratic g*a^2, the parabola -a^2/(2t), and a
// sampled table (value and slope given at strictly increasing abscissae,
// linearly interpolated in between).
struct Drift {
    enum class Kind { Zero, Linear, Quadratic, Parabolic, Sampled };
    Kind kind = Kind::Zero;
    double beta = 0.0;    // linear coefficient
    double gamma = 0.0;   // quadratic coefficient
    double t = 1.0;       // parabola time scale, must be positive
    std::vector<double> xs, fs, slopes;   // sampled table

    static Drift zero();
    static Drift linear(double beta);
    static Drift quadratic(double gamma);
    static Drift parabolic(double t);
    static Drift sampled(std::vector<double> xs, std::vector<double> fs,
                         std::vector<double> slopes);

    double value(double a) const;
    double slope(double a) const;
    bool concave() const;   // true when the shape is concave by construction
    bool convex() const;
};

// Skeleton of the drifted path a -> X*(a) + f(a): the path skeleton with
// witness samples in every gap (the drift bends the flats, so interior
// points can become hull vertices) and f added to each ordinate.
PointSequence add_drift(const JumpPath& path, const Drift& f, std::size_t samples_per_gap = 16);
GridPath add_drift(const GridPath& path, const Drift& f);

// First time a > u at which X(a) - X(u) + f(a) - f(u) exceeds the line
// (f'(u) + mu)(a - u); +infinity when no such time exists in the horizon.
// For concave f the excess can only rise at a positive jump, so scanning the
// jump skeleton is exact; on grid paths every node is checked.
double exceeding_time(const JumpPath& path, const Drift& f, double mu, double u);
double exceeding_time(const GridPath& path, const Drift& f, double mu, double u);

// Iterated exceeding times S_1 < S_2 < ... started from the horizon's left
// end; stops at the first +infinity or after max_count entries.
std::vector<double> exceeding_chain(const JumpPath& path, const Drift& f, double mu,
                                    std::size_t max_count = 64);

// Per-vertex isolation verdicts for the extremal set of a drifted path: a
// side is predicted isolated when the chain's one-sided slope there differs
// from the drift's slope by more than tol; a vertex whose drift slope falls
// strictly inside the (right, left) slope cone is a candidate accumulation
// point. Observed nearest-neighbour gaps within E are reported alongside.
struct IsolationVerdict {
    double time = 0.0;
    double left_slope = 0.0;          // NaN when the vertex is the chain's first
    double right_slope = 0.0;         // NaN when the vertex is the chain's last
    double drift_slope = 0.0;
    bool predicted_left_isolated = true;
    bool predicted_right_isolated = true;
    bool accumulation_candidate = false;
    double left_gap = 0.0;            // +infinity at the extremes of E
    double right_gap = 0.0;
};
std::vector<IsolationVerdict> classify_isolation(const Majorant& m, const ExtremalSet& e,
                                                 const Drift& f, double tol = 0.0);

// Checks E+(X + f) is contained in E+(X) for convex f, comparing vertex
// time sets on a shared skeleton. Errors if f is not convex by construction.
bool convex_drift_inclusion_check(const JumpPath& path, const Drift& f,
                                  std::size_t samples_per_gap = 16);
bool convex_drift_inclusion_check(const GridPath& path, const Drift& f);

} // namespace levyhull
