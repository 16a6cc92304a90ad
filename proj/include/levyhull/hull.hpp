#pragma once

#include <cstddef>
#include <vector>

#include "levyhull/path.hpp"

namespace levyhull {

// Finite planar point set with strictly increasing abscissae. Each point
// remembers where it came from: a plain sample, or the pre/post-jump value
// retained at a jump time (the hull sees max(X(a-), X(a)) there, so the tag
// doubles as the jump sign).
struct PointSequence {
    enum class Tag : unsigned char { Sample, PreJump, PostJump };
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<Tag> tags;

    std::size_t size() const { return xs.size(); }
};

// Concave piecewise-linear chain: vertex abscissae strictly increasing,
// segment slopes strictly decreasing. Vertices are a subset of the source
// points; `indices` maps each vertex back into the source sequence.
struct Majorant {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<std::size_t> indices;
    bool collinear_tie = false;   // an exactly collinear triple was resolved away

    std::size_t vertex_count() const { return xs.size(); }
    std::size_t segment_count() const { return xs.empty() ? 0 : xs.size() - 1; }
    double segment_slope(std::size_t i) const;

    // Chain evaluation; a must lie within [first, last] abscissa.
    double value_at(double a) const;

    // Exact vertex lookup: index of the vertex at abscissa a, or npos.
    static constexpr std::size_t npos = std::size_t(-1);
    std::size_t vertex_at(double a) const;
};

enum class Side { Superior, Inferior };

struct ExtremalFlags {
    bool is_jump = false;
    int jump_sign = 0;       // sign of the path's jump at this time, 0 for samples
    bool is_argmax = false;  // last time achieving the extremal starred value
};

// Extremal times of one side of a path: the vertex abscissae of its concave
// majorant (superior side) or convex minorant (inferior side).
struct ExtremalSet {
    Side side = Side::Superior;
    std::vector<double> times;
    std::vector<ExtremalFlags> flags;

    std::size_t size() const { return times.size(); }
    std::size_t argmax_index() const;  // position of the is_argmax flag, npos if absent
    static constexpr std::size_t npos = std::size_t(-1);
};

// Upper hull of a sorted point sequence by monotone chain. Orientation tests
// are exact floating-point comparisons by default; epsilon > 0 additionally
// drops nearly-collinear middle points (for noisy downstream data). Exactly
// collinear middle points are never vertices. First and last points always are.
Majorant upper_hull(const PointSequence& pts, double epsilon = 0.0);

// Hull skeleton of a path. For a JumpPath: both horizon endpoints plus, at
// each jump time a, the single point (a, X*(a)); with samples_per_gap > 0,
// that many equally spaced witness samples inside every inter-event gap
// (needed once a drift bends the flats; redundant but harmless for pure
// jump paths, where they are collinear and never become vertices).
PointSequence path_point_sequence(const JumpPath& path, std::size_t samples_per_gap = 0);
PointSequence path_point_sequence(const GridPath& path);

struct MajorantOfPath {
    PointSequence points;
    Majorant majorant;
};

MajorantOfPath concave_majorant_of_path(const JumpPath& path);
MajorantOfPath concave_majorant_of_path(const GridPath& path);

// Extremal times read off a hull; flags come from the point tags plus the
// last-argmax of the starred values over the hull vertices (the supremum of
// the point sequence always sits on its majorant).
ExtremalSet extremal_times(const PointSequence& pts, const Majorant& m, Side side);

ExtremalSet extremal_superior_times(const JumpPath& path);
ExtremalSet extremal_superior_times(const GridPath& path);
// Inferior side via the exact symmetry E-(X) = E+(-X); flags are reported
// relative to the original path (jump signs un-negated).
ExtremalSet extremal_inferior_times(const JumpPath& path);
ExtremalSet extremal_inferior_times(const GridPath& path);

// One-sided chain slope at a; `left_side` selects the segment ending at a.
// Boundary contract: the left slope needs a > first vertex, the right slope
// a < last vertex; a must lie on the chain's abscissa range.
double majorant_slope(const Majorant& m, double a, bool left_side);

// Hausdorff distance between two finite nonempty sorted time sets, by a
// linear merged sweep. Empty input is an error (undefined distance).
double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b);

// Crude measure estimate: number of distinct width-w cells hit, times w.
double lebesgue_estimate(const std::vector<double>& times, double cell_width);

// True iff no non-vertex point comes within tol (vertically) of the chain:
// the hull boundary touches the point set only at extreme points.
bool check_clear_condition(const PointSequence& pts, const Majorant& m, double tol);
bool check_clear_condition(const GridPath& path, double tol);
bool check_clear_condition(const JumpPath& path, double tol);

} // namespace levyhull
