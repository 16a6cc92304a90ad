#pragma once

#include <cstddef>
#include <vector>

#include "levyhull/drift.hpp"
#include "levyhull/hull.hpp"
#include "levyhull/path.hpp"

namespace levyhull {

// Evolved-potential skeleton at time t > 0: points of a -> psi0*(a) - a^2/(2t)
// together with the undrifted ordinates and the skeleton's concave majorant.
struct PotentialField {
    double t = 1.0;
    PointSequence skeleton;       // drifted ordinates psi0*(a) - a^2/(2t)
    std::vector<double> psi0;     // undrifted ordinates at the same abscissae
    Majorant hull;
};

PotentialField drifted_potential(const JumpPath& psi0, double t, std::size_t samples_per_gap = 16);
PotentialField drifted_potential(const GridPath& psi0, double t);

// Variational evolution of the potential: for each query position x,
//   psi(x, t) = -x^2/(2t) + max over majorant vertices a of
//               [drifted skeleton value at a + x a / t].
// The maximizing vertex index is nondecreasing in x, so a sorted query grid
// is swept in linear time.
std::vector<double> hopf_cole_potential(const PotentialField& field,
                                        const std::vector<double>& xs);

// Rightmost maximizer a*(x) of the variational problem above. Constant
// between shocks, jumps upward across them; at a shock position the value is
// the right end of the coalesced interval (right-continuous convention).
double inverse_lagrangian(const PotentialField& field, double x);

// Forward map: the velocity-field position reached from initial position a,
// read off the majorant's right-hand slope (left-hand at the last vertex).
double lagrangian(const PotentialField& field, double a);

// A hull face whose endpoints are not adjacent in the skeleton spans initial
// positions that have coalesced: one shock at position x = -t * slope with
// mass equal to the face's abscissa span. Faces joining skeleton-adjacent
// points carry the regular (unshocked) part.
struct ShockInterval {
    double a_left = 0.0;
    double a_right = 0.0;
    double x = 0.0;       // shock location in velocity space
    double mass = 0.0;    // a_right - a_left
};
struct ShockStructure {
    std::vector<ShockInterval> shocks;
    double regular_mass = 0.0;    // total abscissa span of non-shock faces
    double total_span = 0.0;      // horizon length, for conservation checks
};
ShockStructure shock_intervals(const PotentialField& field);

} // namespace levyhull
