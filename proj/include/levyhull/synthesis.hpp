#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "levyhull/path.hpp"
#include "levyhull/rng.hpp"

namespace levyhull {

// Law of a single jump size for compound-Poisson simulation.
struct JumpLaw {
    enum class Kind { PointMass, Normal, Uniform };
    Kind kind = Kind::PointMass;
    double a = 1.0;   // point mass value / normal mean / uniform lower end
    double b = 0.0;   // normal standard deviation / uniform upper end

    static JumpLaw point_mass(double value);
    static JumpLaw normal(double mean, double sd);
    static JumpLaw uniform(double lo, double hi);

    double sample(std::mt19937_64& eng) const;
    // E[|J| ; |J| < eps], by quadrature where no closed form exists.
    double mean_abs_below(double eps) const;
};

// Jump intensity specification for a bounded-variation process. Three
// families:
//   compound_poisson  rate * law(dx), finite activity
//   stable_like       c_s |x|^{-1-alpha} dx on floor_s <= |x| <= cap per sign
//                     s (alpha < 1; floor_s = 0 allows infinite activity)
//   table             finite list of (size, rate) atoms
// A linear drift coefficient may be recorded alongside; it is carried in
// reports but never added to simulated paths (pure-jump dynamics).
class LevyMeasure {
public:
    enum class Family { CompoundPoisson, StableLike, Table };

    static LevyMeasure compound_poisson(double rate, JumpLaw law, double drift = 0.0);
    static LevyMeasure stable_like(double c_plus, double c_minus, double alpha, double cap,
                                   double floor_plus = 0.0, double floor_minus = 0.0,
                                   double drift = 0.0);
    static LevyMeasure table(std::vector<std::pair<double, double>> size_rate_atoms,
                             double drift = 0.0);

    Family family() const { return family_; }
    double drift() const { return drift_; }

    // compound-Poisson accessors
    double rate() const;
    const JumpLaw& law() const;

    // stable-like accessors
    double c_plus() const { return c_plus_; }
    double c_minus() const { return c_minus_; }
    double alpha() const { return alpha_; }
    double cap() const { return cap_; }
    double floor_plus() const { return floor_plus_; }
    double floor_minus() const { return floor_minus_; }

    // table accessor
    const std::vector<std::pair<double, double>>& atoms() const;

    // total mass of {|x| >= eps}; finite for every eps > 0
    double tail_mass(double eps) const;
    // integral of (1 ^ |x|) against the measure; finiteness is enforced at
    // construction (bounded-variation requirement)
    double bv_integral() const;
    // integral of |x| over {|x| < eps}: the expected total-variation mass
    // discarded per unit time when truncating at eps
    double small_jump_mean_abs(double eps) const;
    // mean jump contribution per unit time above the truncation level,
    // integral of x over {|x| >= eps}
    double mean_above(double eps) const;

private:
    LevyMeasure() = default;

    Family family_ = Family::CompoundPoisson;
    double drift_ = 0.0;
    // compound poisson
    double rate_ = 0.0;
    JumpLaw law_;
    // stable-like
    double c_plus_ = 0.0, c_minus_ = 0.0, alpha_ = 0.5, cap_ = 1.0;
    double floor_plus_ = 0.0, floor_minus_ = 0.0;
    // table
    std::vector<std::pair<double, double>> atoms_;
};

// Truncated simulation result: the path carrying every jump of magnitude
// >= the truncation level, plus the expected total-variation mass of the
// omitted small jumps over the whole horizon (a size for the bias, not a
// correction applied to the path).
struct BvSimulation {
    JumpPath path;
    double truncation_bias = 0.0;
};

// Finite-activity simulation: every jump of the measure. Requires finite
// total rate (compound-Poisson, table, or stable-like with both floors > 0).
JumpPath simulate_compound_poisson(const LevyMeasure& spec, Horizon horizon, RngStream rng);

// Simulation keeping jumps with |size| >= eps. For a fixed (seed, stream),
// paths across different eps are coupled exactly: the eps-path's jumps are
// precisely the eps'-path's jumps of magnitude >= eps whenever eps' <= eps.
BvSimulation simulate_bv_levy(const LevyMeasure& spec, double eps, Horizon horizon,
                              RngStream rng);

// Standard Brownian motion sampled on a grid, X(t0) = 0.
GridPath simulate_brownian(const Grid& grid, RngStream rng);

// Euler scheme X_{k+1} = X_k + phi(t_k, X_k) dB_k + psi(t_k, X_k) h.
// With phi == 1 and psi == 0 this reproduces simulate_brownian bit for bit.
struct SimulationFailure : std::runtime_error {
    SimulationFailure(const std::string& what, std::size_t node_index)
        : std::runtime_error(what), node(node_index) {}
    std::size_t node;
};
GridPath simulate_ito(const std::function<double(double, double)>& phi,
                      const std::function<double(double, double)>& psi,
                      const Grid& grid, RngStream rng);

// Monte Carlo probe of the process's behaviour immediately after zero:
// across a truncation ladder, the fraction of replicas whose path sits
// strictly above zero at the probe time, and the fraction that never go
// negative on the simulated skeleton of [0, probe].
struct RegularityEstimate {
    std::vector<double> epsilons;
    std::vector<double> fraction_positive_at_probe;
    std::vector<double> fraction_nonnegative;
    double probe = 0.0;
    std::string verdict;   // likely-downwards / likely-upwards /
                           // likely-non-dissymmetric / inconclusive
};
RegularityEstimate estimate_half_line_regularity(const LevyMeasure& spec,
                                                 const std::vector<double>& eps_ladder,
                                                 std::size_t replicas, RngStream rng,
                                                 double probe = 0.0);

} // namespace levyhull
