#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace levyhull {

// A clump of fused particles on the line; lo..hi is the contiguous range of
// original particle indices it contains.
struct Clump {
    double mass = 1.0;
    double velocity = 0.0;
    double position = 0.0;   // at the system clock
    std::size_t lo = 0;
    std::size_t hi = 0;
};

struct CollisionEvent {
    double time = 0.0;        // absolute time of impact
    std::size_t left = 0;     // index of the left participant in the clump list
    double position = 0.0;    // impact point
};

struct MergeRecord {
    double time = 0.0;
    std::size_t left = 0;     // surviving slot: the left clump's index
    double position = 0.0;
    double mass = 0.0;        // mass after fusion
    double velocity = 0.0;    // velocity after fusion
};

// Free-flight-and-fuse dynamics. Clumps move at constant velocity until two
// neighbours meet; the pair fuses, conserving mass and momentum.
class ClumpSystem {
public:
    ClumpSystem(std::vector<double> positions, std::vector<double> velocities,
                std::vector<double> masses = {});

    const std::vector<Clump>& clumps() const { return clumps_; }
    double clock() const { return clock_; }
    double total_mass() const;
    double total_momentum() const;

    // Earliest upcoming fusion, or nothing when all gaps are non-closing.
    // Ties go to the smallest left index.
    std::optional<CollisionEvent> next_collision() const;

    // Advance to the event and fuse the pair. The event must be the one the
    // current state produces; anything else is stale and rejected.
    MergeRecord merge(const CollisionEvent& event);

    std::vector<MergeRecord> run_to_completion();

private:
    std::vector<Clump> clumps_;
    double clock_ = 0.0;
};

ClumpSystem init_system(const std::vector<double>& positions,
                        const std::vector<double>& velocities);

// Final particle partition predicted by the discrete potential: blocks are
// cut from the concave majorant of the (N+1)-point walk of negated partial
// velocity sums. Exactly collinear potential points make the partition
// ambiguous and are rejected as degenerate.
std::vector<std::pair<std::size_t, std::size_t>> partition_oracle(
    const std::vector<double>& velocities);

// Runs the dynamics from unit-spaced, unit-mass initial data and compares
// the resulting partition with the potential-based prediction.
struct TheoremCheck {
    bool agree = false;
    std::vector<std::pair<std::size_t, std::size_t>> simulated;
    std::vector<std::pair<std::size_t, std::size_t>> predicted;
    std::size_t events = 0;
    double conservation_error = 0.0;   // relative drift in mass and momentum
};
TheoremCheck verify_discrete_theorem(const std::vector<double>& velocities);

} // namespace levyhull
