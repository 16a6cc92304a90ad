#include "levyhull/sticky.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "levyhull/hull.hpp"

namespace levyhull {

ClumpSystem::ClumpSystem(std::vector<double> positions, std::vector<double> velocities,
                         std::vector<double> masses) {
    if (positions.empty() || positions.size() != velocities.size())
        throw std::invalid_argument("ClumpSystem: positions and velocities must match, nonempty");
    if (!masses.empty() && masses.size() != positions.size())
        throw std::invalid_argument("ClumpSystem: mass list length mismatch");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (!std::isfinite(positions[i]) || !std::isfinite(velocities[i]))
            throw std::invalid_argument("ClumpSystem: non-finite initial data");
        if (i > 0 && !(positions[i - 1] < positions[i]))
            throw std::invalid_argument("ClumpSystem: positions must be strictly increasing");
        double mass = masses.empty() ? 1.0 : masses[i];
        if (!std::isfinite(mass) || mass <= 0.0)
            throw std::invalid_argument("ClumpSystem: masses must be positive");
        clumps_.push_back(Clump{mass, velocities[i], positions[i], i, i});
    }
}

double ClumpSystem::total_mass() const {
    double m = 0.0;
    for (const auto& c : clumps_)
        m += c.mass;
    return m;
}

double ClumpSystem::total_momentum() const {
    double p = 0.0;
    for (const auto& c : clumps_)
        p += c.mass * c.velocity;
    return p;
}

std::optional<CollisionEvent> ClumpSystem::next_collision() const {
    std::optional<CollisionEvent> best;
    for (std::size_t i = 0; i + 1 < clumps_.size(); ++i) {
        const Clump& l = clumps_[i];
        const Clump& r = clumps_[i + 1];
        double approach = l.velocity - r.velocity;
        if (approach <= 0.0)
            continue;   // the gap is not closing
        double dt = (r.position - l.position) / approach;
        double when = clock_ + dt;
        if (!best || when < best->time)
            best = CollisionEvent{when, i, l.position + l.velocity * dt};
    }
    return best;
}

MergeRecord ClumpSystem::merge(const CollisionEvent& event) {
    if (event.left + 1 >= clumps_.size())
        throw std::invalid_argument("ClumpSystem: merge event names a missing pair");
    const Clump& l = clumps_[event.left];
    const Clump& r = clumps_[event.left + 1];
    double approach = l.velocity - r.velocity;
    if (approach <= 0.0)
        throw std::invalid_argument("ClumpSystem: merge on a non-approaching pair");
    double when = clock_ + (r.position - l.position) / approach;
    if (when != event.time)
        throw std::invalid_argument("ClumpSystem: stale event, state has moved on");

    double dt = event.time - clock_;
    for (auto& c : clumps_)
        c.position += c.velocity * dt;
    clock_ = event.time;

    Clump fused;
    fused.mass = l.mass + r.mass;
    fused.velocity = (l.mass * l.velocity + r.mass * r.velocity) / fused.mass;
    fused.position = clumps_[event.left].position;   // both sit at the impact point
    fused.lo = l.lo;
    fused.hi = r.hi;
    clumps_[event.left] = fused;
    clumps_.erase(clumps_.begin() + std::ptrdiff_t(event.left) + 1);

    return MergeRecord{clock_, event.left, fused.position, fused.mass, fused.velocity};
}

std::vector<MergeRecord> ClumpSystem::run_to_completion() {
    std::vector<MergeRecord> log;
    while (auto ev = next_collision())
        log.push_back(merge(*ev));
    return log;
}

ClumpSystem init_system(const std::vector<double>& positions,
                        const std::vector<double>& velocities) {
    return ClumpSystem(positions, velocities);
}

std::vector<std::pair<std::size_t, std::size_t>> partition_oracle(
    const std::vector<double>& velocities) {
    if (velocities.empty())
        throw std::invalid_argument("partition_oracle: empty velocity list");
    const std::size_t n = velocities.size();

    // discrete potential: abscissa j carries minus the sum of the first j
    // velocities; its concave majorant's vertex abscissae cut the blocks
    PointSequence pts;
    pts.xs.reserve(n + 1);
    pts.ys.reserve(n + 1);
    pts.tags.assign(n + 1, PointSequence::Tag::Sample);
    double acc = 0.0;
    pts.xs.push_back(0.0);
    pts.ys.push_back(0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(velocities[j]))
            throw std::invalid_argument("partition_oracle: non-finite velocity");
        acc -= velocities[j];
        pts.xs.push_back(double(j + 1));
        pts.ys.push_back(acc);
    }

    Majorant m = upper_hull(pts);
    if (m.collinear_tie)
        throw std::invalid_argument(
            "partition_oracle: degenerate input, potential has exactly collinear points");

    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t v = 0; v + 1 < m.indices.size(); ++v)
        blocks.emplace_back(m.indices[v], m.indices[v + 1] - 1);
    return blocks;
}

TheoremCheck verify_discrete_theorem(const std::vector<double>& velocities) {
    TheoremCheck check;
    check.predicted = partition_oracle(velocities);

    std::vector<double> positions(velocities.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        positions[i] = double(i);
    ClumpSystem sys(positions, velocities);
    const double mass0 = sys.total_mass();
    const double mom0 = sys.total_momentum();
    auto log = sys.run_to_completion();
    check.events = log.size();

    for (const auto& c : sys.clumps())
        check.simulated.emplace_back(c.lo, c.hi);

    double mass_err = std::abs(sys.total_mass() - mass0) / mass0;
    double mom_err = std::abs(sys.total_momentum() - mom0) / (std::abs(mom0) + 1.0);
    check.conservation_error = std::max(mass_err, mom_err);
    check.agree = check.simulated == check.predicted;
    return check;
}

} // namespace levyhull
