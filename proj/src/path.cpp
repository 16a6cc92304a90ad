#include "levyhull/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levyhull {

JumpPath::JumpPath(Horizon horizon, double initial,
                   std::vector<double> times, std::vector<double> sizes)
    : horizon_(horizon), initial_(initial),
      times_(std::move(times)), sizes_(std::move(sizes)) {
    if (!(horizon_.lo < horizon_.hi))
        throw std::invalid_argument("JumpPath: horizon must have positive length");
    if (times_.size() != sizes_.size())
        throw std::invalid_argument("JumpPath: times/sizes length mismatch");
    if (!std::isfinite(initial_))
        throw std::invalid_argument("JumpPath: non-finite initial value");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!std::isfinite(times_[i]) || !std::isfinite(sizes_[i]))
            throw std::invalid_argument("JumpPath: non-finite jump data");
        if (sizes_[i] == 0.0)
            throw std::invalid_argument("JumpPath: jump sizes must be nonzero");
        if (!(times_[i] > horizon_.lo && times_[i] < horizon_.hi))
            throw std::invalid_argument("JumpPath: jump times must lie strictly inside the horizon");
        if (i > 0 && !(times_[i] > times_[i - 1]))
            throw std::invalid_argument("JumpPath: jump times must be strictly increasing");
    }
    prefix_.resize(times_.size() + 1);
    prefix_[0] = 0.0;
    for (std::size_t i = 0; i < sizes_.size(); ++i)
        prefix_[i + 1] = prefix_[i] + sizes_[i];
}

void JumpPath::check_query(double a) const {
    if (!(a >= horizon_.lo && a <= horizon_.hi))
        throw std::invalid_argument("JumpPath: query time outside the horizon");
}

double JumpPath::value(double a) const {
    check_query(a);
    const auto it = std::upper_bound(times_.begin(), times_.end(), a);
    return initial_ + prefix_[std::size_t(it - times_.begin())];
}

double JumpPath::left_limit(double a) const {
    check_query(a);
    const auto it = std::lower_bound(times_.begin(), times_.end(), a);
    return initial_ + prefix_[std::size_t(it - times_.begin())];
}

double JumpPath::star(double a) const {
    return std::max(value(a), left_limit(a));
}

double JumpPath::total_variation() const {
    double tv = 0.0;
    for (double s : sizes_) tv += std::abs(s);
    return tv;
}

bool JumpPath::is_jump_time(double a) const {
    return std::binary_search(times_.begin(), times_.end(), a);
}

int JumpPath::jump_sign(double a) const {
    const auto it = std::lower_bound(times_.begin(), times_.end(), a);
    if (it == times_.end() || *it != a) return 0;
    const double s = sizes_[std::size_t(it - times_.begin())];
    return s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
}

GridPath::GridPath(double t0, double h, std::vector<double> values)
    : t0_(t0), h_(h), values_(std::move(values)) {
    if (!(h_ > 0.0)) throw std::invalid_argument("GridPath: step must be positive");
    if (values_.size() < 2) throw std::invalid_argument("GridPath: need at least two nodes");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("GridPath: non-finite value");
}

double star_value(const JumpPath& path, double a) { return path.star(a); }

double star_value(const GridPath& path, double a) {
    const double k = (a - path.t0()) / path.h();
    const auto idx = std::size_t(std::llround(k));
    if (idx > path.steps() || std::abs(k - double(idx)) > 1e-9)
        throw std::invalid_argument("star_value: time is not a grid node");
    return path.value(idx);
}

namespace {
void check_shift(double T, double length) {
    if (!std::isfinite(T)) throw std::invalid_argument("translate_path: non-finite shift");
    if (std::abs(T) >= length)
        throw std::invalid_argument("translate_path: shifted horizon does not intersect the original");
}
} // namespace

JumpPath translate_path(const JumpPath& path, double T) {
    check_shift(T, path.horizon().length());
    std::vector<double> times = path.times();
    for (double& t : times) t -= T;
    return JumpPath({path.horizon().lo - T, path.horizon().hi - T},
                    path.initial(), std::move(times), path.sizes());
}

GridPath translate_path(const GridPath& path, double T) {
    check_shift(T, path.t1() - path.t0());
    return GridPath(path.t0() - T, path.h(), path.values());
}

JumpPath reverse_path(const JumpPath& path, double a) {
    if (!(a >= path.horizon().lo && a <= path.horizon().hi))
        throw std::invalid_argument("reverse_path: time outside the horizon");
    if (!(a > path.horizon().lo))
        throw std::invalid_argument("reverse_path: reversed horizon would be empty");
    // X(a) - X((a-s)-): the jump at time t < a reappears at s = a - t with the
    // same size; a jump exactly at a contributes the reversed initial value.
    const double initial = path.value(a) - path.left_limit(a);
    std::vector<double> times, sizes;
    const auto& jt = path.times();
    const auto& js = path.sizes();
    for (std::size_t i = jt.size(); i-- > 0;) {
        if (jt[i] >= a) continue;
        times.push_back(a - jt[i]);
        sizes.push_back(js[i]);
    }
    return JumpPath({0.0, a - path.horizon().lo}, initial,
                    std::move(times), std::move(sizes));
}

GridPath reverse_path(const GridPath& path, double a) {
    const double kf = (a - path.t0()) / path.h();
    const auto k = std::size_t(std::llround(kf));
    if (k > path.steps() || std::abs(kf - double(k)) > 1e-9)
        throw std::invalid_argument("reverse_path: time is not a grid node");
    if (k == 0)
        throw std::invalid_argument("reverse_path: reversed horizon would be empty");
    std::vector<double> w(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        w[i] = path.value(k) - path.value(k - i);
    return GridPath(0.0, path.h(), std::move(w));
}

double integral_value(const JumpPath& path, double a) {
    if (!(a >= path.horizon().lo && a <= path.horizon().hi))
        throw std::invalid_argument("integral_value: time outside the horizon");
    double z = 0.0;
    double level = path.initial();
    double prev = path.horizon().lo;
    const auto& jt = path.times();
    const auto& js = path.sizes();
    for (std::size_t i = 0; i < jt.size() && jt[i] <= a; ++i) {
        z += level * (jt[i] - prev);
        level += js[i];
        prev = jt[i];
    }
    z += level * (a - prev);
    return z;
}

GridPath integrate_path(const JumpPath& path, std::size_t steps) {
    if (steps < 1) throw std::invalid_argument("integrate_path: need at least one step");
    const double h = path.horizon().length() / double(steps);
    std::vector<double> z(steps + 1);
    // merged sweep over grid nodes and jump times; each node gets the exact
    // integral of the step path
    double acc = 0.0;
    double level = path.initial();
    double prev = path.horizon().lo;
    std::size_t j = 0;
    const auto& jt = path.times();
    const auto& js = path.sizes();
    for (std::size_t k = 0; k < z.size(); ++k) {
        const double t = (k == steps) ? path.horizon().hi
                                      : path.horizon().lo + h * double(k);
        while (j < jt.size() && jt[j] <= t) {
            acc += level * (jt[j] - prev);
            level += js[j];
            prev = jt[j];
            ++j;
        }
        z[k] = acc + level * (t - prev);
    }
    return GridPath(path.horizon().lo, h, std::move(z));
}

GridPath integrate_path(const GridPath& path) {
    std::vector<double> z(path.values().size());
    z[0] = 0.0;
    for (std::size_t k = 1; k < z.size(); ++k)
        z[k] = z[k - 1] + 0.5 * path.h() * (path.value(k - 1) + path.value(k));
    return GridPath(path.t0(), path.h(), std::move(z));
}

GridPath subsample_path(const GridPath& path, std::size_t stride) {
    if (stride == 0)
        throw std::invalid_argument("subsample_path: stride must be positive");
    if (path.steps() % stride != 0)
        throw std::invalid_argument("subsample_path: stride must divide the step count");
    std::vector<double> z;
    z.reserve(path.steps() / stride + 1);
    for (std::size_t k = 0; k <= path.steps(); k += stride)
        z.push_back(path.value(k));
    return GridPath(path.t0(), path.h() * double(stride), std::move(z));
}

} // namespace levyhull
