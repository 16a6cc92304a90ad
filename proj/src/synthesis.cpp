#include "levyhull/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "levyhull/quadrature.hpp"

namespace levyhull {

namespace {

constexpr double kPi = 3.14159265358979323846;

double canonical(std::mt19937_64& eng) {
    return std::generate_canonical<double, 53>(eng);
}

double normal_pdf(double x, double mean, double sd) {
    double z = (x - mean) / sd;
    return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * kPi));
}

// integral of |x| over [p, q]
double abs_primitive(double p, double q) {
    auto F = [](double x) { return 0.5 * x * std::abs(x); };
    return F(q) - F(p);
}

} // namespace

JumpLaw JumpLaw::point_mass(double value) {
    if (!std::isfinite(value) || value == 0.0)
        throw std::invalid_argument("JumpLaw: point mass must be finite and nonzero");
    JumpLaw l;
    l.kind = Kind::PointMass;
    l.a = value;
    return l;
}

JumpLaw JumpLaw::normal(double mean, double sd) {
    if (!std::isfinite(mean) || !std::isfinite(sd) || sd <= 0.0)
        throw std::invalid_argument("JumpLaw: normal law needs finite mean and positive sd");
    JumpLaw l;
    l.kind = Kind::Normal;
    l.a = mean;
    l.b = sd;
    return l;
}

JumpLaw JumpLaw::uniform(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::invalid_argument("JumpLaw: uniform law needs lo < hi, both finite");
    JumpLaw l;
    l.kind = Kind::Uniform;
    l.a = lo;
    l.b = hi;
    return l;
}

double JumpLaw::sample(std::mt19937_64& eng) const {
    switch (kind) {
        case Kind::PointMass:
            return a;
        case Kind::Normal:
            return std::normal_distribution<double>(a, b)(eng);
        case Kind::Uniform:
            return a + (b - a) * canonical(eng);
    }
    throw std::logic_error("JumpLaw: unknown kind");
}

double JumpLaw::mean_abs_below(double eps) const {
    if (eps <= 0.0)
        return 0.0;
    switch (kind) {
        case Kind::PointMass:
            return std::abs(a) < eps ? std::abs(a) : 0.0;
        case Kind::Normal: {
            double lo = std::max(-eps, a - 10.0 * b);
            double hi = std::min(eps, a + 10.0 * b);
            if (lo >= hi)
                return 0.0;
            auto f = [&](double x) { return std::abs(x) * normal_pdf(x, a, b); };
            const auto& q = gauss64();
            if (lo < 0.0 && hi > 0.0)
                return q.integrate(f, lo, 0.0) + q.integrate(f, 0.0, hi);
            return q.integrate(f, lo, hi);
        }
        case Kind::Uniform: {
            double p = std::max(a, -eps);
            double q = std::min(b, eps);
            if (p >= q)
                return 0.0;
            double m = 0.0;
            if (p < 0.0 && q > 0.0)
                m = abs_primitive(p, 0.0) + abs_primitive(0.0, q);
            else
                m = abs_primitive(p, q);
            return m / (b - a);
        }
    }
    throw std::logic_error("JumpLaw: unknown kind");
}

namespace {

// P(|J| >= eps) under a jump law
double law_tail_prob(const JumpLaw& l, double eps) {
    if (eps <= 0.0)
        return 1.0;
    switch (l.kind) {
        case JumpLaw::Kind::PointMass:
            return std::abs(l.a) >= eps ? 1.0 : 0.0;
        case JumpLaw::Kind::Normal: {
            double lo = std::max(-eps, l.a - 10.0 * l.b);
            double hi = std::min(eps, l.a + 10.0 * l.b);
            if (lo >= hi)
                return 1.0;
            auto f = [&](double x) { return normal_pdf(x, l.a, l.b); };
            double inside = gauss64().integrate(f, lo, hi);
            return std::max(0.0, 1.0 - inside);
        }
        case JumpLaw::Kind::Uniform: {
            double p = std::max(l.a, -eps);
            double q = std::min(l.b, eps);
            double inside = p < q ? (q - p) / (l.b - l.a) : 0.0;
            return 1.0 - inside;
        }
    }
    throw std::logic_error("JumpLaw: unknown kind");
}

// E[J ; |J| >= eps] under a jump law
double law_mean_above(const JumpLaw& l, double eps) {
    switch (l.kind) {
        case JumpLaw::Kind::PointMass:
            return std::abs(l.a) >= eps ? l.a : 0.0;
        case JumpLaw::Kind::Normal: {
            auto f = [&](double x) { return x * normal_pdf(x, l.a, l.b); };
            const auto& q = gauss64();
            double wl = l.a - 10.0 * l.b, wr = l.a + 10.0 * l.b;
            double out = 0.0;
            double r1 = std::min(-eps, wr);
            if (wl < r1)
                out += q.integrate(f, wl, r1);
            double l2 = std::max(eps, wl);
            if (l2 < wr)
                out += q.integrate(f, l2, wr);
            return out;
        }
        case JumpLaw::Kind::Uniform: {
            auto seg = [&](double p, double q) { return p < q ? 0.5 * (q * q - p * p) : 0.0; };
            double total = seg(l.a, l.b);
            double mid = seg(std::max(l.a, -eps), std::min(l.b, eps));
            return (total - mid) / (l.b - l.a);
        }
    }
    throw std::logic_error("JumpLaw: unknown kind");
}

double law_mean_min1(const JumpLaw& l) {
    switch (l.kind) {
        case JumpLaw::Kind::PointMass:
            return std::min(1.0, std::abs(l.a));
        case JumpLaw::Kind::Normal: {
            auto f = [&](double x) { return std::min(1.0, std::abs(x)) * normal_pdf(x, l.a, l.b); };
            const auto& q = gauss64();
            double wl = l.a - 10.0 * l.b, wr = l.a + 10.0 * l.b;
            // kinks at -1, 0, 1: integrate each smooth piece separately
            double cuts[4] = {wl, -1.0, 0.0, 1.0};
            std::vector<double> pts;
            for (double c : cuts)
                if (c > wl && c < wr)
                    pts.push_back(c);
            std::sort(pts.begin(), pts.end());
            pts.insert(pts.begin(), wl);
            pts.push_back(wr);
            double out = 0.0;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                out += q.integrate(f, pts[i], pts[i + 1]);
            return out;
        }
        case JumpLaw::Kind::Uniform: {
            auto f = [&](double x) { return std::min(1.0, std::abs(x)); };
            const auto& q = gauss64();
            double out = 0.0;
            double prev = l.a;
            for (double c : {-1.0, 0.0, 1.0, l.b}) {
                if (c <= prev || c > l.b)
                    continue;
                out += q.integrate(f, prev, c);
                prev = c;
            }
            if (prev < l.b)
                out += q.integrate(f, prev, l.b);
            return out / (l.b - l.a);
        }
    }
    throw std::logic_error("JumpLaw: unknown kind");
}

} // namespace

LevyMeasure LevyMeasure::compound_poisson(double rate, JumpLaw law, double drift) {
    if (!std::isfinite(rate) || rate <= 0.0)
        throw std::invalid_argument("LevyMeasure: compound-Poisson rate must be positive");
    if (!std::isfinite(drift))
        throw std::invalid_argument("LevyMeasure: drift must be finite");
    LevyMeasure m;
    m.family_ = Family::CompoundPoisson;
    m.rate_ = rate;
    m.law_ = law;
    m.drift_ = drift;
    return m;
}

LevyMeasure LevyMeasure::stable_like(double c_plus, double c_minus, double alpha, double cap,
                                     double floor_plus, double floor_minus, double drift) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("LevyMeasure: alpha must lie strictly in (0, 1)");
    if (!std::isfinite(cap) || cap <= 0.0)
        throw std::invalid_argument("LevyMeasure: cap must be positive and finite");
    if (!std::isfinite(c_plus) || !std::isfinite(c_minus) || c_plus < 0.0 || c_minus < 0.0 ||
        c_plus + c_minus == 0.0)
        throw std::invalid_argument("LevyMeasure: side constants must be nonnegative with positive sum");
    if (!std::isfinite(floor_plus) || !std::isfinite(floor_minus) || floor_plus < 0.0 ||
        floor_minus < 0.0)
        throw std::invalid_argument("LevyMeasure: floors must be nonnegative");
    if ((c_plus > 0.0 && floor_plus >= cap) || (c_minus > 0.0 && floor_minus >= cap))
        throw std::invalid_argument("LevyMeasure: an active side's floor must lie below the cap");
    if (!std::isfinite(drift))
        throw std::invalid_argument("LevyMeasure: drift must be finite");
    LevyMeasure m;
    m.family_ = Family::StableLike;
    m.c_plus_ = c_plus;
    m.c_minus_ = c_minus;
    m.alpha_ = alpha;
    m.cap_ = cap;
    m.floor_plus_ = floor_plus;
    m.floor_minus_ = floor_minus;
    m.drift_ = drift;
    return m;
}

LevyMeasure LevyMeasure::table(std::vector<std::pair<double, double>> size_rate_atoms,
                               double drift) {
    if (size_rate_atoms.empty())
        throw std::invalid_argument("LevyMeasure: atom table is empty");
    for (const auto& [size, rate] : size_rate_atoms) {
        if (!std::isfinite(size) || size == 0.0)
            throw std::invalid_argument("LevyMeasure: atom sizes must be finite and nonzero");
        if (!std::isfinite(rate) || rate <= 0.0)
            throw std::invalid_argument("LevyMeasure: atom rates must be positive");
    }
    if (!std::isfinite(drift))
        throw std::invalid_argument("LevyMeasure: drift must be finite");
    LevyMeasure m;
    m.family_ = Family::Table;
    m.atoms_ = std::move(size_rate_atoms);
    m.drift_ = drift;
    return m;
}

double LevyMeasure::rate() const {
    if (family_ != Family::CompoundPoisson)
        throw std::invalid_argument("LevyMeasure: rate() is a compound-Poisson accessor");
    return rate_;
}

const JumpLaw& LevyMeasure::law() const {
    if (family_ != Family::CompoundPoisson)
        throw std::invalid_argument("LevyMeasure: law() is a compound-Poisson accessor");
    return law_;
}

const std::vector<std::pair<double, double>>& LevyMeasure::atoms() const {
    if (family_ != Family::Table)
        throw std::invalid_argument("LevyMeasure: atoms() is a table accessor");
    return atoms_;
}

namespace {

// one-sided stable tail: integral of c x^{-1-alpha} over [max(u, floor), cap]
double side_tail(double c, double floor_v, double alpha, double cap, double u) {
    if (c == 0.0)
        return 0.0;
    double lo = std::max(u, floor_v);
    if (lo >= cap)
        return 0.0;
    return (c / alpha) * (std::pow(lo, -alpha) - std::pow(cap, -alpha));
}

// one-sided integral of x * c x^{-1-alpha} over [max(u, floor), cap]
double side_mean(double c, double floor_v, double alpha, double cap, double u) {
    if (c == 0.0)
        return 0.0;
    double lo = std::max(u, floor_v);
    if (lo >= cap)
        return 0.0;
    return c * (std::pow(cap, 1.0 - alpha) - std::pow(lo, 1.0 - alpha)) / (1.0 - alpha);
}

} // namespace

double LevyMeasure::tail_mass(double eps) const {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("LevyMeasure: tail_mass needs a positive truncation level");
    switch (family_) {
        case Family::CompoundPoisson:
            return rate_ * law_tail_prob(law_, eps);
        case Family::StableLike:
            return side_tail(c_plus_, floor_plus_, alpha_, cap_, eps) +
                   side_tail(c_minus_, floor_minus_, alpha_, cap_, eps);
        case Family::Table: {
            double total = 0.0;
            for (const auto& [size, rate] : atoms_)
                if (std::abs(size) >= eps)
                    total += rate;
            return total;
        }
    }
    throw std::logic_error("LevyMeasure: unknown family");
}

double LevyMeasure::bv_integral() const {
    switch (family_) {
        case Family::CompoundPoisson:
            return rate_ * law_mean_min1(law_);
        case Family::StableLike: {
            auto one_side = [&](double c, double f) {
                if (c == 0.0)
                    return 0.0;
                double out = 0.0;
                double m1 = std::min(cap_, 1.0);
                if (f < m1)
                    out += c * (std::pow(m1, 1.0 - alpha_) - std::pow(f, 1.0 - alpha_)) /
                           (1.0 - alpha_);
                double l2 = std::max(f, 1.0);
                if (l2 < cap_)
                    out += (c / alpha_) * (std::pow(l2, -alpha_) - std::pow(cap_, -alpha_));
                return out;
            };
            return one_side(c_plus_, floor_plus_) + one_side(c_minus_, floor_minus_);
        }
        case Family::Table: {
            double total = 0.0;
            for (const auto& [size, rate] : atoms_)
                total += rate * std::min(1.0, std::abs(size));
            return total;
        }
    }
    throw std::logic_error("LevyMeasure: unknown family");
}

double LevyMeasure::small_jump_mean_abs(double eps) const {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("LevyMeasure: truncation level must be positive");
    switch (family_) {
        case Family::CompoundPoisson:
            return rate_ * law_.mean_abs_below(eps);
        case Family::StableLike: {
            // integral of x * c x^{-1-alpha} over [floor, min(eps, cap)] per
            // side, by quadrature; the floor-zero case has an integrable
            // power singularity at 0 absorbed by the substitution
            auto one_side = [&](double c, double f) {
                double hi = std::min(eps, cap_);
                if (c == 0.0 || f >= hi)
                    return 0.0;
                auto g = [&](double x) { return c * std::pow(x, -alpha_); };
                if (f > 0.0)
                    return gauss64().integrate(g, f, hi);
                return integrate_power_singular(g, 0.0, hi, 1.0 / (1.0 - alpha_));
            };
            return one_side(c_plus_, floor_plus_) + one_side(c_minus_, floor_minus_);
        }
        case Family::Table: {
            double total = 0.0;
            for (const auto& [size, rate] : atoms_)
                if (std::abs(size) < eps)
                    total += rate * std::abs(size);
            return total;
        }
    }
    throw std::logic_error("LevyMeasure: unknown family");
}

double LevyMeasure::mean_above(double eps) const {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("LevyMeasure: truncation level must be positive");
    switch (family_) {
        case Family::CompoundPoisson:
            return rate_ * law_mean_above(law_, eps);
        case Family::StableLike:
            return side_mean(c_plus_, floor_plus_, alpha_, cap_, eps) -
                   side_mean(c_minus_, floor_minus_, alpha_, cap_, eps);
        case Family::Table: {
            double total = 0.0;
            for (const auto& [size, rate] : atoms_)
                if (std::abs(size) >= eps)
                    total += rate * size;
            return total;
        }
    }
    throw std::logic_error("LevyMeasure: unknown family");
}

namespace {

// Sort (time, size) pairs by time and push any exact duplicate or endpoint
// hit one ulp into the interior. Collisions have probability zero in exact
// arithmetic; this keeps the strict-increase path invariant when doubles
// collide anyway.
void fixup_times(std::vector<double>& times, std::vector<double>& sizes, const Horizon& h) {
    std::vector<std::size_t> order(times.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return times[i] < times[j]; });
    std::vector<double> t2(times.size()), s2(times.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        t2[k] = times[order[k]];
        s2[k] = sizes[order[k]];
    }
    double prev = h.lo;
    for (double& t : t2) {
        if (t <= prev)
            t = std::nextafter(prev, std::numeric_limits<double>::infinity());
        if (t >= h.hi)
            t = std::nextafter(h.hi, -std::numeric_limits<double>::infinity());
        if (t <= prev)
            throw std::runtime_error("simulation: could not keep jump times strictly increasing");
        prev = t;
    }
    times = std::move(t2);
    sizes = std::move(s2);
}

JumpPath finite_activity_draw(const LevyMeasure& spec, Horizon horizon, RngStream rng) {
    auto eng = rng.engine();
    double total_rate = 0.0;
    if (spec.family() == LevyMeasure::Family::CompoundPoisson)
        total_rate = spec.rate();
    else
        for (const auto& [size, rate] : spec.atoms())
            total_rate += rate;

    std::size_t n =
        std::size_t(std::poisson_distribution<long long>(total_rate * horizon.length())(eng));
    std::vector<double> times(n), sizes(n);
    for (auto& t : times)
        t = horizon.lo + horizon.length() * canonical(eng);
    if (spec.family() == LevyMeasure::Family::CompoundPoisson) {
        for (auto& s : sizes)
            s = spec.law().sample(eng);
    } else {
        std::vector<double> weights;
        weights.reserve(spec.atoms().size());
        for (const auto& [size, rate] : spec.atoms())
            weights.push_back(rate);
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
        for (auto& s : sizes)
            s = spec.atoms()[pick(eng)].first;
    }
    fixup_times(times, sizes, horizon);
    return JumpPath(horizon, 0.0, std::move(times), std::move(sizes));
}

} // namespace

JumpPath simulate_compound_poisson(const LevyMeasure& spec, Horizon horizon, RngStream rng) {
    if (!(horizon.length() > 0.0))
        throw std::invalid_argument("simulate_compound_poisson: horizon must have positive length");
    if (spec.family() == LevyMeasure::Family::StableLike) {
        double f_min = std::numeric_limits<double>::infinity();
        if (spec.c_plus() > 0.0)
            f_min = std::min(f_min, spec.floor_plus());
        if (spec.c_minus() > 0.0)
            f_min = std::min(f_min, spec.floor_minus());
        if (!(f_min > 0.0))
            throw std::invalid_argument(
                "simulate_compound_poisson: measure has infinite total jump rate");
        return simulate_bv_levy(spec, f_min, horizon, rng).path;
    }
    return finite_activity_draw(spec, horizon, rng);
}

BvSimulation simulate_bv_levy(const LevyMeasure& spec, double eps, Horizon horizon,
                              RngStream rng) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("simulate_bv_levy: truncation level must be positive");
    if (!(horizon.length() > 0.0))
        throw std::invalid_argument("simulate_bv_levy: horizon must have positive length");

    const double bias = horizon.length() * spec.small_jump_mean_abs(eps);

    if (spec.family() != LevyMeasure::Family::StableLike) {
        // finite activity: draw everything, keep the large jumps; the same
        // stream yields the same full draw for every eps, so truncations of
        // one path are coupled exactly
        JumpPath full = finite_activity_draw(spec, horizon, rng);
        std::vector<double> times, sizes;
        for (std::size_t i = 0; i < full.jump_count(); ++i) {
            if (std::abs(full.sizes()[i]) >= eps) {
                times.push_back(full.times()[i]);
                sizes.push_back(full.sizes()[i]);
            }
        }
        return {JumpPath(horizon, 0.0, std::move(times), std::move(sizes)), bias};
    }

    // Magnitude-ordered construction: cumulative Exp(1) arrivals mapped
    // through the inverse tail give jump magnitudes in decreasing order, so
    // truncating at eps just stops the loop earlier. Per jump the draw order
    // is fixed (arrival, time, sign coin) to keep paths across different eps
    // coupled draw for draw.
    const double alpha = spec.alpha();
    const double cap = spec.cap();
    const double cp = spec.c_plus(), cm = spec.c_minus();
    const double fp = spec.floor_plus(), fm = spec.floor_minus();
    const double L = horizon.length();

    double fhi = 0.0;
    if (cp > 0.0)
        fhi = std::max(fhi, fp);
    if (cm > 0.0)
        fhi = std::max(fhi, fm);
    const double g_both = side_tail(cp, fp, alpha, cap, fhi) + side_tail(cm, fm, alpha, cap, fhi);
    const double g_total = side_tail(cp, fp, alpha, cap, 0.0) + side_tail(cm, fm, alpha, cap, 0.0);

    auto invert_tail = [&](double g) {
        if (g <= g_both) {
            double csum = cp + cm;
            // only sides with floor <= fhi contribute here, i.e. all active ones
            return std::pow(alpha * g / csum + std::pow(cap, -alpha), -1.0 / alpha);
        }
        // between the two floors only the lower-floor side still varies
        double c_lo, chi;
        if ((cp > 0.0 ? fp : std::numeric_limits<double>::infinity()) <
            (cm > 0.0 ? fm : std::numeric_limits<double>::infinity())) {
            c_lo = cp;
            chi = side_tail(cm, fm, alpha, cap, 0.0);
        } else {
            c_lo = cm;
            chi = side_tail(cp, fp, alpha, cap, 0.0);
        }
        return std::pow(alpha * (g - chi) / c_lo + std::pow(cap, -alpha), -1.0 / alpha);
    };

    auto eng = rng.engine();
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> times, sizes;
    double gamma = 0.0;
    constexpr std::size_t kMaxJumps = 50'000'000;
    while (true) {
        gamma += exp1(eng);
        double g = gamma / L;
        if (g > g_total)
            break;   // the whole measure is exhausted (both floors positive)
        double m = invert_tail(g);
        if (m < eps)
            break;   // magnitudes only decrease from here on
        double u = canonical(eng);
        double v = canonical(eng);
        double wp = (m >= fp ? cp : 0.0);
        double wm = (m >= fm ? cm : 0.0);
        if (wp + wm == 0.0) {
            // rounding pushed m a hair under the lowest active floor
            if (cp > 0.0 && (cm == 0.0 || fp <= fm))
                wp = cp;
            else
                wm = cm;
        }
        double p_plus = wp / (wp + wm);
        double size = (v < p_plus) ? m : -m;
        times.push_back(horizon.lo + L * u);
        sizes.push_back(size);
        if (times.size() > kMaxJumps)
            throw std::runtime_error("simulate_bv_levy: truncation level yields too many jumps");
    }
    fixup_times(times, sizes, horizon);
    return {JumpPath(horizon, 0.0, std::move(times), std::move(sizes)), bias};
}

GridPath simulate_brownian(const Grid& grid, RngStream rng) {
    if (!(grid.h > 0.0) || !std::isfinite(grid.h) || grid.n < 1 || !std::isfinite(grid.t0))
        throw std::invalid_argument("simulate_brownian: grid needs positive spacing and >= 1 step");
    auto eng = rng.engine();
    std::normal_distribution<double> z(0.0, 1.0);
    const double sqh = std::sqrt(grid.h);
    std::vector<double> values(grid.n + 1);
    values[0] = 0.0;
    for (std::size_t k = 0; k < grid.n; ++k)
        values[k + 1] = values[k] + sqh * z(eng);
    return GridPath(grid.t0, grid.h, std::move(values));
}

GridPath simulate_ito(const std::function<double(double, double)>& phi,
                      const std::function<double(double, double)>& psi,
                      const Grid& grid, RngStream rng) {
    if (!phi || !psi)
        throw std::invalid_argument("simulate_ito: both coefficient functions are required");
    if (!(grid.h > 0.0) || !std::isfinite(grid.h) || grid.n < 1 || !std::isfinite(grid.t0))
        throw std::invalid_argument("simulate_ito: grid needs positive spacing and >= 1 step");
    auto eng = rng.engine();
    std::normal_distribution<double> z(0.0, 1.0);
    const double sqh = std::sqrt(grid.h);
    std::vector<double> values(grid.n + 1);
    values[0] = 0.0;
    for (std::size_t k = 0; k < grid.n; ++k) {
        double t = grid.t0 + grid.h * double(k);
        double x = values[k];
        double a = phi(t, x);
        double b = psi(t, x);
        if (!std::isfinite(a) || !std::isfinite(b))
            throw SimulationFailure(
                "simulate_ito: non-finite coefficient at node " + std::to_string(k), k);
        double db = sqh * z(eng);
        double next = x + a * db + b * grid.h;
        if (!std::isfinite(next))
            throw SimulationFailure(
                "simulate_ito: state overflowed at node " + std::to_string(k + 1), k + 1);
        values[k + 1] = next;
    }
    return GridPath(grid.t0, grid.h, std::move(values));
}

RegularityEstimate estimate_half_line_regularity(const LevyMeasure& spec,
                                                 const std::vector<double>& eps_ladder,
                                                 std::size_t replicas, RngStream rng,
                                                 double probe) {
    if (eps_ladder.empty())
        throw std::invalid_argument("estimate_half_line_regularity: empty truncation ladder");
    for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
        if (!(eps_ladder[i] > 0.0) || !std::isfinite(eps_ladder[i]))
            throw std::invalid_argument("estimate_half_line_regularity: ladder entries must be positive");
        if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
            throw std::invalid_argument("estimate_half_line_regularity: ladder must decrease strictly");
    }
    if (replicas < 100)
        throw std::invalid_argument(
            "estimate_half_line_regularity: needs at least 100 replicas for a stable verdict");
    if (probe <= 0.0)
        probe = 0.01;
    if (!std::isfinite(probe))
        throw std::invalid_argument("estimate_half_line_regularity: probe window must be finite");

    RegularityEstimate est;
    est.epsilons = eps_ladder;
    est.probe = probe;
    est.fraction_positive_at_probe.assign(eps_ladder.size(), 0.0);
    est.fraction_nonnegative.assign(eps_ladder.size(), 0.0);

    const Horizon h{0.0, probe};
    for (std::size_t e = 0; e < eps_ladder.size(); ++e) {
        std::size_t pos = 0, nonneg = 0;
        for (std::size_t r = 0; r < replicas; ++r) {
            // the same replica stream at every rung keeps the ladder coupled
            auto sim = simulate_bv_levy(spec, eps_ladder[e], h, rng.fork(r));
            const JumpPath& p = sim.path;
            if (p.terminal() > 0.0)
                ++pos;
            double low = std::min(0.0, p.terminal());
            double acc = p.initial();
            for (double s : p.sizes()) {
                acc += s;
                low = std::min(low, acc);
            }
            if (low >= 0.0)
                ++nonneg;
        }
        est.fraction_positive_at_probe[e] = double(pos) / double(replicas);
        est.fraction_nonnegative[e] = double(nonneg) / double(replicas);
    }

    double p = est.fraction_positive_at_probe.back();
    if (p >= 0.9)
        est.verdict = "likely-downwards";
    else if (p <= 0.1)
        est.verdict = "likely-upwards";
    else if (p >= 0.25 && p <= 0.75)
        est.verdict = "likely-non-dissymmetric";
    else
        est.verdict = "inconclusive";
    return est;
}

} // namespace levyhull
