// Acceptance gate: one test per shipped claim, each printing a single
// [PASS]/[FAIL] line with the numbers that back it. Criteria that wrap a
// packaged experiment run it with its default configuration, so the gates
// here are byte-for-byte the thresholds a user gets from the CLI.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "levyhull/burgers.hpp"
#include "levyhull/experiments.hpp"
#include "levyhull/hull.hpp"
#include "levyhull/path.hpp"
#include "levyhull/rng.hpp"
#include "levyhull/serialize.hpp"
#include "levyhull/stats.hpp"
#include "levyhull/synthesis.hpp"
#include "oracles.hpp"

using namespace levyhull;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void line(int num, const char* name, bool ok, const std::string& detail, double secs,
          double bound) {
    if (bound > 0.0)
        std::printf("[%s] %02d %-24s %s  (%.2fs, bound %.0fs)\n", ok ? "PASS" : "FAIL",
                    num, name, detail.c_str(), secs, bound);
    else
        std::printf("[%s] %02d %-24s %s  (%.2fs)\n", ok ? "PASS" : "FAIL", num, name,
                    detail.c_str(), secs);
    std::fflush(stdout);
}

Report run_defaults(const std::string& id, double& secs) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = run_experiment(default_experiment_config(id));
    secs = seconds_since(t0);
    return r;
}

double verdict_value(const Report& r, const std::string& name) {
    for (const auto& v : r.verdicts)
        if (v.name == name)
            return v.value;
    return std::numeric_limits<double>::quiet_NaN();
}

void check_verdicts(const Report& r) {
    for (const auto& v : r.verdicts) {
        INFO(r.experiment << " verdict " << v.name << " = " << v.value << " vs " << v.cmp
                          << " " << v.threshold);
        CHECK(v.pass);
    }
}

PointSequence sample_pts(const std::vector<double>& xs, const std::vector<double>& ys) {
    PointSequence pts;
    pts.xs = xs;
    pts.ys = ys;
    pts.tags.assign(xs.size(), PointSequence::Tag::Sample);
    return pts;
}

ojson tiny_config(const std::string& id) {
    ojson cfg;
    cfg["experiment"] = id;
    cfg["replicas"] = 4;
    if (id.rfind("negligibility", 0) == 0)
        cfg["grid_ladder"] = {128, 512};
    if (id == "accumulation_at_T" || id == "isolation_vs_dissymmetry")
        cfg["eps_ladder"] = {1e-2, 1e-3};
    if (id == "isolation_vs_dissymmetry")
        cfg["regularity"] = ojson{{"replicas", 100}, {"eps_ladder", {1e-4, 1e-5}}};
    if (id == "shock_convergence")
        cfg["t_ladder"] = {1.0, 10.0};
    if (id == "sticky_theorem")
        cfg["n_max"] = 5;
    return cfg;
}

} // namespace

TEST_CASE("criterion 01: hull vertices agree with the cubic oracle") {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 eng(RngStream{20260816, 1}.engine());
    std::uniform_real_distribution<double> uy(-1.0, 1.0);
    std::size_t agree = 0, total = 1000;
    for (std::size_t trial = 0; trial < total; ++trial) {
        std::size_t n = 2 + eng() % 11;   // up to 12 points
        std::vector<double> xs, ys;
        if (trial % 2 == 0) {
            for (std::size_t i = 0; i < n; ++i) {
                xs.push_back(double(i) + 0.3 * uy(eng));
                ys.push_back(uy(eng));
            }
            for (std::size_t i = 1; i < n; ++i)
                if (xs[i] <= xs[i - 1])
                    xs[i] = xs[i - 1] + 0.05;
        } else {
            // integer lattice: exact collinearity shows up constantly
            for (std::size_t i = 0; i < n; ++i) {
                xs.push_back(double(i));
                ys.push_back(double(eng() % 4));
            }
        }
        if (upper_hull(sample_pts(xs, ys)).indices == oracles::brute_upper_vertices(xs, ys))
            ++agree;
    }
    double secs = seconds_since(t0);
    double frac = double(agree) / double(total);
    bool ok = frac == 1.0 && secs < 1.0;
    char d[64];
    std::snprintf(d, sizeof d, "agreement=%.4f on %zu sets", frac, total);
    line(1, "hull vs cubic oracle", ok, d, secs, 1.0);
    CHECK(frac == 1.0);
    CHECK(secs < 1.0);
}

TEST_CASE("criterion 02: sticky particle events match the envelope partition") {
    double secs = 0.0;
    Report r = run_defaults("sticky_theorem", secs);
    bool ok = r.pass && secs < 5.0;
    char d[128];
    std::snprintf(d, sizeof d, "agreement=%.4f cons_err=%.2e events_ok=%.4f",
                  verdict_value(r, "agreement_fraction"),
                  verdict_value(r, "conservation_error_max"),
                  verdict_value(r, "event_bound_fraction"));
    line(2, "sticky particle theorem", ok, d, secs, 5.0);
    check_verdicts(r);
    CHECK(secs < 5.0);
}

TEST_CASE("criterion 03: convex drift thins the extremal superior set") {
    double secs = 0.0;
    Report r = run_defaults("convex_inclusion", secs);
    bool ok = r.pass && secs < 5.0;
    char d[64];
    std::snprintf(d, sizeof d, "inclusion=%.4f", verdict_value(r, "inclusion_fraction"));
    line(3, "convex drift inclusion", ok, d, secs, 5.0);
    check_verdicts(r);
    CHECK(secs < 5.0);
}

TEST_CASE("criterion 04: extremal structure of truncated bounded-variation paths") {
    double secs = 0.0;
    Report r = run_defaults("bv_extremal_structure", secs);
    bool ok = r.pass && secs < 10.0;
    char d[160];
    std::snprintf(d, sizeof d, "jump_time=%.4f positive=%.4f t_at_end=%.3f",
                  verdict_value(r, "jump_time_fraction"),
                  verdict_value(r, "positive_jump_fraction"),
                  r.aggregates.at("t_at_end_fraction").get<double>());
    line(4, "bv extremal structure", ok, d, secs, 10.0);
    check_verdicts(r);
    CHECK(secs < 10.0);
}

TEST_CASE("criterion 05: extremal times accumulate at the argmax down the ladder") {
    double secs = 0.0;
    Report r = run_defaults("accumulation_at_T", secs);
    bool ok = r.pass && secs < 60.0;
    char d[128];
    std::snprintf(d, sizeof d, "sign_p_max=%.2e inside_up=%.0f outside_move=%.2f",
                  verdict_value(r, "sign_p_max"),
                  verdict_value(r, "median_inside_increasing"),
                  verdict_value(r, "median_outside_max_change"));
    line(5, "accumulation at argmax", ok, d, secs, 60.0);
    check_verdicts(r);
    CHECK(secs < 60.0);
}

TEST_CASE("criterion 06: one-sided activity isolates the argmax, symmetric closes in") {
    double secs = 0.0;
    Report r = run_defaults("isolation_vs_dissymmetry", secs);
    bool ok = r.pass && secs < 120.0;
    char d[200];
    std::snprintf(d, sizeof d,
                  "1s_right_ratio=%.2f 1s_left_single=%.3f 1s_t_pos=%.3f sym_p=(%.1e,%.1e)",
                  verdict_value(r, "one_sided_right_gap_ratio"),
                  verdict_value(r, "one_sided_left_single_jump_fraction"),
                  verdict_value(r, "one_sided_t_positive_fraction"),
                  verdict_value(r, "symmetric_left_gap_p"),
                  verdict_value(r, "symmetric_right_gap_p"));
    line(6, "isolation vs dissymmetry", ok, d, secs, 120.0);
    check_verdicts(r);
    CHECK(secs < 120.0);
}

TEST_CASE("criterion 07: extremal fractions vanish under grid refinement") {
    double total = 0.0;
    bool all_pass = true;
    std::string d;
    for (const char* id : {"negligibility_bm", "negligibility_integrated", "negligibility_ito"}) {
        double secs = 0.0;
        Report r = run_defaults(id, secs);
        total += secs;
        all_pass = all_pass && r.pass;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%s=%.3f", d.empty() ? "" : " ", id + 14,
                      verdict_value(r, "strictly_decreasing_fraction"));
        d += buf;
        check_verdicts(r);
    }
    bool ok = all_pass && total < 120.0;
    line(7, "negligibility ladder", ok, d, total, 120.0);
    CHECK(total < 120.0);
}

TEST_CASE("criterion 08: mean face counts are distribution-free") {
    auto t0 = std::chrono::steady_clock::now();
    const std::size_t walks = 2000, n = 256;
    RngStream base{20260816, 8};

    auto walk_faces = [&](bool gaussian, std::uint64_t salt) {
        std::vector<double> faces;
        faces.reserve(walks);
        for (std::size_t w = 0; w < walks; ++w) {
            std::mt19937_64 eng(base.fork(salt).fork(w).engine());
            std::normal_distribution<double> z;
            std::exponential_distribution<double> e(1.0);
            PointSequence pts;
            pts.xs.resize(n + 1);
            pts.ys.resize(n + 1);
            pts.tags.assign(n + 1, PointSequence::Tag::Sample);
            pts.xs[0] = 0.0;
            pts.ys[0] = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                double inc = gaussian ? z(eng) : e(eng) - 1.0;
                pts.xs[k + 1] = double(k + 1);
                pts.ys[k + 1] = pts.ys[k] + inc;
            }
            faces.push_back(double(upper_hull(pts).segment_count()));
        }
        return faces;
    };

    std::vector<double> g = walk_faces(true, 1), e = walk_faces(false, 2);
    stats::Interval95 ig = stats::ci95_mean(g), ie = stats::ci95_mean(e);
    bool overlap = ig.overlaps(ie);

    // the permutation average of the face count is the harmonic number
    // exactly, for any increment set in general position
    double oracle_err = 0.0;
    std::mt19937_64 eng(base.fork(3).engine());
    std::normal_distribution<double> z;
    for (std::size_t m = 2; m <= 6; ++m) {
        std::vector<double> inc(m);
        for (double& v : inc)
            v = z(eng);
        oracle_err = std::max(
            oracle_err, std::abs(oracles::enumerate_mean_faces(inc) - stats::harmonic(m)));
    }

    // wide-interval consistency of each Monte Carlo mean with the same
    // theoretical value the oracle pinned down
    const double target = stats::harmonic(n);
    auto ci99 = [](const std::vector<double>& v) {
        double m = stats::mean(v);
        double se = std::sqrt(stats::sample_variance(v) / double(v.size()));
        return stats::Interval95{m - 2.5758293035489004 * se, m + 2.5758293035489004 * se};
    };
    bool close = ci99(g).contains(target) && ci99(e).contains(target);

    double secs = seconds_since(t0);
    bool ok = overlap && oracle_err <= 1e-9 && close && secs < 30.0;
    char d[160];
    std::snprintf(d, sizeof d, "gauss=[%.3f,%.3f] exp=[%.3f,%.3f] H=%.3f oracle_err=%.1e",
                  ig.lo, ig.hi, ie.lo, ie.hi, target, oracle_err);
    line(8, "face count universality", ok, d, secs, 30.0);
    CHECK(overlap);
    CHECK(oracle_err <= 1e-9);
    CHECK(close);
    CHECK(secs < 30.0);
}

TEST_CASE("criterion 09: variational sweep equals the brute scan") {
    auto t0 = std::chrono::steady_clock::now();
    RngStream base{20260816, 9};
    double max_err = 0.0, worst_mono = 0.0, worst_convex = 0.0;
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
        GridPath psi0 = simulate_brownian(Grid{0.0, 1.0 / 64.0, 64}, base.fork(rep));
        for (double t : {0.1, 1.0, 10.0}) {
            PotentialField f = drifted_potential(psi0, t);
            double smax = f.hull.segment_slope(0);
            double smin = f.hull.segment_slope(f.hull.segment_count() - 1);
            double xlo = -t * smax - 1.0, xhi = -t * smin + 1.0;
            std::vector<double> xs(64);
            for (std::size_t i = 0; i < xs.size(); ++i)
                xs[i] = xlo + (xhi - xlo) * double(i) / double(xs.size() - 1);
            std::vector<double> sweep = hopf_cole_potential(f, xs);
            for (std::size_t i = 0; i < xs.size(); ++i)
                max_err = std::max(max_err,
                                   std::abs(sweep[i] - oracles::brute_hopf_cole(f, xs[i])));
            // the evolved potential dominates the initial one
            std::vector<double> at_skel = hopf_cole_potential(f, f.skeleton.xs);
            for (std::size_t i = 0; i < f.skeleton.size(); ++i)
                worst_mono = std::min(worst_mono, at_skel[i] - f.psi0[i]);
            // after adding back the parabola the potential is convex
            for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
                double h0 = sweep[i] + xs[i] * xs[i] / (2.0 * t);
                double h1 = sweep[i + 1] + xs[i + 1] * xs[i + 1] / (2.0 * t);
                double h2 = sweep[i + 2] + xs[i + 2] * xs[i + 2] / (2.0 * t);
                worst_convex = std::min(worst_convex, h2 - 2.0 * h1 + h0);
            }
        }
    }
    double secs = seconds_since(t0);
    bool ok = max_err <= 1e-9 && worst_mono >= -1e-9 && worst_convex >= -1e-12 && secs < 5.0;
    char d[128];
    std::snprintf(d, sizeof d, "max_err=%.1e min_gain=%.1e min_2nd_diff=%.1e", max_err,
                  worst_mono, worst_convex);
    line(9, "variational sweep", ok, d, secs, 5.0);
    CHECK(max_err <= 1e-9);
    CHECK(worst_mono >= -1e-9);
    CHECK(worst_convex >= -1e-12);
    CHECK(secs < 5.0);
}

TEST_CASE("criterion 10: shocks correspond one-to-one with majorant faces") {
    double secs = 0.0;
    Report r = run_defaults("burgers_shocks", secs);
    bool ok = r.pass && secs < 10.0;
    char d[128];
    std::snprintf(d, sizeof d, "conservation=%.4f faces=%.4f monotone=%.4f",
                  verdict_value(r, "conservation_fraction"),
                  verdict_value(r, "face_correspondence_fraction"),
                  verdict_value(r, "monotone_fraction"));
    line(10, "shock correspondence", ok, d, secs, 10.0);
    check_verdicts(r);
    CHECK(secs < 10.0);
}

TEST_CASE("criterion 11: shock sets converge to the extremal set of the potential") {
    double secs = 0.0;
    Report r = run_defaults("shock_convergence", secs);
    bool ok = r.pass && secs < 120.0;
    char d[64];
    std::snprintf(d, sizeof d, "monotone=%.4f", verdict_value(r, "monotone_fraction"));
    line(11, "shock convergence", ok, d, secs, 120.0);
    check_verdicts(r);
    CHECK(secs < 120.0);
}

TEST_CASE("criterion 12: the supremum is attained exactly once") {
    double secs = 0.0;
    Report r = run_defaults("unique_argmax", secs);
    bool ok = r.pass && secs < 10.0;
    char d[128];
    std::snprintf(d, sizeof d, "unique=%.4f mean_flat=%.4f flag_agreement=%.3f",
                  verdict_value(r, "unique_fraction"),
                  r.aggregates.at("mean_achiever_span").get<double>(),
                  r.aggregates.at("argmax_flag_agreement").get<double>());
    line(12, "unique argmax", ok, d, secs, 10.0);
    check_verdicts(r);
    CHECK(secs < 10.0);
}

TEST_CASE("criterion 13: identical config and seed reproduce the report byte for byte") {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t same = 0, total = 0;
    for (const auto& id : experiment_ids()) {
        ojson cfg = tiny_config(id);
        Report a = run_experiment(cfg);
        Report b = run_experiment(cfg);
        ++total;
        if (report_canonical_json(a).dump() == report_canonical_json(b).dump())
            ++same;
        else {
            INFO("nondeterministic report for " << id);
            CHECK(false);
        }
    }
    double secs = seconds_since(t0);
    bool ok = same == total;
    char d[64];
    std::snprintf(d, sizeof d, "reproducible=%zu/%zu experiments", same, total);
    line(13, "bitwise reproducibility", ok, d, secs, 0.0);
    CHECK(same == total);
}
