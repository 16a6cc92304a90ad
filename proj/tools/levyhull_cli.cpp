// Command-line front end: simulate paths, extract hull structure, probe
// drifted variants, evaluate the parabolic-envelope solver, run sticky
// particle systems, and verify experiment suites against their thresholds.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "levyhull/burgers.hpp"
#include "levyhull/drift.hpp"
#include "levyhull/experiments.hpp"
#include "levyhull/hull.hpp"
#include "levyhull/rng.hpp"
#include "levyhull/serialize.hpp"
#include "levyhull/sticky.hpp"
#include "levyhull/synthesis.hpp"

namespace {

using levyhull::ojson;

struct GlobalOpts {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
    std::string format = "json";
};

std::uint64_t effective_seed(const ojson& cfg, const GlobalOpts& g) {
    if (g.seed_set)
        return g.seed;
    if (cfg.contains("seed") && cfg.at("seed").is_number_integer())
        return cfg.at("seed").get<std::uint64_t>();
    return 20260816;
}

void write_out(const GlobalOpts& g, const std::string& name, const std::string& text) {
    std::filesystem::create_directories(g.out);
    std::string p = (std::filesystem::path(g.out) / name).string();
    levyhull::write_text_file(p, text);
    std::printf("wrote %s\n", p.c_str());
}

void write_json_out(const GlobalOpts& g, const std::string& stem, const ojson& j) {
    write_out(g, stem + ".json", j.dump(2) + "\n");
}

levyhull::Grid grid_from_config(const ojson& cfg) {
    const ojson& gj = cfg.at("grid");
    return levyhull::Grid{gj.at("t0").get<double>(), gj.at("h").get<double>(),
                          gj.at("n").get<std::size_t>()};
}

levyhull::Horizon horizon_from_config(const ojson& cfg) {
    const auto& h = cfg.at("horizon");
    return levyhull::Horizon{h.at(0).get<double>(), h.at(1).get<double>()};
}

// path comes inline under "path", or is synthesized from "process"
levyhull::AnyPath acquire_path(const ojson& cfg, const GlobalOpts& g) {
    if (cfg.contains("path"))
        return levyhull::path_from_json(cfg.at("path"));
    if (!cfg.contains("process"))
        throw std::invalid_argument("config: need either 'path' or 'process'");
    levyhull::LevyMeasure spec = levyhull::measure_from_json(cfg.at("process"));
    levyhull::RngStream rng{effective_seed(cfg, g), 0};
    levyhull::Horizon horizon = horizon_from_config(cfg);
    if (cfg.contains("eps"))
        return levyhull::simulate_bv_levy(spec, cfg.at("eps").get<double>(), horizon, rng).path;
    return levyhull::simulate_compound_poisson(spec, horizon, rng);
}

levyhull::JumpPath acquire_jump_path(const ojson& cfg, const GlobalOpts& g) {
    levyhull::AnyPath p = acquire_path(cfg, g);
    if (!std::holds_alternative<levyhull::JumpPath>(p))
        throw std::invalid_argument("config: this command needs a piecewise-constant path");
    return std::get<levyhull::JumpPath>(std::move(p));
}

int cmd_simulate(const ojson& cfg, const GlobalOpts& g) {
    std::string kind = cfg.contains("kind") ? cfg.at("kind").get<std::string>() : "bv_levy";
    levyhull::RngStream rng{effective_seed(cfg, g), 0};
    if (kind == "bv_levy") {
        levyhull::LevyMeasure spec = levyhull::measure_from_json(cfg.at("process"));
        levyhull::BvSimulation sim = levyhull::simulate_bv_levy(
            spec, cfg.at("eps").get<double>(), horizon_from_config(cfg), rng);
        ojson j = levyhull::path_to_json(sim.path);
        j["truncation_bias"] = sim.truncation_bias;
        write_json_out(g, "simulate_path", j);
        return 0;
    }
    if (kind == "compound_poisson") {
        levyhull::LevyMeasure spec = levyhull::measure_from_json(cfg.at("process"));
        levyhull::JumpPath path =
            levyhull::simulate_compound_poisson(spec, horizon_from_config(cfg), rng);
        write_json_out(g, "simulate_path", levyhull::path_to_json(path));
        return 0;
    }
    if (kind == "brownian") {
        write_json_out(g, "simulate_path",
                       levyhull::path_to_json(levyhull::simulate_brownian(grid_from_config(cfg), rng)));
        return 0;
    }
    throw std::invalid_argument("config: unknown simulate kind '" + kind + "'");
}

int cmd_hull(const ojson& cfg, const GlobalOpts& g) {
    levyhull::AnyPath p = acquire_path(cfg, g);
    levyhull::MajorantOfPath res;
    levyhull::ExtremalSet sup, inf;
    if (std::holds_alternative<levyhull::JumpPath>(p)) {
        const auto& jp = std::get<levyhull::JumpPath>(p);
        res = levyhull::concave_majorant_of_path(jp);
        sup = levyhull::extremal_superior_times(jp);
        inf = levyhull::extremal_inferior_times(jp);
    } else {
        const auto& gp = std::get<levyhull::GridPath>(p);
        res = levyhull::concave_majorant_of_path(gp);
        sup = levyhull::extremal_superior_times(gp);
        inf = levyhull::extremal_inferior_times(gp);
    }
    if (g.format == "csv") {
        write_out(g, "hull_majorant.csv", levyhull::majorant_csv(res.majorant));
        write_out(g, "hull_extremal_superior.csv", levyhull::extremal_csv(sup));
        write_out(g, "hull_extremal_inferior.csv", levyhull::extremal_csv(inf));
    } else {
        ojson j;
        j["majorant"] = levyhull::majorant_to_json(res.majorant);
        j["collinear_tie"] = res.majorant.collinear_tie;
        j["extremal_superior"] = levyhull::extremal_to_json(sup);
        j["extremal_inferior"] = levyhull::extremal_to_json(inf);
        write_json_out(g, "hull", j);
    }
    return 0;
}

int cmd_drift(const ojson& cfg, const GlobalOpts& g) {
    levyhull::JumpPath path = acquire_jump_path(cfg, g);
    levyhull::Drift f = levyhull::drift_from_json(cfg.at("drift"));
    std::size_t spg = cfg.contains("samples_per_gap")
                          ? cfg.at("samples_per_gap").get<std::size_t>()
                          : 16;
    ojson j;
    if (f.convex())
        j["inclusion_holds"] = levyhull::convex_drift_inclusion_check(path, f, spg);
    if (f.concave() && cfg.contains("mu") && cfg.contains("u")) {
        double s =
            levyhull::exceeding_time(path, f, cfg.at("mu").get<double>(), cfg.at("u").get<double>());
        j["exceeding_time"] = s;
        j["exceeding_is_positive_jump"] =
            std::isfinite(s) && path.is_jump_time(s) && path.jump_sign(s) > 0;
    }
    levyhull::PointSequence pts = levyhull::add_drift(path, f, spg);
    levyhull::Majorant m = levyhull::upper_hull(pts);
    levyhull::ExtremalSet e = levyhull::extremal_times(pts, m, levyhull::Side::Superior);
    std::size_t ti = e.argmax_index();
    if (ti != levyhull::ExtremalSet::npos) {
        std::vector<levyhull::IsolationVerdict> ivs = levyhull::classify_isolation(m, e, f);
        const levyhull::IsolationVerdict& iv = ivs[ti];
        j["argmax"] = ojson{{"time", iv.time},
                            {"predicted_left_isolated", iv.predicted_left_isolated},
                            {"predicted_right_isolated", iv.predicted_right_isolated},
                            {"accumulation_candidate", iv.accumulation_candidate}};
    }
    j["extremal_superior"] = levyhull::extremal_to_json(e);
    if (g.format == "csv")
        write_out(g, "drift_extremal.csv", levyhull::extremal_csv(e));
    else
        write_json_out(g, "drift", j);
    return 0;
}

int cmd_burgers(const ojson& cfg, const GlobalOpts& g) {
    levyhull::JumpPath path = acquire_jump_path(cfg, g);
    double t = cfg.contains("t") ? cfg.at("t").get<double>() : 1.0;
    std::size_t spg = cfg.contains("samples_per_gap")
                          ? cfg.at("samples_per_gap").get<std::size_t>()
                          : 16;
    levyhull::PotentialField field = levyhull::drifted_potential(path, t, spg);
    levyhull::ShockStructure sh = levyhull::shock_intervals(field);

    std::vector<double> xs;
    if (cfg.contains("x_grid")) {
        for (const auto& x : cfg.at("x_grid"))
            xs.push_back(x.get<double>());
    } else {
        const levyhull::Majorant& m = field.hull;
        double x_lo = -t * m.segment_slope(m.segment_count() - 1) + 1.0;
        double x_hi = -t * m.segment_slope(0) - 1.0;
        if (x_hi < x_lo)
            std::swap(x_lo, x_hi);
        std::size_t n = 65;
        for (std::size_t i = 0; i < n; ++i)
            xs.push_back(x_lo + (x_hi - x_lo) * double(i) / double(n - 1));
    }
    std::vector<double> psi = levyhull::hopf_cole_potential(field, xs);
    std::vector<double> as;
    for (double x : xs)
        as.push_back(levyhull::inverse_lagrangian(field, x));

    if (g.format == "csv") {
        write_out(g, "burgers_shocks.csv", levyhull::shocks_csv(sh));
        write_out(g, "burgers_potential.csv", levyhull::potential_csv(xs, psi));
        write_out(g, "burgers_inverse_lagrangian.csv", levyhull::lagrangian_csv(as, xs));
    } else {
        ojson j;
        j["t"] = t;
        ojson shocks = ojson::array();
        for (const auto& s : sh.shocks)
            shocks.push_back(ojson{{"a_left", s.a_left},
                                   {"a_right", s.a_right},
                                   {"x", s.x},
                                   {"mass", s.mass}});
        j["shocks"] = shocks;
        j["regular_mass"] = sh.regular_mass;
        j["total_span"] = sh.total_span;
        ojson rows = ojson::array();
        for (std::size_t i = 0; i < xs.size(); ++i)
            rows.push_back(ojson{{"x", xs[i]}, {"psi", psi[i]}, {"a", as[i]}});
        j["potential"] = rows;
        write_json_out(g, "burgers", j);
    }
    return 0;
}

int cmd_sticky(const ojson& cfg, const GlobalOpts& g) {
    std::vector<double> v;
    for (const auto& x : cfg.at("velocities"))
        v.push_back(x.get<double>());
    levyhull::ClumpSystem sys = [&] {
        if (cfg.contains("positions")) {
            std::vector<double> pos, mass;
            for (const auto& x : cfg.at("positions"))
                pos.push_back(x.get<double>());
            if (cfg.contains("masses"))
                for (const auto& x : cfg.at("masses"))
                    mass.push_back(x.get<double>());
            return levyhull::ClumpSystem(pos, v, mass);
        }
        std::vector<double> unit_pos(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            unit_pos[i] = double(i);
        return levyhull::init_system(unit_pos, v);
    }();
    std::vector<levyhull::MergeRecord> log = sys.run_to_completion();
    if (g.format == "csv") {
        write_out(g, "sticky_events.csv", levyhull::events_csv(log));
    } else {
        ojson j;
        ojson events = ojson::array();
        for (const auto& e : log)
            events.push_back(ojson{{"time", e.time},
                                   {"left_index", e.left},
                                   {"position", e.position},
                                   {"mass", e.mass},
                                   {"velocity", e.velocity}});
        j["events"] = events;
        ojson clumps = ojson::array();
        for (const auto& c : sys.clumps())
            clumps.push_back(ojson{{"mass", c.mass},
                                   {"velocity", c.velocity},
                                   {"position", c.position},
                                   {"lo", c.lo},
                                   {"hi", c.hi}});
        j["final_clumps"] = clumps;
        levyhull::TheoremCheck check = levyhull::verify_discrete_theorem(v);
        j["partition_agrees_with_envelope"] = check.agree;
        j["predicted_partition"] = levyhull::partition_to_json(check.predicted);
        write_json_out(g, "sticky", j);
    }
    return 0;
}

int cmd_verify(const ojson& cfg, const GlobalOpts& g) {
    levyhull::Report r = levyhull::run_experiment(cfg);
    levyhull::emit_report(r, g.out, g.format);
    levyhull::emit_plot_data(r, g.out);
    for (const auto& v : r.verdicts)
        std::printf("  %-42s %.6g %s %.6g  %s\n", v.name.c_str(), v.value, v.cmp.c_str(),
                    v.threshold, v.pass ? "PASS" : "FAIL");
    std::printf("%s: %s (%.0f ms)\n", r.experiment.c_str(), r.pass ? "PASS" : "FAIL",
                r.wall_clock_ms);
    return r.pass ? 0 : 1;
}

int dispatch(const std::string& cmd, const ojson& cfg, const GlobalOpts& g) {
    if (cmd == "simulate")
        return cmd_simulate(cfg, g);
    if (cmd == "hull")
        return cmd_hull(cfg, g);
    if (cmd == "drift")
        return cmd_drift(cfg, g);
    if (cmd == "burgers")
        return cmd_burgers(cfg, g);
    if (cmd == "sticky")
        return cmd_sticky(cfg, g);
    if (cmd == "verify")
        return cmd_verify(cfg, g);
    throw std::invalid_argument("unknown command: " + cmd);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convex-envelope toolkit for stochastic paths"};
    app.require_subcommand(1);

    GlobalOpts g;
    const char* env_out = std::getenv("LEVYHULL_OUT");
    g.out = env_out != nullptr ? env_out : "out";

    app.add_option("--config", g.config_path, "JSON config file (an array runs a batch)");
    auto* seed_opt = app.add_option("--seed", g.seed, "Override the config seed");
    app.add_option("--out", g.out, "Output directory");
    app.add_option("--format", g.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> names = {"simulate", "hull", "drift", "burgers", "sticky", "verify"};
    std::vector<std::string> briefs = {
        "Draw a path and write it out",
        "Concave majorant and extremal times of a path",
        "Drifted-path structure: inclusion, exceeding times, isolation",
        "Parabolic envelope: potential, inverse map, shock intervals",
        "Run a sticky particle system to completion",
        "Run experiment suites and check their thresholds"};
    CLI::App* verify_sub = nullptr;
    std::string verify_id;
    for (std::size_t i = 0; i < names.size(); ++i) {
        CLI::App* sub = app.add_subcommand(names[i], briefs[i]);
        sub->fallthrough();
        if (names[i] == "verify") {
            verify_sub = sub;
            sub->add_option("experiment", verify_id, "Experiment id (omit to run all)");
        }
    }

    CLI11_PARSE(app, argc, argv);
    g.seed_set = seed_opt->count() > 0;
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        std::vector<ojson> configs;
        if (!g.config_path.empty()) {
            ojson loaded = levyhull::read_json_file(g.config_path);
            if (loaded.is_array())
                for (const auto& e : loaded)
                    configs.push_back(e);
            else
                configs.push_back(loaded);
        } else if (cmd == "verify") {
            if (!verify_id.empty()) {
                configs.push_back(ojson{{"experiment", verify_id}});
            } else {
                for (const auto& id : levyhull::experiment_ids())
                    configs.push_back(ojson{{"experiment", id}});
            }
        } else {
            throw std::invalid_argument(cmd + ": --config is required");
        }
        (void)verify_sub;

        int rc = 0;
        for (ojson& cfg : configs) {
            if (cmd == "verify" && g.seed_set)
                cfg["seed"] = g.seed;
            rc |= dispatch(cmd, cfg, g);
        }
        return rc;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
}
