#include "doctest.h"

#include <filesystem>
#include <stdexcept>
#include <string>

#include "levyhull/experiments.hpp"
#include "levyhull/serialize.hpp"

using namespace levyhull;

static ojson tiny_config(const std::string& id) {
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

TEST_CASE("defaults exist for every experiment id and echo through the report") {
    for (const auto& id : experiment_ids()) {
        ojson cfg = default_experiment_config(id);
        CHECK(cfg.at("experiment") == id);
        CHECK(cfg.contains("seed"));
        CHECK(cfg.at("thresholds").is_object());
    }
    CHECK_THROWS_AS(default_experiment_config("no_such_thing"), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment(ojson{{"experiment", "no_such_thing"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_experiment(ojson::object()), std::invalid_argument);
}

TEST_CASE("user overrides land in the effective config") {
    ojson cfg = tiny_config("sticky_theorem");
    cfg["seed"] = 5;
    Report r = run_experiment(cfg);
    CHECK(r.config.at("replicas") == 4);
    CHECK(r.config.at("n_max") == 5);
    CHECK(r.config.at("seed") == 5);
    // untouched defaults survive
    CHECK(r.config.at("thresholds").at("agreement_fraction") == 1.0);
    CHECK(r.per_replica.size() == 4);
}

TEST_CASE("reports are deterministic replica for replica") {
    for (const std::string id : {"sticky_theorem", "unique_argmax", "burgers_shocks"}) {
        ojson cfg = tiny_config(id);
        Report a = run_experiment(cfg);
        Report b = run_experiment(cfg);
        CHECK(report_canonical_json(a).dump() == report_canonical_json(b).dump());
    }
}

TEST_CASE("thread count does not change the report") {
    ojson cfg = tiny_config("unique_argmax");
    cfg["replicas"] = 8;
    cfg["threads"] = 1;
    Report serial = run_experiment(cfg);
    cfg["threads"] = 4;
    Report parallel = run_experiment(cfg);
    ojson a = report_canonical_json(serial);
    ojson b = report_canonical_json(parallel);
    // configs differ in the threads field only; everything else must agree
    a.at("config").erase("threads");
    b.at("config").erase("threads");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("report json round-trips") {
    Report r = run_experiment(tiny_config("sticky_theorem"));
    ojson j = report_to_json(r);
    Report back = report_from_json(j);
    CHECK(report_to_json(back).dump() == j.dump());
    CHECK(j.at("schema") == "levyhull.report.v1");
}

TEST_CASE("empty reports mark aggregates absent") {
    Report r;
    r.experiment = "synthetic";
    r.config = ojson::object();
    r.per_replica = ojson::array();
    ojson j = report_to_json(r);
    CHECK(j.at("aggregates").at("absent") == true);
}

TEST_CASE("verdict comparison operators are honored") {
    Report r = run_experiment(tiny_config("sticky_theorem"));
    REQUIRE(!r.verdicts.empty());
    for (const auto& v : r.verdicts) {
        if (v.cmp == ">=")
            CHECK(v.pass == (v.value >= v.threshold));
        else if (v.cmp == "<=")
            CHECK(v.pass == (v.value <= v.threshold));
        else if (v.cmp == "<")
            CHECK(v.pass == (v.value < v.threshold));
    }
    // overall pass is the conjunction
    bool all = true;
    for (const auto& v : r.verdicts)
        all = all && v.pass;
    CHECK(r.pass == all);
}

TEST_CASE("reports and plots land on disk") {
    Report r = run_experiment(tiny_config("sticky_theorem"));
    std::string dir = "harness_emit_test";
    emit_report(r, dir, "json");
    emit_report(r, dir, "csv");
    emit_plot_data(r, dir);
    ojson j = read_json_file(dir + "/sticky_theorem_report.json");
    CHECK(j.at("experiment") == "sticky_theorem");
    std::string csv = read_text_file(dir + "/sticky_theorem_report.csv");
    CHECK(csv.rfind("schema_version,levyhull.report.v1\n", 0) == 0);
    std::string plot = read_text_file(dir + "/sticky_theorem_plot.csv");
    CHECK(plot.rfind("series,x,y\n", 0) == 0);
    CHECK_THROWS_AS(emit_report(r, dir, "xml"), std::invalid_argument);
    std::filesystem::remove_all(dir);
}

TEST_CASE("config validation rejects malformed ladders") {
    ojson cfg = tiny_config("accumulation_at_T");
    cfg["eps_ladder"] = {1e-3, 1e-2};
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg = tiny_config("negligibility_bm");
    cfg["grid_ladder"] = {512.5, 1024.0};
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg = tiny_config("sticky_theorem");
    cfg["replicas"] = 0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}
