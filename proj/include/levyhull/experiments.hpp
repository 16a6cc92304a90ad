#pragma once

#include <string>
#include <vector>

#include "levyhull/serialize.hpp"

namespace levyhull {

// One pass/fail check with its pre-registered threshold. The comparison is
// declared in the config, never chosen after looking at the data.
struct Verdict {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string cmp;   // one of ">=", "<=", ">", "<", "=="
    bool pass = false;
};

struct Report {
    std::string experiment;
    ojson config;        // effective config after defaults are filled in
    ojson per_replica;   // array, one record per replica, ordered by index
    ojson aggregates;    // object; {"absent": true} when there are no replicas
    std::vector<Verdict> verdicts;
    bool pass = false;
    double wall_clock_ms = 0.0;
};

// Known experiment ids, in dispatch order.
const std::vector<std::string>& experiment_ids();

// Default config for an id, thresholds included. Unknown id is an error.
ojson default_experiment_config(const std::string& id);

// Runs one experiment. The config must carry "experiment"; everything else
// falls back to the defaults for that id. Replicas are computed on a worker
// pool but aggregated by replica index, so the report is deterministic for a
// fixed (config, seed) regardless of scheduling.
Report run_experiment(const ojson& config);

ojson report_to_json(const Report& r);
Report report_from_json(const ojson& j);
// identical report minus the wall-clock field; the determinism contract is
// byte equality of this document's dump
ojson report_canonical_json(const Report& r);

std::string report_csv(const Report& r);
std::string plot_csv(const Report& r);

// Writes <dir>/<experiment>_report.{json|csv}; format is "json" or "csv".
void emit_report(const Report& r, const std::string& dir, const std::string& format);
// Writes <dir>/<experiment>_plot.csv with "series,x,y" rows.
void emit_plot_data(const Report& r, const std::string& dir);

} // namespace levyhull
