#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "levyhull/burgers.hpp"
#include "levyhull/drift.hpp"
#include "levyhull/hull.hpp"
#include "levyhull/path.hpp"
#include "levyhull/sticky.hpp"
#include "levyhull/synthesis.hpp"

namespace levyhull {

// Key order is part of the on-disk format (reports are compared byte for
// byte), hence the order-preserving JSON type throughout.
using ojson = nlohmann::ordered_json;

ojson path_to_json(const JumpPath& path);
ojson path_to_json(const GridPath& path);
using AnyPath = std::variant<JumpPath, GridPath>;
AnyPath path_from_json(const ojson& j);

ojson measure_to_json(const LevyMeasure& spec);
LevyMeasure measure_from_json(const ojson& j);

ojson drift_to_json(const Drift& f);
Drift drift_from_json(const ojson& j);

ojson majorant_to_json(const Majorant& m);
ojson extremal_to_json(const ExtremalSet& e);
ojson partition_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& blocks);

std::string majorant_csv(const Majorant& m);
std::string extremal_csv(const ExtremalSet& e);
std::string events_csv(const std::vector<MergeRecord>& log);
std::string shocks_csv(const ShockStructure& s);
std::string potential_csv(const std::vector<double>& xs, const std::vector<double>& psi);
std::string lagrangian_csv(const std::vector<double>& as, const std::vector<double>& xs);

// filesystem helpers shared by the tools and experiment emitters
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
ojson read_json_file(const std::string& path);

} // namespace levyhull
