#pragma once

// Text, JSON, and DOT renderings of hub results for the monomial instance.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "stochstab/hub.hpp"
#include "stochstab/monomial.hpp"

namespace stochstab::io {

using Report = StabilityReport<MonomialClass>;
using Trace = HubTrace<MonomialClass>;
using Level = LevelRecord<MonomialClass>;

/// "eps^-2", "eps^0", "eps^-3/2".
std::string time_scale_text(const TimeScale<MonomialClass>& ts);

/// "stable: x z" followed by one "<set> vanishes depth=<d> timescale=eps^<r>"
/// line per vanished vertex.
std::string format_report_text(const Report& report);
std::string format_trace_text(const Trace& trace);

nlohmann::json graph_to_json(const PerturbationGraph<MonomialClass>& g);
nlohmann::json report_to_json(const Report& report);
/// Inverse of report_to_json; throws std::invalid_argument on schema errors.
Report report_from_json(const nlohmann::json& j);
nlohmann::json trace_to_json(const Trace& trace);

/// One digraph per level: vertices labelled by their state sets, scaled
/// weights printed as e^alpha, essential (weight-one) arcs in bold.
std::string level_to_dot(const Level& level);
/// Writes level_<d>.dot for every level into `dir` and returns the paths.
std::vector<std::filesystem::path> write_level_dots(const Trace& trace, const std::filesystem::path& dir);

}  // namespace stochstab::io
