#include "stochstab/io/report.hpp"

#include <sstream>
#include <stdexcept>

namespace stochstab::io {
namespace {

using nlohmann::json;

json names_json(const StateSet& s) { return json(s.names()); }

StateSet names_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("state set must be a non-empty array");
  return StateSet(j.get<std::vector<std::string>>());
}

std::string arc_list(const PerturbationGraph<MonomialClass>& g) {
  std::string out;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (u == v || g.weight(u, v).is_zero()) continue;
      if (!out.empty()) out += ", ";
      out += g.vertex(u).label() + "->" + g.vertex(v).label() + " " + to_string(g.weight(u, v));
    }
  return out.empty() ? "(none)" : out;
}

}  // namespace

std::string time_scale_text(const TimeScale<MonomialClass>& ts) {
  return "eps^" + exponent(ts).to_string();
}

std::string format_report_text(const Report& report) {
  std::ostringstream os;
  os << "stable:";
  for (const auto& s : report.stable) os << ' ' << s;
  os << '\n';
  for (const auto& v : report.vanished)
    os << v.states.label() << " vanishes depth=" << v.depth << " timescale=" << time_scale_text(v.time_scale)
       << '\n';
  return os.str();
}

std::string format_trace_text(const Trace& trace) {
  std::ostringstream os;
  for (const auto& level : trace.levels) {
    os << "level " << level.depth << ": M=" << to_string(level.divisor) << " vertices=" << level.vertices.size()
       << '\n';
    if (level.divisor.is_zero()) {
      os << "  no arcs left\n";
      continue;
    }
    const auto& vs = level.vertices;
    if (level.scaled) os << "  scaled: " << arc_list(*level.scaled) << '\n';
    os << "  essential arcs:";
    if (level.essential_arcs.empty()) os << " (none)";
    for (const auto& [u, v] : level.essential_arcs) os << ' ' << vs[u].label() << "->" << vs[v].label();
    os << "\n  classes:";
    for (const auto& c : level.classes) {
      os << " [";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << vs[c[i]].label();
      os << ']';
    }
    os << "\n  transient:";
    if (level.transient.empty()) os << " (none)";
    for (auto t : level.transient) os << ' ' << vs[t].label();
    os << '\n';
    if (level.shrunk) os << "  shrunk: " << arc_list(*level.shrunk) << '\n';
  }
  return os.str();
}

json graph_to_json(const PerturbationGraph<MonomialClass>& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back(names_json(v));
  json arcs = json::array();
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (u != v && !g.weight(u, v).is_zero())
        arcs.push_back({{"from", u}, {"to", v}, {"weight", to_string(g.weight(u, v))}});
  return {{"vertices", vertices}, {"arcs", arcs}};
}

json report_to_json(const Report& report) {
  json classes = json::array();
  for (const auto& c : report.stable_classes) classes.push_back(names_json(c));
  json vanished = json::array();
  for (const auto& v : report.vanished) {
    json divisors = json::array();
    for (const auto& d : v.time_scale.divisors) divisors.push_back(to_string(d));
    vanished.push_back({{"states", names_json(v.states)},
                        {"depth", v.depth},
                        {"timescale_exponent", exponent(v.time_scale).to_string()},
                        {"divisors", divisors}});
  }
  return {{"stable", report.stable}, {"stable_classes", classes}, {"vanished", vanished}};
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.stable = j.at("stable").get<std::vector<std::string>>();
    for (const auto& c : j.at("stable_classes")) r.stable_classes.push_back(names_from_json(c));
    for (const auto& v : j.at("vanished")) {
      TimeScale<MonomialClass> ts;
      for (const auto& d : v.at("divisors")) ts.divisors.push_back(MonomialClass::parse_weight(d.get<std::string>()));
      VanishedEntry<MonomialClass> e{names_from_json(v.at("states")), v.at("depth").get<std::size_t>(), ts};
      if (exponent(e.time_scale) != Rational::parse(v.at("timescale_exponent").get<std::string>()))
        throw std::invalid_argument("timescale_exponent disagrees with divisors");
      r.vanished.push_back(std::move(e));
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report schema: ") + e.what());
  }
}

json trace_to_json(const Trace& trace) {
  json levels = json::array();
  for (const auto& l : trace.levels) {
    json vertices = json::array();
    for (const auto& v : l.vertices) vertices.push_back(names_json(v));
    json arcs = json::array();
    for (const auto& [u, v] : l.essential_arcs) arcs.push_back({u, v});
    json level = {{"depth", l.depth},
                  {"divisor", to_string(l.divisor)},
                  {"vertices", vertices},
                  {"essential_arcs", arcs},
                  {"classes", l.classes},
                  {"transient", l.transient}};
    if (l.scaled) level["scaled"] = graph_to_json(*l.scaled);
    if (l.shrunk) level["shrunk"] = graph_to_json(*l.shrunk);
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace stochstab::io
