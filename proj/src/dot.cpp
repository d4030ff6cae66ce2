#include <fstream>
#include <sstream>
#include <stdexcept>

#include "stochstab/io/report.hpp"

namespace stochstab::io {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string level_to_dot(const Level& level) {
  std::ostringstream os;
  os << "digraph level_" << level.depth << " {\n";
  os << "  label=" << quoted("depth " + std::to_string(level.depth) + ", M = " + to_string(level.divisor)) << ";\n";
  std::vector<char> transient(level.vertices.size(), 0);
  for (auto t : level.transient) transient[t] = 1;
  for (std::size_t v = 0; v < level.vertices.size(); ++v) {
    os << "  n" << v << " [label=" << quoted(level.vertices[v].label());
    if (transient[v]) os << ", style=dashed";
    os << "];\n";
  }
  if (level.scaled) {
    const auto& g = *level.scaled;
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (u == v || g.weight(u, v).is_zero()) continue;
        const auto& w = g.weight(u, v);
        const std::string text = is_one(w) ? "e^0" : to_string(w);
        os << "  n" << u << " -> n" << v << " [label=" << quoted(text);
        if (is_one(w)) os << ", style=bold";
        os << "];\n";
      }
  }
  os << "}\n";
  return os.str();
}

std::vector<std::filesystem::path> write_level_dots(const Trace& trace, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const auto& level : trace.levels) {
    auto path = dir / ("level_" + std::to_string(level.depth) + ".dot");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << level_to_dot(level);
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace stochstab::io
