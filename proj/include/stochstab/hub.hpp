#pragma once

// The Hub algorithm: alternate outgoing scaling and shrinking until no arc
// is left. The surviving vertices hold the stochastically stable states;
// every transient vertex met on the way vanishes at the time scale given
// by the inverse product of the divisors seen so far.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stochstab/graph.hpp"
#include "stochstab/monomial.hpp"
#include "stochstab/transforms.hpp"

namespace stochstab {

class EmptyGraph : public std::invalid_argument {
 public:
  EmptyGraph() : std::invalid_argument("hub needs at least one vertex") {}
};

class DepthOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Formal product of inverses M_1^-1 ... M_d^-1, kept as the divisor list.
template <OrderedDivisionSemiring F>
struct TimeScale {
  std::vector<F> divisors;
  friend bool operator==(const TimeScale&, const TimeScale&) = default;
};

/// eps^(-sum alpha_i) for the monomial instance.
inline Rational exponent(const TimeScale<MonomialClass>& ts) {
  return inverse_product_exponent(ts.divisors);
}

template <OrderedDivisionSemiring F>
struct LevelRecord {
  std::size_t depth = 0;
  std::vector<StateSet> vertices;  // input vertices of this recursion
  F divisor;                       // M_d; Zero on the terminal level
  std::optional<PerturbationGraph<F>> scaled;
  std::vector<Arc> essential_arcs;
  std::vector<VertexSet> classes;
  VertexSet transient;
  std::optional<PerturbationGraph<F>> shrunk;
};

template <OrderedDivisionSemiring F>
struct HubTrace {
  std::vector<LevelRecord<F>> levels;

  /// Number of levels that scaled by a non-Zero divisor.
  std::size_t scaling_depth() const {
    std::size_t d = 0;
    for (const auto& l : levels)
      if (!is_zero(l.divisor)) ++d;
    return d;
  }
};

template <OrderedDivisionSemiring F>
struct VanishedEntry {
  StateSet states;
  std::size_t depth;
  TimeScale<F> time_scale;
  friend bool operator==(const VanishedEntry&, const VanishedEntry&) = default;
};

template <OrderedDivisionSemiring F>
struct StabilityReport {
  std::vector<std::string> stable;       // sorted original names
  std::vector<StateSet> stable_classes;  // terminal vertices
  std::vector<VanishedEntry<F>> vanished;
  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

template <OrderedDivisionSemiring F>
struct HubResult {
  StabilityReport<F> report;
  HubTrace<F> trace;
};

struct HubOptions {
  Execution execution = Execution::parallel;
  /// Keep scaled and shrunk graph snapshots in the trace. Costs O(n^2)
  /// memory per level.
  bool record_graphs = true;
};

template <OrderedDivisionSemiring F>
HubResult<F> hub(const PerturbationGraph<F>& input, const HubOptions& options = {}) {
  if (input.size() == 0) throw EmptyGraph();

  HubResult<F> result;
  std::vector<F> divisors;
  PerturbationGraph<F> current = input;

  for (std::size_t depth = 1;; ++depth) {
    LevelRecord<F> level;
    level.depth = depth;
    level.vertices = current.vertices();

    auto [divisor, scaled] = outgoing_scale(current, options.execution);
    level.divisor = divisor;
    if (is_zero(divisor)) {
      if (options.record_graphs) level.scaled = current;
      result.trace.levels.push_back(std::move(level));
      for (const auto& v : current.vertices())
        result.report.stable.insert(result.report.stable.end(), v.names().begin(), v.names().end());
      std::sort(result.report.stable.begin(), result.report.stable.end());
      result.report.stable_classes = current.vertices();
      break;
    }

    divisors.push_back(divisor);
    EssentialStructure structure = essential_structure(scaled);
    for (auto t : structure.transient)
      result.report.vanished.push_back({scaled.vertex(t), depth, TimeScale<F>{divisors}});

    PerturbationGraph<F> next = shrink(scaled, structure, options.execution);

    level.essential_arcs = std::move(structure.arcs);
    level.classes = std::move(structure.classes);
    level.transient = std::move(structure.transient);
    if (options.record_graphs) {
      level.scaled = std::move(scaled);
      level.shrunk = next;
    }
    result.trace.levels.push_back(std::move(level));
    current = std::move(next);
  }
  return result;
}

/// Divisors M_1..M_depth; depth counts only levels with a non-Zero divisor.
template <OrderedDivisionSemiring F>
TimeScale<F> time_scale_of(const HubTrace<F>& trace, std::size_t depth) {
  if (depth < 1 || depth > trace.scaling_depth())
    throw DepthOutOfRange("depth " + std::to_string(depth) + " outside 1.." +
                          std::to_string(trace.scaling_depth()));
  TimeScale<F> ts;
  for (std::size_t i = 0; i < depth; ++i) ts.divisors.push_back(trace.levels[i].divisor);
  return ts;
}

}  // namespace stochstab
