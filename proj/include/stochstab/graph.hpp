#pragma once

// Weighted digraphs over an ordered-division semiring, and the extraction
// of their essential graph and essential classes (sink SCCs).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stochstab/semiring.hpp"
#include "stochstab/state_set.hpp"

namespace stochstab {

using Arc = std::pair<std::size_t, std::size_t>;
using VertexSet = std::vector<std::size_t>;

/// Dense off-diagonal weight matrix over vertices that are pairwise
/// disjoint StateSets. Diagonal weights are not representable: accessing
/// weight(v, v) is a precondition violation.
template <OrderedDivisionSemiring F>
class PerturbationGraph {
 public:
  PerturbationGraph() = default;

  /// All weights start at Zero.
  explicit PerturbationGraph(std::vector<StateSet> vertices)
      : vertices_(std::move(vertices)), weights_(vertices_.size() * vertices_.size(), F::zero()) {
    std::vector<std::string> all;
    for (const auto& v : vertices_) all.insert(all.end(), v.names().begin(), v.names().end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw std::invalid_argument("graph vertices must be pairwise disjoint state sets");
  }

  /// One singleton vertex per name.
  static PerturbationGraph from_names(const std::vector<std::string>& names) {
    std::vector<StateSet> vs;
    vs.reserve(names.size());
    for (const auto& n : names) vs.emplace_back(n);
    return PerturbationGraph(std::move(vs));
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<StateSet>& vertices() const noexcept { return vertices_; }
  const StateSet& vertex(std::size_t v) const { return vertices_.at(v); }

  std::optional<std::size_t> index_of(const StateSet& s) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), s);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  std::optional<std::size_t> index_of(const std::string& name) const { return index_of(StateSet(name)); }

  const F& weight(std::size_t from, std::size_t to) const {
    check(from, to);
    return weights_[from * size() + to];
  }
  void set_weight(std::size_t from, std::size_t to, F w) {
    check(from, to);
    weights_[from * size() + to] = std::move(w);
  }

  /// Row of outgoing weights. The diagonal slot always holds Zero and
  /// carries no meaning; kernels skip it.
  std::span<const F> row(std::size_t from) const {
    return std::span<const F>(weights_).subspan(from * size(), size());
  }
  std::span<F> mutable_row(std::size_t from) {
    return std::span<F>(weights_).subspan(from * size(), size());
  }

  /// le-maximum over all off-diagonal weights; Zero for a single vertex.
  F max_weight() const {
    F m = F::zero();
    const std::size_t n = size();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && !le(weights_[u * n + v], m)) m = weights_[u * n + v];
    return m;
  }

  std::size_t nonzero_arc_count() const {
    std::size_t c = 0;
    const std::size_t n = size();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && !is_zero(weights_[u * n + v])) ++c;
    return c;
  }

  friend bool operator==(const PerturbationGraph&, const PerturbationGraph&) = default;

 private:
  void check(std::size_t from, std::size_t to) const {
    if (from >= size() || to >= size()) throw std::out_of_range("vertex index out of range");
    if (from == to) throw PreconditionViolation("diagonal weights are not representable");
  }

  std::vector<StateSet> vertices_;
  std::vector<F> weights_;
};

/// Arcs (u, v), u != v, whose weight is exactly the semiring one, in
/// lexicographic order.
template <OrderedDivisionSemiring F>
std::vector<Arc> essential_graph(const PerturbationGraph<F>& g) {
  std::vector<Arc> arcs;
  const std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u) {
    auto r = g.row(u);
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && is_one(r[v])) arcs.emplace_back(u, v);
  }
  return arcs;
}

/// Sink strongly connected components of the digraph ({0..n-1}, arcs),
/// computed by Tarjan's algorithm extended with per-vertex sink flags.
/// Each component is sorted, components are ordered by smallest member.
std::vector<VertexSet> sink_sccs(std::size_t vertex_count, std::span<const Arc> arcs);

struct EssentialStructure {
  std::vector<Arc> arcs;
  std::vector<VertexSet> classes;
  VertexSet transient;
};

/// Essential arcs, essential classes, and the remaining transient vertices.
template <OrderedDivisionSemiring F>
EssentialStructure essential_structure(const PerturbationGraph<F>& g) {
  EssentialStructure s;
  s.arcs = essential_graph(g);
  s.classes = sink_sccs(g.size(), s.arcs);
  std::vector<char> essential(g.size(), 0);
  for (const auto& c : s.classes)
    for (auto v : c) essential[v] = 1;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!essential[v]) s.transient.push_back(v);
  return s;
}

}  // namespace stochstab
