#pragma once

// Abstract transformations on weighted graphs: outgoing scaling, essential
// collapse, and shrinking.
//
// shrink() has two implementations. `Execution::reference` follows the
// textbook procedure literally: copy the matrix, zero the rows leaving
// non-transient vertices, run one Dijkstra per transient vertex, then take
// the maximum over every (x_i, x_j, y) triple. `Execution::parallel`
// factors the triple loop through per-class maxima and runs the Dijkstra
// calls and the class-pair combination under OpenMP. Both produce the
// same matrix bit for bit.

#include <stdexcept>
#include <vector>

#include "stochstab/dijkstra.hpp"
#include "stochstab/graph.hpp"

namespace stochstab {

enum class Execution { reference, parallel };

class InvalidClass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <OrderedDivisionSemiring F>
struct ScalingResult {
  F divisor;
  PerturbationGraph<F> scaled;
};

/// Divides every off-diagonal weight by their le-maximum M. When M is Zero
/// the graph is returned unchanged.
template <OrderedDivisionSemiring F>
ScalingResult<F> outgoing_scale(const PerturbationGraph<F>& g, Execution exec = Execution::parallel) {
  if (g.size() == 0) throw std::invalid_argument("outgoing_scale of an empty graph");
  ScalingResult<F> r{g.max_weight(), g};
  if (is_zero(r.divisor) || is_one(r.divisor)) return r;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
  const F& m = r.divisor;
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (std::ptrdiff_t u = 0; u < n; ++u) {
    auto row = r.scaled.mutable_row(static_cast<std::size_t>(u));
    for (std::ptrdiff_t v = 0; v < n; ++v)
      if (u != v && !is_zero(row[v])) row[v] = div(row[v], m);
  }
  return r;
}

/// Replaces the essential class `cls` by the single vertex holding the
/// union of its members, with le-maximum boundary weights. The merged
/// vertex takes the position of the class's smallest member.
template <OrderedDivisionSemiring F>
PerturbationGraph<F> essential_collapse(const PerturbationGraph<F>& g, VertexSet cls) {
  std::sort(cls.begin(), cls.end());
  const auto structure = essential_structure(g);
  if (std::find(structure.classes.begin(), structure.classes.end(), cls) == structure.classes.end())
    throw InvalidClass("vertex set is not an essential class of the graph");

  const std::size_t n = g.size();
  std::vector<char> in_class(n, 0);
  for (auto v : cls) in_class[v] = 1;

  // old vertex -> new vertex
  std::vector<std::size_t> image(n);
  std::vector<StateSet> vertices;
  std::vector<StateSet> members;
  std::size_t merged = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_class[v]) {
      members.push_back(g.vertex(v));
      if (v == cls.front()) {
        merged = vertices.size();
        vertices.push_back(g.vertex(v));  // placeholder, replaced below
      }
      image[v] = merged;
    } else {
      image[v] = vertices.size();
      vertices.push_back(g.vertex(v));
    }
  }
  vertices[merged] = StateSet::merge(members);

  PerturbationGraph<F> out(std::move(vertices));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || image[u] == image[v]) continue;
      const F& w = g.weight(u, v);
      const F& cur = out.weight(image[u], image[v]);
      if (lt(cur, w)) out.set_weight(image[u], image[v], w);
    }
  }
  return out;
}

namespace detail {

template <OrderedDivisionSemiring F>
PerturbationGraph<F> class_graph(const PerturbationGraph<F>& g, const std::vector<VertexSet>& classes) {
  std::vector<StateSet> vertices;
  vertices.reserve(classes.size());
  for (const auto& c : classes) {
    std::vector<StateSet> members;
    members.reserve(c.size());
    for (auto v : c) members.push_back(g.vertex(v));
    vertices.push_back(c.size() == 1 ? members.front() : StateSet::merge(members));
  }
  return PerturbationGraph<F>(std::move(vertices));
}

template <OrderedDivisionSemiring F>
void raise(F& slot, const F& candidate) {
  if (lt(slot, candidate)) slot = candidate;
}

template <OrderedDivisionSemiring F>
PerturbationGraph<F> shrink_reference(const PerturbationGraph<F>& g, const EssentialStructure& s) {
  const std::size_t k = s.classes.size();
  PerturbationGraph<F> out = class_graph(g, s.classes);

  // Direct arcs between classes.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      F best = F::zero();
      for (auto x : s.classes[i])
        for (auto y : s.classes[j]) raise(best, g.weight(x, y));
      out.set_weight(i, j, best);
    }

  if (s.transient.empty()) return out;

  // Paths of length >= 2: their second vertex lies in T.
  std::vector<char> is_transient(g.size(), 0);
  for (auto t : s.transient) is_transient[t] = 1;
  PerturbationGraph<F> from_transient = g;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (is_transient[x]) continue;
    for (std::size_t y = 0; y < g.size(); ++y)
      if (x != y) from_transient.set_weight(x, y, F::zero());
  }
  std::vector<std::vector<F>> dist;
  dist.reserve(s.transient.size());
  for (auto y : s.transient) dist.push_back(semiring_dijkstra(from_transient, y));

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      F best = out.weight(i, j);
      for (auto xi : s.classes[i])
        for (auto xj : s.classes[j])
          for (std::size_t t = 0; t < s.transient.size(); ++t)
            raise(best, mul(g.weight(xi, s.transient[t]), dist[t][xj]));
      out.set_weight(i, j, best);
    }
  return out;
}

template <OrderedDivisionSemiring F>
PerturbationGraph<F> shrink_parallel(const PerturbationGraph<F>& g, const EssentialStructure& s) {
  const std::size_t n = g.size();
  const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(s.classes.size());
  const std::ptrdiff_t nt = static_cast<std::ptrdiff_t>(s.transient.size());
  PerturbationGraph<F> out = class_graph(g, s.classes);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, kNone);
  for (std::ptrdiff_t i = 0; i < k; ++i)
    for (auto v : s.classes[i]) class_of[v] = static_cast<std::size_t>(i);
  std::vector<char> is_transient(n, 0);
  for (auto t : s.transient) is_transient[t] = 1;

  // into_t[i][t] = max over x in E_i of P(x, y_t)
  std::vector<std::vector<F>> into_t(k, std::vector<F>(nt, F::zero()));

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < k; ++i) {
    auto out_row = out.mutable_row(static_cast<std::size_t>(i));
    for (auto x : s.classes[i]) {
      const auto row = g.row(x);
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t j = class_of[y];
        if (j != kNone && j != static_cast<std::size_t>(i)) raise(out_row[j], row[y]);
      }
      for (std::ptrdiff_t t = 0; t < nt; ++t) raise(into_t[i][t], row[s.transient[t]]);
    }
  }

  if (nt == 0) return out;

  // from_t[t][j] = max over x in E_j of dist(y_t, x), paths with interior in T
  std::vector<std::vector<F>> from_t(nt, std::vector<F>(k, F::zero()));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < nt; ++t) {
    const auto dist = max_product_distances(g, s.transient[t], std::span<const char>(is_transient));
    for (std::size_t v = 0; v < n; ++v)
      if (class_of[v] != kNone) raise(from_t[t][class_of[v]], dist[v]);
  }

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < k; ++i) {
    auto out_row = out.mutable_row(static_cast<std::size_t>(i));
    for (std::ptrdiff_t t = 0; t < nt; ++t) {
      const F& first = into_t[i][t];
      if (is_zero(first)) continue;
      for (std::ptrdiff_t j = 0; j < k; ++j)
        if (j != i && !is_zero(from_t[t][j])) raise(out_row[j], mul(first, from_t[t][j]));
    }
  }
  return out;
}

}  // namespace detail

/// Graph on the essential classes E_1..E_k of `g`; the weight from E_i to
/// E_j is the le-maximum product over simple paths from E_i to E_j whose
/// interior vertices are all transient.
template <OrderedDivisionSemiring F>
PerturbationGraph<F> shrink(const PerturbationGraph<F>& g, const EssentialStructure& s,
                            Execution exec = Execution::parallel) {
  if (s.classes.empty()) throw std::invalid_argument("shrink needs at least one essential class");
  return exec == Execution::reference ? detail::shrink_reference(g, s) : detail::shrink_parallel(g, s);
}

template <OrderedDivisionSemiring F>
PerturbationGraph<F> shrink(const PerturbationGraph<F>& g, Execution exec = Execution::parallel) {
  return shrink(g, essential_structure(g), exec);
}

}  // namespace stochstab
