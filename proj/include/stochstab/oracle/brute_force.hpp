#pragma once

// Exhaustive reference computations used to check the fast algorithms.
// Nothing here shares code with the Tarjan, Dijkstra, or shrink kernels.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stochstab/graph.hpp"

namespace stochstab::oracle {

class TooLarge : public std::length_error {
 public:
  TooLarge(std::size_t n, std::size_t cap)
      : std::length_error("graph with " + std::to_string(n) + " vertices exceeds brute-force cap " +
                          std::to_string(cap)) {}
};

class NotIrreducible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultCap = 8;

/// reach[u][v]: v reachable from u (reflexive), by DFS from every vertex.
inline std::vector<std::vector<char>> reachability(std::size_t n, std::span<const Arc> arcs) {
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [u, v] : arcs) out[u].push_back(v);
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> todo{s};
    reach[s][s] = 1;
    while (!todo.empty()) {
      auto u = todo.back();
      todo.pop_back();
      for (auto v : out[u])
        if (!reach[s][v]) {
          reach[s][v] = 1;
          todo.push_back(v);
        }
    }
  }
  return reach;
}

/// SCCs by mutual reachability, filtered to those with no leaving arc.
inline std::vector<VertexSet> brute_sink_sccs(std::size_t n, std::span<const Arc> arcs) {
  const auto reach = reachability(n, arcs);
  std::vector<VertexSet> result;
  std::vector<char> assigned(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (assigned[u]) continue;
    VertexSet comp;
    for (std::size_t v = 0; v < n; ++v)
      if (reach[u][v] && reach[v][u]) {
        comp.push_back(v);
        assigned[v] = 1;
      }
    bool is_sink = true;
    for (auto v : comp)
      for (std::size_t w = 0; w < n; ++w)
        if (reach[v][w] && !reach[w][v]) is_sink = false;
    if (is_sink) result.push_back(std::move(comp));
  }
  return result;
}

/// Arcs carrying a non-Zero weight.
template <OrderedDivisionSemiring F>
std::vector<Arc> support_arcs(const PerturbationGraph<F>& g) {
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (u != v && !is_zero(g.weight(u, v))) arcs.emplace_back(u, v);
  return arcs;
}

template <OrderedDivisionSemiring F>
bool strongly_connected(const PerturbationGraph<F>& g) {
  const auto arcs = support_arcs(g);
  const auto reach = reachability(g.size(), arcs);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!reach[0][v] || !reach[v][0]) return false;
  return true;
}

/// le-maximum product over simple paths starting in `from`, ending in `to`,
/// with every interior vertex in `interior`. `from` and `to` must be
/// disjoint. Enumerates all such paths.
template <OrderedDivisionSemiring F>
F simple_path_max(const PerturbationGraph<F>& g, const VertexSet& from, const VertexSet& to,
                  const VertexSet& interior, std::size_t cap = kDefaultCap) {
  const std::size_t n = g.size();
  if (n > cap) throw TooLarge(n, cap);
  std::vector<char> is_target(n, 0), is_interior(n, 0), visited(n, 0);
  for (auto v : to) is_target[v] = 1;
  for (auto v : interior) is_interior[v] = 1;

  F best = F::zero();
  std::function<void(std::size_t, const F&)> walk = [&](std::size_t u, const F& product) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || visited[v] || is_zero(g.weight(u, v))) continue;
      const F extended = mul(product, g.weight(u, v));
      if (is_target[v]) best = semiring_max(best, extended);
      if (is_interior[v] && !is_target[v]) {
        visited[v] = 1;
        walk(v, extended);
        visited[v] = 0;
      }
    }
  };
  for (auto s : from) {
    visited[s] = 1;
    walk(s, F::one());
    visited[s] = 0;
  }
  return best;
}

/// Max-product distances from `source` by enumerating simple paths.
template <OrderedDivisionSemiring F>
std::vector<F> simple_path_distances(const PerturbationGraph<F>& g, std::size_t source,
                                     std::size_t cap = kDefaultCap) {
  const std::size_t n = g.size();
  if (n > cap) throw TooLarge(n, cap);
  std::vector<F> dist(n, F::zero());
  dist[source] = F::one();
  std::vector<char> visited(n, 0);
  std::function<void(std::size_t, const F&)> walk = [&](std::size_t u, const F& product) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || visited[v] || is_zero(g.weight(u, v))) continue;
      const F extended = mul(product, g.weight(u, v));
      dist[v] = semiring_max(dist[v], extended);
      visited[v] = 1;
      walk(v, extended);
      visited[v] = 0;
    }
  };
  visited[source] = 1;
  walk(source, F::one());
  return dist;
}

/// Reference shrink: brute-force essential classes, then simple_path_max
/// between every ordered pair of distinct classes through the transients.
template <OrderedDivisionSemiring F>
PerturbationGraph<F> brute_shrink(const PerturbationGraph<F>& g, std::size_t cap = kDefaultCap) {
  const std::size_t n = g.size();
  if (n > cap) throw TooLarge(n, cap);
  std::vector<Arc> ones;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g.weight(u, v) == F::one()) ones.emplace_back(u, v);
  const auto classes = brute_sink_sccs(n, ones);
  std::vector<char> essential(n, 0);
  for (const auto& c : classes)
    for (auto v : c) essential[v] = 1;
  VertexSet transient;
  for (std::size_t v = 0; v < n; ++v)
    if (!essential[v]) transient.push_back(v);

  std::vector<StateSet> vertices;
  for (const auto& c : classes) {
    std::vector<std::string> names;
    for (auto v : c) names.insert(names.end(), g.vertex(v).names().begin(), g.vertex(v).names().end());
    vertices.emplace_back(std::move(names));
  }
  PerturbationGraph<F> out(std::move(vertices));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (i != j) out.set_weight(i, j, simple_path_max(g, classes[i], classes[j], transient, cap));
  return out;
}

/// le-maximum weight of a spanning arborescence directed towards `root`,
/// by exhaustive parent assignment with incremental cycle rejection.
template <OrderedDivisionSemiring F>
F max_arborescence_weight(const PerturbationGraph<F>& g, std::size_t root, std::size_t cap = kDefaultCap) {
  const std::size_t n = g.size();
  if (n > cap) throw TooLarge(n, cap);
  if (root >= n) throw std::out_of_range("root out of range");
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kUnset);
  parent[root] = root;

  // Following parents from v must not come back to v.
  auto closes_cycle = [&](std::size_t v) {
    std::size_t u = parent[v];
    for (std::size_t steps = 0; steps < n; ++steps) {
      if (u == v) return true;
      if (u == root || parent[u] == kUnset) return false;
      u = parent[u];
    }
    return true;
  };

  F best = F::zero();
  std::function<void(std::size_t, const F&)> assign = [&](std::size_t v, const F& product) {
    if (v == n) {
      best = semiring_max(best, product);
      return;
    }
    if (v == root) {
      assign(v + 1, product);
      return;
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (p == v || is_zero(g.weight(v, p))) continue;
      parent[v] = p;
      if (!closes_cycle(v)) assign(v + 1, mul(product, g.weight(v, p)));
      parent[v] = kUnset;
    }
  };
  assign(0, F::one());
  return best;
}

/// Vertices whose maximum arborescence weight is le-maximal. Requires the
/// non-Zero arcs to form a strongly connected graph.
template <OrderedDivisionSemiring F>
VertexSet young_stable_states(const PerturbationGraph<F>& g, std::size_t cap = kDefaultCap) {
  if (g.size() > cap) throw TooLarge(g.size(), cap);
  if (!strongly_connected(g)) throw NotIrreducible("non-Zero arcs are not strongly connected");
  std::vector<F> beta;
  for (std::size_t x = 0; x < g.size(); ++x) beta.push_back(max_arborescence_weight(g, x, cap));
  F top = F::zero();
  for (const auto& b : beta) top = semiring_max(top, b);
  VertexSet argmax;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (beta[x] == top) argmax.push_back(x);
  return argmax;
}

/// Stable states of an arbitrary graph: split into the sink components of
/// the non-Zero arcs, run the arborescence criterion inside each, and
/// return the sorted original names. Vertices outside every sink component
/// have stationary weight zero and are never stable.
template <OrderedDivisionSemiring F>
std::vector<std::string> decomposed_stable_names(const PerturbationGraph<F>& g, std::size_t cap = kDefaultCap) {
  const auto components = brute_sink_sccs(g.size(), support_arcs(g));
  std::vector<std::string> names;
  for (const auto& comp : components) {
    if (comp.size() > cap) throw TooLarge(comp.size(), cap);
    std::vector<StateSet> vs;
    for (auto v : comp) vs.push_back(g.vertex(v));
    PerturbationGraph<F> sub(std::move(vs));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j)
        if (i != j) sub.set_weight(i, j, g.weight(comp[i], comp[j]));
    for (auto x : young_stable_states(sub, cap))
      names.insert(names.end(), sub.vertex(x).names().begin(), sub.vertex(x).names().end());
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace stochstab::oracle
