#pragma once

// Worked examples as abstract graphs, plus random graph generators.

#include <random>
#include <string>
#include <vector>

#include "stochstab/graph.hpp"
#include "stochstab/monomial.hpp"

namespace stochstab::test {

using MC = MonomialClass;
using Graph = PerturbationGraph<MC>;

inline MC E(std::int64_t num, std::int64_t den = 1) { return MC::exp(Rational(num, den)); }
inline MC Z() { return MC::zero(); }

struct NamedArc {
  const char* from;
  const char* to;
  MC weight;
};

inline Graph make_graph(const std::vector<std::string>& names, const std::vector<NamedArc>& arcs) {
  auto g = Graph::from_names(names);
  for (const auto& a : arcs) g.set_weight(*g.index_of(a.from), *g.index_of(a.to), a.weight);
  return g;
}

inline std::size_t idx(const Graph& g, const char* name) { return *g.index_of(name); }

/// x->y eps, y->x eps^2, z->y (1-eps)/3 which is in the class of 1.
inline Graph fig_stable1() {
  return make_graph({"x", "y", "z"}, {{"x", "y", E(1)}, {"y", "x", E(2)}, {"z", "y", E(0)}});
}

/// Two disconnected two-state chains.
inline Graph fig_disconnected() {
  return make_graph({"x", "y", "z", "t"},
                    {{"x", "y", E(3)}, {"y", "x", E(2)}, {"z", "t", E(9)}, {"t", "z", E(6)}});
}

/// x, y, z plus three nameless transients a (above x), b (above y), c (above z).
/// Halves are in the class of 1.
inline Graph fig_transient_deletion() {
  return make_graph({"x", "y", "z", "a", "b", "c"},
                    {{"a", "x", E(0)},
                     {"b", "y", E(0)},
                     {"c", "z", E(0)},
                     {"c", "b", E(0)},
                     {"a", "b", E(0)},
                     {"b", "a", E(0)},
                     {"x", "y", E(2)},
                     {"z", "x", E(1)},
                     {"x", "a", E(1)},
                     {"z", "c", E(4)},
                     {"y", "c", E(2)}});
}

/// Chain z - x - y - t; 1-eps and 1-eps^2 are in the class of 1.
inline Graph fig_vanishing_time_scale() {
  return make_graph({"z", "x", "y", "t"}, {{"z", "x", E(1)},
                                            {"x", "z", E(0)},
                                            {"x", "y", E(1)},
                                            {"y", "t", E(0)},
                                            {"y", "x", E(2)},
                                            {"t", "y", E(1)}});
}

inline std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

/// Random exponent p/q with q in 1..4 and value in [0, max_value].
inline Rational random_exponent(std::mt19937_64& rng, int max_value = 5) {
  std::uniform_int_distribution<int> den(1, 4);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(0, max_value * q);
  return Rational(num(rng), q);
}

/// Each off-diagonal arc is Zero with probability `zero_p`.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double zero_p, int max_value = 5) {
  auto g = Graph::from_names(state_names(n));
  std::bernoulli_distribution zero(zero_p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !zero(rng)) g.set_weight(u, v, MC::exp(random_exponent(rng, max_value)));
  return g;
}

/// Random graph whose non-Zero arcs contain a Hamiltonian cycle.
inline Graph random_strongly_connected(std::mt19937_64& rng, std::size_t n, double zero_p) {
  auto g = random_graph(rng, n, zero_p);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < n && n > 1; ++i) {
    const auto u = order[i], v = order[(i + 1) % n];
    if (g.weight(u, v).is_zero()) g.set_weight(u, v, MC::exp(random_exponent(rng)));
  }
  return g;
}

/// Random graph with weights already le one and a guaranteed share of
/// weight-one arcs, so that essential classes are non-trivial.
inline Graph random_scaled_graph(std::mt19937_64& rng, std::size_t n, double zero_p, double one_p) {
  auto g = random_graph(rng, n, zero_p, 3);
  std::bernoulli_distribution one(one_p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && one(rng)) g.set_weight(u, v, MC::one());
  return g;
}

}  // namespace stochstab::test
