#pragma once

#include <span>
#include <vector>

#include "stochstab/graph.hpp"

namespace stochstab {

namespace detail {

// Dense O(n^2) Dijkstra with max as the selection and mul as the path
// extension. Rows whose `relaxable` flag is 0 are treated as all-Zero,
// which lets callers drop arcs without copying the matrix.
template <OrderedDivisionSemiring F>
std::vector<F> max_product_distances(const PerturbationGraph<F>& g, std::size_t source,
                                     std::span<const char> relaxable) {
  const std::size_t n = g.size();
  std::vector<F> dist(n, F::zero());
  std::vector<char> done(n, 0);
  dist.at(source) = F::one();

  for (std::size_t round = 0; round < n; ++round) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v] || is_zero(dist[v])) continue;
      if (best == n || lt(dist[best], dist[v])) best = v;
    }
    if (best == n) break;
    done[best] = 1;
    if (!relaxable.empty() && !relaxable[best]) continue;

    const auto row = g.row(best);
    for (std::size_t v = 0; v < n; ++v) {
      if (v == best || done[v] || is_zero(row[v])) continue;
      F candidate = mul(dist[best], row[v]);
      if (lt(dist[v], candidate)) dist[v] = std::move(candidate);
    }
  }
  return dist;
}

}  // namespace detail

/// Max-product "distances" from `source`: dist(v) is the le-maximum over
/// directed paths source -> v of the product of their weights, with
/// dist(source) = one. Requires every weight le one, so that extending a
/// path never increases its product.
template <OrderedDivisionSemiring F>
std::vector<F> semiring_dijkstra(const PerturbationGraph<F>& g, std::size_t source) {
  return detail::max_product_distances(g, source, {});
}

}  // namespace stochstab
