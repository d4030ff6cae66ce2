#include <algorithm>
#include <limits>

#include "stochstab/oracle/brute_force.hpp"
#include "stochstab/oracle/numeric.hpp"

namespace stochstab::oracle {

const char* to_string(Empirical e) {
  switch (e) {
    case Empirical::stable: return "stable";
    case Empirical::vanishing: return "vanishing";
    case Empirical::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<std::string> EmpiricalResult::names_with(Empirical e) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (verdict[i] == e) out.push_back(states[i]);
  std::sort(out.begin(), out.end());
  return out;
}

EmpiricalResult empirical_stability(const std::vector<std::string>& states, const OffDiagonal& spec,
                                    const std::vector<double>& epsilons, double threshold) {
  const std::size_t n = states.size();
  EmpiricalResult result;
  result.states = states;

  for (double eps : epsilons) {
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
    if (eps < kSmallestWellConditionedEpsilon) {
      result.warnings.push_back("dropped eps=" + std::to_string(eps) +
                                ": below 1e-5 the solve is not reliably conditioned");
      continue;
    }
    result.epsilons.push_back(eps);
  }
  if (!std::is_sorted(result.epsilons.begin(), result.epsilons.end(), std::greater<>()))
    throw std::invalid_argument("epsilons must be decreasing");
  if (result.epsilons.empty()) throw std::invalid_argument("no usable epsilon in the sweep");

  std::vector<Arc> support;
  for (const auto& [arc, s] : spec) support.push_back(arc);
  const auto components = brute_sink_sccs(n, support);

  for (double eps : result.epsilons) {
    // Every row must be feasible, including rows outside the sink components.
    for (std::size_t u = 0; u < n; ++u) {
      double out = 0.0;
      for (const auto& [arc, s] : spec)
        if (arc.first == u) out += s.value(eps);
      if (out > 1.0 + 1e-12)
        throw RowNotStochastic("row '" + states[u] + "' leaves with mass " + std::to_string(out) +
                               " at eps=" + std::to_string(eps));
    }
    std::vector<double> mu(n, 0.0);
    for (const auto& comp : components) {
      NumericChain sub;
      sub.epsilon = eps;
      std::vector<std::size_t> local(n, std::numeric_limits<std::size_t>::max());
      for (std::size_t i = 0; i < comp.size(); ++i) {
        local[comp[i]] = i;
        sub.states.push_back(states[comp[i]]);
      }
      for (const auto& [arc, s] : spec) {
        const auto [u, v] = arc;
        if (local[u] != std::numeric_limits<std::size_t>::max())
          sub.offdiag.emplace(std::make_pair(local[u], local[v]), s);  // sink: v is inside too
      }
      const auto solved = stationary_distribution(sub);
      result.max_residual = std::max(result.max_residual, solved.residual);
      for (std::size_t i = 0; i < comp.size(); ++i) mu[comp[i]] = solved.mu[i];
    }
    result.mu.push_back(std::move(mu));
  }

  result.verdict.assign(n, Empirical::inconclusive);
  for (std::size_t x = 0; x < n; ++x) {
    double lowest = std::numeric_limits<double>::infinity();
    bool non_increasing = true;
    for (std::size_t e = 0; e < result.mu.size(); ++e) {
      lowest = std::min(lowest, result.mu[e][x]);
      if (e > 0 && result.mu[e][x] > result.mu[e - 1][x] * (1.0 + 1e-9) + 1e-15) non_increasing = false;
    }
    if (lowest >= threshold)
      result.verdict[x] = Empirical::stable;
    else if (non_increasing && result.mu.back()[x] < threshold)
      result.verdict[x] = Empirical::vanishing;
  }
  return result;
}

}  // namespace stochstab::oracle
