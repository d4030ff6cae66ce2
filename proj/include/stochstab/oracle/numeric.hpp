#pragma once

// Numerical side of the verification: concrete chains eps -> c * eps^alpha
// evaluated at fixed eps, their stationary distributions, and an empirical
// stability classification over a decreasing eps sweep.
//
// Classification from finitely many eps values is a heuristic. Results are
// labelled "empirical" wherever they are reported.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stochstab/rational.hpp"

namespace stochstab::oracle {

class RowNotStochastic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// eps -> coeff * eps^alpha with coeff > 0 and alpha >= 0.
struct MonomialSpec {
  Rational coeff{1};
  Rational alpha{0};

  MonomialSpec() = default;
  MonomialSpec(Rational c, Rational a);
  double value(double epsilon) const;
};

using OffDiagonal = std::map<std::pair<std::size_t, std::size_t>, MonomialSpec>;

struct NumericChain {
  std::vector<std::string> states;
  OffDiagonal offdiag;  // (from, to) with from != to
  double epsilon = 0.1;
};

struct StationaryResult {
  std::vector<double> mu;
  double residual = 0.0;  // ||mu P - mu||_inf
};

/// Unique stationary distribution of an irreducible chain, by a dense
/// partially pivoted solve of (P^T - I) mu = 0 with one equation replaced
/// by the normalisation sum(mu) = 1. Self-loops absorb the row remainder.
StationaryResult stationary_distribution(const NumericChain& chain);

enum class Empirical { stable, vanishing, inconclusive };
const char* to_string(Empirical e);

struct EmpiricalResult {
  std::vector<std::string> states;
  std::vector<Empirical> verdict;             // per state
  std::vector<double> epsilons;               // the sweep actually solved
  std::vector<std::vector<double>> mu;        // mu[e][state]
  double max_residual = 0.0;
  std::vector<std::string> warnings;

  std::vector<std::string> names_with(Empirical e) const;
};

inline constexpr double kSmallestWellConditionedEpsilon = 1e-5;

/// Classifies each state over the sweep: stable when min_eps mu(x) >= threshold;
/// vanishing when mu(x) is non-increasing as eps decreases and ends below
/// threshold; inconclusive otherwise. Reducible chains are split into the
/// sink components of their support first; states outside every sink
/// component have weight zero throughout. Epsilons below 1e-5 are dropped
/// with a conditioning warning.
EmpiricalResult empirical_stability(const std::vector<std::string>& states, const OffDiagonal& spec,
                                    const std::vector<double>& epsilons, double threshold = 0.01);

}  // namespace stochstab::oracle
