#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "stochstab/oracle/brute_force.hpp"
#include "stochstab/oracle/numeric.hpp"

namespace stochstab::oracle {

MonomialSpec::MonomialSpec(Rational c, Rational a) : coeff(std::move(c)), alpha(std::move(a)) {
  if (coeff.sign() <= 0) throw std::invalid_argument("monomial coefficient must be positive");
  if (alpha.sign() < 0) throw std::invalid_argument("monomial exponent must be non-negative");
}

double MonomialSpec::value(double epsilon) const {
  return coeff.to_double() * std::pow(epsilon, alpha.to_double());
}

StationaryResult stationary_distribution(const NumericChain& chain) {
  const std::size_t n = chain.states.size();
  if (n == 0) throw std::invalid_argument("chain without states");

  // Generator L = P - I, built from the off-diagonal rates directly so the
  // diagonal never goes through 1 - sum.
  Eigen::MatrixXd rates = Eigen::MatrixXd::Zero(n, n);
  std::vector<Arc> support;
  for (const auto& [arc, spec] : chain.offdiag) {
    const auto [u, v] = arc;
    if (u >= n || v >= n || u == v) throw std::invalid_argument("bad off-diagonal entry");
    rates(u, v) = spec.value(chain.epsilon);
    if (rates(u, v) > 0) support.emplace_back(u, v);
  }
  for (std::size_t u = 0; u < n; ++u) {
    const double out = rates.row(u).sum();
    if (out > 1.0 + 1e-12)
      throw RowNotStochastic("row '" + chain.states[u] + "' leaves with mass " + std::to_string(out) +
                             " at eps=" + std::to_string(chain.epsilon));
  }
  const auto reach = reachability(n, support);
  for (std::size_t v = 0; v < n; ++v)
    if (!reach[0][v] || !reach[v][0]) throw NotIrreducible("chain is not irreducible");

  Eigen::MatrixXd generator = rates;
  for (std::size_t u = 0; u < n; ++u) generator(u, u) = -rates.row(u).sum();

  Eigen::MatrixXd system = generator.transpose();
  system.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;
  Eigen::VectorXd mu = system.partialPivLu().solve(rhs);

  StationaryResult r;
  r.mu.assign(mu.data(), mu.data() + n);
  Eigen::RowVectorXd defect = mu.transpose() * generator;
  r.residual = defect.cwiseAbs().maxCoeff();
  return r;
}

}  // namespace stochstab::oracle
