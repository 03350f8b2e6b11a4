#pragma once

#include <cstdint>
#include <vector>

#include "mincost/costs.hpp"
#include "mincost/ensembles.hpp"
#include "mincost/helstrom.hpp"
#include "mincost/povm.hpp"
#include "mincost/types.hpp"

namespace mincost {

struct OracleConfig {
  double cost_tol = 1e-8;     // target certified optimality gap
  double residual_tol = 1e-6; // Helstrom residual required to certify a run
  int max_iters = 50000;
  double step_stop = 1e-14;   // stop when successive costs differ by less
  std::uint64_t seed = 1;
  int restarts = 5;
  double init_noise = 1e-3;   // perturbation of the maximally mixed start
};

struct OracleResult {
  Povm povm;
  double min_cost = 0.0;
  int iterations = 0;
  double final_step_delta = 0.0;
  double helstrom_residual = 0.0;
  /// Certified distance to the true minimum from a dual-feasible operator
  /// Y = Gamma - mu I with mu = max_j lambda_max(Gamma - W_j): the true
  /// minimum is at least min_cost - duality_gap.
  double duality_gap = 0.0;
};

/// Numerical minimum-cost solver over POVMs with n_outcomes elements.
///
/// The cost problem is converted to gain maximization with
/// G_j = kappa I - W_j (kappa chosen so all G_j are positive definite) and
/// the fixed-point update Pi_j <- S^{-1/2} G_j Pi_j G_j S^{-1/2},
/// S = sum_j G_j Pi_j G_j, from a seeded perturbation of the maximally mixed
/// measurement. Near-projective iterates are periodically rounded to the
/// closest von Neumann measurement and the rounding is kept when it lowers
/// the cost. Runs config.restarts seeds and returns the best run; throws
/// NoConvergenceError when no run certifies within the residual tolerance.
OracleResult minimize_cost(const Ensemble& ensemble, const CostMatrix& cost, int n_outcomes,
                           const OracleConfig& config = {});

/// Best cost achievable by a tensor product of independently optimized local
/// measurements: each factor is solved under its local cost matrix, the
/// product POVM (big-endian outcome index) is evaluated under the global
/// cost. The returned helstrom_residual and duality_gap refer to the global
/// problem, so they certify global optimality only when the product happens
/// to be globally optimal.
OracleResult minimize_over_product_povms(const std::vector<Ensemble>& local_ensembles,
                                         const std::vector<CostMatrix>& local_costs,
                                         const CostMatrix& global_cost,
                                         const OracleConfig& config = {});

/// Certified lower bound on the minimum cost from the dual-feasible operator
/// associated with a measurement.
double dual_lower_bound(const std::vector<ComplexMatrix>& risk_ops, const Povm& povm);

} // namespace mincost
