#include "mincost/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mincost/linalg.hpp"

namespace mincost {

namespace {

double povm_cost(const std::vector<ComplexMatrix>& w, const std::vector<ComplexMatrix>& povm) {
  double total = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    total += (w[j] * povm[j]).trace().real();
  }
  return total;
}

double lower_bound_of(const std::vector<ComplexMatrix>& w,
                      const std::vector<ComplexMatrix>& povm) {
  const Eigen::Index d = w.front().rows();
  ComplexMatrix gamma = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < w.size(); ++j) gamma += w[j] * povm[j];
  const ComplexMatrix gamma_h = 0.5 * (gamma + gamma.adjoint());
  double mu = 0.0;
  for (const auto& wj : w) {
    mu = std::max(mu, hermitian_eig(gamma_h - wj).eigenvalues.maxCoeff());
  }
  return gamma_h.trace().real() - mu * static_cast<double>(d);
}

// Boundary optima let some elements decay to zero only geometrically; this
// removes the nearly dead ones outright and renormalizes the survivors.
// Returns false when nothing is small enough to prune.
bool try_prune(const std::vector<ComplexMatrix>& povm, double trace_threshold,
               std::vector<ComplexMatrix>& pruned) {
  const Eigen::Index d = povm.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  int removed = 0;
  for (const auto& p : povm) {
    if (p.trace().real() < trace_threshold) {
      ++removed;
    } else {
      total += p;
    }
  }
  if (removed == 0 || removed == static_cast<int>(povm.size())) return false;
  const ComplexMatrix norm = inv_sqrt_on_support(total);
  const ComplexMatrix proj = norm * total * norm; // support projector
  if (max_abs_entry(proj - ComplexMatrix::Identity(d, d)) > 1e-9) return false;
  pruned.resize(povm.size());
  for (std::size_t j = 0; j < povm.size(); ++j) {
    if (povm[j].trace().real() < trace_threshold) {
      pruned[j] = ComplexMatrix::Zero(d, d);
    } else {
      pruned[j] = norm * povm[j] * norm;
    }
  }
  return true;
}

// Rounds a near-rank-one POVM to the closest von Neumann measurement
// (top eigenvectors, symmetrically orthonormalized). Only defined when the
// number of outcomes matches the dimension.
bool try_projective_round(const std::vector<ComplexMatrix>& povm,
                          std::vector<ComplexMatrix>& rounded) {
  const Eigen::Index d = povm.front().rows();
  if (static_cast<Eigen::Index>(povm.size()) != d) return false;
  ComplexMatrix u(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const HermitianEigen eig = hermitian_eig(povm[j]);
    u.col(j) = eig.eigenvectors.col(d - 1);
  }
  const Eigen::JacobiSVD<ComplexMatrix> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() < 1e-6) return false; // eigenvectors nearly collinear
  const ComplexMatrix v = svd.matrixU() * svd.matrixV().adjoint();
  rounded.resize(povm.size());
  for (Eigen::Index j = 0; j < d; ++j) {
    rounded[j] = v.col(j) * v.col(j).adjoint();
  }
  return true;
}

struct RunOutcome {
  std::vector<ComplexMatrix> povm;
  double cost = 0.0;
  int iterations = 0;
  double final_delta = 0.0;
  double gap = 0.0;
};

RunOutcome run_single(const std::vector<ComplexMatrix>& w, int d, int m,
                      const OracleConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double kappa = 0.0;
  for (const auto& wj : w) {
    kappa = std::max(kappa, hermitian_eig(wj).eigenvalues.maxCoeff());
  }
  kappa += 1.0;
  std::vector<ComplexMatrix> gain(m);
  for (int j = 0; j < m; ++j) gain[j] = kappa * ComplexMatrix::Identity(d, d) - w[j];

  // maximally mixed start with a seeded PSD perturbation, renormalized
  std::vector<ComplexMatrix> povm(m);
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < m; ++j) {
    ComplexMatrix r(d, d);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) r(a, b) = Complex(gauss(rng), gauss(rng));
    }
    povm[j] = ComplexMatrix::Identity(d, d) / m + cfg.init_noise * (r * r.adjoint());
    total += povm[j];
  }
  const ComplexMatrix norm = inv_sqrt_on_support(total);
  for (auto& p : povm) p = norm * p * norm;

  RunOutcome out;
  double prev = povm_cost(w, povm);
  double best_cost = prev;
  std::vector<ComplexMatrix> best = povm;

  // all-mass-on-one-outcome candidates solve boundary optima exactly
  for (int j = 0; j < m; ++j) {
    const double boundary_cost = w[j].trace().real();
    if (boundary_cost < best_cost) {
      best_cost = boundary_cost;
      best.assign(m, ComplexMatrix::Zero(d, d));
      best[j] = ComplexMatrix::Identity(d, d);
    }
  }

  int stall = 0;
  int shakes_left = 3;
  const int check_every = 50;

  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < m; ++j) s += gain[j] * povm[j] * gain[j];
    const ComplexMatrix s_inv_root = inv_sqrt_on_support(s);
    for (int j = 0; j < m; ++j) {
      povm[j] = s_inv_root * gain[j] * povm[j] * gain[j] * s_inv_root;
      povm[j] = 0.5 * (povm[j] + povm[j].adjoint());
    }
    const double cost = povm_cost(w, povm);
    out.final_delta = std::abs(cost - prev);
    prev = cost;
    if (cost < best_cost) {
      best_cost = cost;
      best = povm;
    }
    stall = out.final_delta < cfg.step_stop ? stall + 1 : 0;
    const bool stalled = stall >= 3;
    if (stalled || (it + 1) % check_every == 0) {
      std::vector<ComplexMatrix> candidate;
      if (try_projective_round(povm, candidate)) {
        const double candidate_cost = povm_cost(w, candidate);
        if (candidate_cost < best_cost) {
          best_cost = candidate_cost;
          best = candidate;
          povm = candidate;
          prev = candidate_cost;
        }
      }
      for (const double threshold : {1e-1, 1e-2, 1e-4, 1e-7}) {
        if (try_prune(povm, threshold, candidate)) {
          const double candidate_cost = povm_cost(w, candidate);
          if (candidate_cost < best_cost) {
            best_cost = candidate_cost;
            best = candidate;
            povm = candidate;
            prev = candidate_cost;
          }
        }
      }
      out.gap = best_cost - lower_bound_of(w, best);
      if (out.gap <= cfg.cost_tol) {
        ++it;
        break;
      }
      if (stalled) {
        // spurious fixed point: shake the iterate and keep going
        if (shakes_left == 0) {
          ++it;
          break;
        }
        --shakes_left;
        ComplexMatrix total = ComplexMatrix::Zero(d, d);
        for (int j = 0; j < m; ++j) {
          ComplexMatrix r(d, d);
          for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) r(a, b) = Complex(gauss(rng), gauss(rng));
          }
          povm[j] += 0.05 * (r * r.adjoint());
          total += povm[j];
        }
        const ComplexMatrix renorm = inv_sqrt_on_support(total);
        for (auto& p : povm) p = renorm * p * renorm;
        prev = povm_cost(w, povm);
        stall = 0;
      }
    }
  }
  out.iterations = it;
  out.povm = std::move(best);
  out.cost = best_cost;
  out.gap = out.cost - lower_bound_of(w, out.povm);
  return out;
}

} // namespace

double dual_lower_bound(const std::vector<ComplexMatrix>& risk_ops, const Povm& povm) {
  return lower_bound_of(risk_ops, povm.elements);
}

OracleResult minimize_cost(const Ensemble& ensemble, const CostMatrix& cost, int n_outcomes,
                           const OracleConfig& config) {
  ensemble.validate();
  if (cost.rows() != ensemble.n_states()) {
    throw DimensionMismatchError("minimize_cost: cost rows do not match states");
  }
  if (n_outcomes < cost.cols()) {
    throw DimensionMismatchError("minimize_cost: fewer outcomes than cost columns");
  }
  // Outcomes beyond the cost columns are allowed but never advantageous:
  // they carry the worst cost of their row.
  CostMatrix padded = cost;
  if (n_outcomes > cost.cols()) {
    padded.conservativeResize(Eigen::NoChange, n_outcomes);
    for (Eigen::Index i = 0; i < cost.rows(); ++i) {
      padded.block(i, cost.cols(), 1, n_outcomes - cost.cols())
          .setConstant(cost.row(i).maxCoeff());
    }
  }
  const auto w = risk_operators(ensemble, padded);
  const int d = ensemble.dim();

  RunOutcome best;
  bool have_best = false;
  int total_iters = 0;
  for (int r = 0; r < std::max(1, config.restarts); ++r) {
    RunOutcome run = run_single(w, d, n_outcomes, config, config.seed + static_cast<std::uint64_t>(r));
    total_iters += run.iterations;
    if (!have_best || run.cost < best.cost) {
      best = std::move(run);
      have_best = true;
    }
    if (best.gap <= config.cost_tol) break;
  }

  OracleResult result;
  result.povm.elements = best.povm;
  result.min_cost = best.cost;
  result.iterations = total_iters;
  result.final_step_delta = best.final_delta;
  result.duality_gap = best.gap;
  const HelstromReport rep = check_optimality(ensemble, padded, result.povm);
  result.helstrom_residual = rep.max_residual();
  if (result.helstrom_residual > config.residual_tol * rep.tolerance_scale &&
      result.duality_gap > config.cost_tol) {
    throw NoConvergenceError(total_iters, best.cost,
                             "oracle did not certify a minimum within tolerance");
  }
  return result;
}

OracleResult minimize_over_product_povms(const std::vector<Ensemble>& local_ensembles,
                                         const std::vector<CostMatrix>& local_costs,
                                         const CostMatrix& global_cost,
                                         const OracleConfig& config) {
  if (local_ensembles.empty() || local_ensembles.size() != local_costs.size()) {
    throw DimensionMismatchError("minimize_over_product_povms: bad factor counts");
  }
  std::vector<Povm> locals;
  locals.reserve(local_ensembles.size());
  int global_states = 1;
  for (std::size_t f = 0; f < local_ensembles.size(); ++f) {
    OracleResult local = minimize_cost(local_ensembles[f],
                                       local_costs[f],
                                       static_cast<int>(local_costs[f].cols()), config);
    locals.push_back(std::move(local.povm));
    global_states *= local_ensembles[f].n_states();
  }
  if (global_cost.rows() != global_states || global_cost.cols() != global_states) {
    throw DimensionMismatchError("minimize_over_product_povms: global cost shape mismatch");
  }

  // global product ensemble, big-endian index
  Ensemble global;
  global.states.assign(1, ComplexMatrix::Identity(1, 1));
  global.priors.assign(1, 1.0);
  for (const auto& loc : local_ensembles) {
    Ensemble next;
    for (std::size_t a = 0; a < global.states.size(); ++a) {
      for (int b = 0; b < loc.n_states(); ++b) {
        next.states.push_back(kron(global.states[a], loc.states[b]));
        next.priors.push_back(global.priors[a] * loc.priors[b]);
      }
    }
    global = std::move(next);
  }

  OracleResult result;
  result.povm = product_povm(locals);
  result.min_cost = average_cost(global, global_cost, result.povm);
  const HelstromReport rep = check_optimality(global, global_cost, result.povm);
  result.helstrom_residual = rep.max_residual();
  result.duality_gap =
      result.min_cost - dual_lower_bound(risk_operators(global, global_cost), result.povm);
  return result;
}

} // namespace mincost
