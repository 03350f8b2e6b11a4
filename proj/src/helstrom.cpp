#include "mincost/helstrom.hpp"

#include <algorithm>

#include "mincost/linalg.hpp"

namespace mincost {

double HelstromReport::conditions123_residual() const {
  return std::max({cond1_residual, cond2_residual, cond3_residual});
}

double HelstromReport::max_residual() const {
  const double cond4_violation =
      cond4_min_eigs.size() == 0 ? 0.0 : std::max(0.0, -cond4_min_eigs.minCoeff());
  return std::max(conditions123_residual(), cond4_violation);
}

std::vector<ComplexMatrix> risk_operators(const Ensemble& ensemble, const CostMatrix& cost) {
  if (cost.rows() != ensemble.n_states()) {
    throw DimensionMismatchError("risk_operators: cost rows do not match states");
  }
  const int d = ensemble.dim();
  std::vector<ComplexMatrix> w(cost.cols(), ComplexMatrix::Zero(d, d));
  for (int j = 0; j < cost.cols(); ++j) {
    for (int i = 0; i < cost.rows(); ++i) {
      w[j] += ensemble.priors[i] * cost(i, j) * ensemble.states[i];
    }
  }
  return w;
}

HelstromReport check_optimality(const Ensemble& ensemble, const CostMatrix& cost,
                                const Povm& povm, double tol) {
  ensemble.validate();
  povm.validate();
  if (povm.dim() != ensemble.dim()) {
    throw DimensionMismatchError("check_optimality: povm and states have different dims");
  }
  if (cost.cols() != povm.n_outcomes()) {
    throw DimensionMismatchError("check_optimality: cost columns do not match outcomes");
  }
  HelstromReport rep;
  rep.risk_operators = risk_operators(ensemble, cost);
  const auto& w = rep.risk_operators;
  const int m = povm.n_outcomes();
  const int d = povm.dim();

  double w_scale = 0.0;
  for (const auto& wj : w) w_scale = std::max(w_scale, frobenius(wj));
  rep.tolerance_scale = std::max(1.0, w_scale);

  ComplexMatrix gamma = ComplexMatrix::Zero(d, d);
  ComplexMatrix gamma_flip = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < m; ++j) {
    gamma += w[j] * povm.elements[j];
    gamma_flip += povm.elements[j] * w[j];
  }
  rep.lagrange_operator = gamma;
  rep.cond1_residual = frobenius(gamma - gamma_flip);
  rep.cond2_residual = frobenius(gamma - gamma.adjoint());

  const ComplexMatrix gamma_h = 0.5 * (gamma + gamma.adjoint());
  rep.cond3_residual = 0.0;
  rep.cond4_min_eigs.resize(m);
  for (int j = 0; j < m; ++j) {
    const ComplexMatrix diff = w[j] - gamma_h;
    rep.cond3_residual = std::max(rep.cond3_residual, frobenius(povm.elements[j] * diff));
    rep.cond4_min_eigs(j) = hermitian_eig(diff).eigenvalues.minCoeff();
  }

  rep.pairwise_residual = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      rep.pairwise_residual = std::max(
          rep.pairwise_residual, frobenius(povm.elements[i] * (w[i] - w[j]) * povm.elements[j]));
    }
  }

  const double eff = tol * rep.tolerance_scale;
  rep.certified_optimal =
      rep.cond1_residual <= eff && rep.cond2_residual <= eff && rep.cond3_residual <= eff &&
      rep.cond4_min_eigs.minCoeff() >= -eff;
  return rep;
}

double pairwise_condition(const Ensemble& ensemble, const CostMatrix& cost, const Povm& povm) {
  const auto w = risk_operators(ensemble, cost);
  const int m = povm.n_outcomes();
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      worst = std::max(worst,
                       frobenius(povm.elements[i] * (w[i] - w[j]) * povm.elements[j]));
    }
  }
  return worst;
}

} // namespace mincost

