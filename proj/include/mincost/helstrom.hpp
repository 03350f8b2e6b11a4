#pragma once

#include <vector>

#include "mincost/costs.hpp"
#include "mincost/ensembles.hpp"
#include "mincost/povm.hpp"
#include "mincost/types.hpp"

namespace mincost {

/// Optimality certificate for a (ensemble, cost, measurement) triple.
///
/// The risk operators are W_j = sum_i eta_i C(i, j) rho_i and the Lagrange
/// operator is Gamma = sum_j W_j Pi_j. A measurement is minimum-cost optimal
/// iff (1) sum_j Pi_j W_j = sum_j W_j Pi_j, (2) Gamma is Hermitian,
/// (3) Pi_j (W_j - Gamma) = 0 for all j, and (4) W_j - Gamma is PSD for all
/// j. The first three conditions are together equivalent to the pairwise
/// form Pi_i (W_i - W_j) Pi_j = 0.
struct HelstromReport {
  std::vector<ComplexMatrix> risk_operators;
  ComplexMatrix lagrange_operator;
  double cond1_residual = 0.0;   // ||sum Pi_j W_j - sum W_j Pi_j||_F
  double cond2_residual = 0.0;   // ||Gamma - Gamma^dagger||_F
  double cond3_residual = 0.0;   // max_j ||Pi_j (W_j - Gamma_h)||_F
  RealVector cond4_min_eigs;     // min eigenvalue of W_j - Gamma_h per j
  double pairwise_residual = 0.0; // max_{i,j} ||Pi_i (W_i - W_j) Pi_j||_F
  bool certified_optimal = false;
  double tolerance_scale = 1.0;  // max(1, max_j ||W_j||_F), applied to tol

  double conditions123_residual() const;
  double max_residual() const; // includes the condition-4 violation, if any
};

/// Evaluates all four optimality conditions and the pairwise form.
/// Certification compares residuals against tol * max(1, max_j ||W_j||_F);
/// condition 4 is tested on the Hermitian part of Gamma while condition 2
/// reports the asymmetry of the raw Gamma.
HelstromReport check_optimality(const Ensemble& ensemble, const CostMatrix& cost,
                                const Povm& povm, double tol = 1e-8);

/// Just the pairwise residual max_{i,j} ||Pi_i (W_i - W_j) Pi_j||_F.
double pairwise_condition(const Ensemble& ensemble, const CostMatrix& cost, const Povm& povm);

/// The risk operators W_j.
std::vector<ComplexMatrix> risk_operators(const Ensemble& ensemble, const CostMatrix& cost);

} // namespace mincost
