#pragma once

#include <vector>

#include "mincost/costs.hpp"
#include "mincost/ensembles.hpp"
#include "mincost/povm.hpp"
#include "mincost/types.hpp"

namespace mincost {

/// Square-root measurement: rank-one elements |phi_j><phi_j| built from
/// phi_j = Phi^{-1/2} psi_j, with the outcome probability matrix
/// B(i, j) = |<psi_i|phi_j>|^2.
struct SrmResult {
  Povm povm;
  std::vector<PureState> srm_states;
  RealMatrix outcome_matrix;
};

/// SRM for arbitrary pure states: Phi = sum |psi_i><psi_i| and the inverse
/// square root is taken on the support. Throws DegenerateInputError when all
/// states vanish.
SrmResult srm_general(const std::vector<PureState>& states);

/// Closed-form SRM of a symmetric family: phi_j = (1/sqrt N) sum_k
/// exp(2 pi I j k / N) |gamma_k>, summed over the occupied Fourier modes.
SrmResult srm_symmetric(const SymmetricFamily& family);

/// SRM cost under a symmetric circulant cost with equal priors:
/// (1/N^2) sum_k c_k |sum_l sqrt(lambda_l) exp(2 pi I k l / N)|^2.
/// The spectrum must be in Fourier order.
double srm_cost_circulant(const GramSpectrum& spectrum, const CirculantCost& circ);

/// Minimum-error probability of a symmetric family:
/// 1 - (1/N^2) |sum_l sqrt(lambda_l)|^2.
double min_error_symmetric(const GramSpectrum& spectrum);

} // namespace mincost
