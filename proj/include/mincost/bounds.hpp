#pragma once

#include <optional>

#include "mincost/costs.hpp"
#include "mincost/ensembles.hpp"
#include "mincost/types.hpp"

namespace mincost {

/// Certified lower/upper bounds on the minimum cost of discriminating a
/// symmetric family under an arbitrary cost matrix, obtained by sandwiching
/// the cost between circulant-symmetric negative-semidefinite envelopes whose
/// exact minimum is the closed-form square-root-measurement cost.
///
/// The decomposition is C = (constant-row part) + (global offset M) + C''
/// with C'' elementwise nonpositive, and the envelopes are the elementwise
/// tightest circulant-symmetric matrices below/above C''. A bound is only
/// emitted for a side whose envelope passes the negative-semidefiniteness
/// eigenvalue test; the report always carries the envelopes and their DFT
/// eigenvalues for diagnosis.
struct BoundReport {
  double shift_cost = 0.0;     // cost of the constant-row part
  double global_offset = 0.0;  // M, the uniform offset making C'' nonpositive
  RealVector row_offsets;      // per-state row minima
  CostMatrix nonneg_remainder; // C' = C - row minima
  CostMatrix nonpos_remainder; // C'' = C' - M
  CirculantCost lower_envelope;
  CirculantCost upper_envelope;
  bool lower_valid = false;
  bool upper_valid = false;
  std::optional<double> lower_bound;
  std::optional<double> upper_bound;
};

/// Runs the bounding pipeline. Priors must be uniform (pass empty to assume
/// them); otherwise UnsupportedPriorsError is thrown.
BoundReport bound_min_cost(const SymmetricFamily& family, const CostMatrix& cost,
                           const RealVector& priors = RealVector());

} // namespace mincost
