#include "mincost/bounds.hpp"

#include <cmath>

#include "mincost/srm.hpp"

namespace mincost {

BoundReport bound_min_cost(const SymmetricFamily& family, const CostMatrix& cost,
                           const RealVector& priors) {
  const int n = family.n_states();
  if (cost.rows() != n || cost.cols() != n) {
    throw DimensionMismatchError("bound_min_cost: cost must be NxN for the family");
  }
  if (priors.size() != 0) {
    if (priors.size() != n) throw DimensionMismatchError("bound_min_cost: bad prior count");
    for (Eigen::Index i = 0; i < priors.size(); ++i) {
      if (std::abs(priors(i) - 1.0 / n) > 1e-12) {
        throw UnsupportedPriorsError("bound_min_cost: only uniform priors are supported");
      }
    }
  }
  const RealVector uniform = RealVector::Constant(n, 1.0 / n);

  BoundReport rep;
  const RowDecomposition rows =
      constant_row_decompose(cost, uniform, RowShiftMode::subtract_row_min);
  rep.shift_cost = rows.shift_cost;
  rep.row_offsets = rows.row_offsets;
  rep.nonneg_remainder = rows.remainder;
  rep.global_offset = rows.remainder.maxCoeff();
  rep.nonpos_remainder = (rows.remainder.array() - rep.global_offset).matrix();

  // Elementwise extremes over each circulant-symmetric orbit: entries at
  // offsets k and N-k of every row.
  RealVector lo(n), hi(n);
  for (int k = 0; k < n; ++k) {
    double mn = rep.nonpos_remainder(0, k);
    double mx = mn;
    for (int i = 0; i < n; ++i) {
      const double fwd = rep.nonpos_remainder(i, (i + k) % n);
      const double bwd = rep.nonpos_remainder(i, ((i - k) % n + n) % n);
      mn = std::min({mn, fwd, bwd});
      mx = std::max({mx, fwd, bwd});
    }
    lo(k) = mn;
    hi(k) = mx;
  }
  rep.lower_envelope = CirculantCost::from_coeffs(lo);
  rep.upper_envelope = CirculantCost::from_coeffs(hi);

  const GramSpectrum spectrum = family_spectrum(family);
  constexpr double eig_tol = 1e-12;
  rep.lower_valid = rep.lower_envelope.dft_eigenvalues.maxCoeff() <= eig_tol;
  rep.upper_valid = rep.upper_envelope.dft_eigenvalues.maxCoeff() <= eig_tol;
  if (rep.lower_valid) {
    rep.lower_bound =
        rep.shift_cost + rep.global_offset + srm_cost_circulant(spectrum, rep.lower_envelope);
  }
  if (rep.upper_valid) {
    rep.upper_bound =
        rep.shift_cost + rep.global_offset + srm_cost_circulant(spectrum, rep.upper_envelope);
  }
  return rep;
}

} // namespace mincost
