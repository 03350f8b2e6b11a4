#pragma once

#include <optional>

#include "mincost/ensembles.hpp"
#include "mincost/povm.hpp"
#include "mincost/types.hpp"

namespace mincost {

/// Circulant cost matrix C(i, (i+k) mod N) = c_k, with the DFT values
/// cbar_n = sum_k c_k exp(2 pi I k n / N). The DFT values are the eigenvalues
/// of the realized matrix and are real exactly when the coefficients are
/// symmetric (c_k = c_{N-k}).
struct CirculantCost {
  RealVector coeffs;
  RealVector dft_eigenvalues;
  bool symmetric = false;

  int n() const { return static_cast<int>(coeffs.size()); }
  CostMatrix to_matrix() const;

  static CirculantCost from_coeffs(const RealVector& coeffs);
};

/// Split of a cost matrix into a constant-row part plus a remainder with a
/// zero in every row. The constant-row part contributes the same cost to
/// every measurement.
struct RowDecomposition {
  RealVector row_offsets;
  CostMatrix remainder;
  double shift_cost = 0.0;
};

enum class RowShiftMode { subtract_row_min, subtract_row_max };

/// Average cost sum_{i,j} eta_i C(i,j) Tr(Pi_j rho_i). The POVM is validated
/// and outcome probabilities are clamped to [0, 1] after a tolerance check.
double average_cost(const Ensemble& ensemble, const CostMatrix& cost, const Povm& povm,
                    double tol = kPovmTol);

/// Outcome probability matrix B(i, j) = Tr(Pi_j rho_i).
RealMatrix outcome_probabilities(const Ensemble& ensemble, const Povm& povm,
                                 double tol = kPovmTol);

/// The error-counting cost C = 1 - delta.
CostMatrix min_error_cost(int n);

RowDecomposition constant_row_decompose(const CostMatrix& cost, const RealVector& priors,
                                        RowShiftMode mode = RowShiftMode::subtract_row_min);

/// Detects circulant structure within tol; absent when the matrix is not
/// circulant.
std::optional<CirculantCost> circulant_structure(const CostMatrix& cost,
                                                 double tol = kStructureTol);

/// N = 4 negative-semidefiniteness test for symmetric circulant coefficients
/// (c0, c1, c2, c1): all coefficients nonpositive, c2 >= c0 and
/// c1 >= (c0 + c2)/2. Equivalent to all four DFT eigenvalues being
/// nonpositive.
bool n4_negativity_check(double c0, double c1, double c2);

/// Cost matrix turning the minimum-error problem for mixtures
/// rho_i = sum_m a(i,m) |psi_m><psi_m| (priors eta) into a minimum-cost
/// problem for the equiprobable pure states: C(m, i) = 1 - N eta_i a(i, m).
CostMatrix mixed_error_to_pure_cost(const MixtureSpec& spec, const RealVector& priors);

} // namespace mincost
