#pragma once

#include <functional>
#include <vector>

#include "mincost/types.hpp"

namespace mincost {

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// an orthonormal column basis of eigenvectors.
struct HermitianEigen {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
};

/// Decomposes a Hermitian matrix. The input is symmetrized as (m + m^dagger)/2
/// before factoring; throws NotSquareError / NotHermitianError if it is not
/// Hermitian within tol_herm (max-entry).
HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol_herm = kHermitianTol);

/// Applies a real scalar function to a Hermitian PSD matrix on its support:
/// eigenvalues at or below cutoff * lambda_max are mapped to zero instead of
/// being passed to f. Throws NegativeEigenvalueError if an eigenvalue is
/// negative beyond the cutoff scale.
ComplexMatrix func_on_support(const ComplexMatrix& m, const std::function<double(double)>& f,
                              double support_cutoff = kSupportCutoff);

/// Pseudo-inverse square root on the support, the workhorse for measurement
/// constructions.
ComplexMatrix inv_sqrt_on_support(const ComplexMatrix& m, double support_cutoff = kSupportCutoff);

/// Orthogonal projector onto the support of a Hermitian PSD matrix.
ComplexMatrix support_projector(const ComplexMatrix& m, double support_cutoff = kSupportCutoff);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

struct PsdCheck {
  bool psd;
  double min_eigenvalue;
};

/// PSD test with the smallest eigenvalue attached for diagnostics.
PsdCheck is_psd(const ComplexMatrix& m, double tol = kPovmTol);

/// Partial trace over the factors NOT listed in `keep` of an operator on a
/// tensor product space with the given factor dimensions (factor 0 is the
/// most significant index).
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep);

double max_abs_entry(const ComplexMatrix& m);
double frobenius(const ComplexMatrix& m);

ComplexMatrix outer(const ComplexVector& v);

} // namespace mincost
