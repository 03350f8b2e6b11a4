#pragma once

#include <optional>
#include <vector>

#include "mincost/types.hpp"

namespace mincost {

/// Quantum states with prior probabilities.
struct Ensemble {
  std::vector<DensityOperator> states;
  std::vector<double> priors;

  int n_states() const { return static_cast<int>(states.size()); }
  int dim() const { return states.empty() ? 0 : static_cast<int>(states.front().rows()); }

  void validate(double tol = kHermitianTol) const;

  static Ensemble from_pure(const std::vector<PureState>& pure, const std::vector<double>& priors);
  static Ensemble uniform_pure(const std::vector<PureState>& pure);
};

/// N states psi_i = U^i psi_0 generated by a symmetry unitary with U^N = I.
/// The family is stored in the eigenbasis of U (the computational basis
/// here), where U is diagonal with phases exp(2 pi I k / N) and the fiducial
/// state has coordinates b_k. Coefficients may contain exact zeros; the span
/// dimension counts the nonzero ones.
class SymmetricFamily {
public:
  SymmetricFamily(int n_states, ComplexVector fourier_coeffs);

  int n_states() const { return n_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  int dim_span() const { return dim_span_; }

  const ComplexVector& fourier_coeffs() const { return coeffs_; }
  ComplexMatrix symmetry_unitary() const;
  PureState fiducial() const { return state(0); }
  PureState state(int i) const;
  std::vector<PureState> states() const;

  /// Uniform-prior ensemble of the pure states.
  Ensemble pure_ensemble() const;

  /// Gram eigenvalue in Fourier order: lambda_k = N |b_k|^2.
  RealVector gram_eigenvalues() const;

private:
  int n_;
  ComplexVector coeffs_;
  int dim_span_;
};

/// Gram matrix of an ensemble of pure states together with its spectrum.
/// For circulant Gram matrices the eigenvalues are listed in Fourier (DFT)
/// order, which is what the closed-form measurement costs consume; otherwise
/// they are ascending.
struct GramSpectrum {
  ComplexMatrix gram;
  RealVector eigenvalues;
  bool fourier_ordered = false;

  int n() const { return static_cast<int>(gram.rows()); }
};

/// Mixing coefficients a(i, m): state i is the mixture sum_m a(i, m)
/// |psi_m><psi_m|. Rows sum to one; entries are nonnegative.
struct MixtureSpec {
  RealMatrix coefficients;

  int n() const { return static_cast<int>(coefficients.rows()); }
  void validate(double tol = 1e-12) const;
};

/// Builds the family from fiducial Fourier coefficients. Throws
/// NotNormalizedError unless sum |b_k|^2 = 1 within 1e-12 and
/// DimensionMismatchError if more coefficients than states are given.
SymmetricFamily symmetric_from_coeffs(const ComplexVector& b, int n_states);

/// The N symmetric coherent states {|alpha>, |w alpha>, ...}, w = exp(2 pi I/N),
/// built in a truncated Fock basis and re-expressed on their span. Throws
/// CutoffTooSmallError when the truncated fiducial norm deficit exceeds 1e-12.
SymmetricFamily coherent_symmetric_family(Complex alpha, int n_states, int fock_cutoff = 40);

/// Gram matrix with eigenvalues; cross-checks the DFT spectrum against the
/// Hermitian one when the matrix is circulant.
GramSpectrum gram(const std::vector<PureState>& states);

/// Spectrum of a symmetric family from its coefficients (exact Fourier order).
GramSpectrum family_spectrum(const SymmetricFamily& family);

/// Mixed-state ensemble rho_i = sum_m a(i, m) |psi_m><psi_m| with uniform priors.
Ensemble mix_symmetric(const SymmetricFamily& family, const MixtureSpec& spec);

/// Circulant test for complex square matrices: entries depend only on
/// (j - i) mod N within tol. Returns the first row when circulant.
std::optional<ComplexVector> circulant_first_row(const ComplexMatrix& m, double tol = kStructureTol);

} // namespace mincost
