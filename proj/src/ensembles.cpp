#include "mincost/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mincost/linalg.hpp"

namespace mincost {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex unit_phase(double turns) {
  return Complex(std::cos(kTwoPi * turns), std::sin(kTwoPi * turns));
}
} // namespace

void Ensemble::validate(double tol) const {
  if (states.size() != priors.size()) {
    throw DimensionMismatchError("ensemble: state and prior counts differ");
  }
  if (states.empty()) throw DimensionMismatchError("ensemble: empty");
  double total = 0.0;
  for (double p : priors) {
    if (p < -1e-12) throw Error("ensemble: negative prior");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw NotNormalizedError("ensemble: priors sum to " + std::to_string(total));
  }
  const Eigen::Index d = states.front().rows();
  for (const auto& rho : states) {
    if (rho.rows() != d || rho.cols() != d) {
      throw DimensionMismatchError("ensemble: state dimensions differ");
    }
    const PsdCheck chk = is_psd(rho, tol);
    if (!chk.psd) throw Error("ensemble: state not PSD");
    if (std::abs(rho.trace().real() - 1.0) > tol) throw Error("ensemble: state trace != 1");
  }
}

Ensemble Ensemble::from_pure(const std::vector<PureState>& pure,
                             const std::vector<double>& priors) {
  Ensemble e;
  e.states.reserve(pure.size());
  for (const auto& v : pure) e.states.push_back(outer(v));
  e.priors = priors;
  e.validate();
  return e;
}

Ensemble Ensemble::uniform_pure(const std::vector<PureState>& pure) {
  return from_pure(pure, std::vector<double>(pure.size(), 1.0 / pure.size()));
}

SymmetricFamily::SymmetricFamily(int n_states, ComplexVector fourier_coeffs)
    : n_(n_states), coeffs_(std::move(fourier_coeffs)) {
  const double max_l = n_ * coeffs_.cwiseAbs2().maxCoeff();
  dim_span_ = 0;
  for (Eigen::Index k = 0; k < coeffs_.size(); ++k) {
    if (n_ * std::norm(coeffs_(k)) > kSupportCutoff * max_l) ++dim_span_;
  }
}

ComplexMatrix SymmetricFamily::symmetry_unitary() const {
  ComplexMatrix u = ComplexMatrix::Zero(dim(), dim());
  for (int k = 0; k < dim(); ++k) u(k, k) = unit_phase(static_cast<double>(k) / n_);
  return u;
}

PureState SymmetricFamily::state(int i) const {
  PureState v(dim());
  for (int k = 0; k < dim(); ++k) {
    v(k) = coeffs_(k) * unit_phase(static_cast<double>(i) * k / n_);
  }
  return v;
}

std::vector<PureState> SymmetricFamily::states() const {
  std::vector<PureState> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(state(i));
  return out;
}

Ensemble SymmetricFamily::pure_ensemble() const { return Ensemble::uniform_pure(states()); }

RealVector SymmetricFamily::gram_eigenvalues() const {
  RealVector lam(n_);
  lam.setZero();
  for (int k = 0; k < dim(); ++k) lam(k) = n_ * std::norm(coeffs_(k));
  return lam;
}

void MixtureSpec::validate(double tol) const {
  if (coefficients.rows() != coefficients.cols()) {
    throw InvalidMixtureError("mixture coefficients must be square");
  }
  for (Eigen::Index i = 0; i < coefficients.rows(); ++i) {
    if (coefficients.row(i).minCoeff() < -tol) {
      throw InvalidMixtureError("mixture row " + std::to_string(i) + " has a negative entry");
    }
    const double s = coefficients.row(i).sum();
    if (std::abs(s - 1.0) > tol) {
      throw InvalidMixtureError("mixture row " + std::to_string(i) + " sums to " +
                                std::to_string(s));
    }
  }
}

SymmetricFamily symmetric_from_coeffs(const ComplexVector& b, int n_states) {
  if (b.size() == 0 || n_states < 1) throw DimensionMismatchError("symmetric family: empty");
  if (b.size() > n_states) {
    throw DimensionMismatchError("symmetric family: more coefficients than states");
  }
  const double norm2 = b.cwiseAbs2().sum();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw NotNormalizedError("symmetric family: |b|^2 sums to " + std::to_string(norm2));
  }
  return SymmetricFamily(n_states, b);
}

SymmetricFamily coherent_symmetric_family(Complex alpha, int n_states, int fock_cutoff) {
  if (n_states < 1 || fock_cutoff < 1) throw DimensionMismatchError("coherent family: bad sizes");
  // Truncated coherent-state norm: exp(-|a|^2) sum_{n<=cutoff} |a|^{2n}/n!
  const double a2 = std::norm(alpha);
  double term = 1.0, norm2 = 1.0;
  for (int n = 1; n <= fock_cutoff; ++n) {
    term *= a2 / n;
    norm2 += term;
  }
  norm2 *= std::exp(-a2);
  if (1.0 - norm2 > 1e-12) {
    throw CutoffTooSmallError("coherent family: truncated norm deficit " +
                              std::to_string(1.0 - norm2));
  }
  // Circulant Gram of the truncated states: row entry m is
  // exp(-|a|^2) sum_n (|a|^2 w^m)^n / n!, w = exp(2 pi I / N).
  ComplexVector row(n_states);
  for (int m = 0; m < n_states; ++m) {
    const Complex z = a2 * unit_phase(static_cast<double>(m) / n_states);
    Complex t = 1.0, acc = 1.0;
    for (int n = 1; n <= fock_cutoff; ++n) {
      t *= z / static_cast<double>(n);
      acc += t;
    }
    row(m) = std::exp(-a2) * acc;
  }
  // DFT of the circulant row gives lambda_k; b_k = sqrt(lambda_k / N).
  RealVector lam(n_states);
  for (int k = 0; k < n_states; ++k) {
    Complex acc = 0.0;
    for (int m = 0; m < n_states; ++m) {
      acc += row(m) * unit_phase(-static_cast<double>(m) * k / n_states);
    }
    lam(k) = std::max(acc.real(), 0.0);
  }
  // modes below the support cutoff are exact zeros of the ideal spectrum
  const double floor = kSupportCutoff * lam.maxCoeff();
  int last = 0;
  for (int k = 0; k < n_states; ++k) {
    if (lam(k) <= floor) {
      lam(k) = 0.0;
    } else {
      last = k;
    }
  }
  lam /= lam.sum() / n_states; // absorb the truncation deficit
  ComplexVector b(last + 1);
  for (int k = 0; k <= last; ++k) b(k) = std::sqrt(lam(k) / n_states);
  return SymmetricFamily(n_states, b);
}

std::optional<ComplexVector> circulant_first_row(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw NotSquareError("circulant test: matrix not square");
  const int n = static_cast<int>(m.rows());
  ComplexVector row = m.row(0);
  for (int i = 1; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (std::abs(m(i, (i + k) % n) - row(k)) > tol) return std::nullopt;
    }
  }
  return row;
}

GramSpectrum gram(const std::vector<PureState>& states) {
  if (states.empty()) throw DimensionMismatchError("gram: no states");
  const Eigen::Index d = states.front().size();
  const int n = static_cast<int>(states.size());
  for (const auto& s : states) {
    if (s.size() != d) throw DimensionMismatchError("gram: state dimensions differ");
  }
  GramSpectrum out;
  out.gram.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.gram(i, j) = states[i].dot(states[j]);
  }
  const HermitianEigen eig = hermitian_eig(out.gram);
  if (auto row = circulant_first_row(out.gram)) {
    // Fourier order: lambda_k = sum_m G(0, m) exp(-2 pi I m k / N)
    RealVector lam(n);
    for (int k = 0; k < n; ++k) {
      Complex acc = 0.0;
      for (int m = 0; m < n; ++m) {
        acc += (*row)(m)*unit_phase(-static_cast<double>(m) * k / n);
      }
      lam(k) = acc.real();
    }
    // cross-check the two computations as multisets
    RealVector sorted = lam;
    std::sort(sorted.data(), sorted.data() + n);
    if ((sorted - eig.eigenvalues).cwiseAbs().maxCoeff() > 1e-10) {
      throw Error("gram: DFT spectrum disagrees with Hermitian eigendecomposition");
    }
    out.eigenvalues = lam;
    out.fourier_ordered = true;
  } else {
    out.eigenvalues = eig.eigenvalues;
    out.fourier_ordered = false;
  }
  return out;
}

GramSpectrum family_spectrum(const SymmetricFamily& family) {
  GramSpectrum out;
  const int n = family.n_states();
  out.eigenvalues = family.gram_eigenvalues();
  out.fourier_ordered = true;
  out.gram.resize(n, n);
  const auto psis = family.states();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.gram(i, j) = psis[i].dot(psis[j]);
  }
  return out;
}

Ensemble mix_symmetric(const SymmetricFamily& family, const MixtureSpec& spec) {
  spec.validate();
  const int n = family.n_states();
  if (spec.n() != n) throw InvalidMixtureError("mixture size does not match the family");
  const auto psis = family.states();
  Ensemble e;
  e.states.reserve(n);
  for (int i = 0; i < n; ++i) {
    DensityOperator rho = DensityOperator::Zero(family.dim(), family.dim());
    for (int m = 0; m < n; ++m) rho += spec.coefficients(i, m) * outer(psis[m]);
    e.states.push_back(std::move(rho));
  }
  e.priors.assign(n, 1.0 / n);
  e.validate();
  return e;
}

} // namespace mincost
