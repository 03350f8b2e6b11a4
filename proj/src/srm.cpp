#include "mincost/srm.hpp"

#include <cmath>

#include "mincost/linalg.hpp"

namespace mincost {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex unit_phase(double turns) {
  return Complex(std::cos(kTwoPi * turns), std::sin(kTwoPi * turns));
}

RealMatrix outcome_matrix_from(const std::vector<PureState>& psis,
                               const std::vector<PureState>& phis) {
  const int n = static_cast<int>(psis.size());
  const int m = static_cast<int>(phis.size());
  RealMatrix b(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) b(i, j) = std::norm(psis[i].dot(phis[j]));
  }
  return b;
}
} // namespace

SrmResult srm_general(const std::vector<PureState>& states) {
  if (states.empty()) throw DegenerateInputError("srm: no states");
  const Eigen::Index d = states.front().size();
  ComplexMatrix phi_op = ComplexMatrix::Zero(d, d);
  for (const auto& s : states) {
    if (s.size() != d) throw DimensionMismatchError("srm: state dimensions differ");
    phi_op += outer(s);
  }
  if (max_abs_entry(phi_op) == 0.0) throw DegenerateInputError("srm: all states are zero");
  const ComplexMatrix root = inv_sqrt_on_support(phi_op);
  SrmResult out;
  out.srm_states.reserve(states.size());
  out.povm.elements.reserve(states.size());
  for (const auto& s : states) {
    PureState phi = root * s;
    out.povm.elements.push_back(outer(phi));
    out.srm_states.push_back(std::move(phi));
  }
  out.povm.validate();
  out.outcome_matrix = outcome_matrix_from(states, out.srm_states);
  return out;
}

SrmResult srm_symmetric(const SymmetricFamily& family) {
  const int n = family.n_states();
  const int d = family.dim();
  const RealVector lam = family.gram_eigenvalues();
  const double lam_max = lam.maxCoeff();
  SrmResult out;
  out.srm_states.reserve(n);
  out.povm.elements.reserve(n);
  for (int j = 0; j < n; ++j) {
    PureState phi = PureState::Zero(d);
    for (int k = 0; k < d; ++k) {
      if (lam(k) > kSupportCutoff * lam_max) {
        phi(k) = unit_phase(static_cast<double>(j) * k / n) / std::sqrt(static_cast<double>(n));
      }
    }
    out.povm.elements.push_back(outer(phi));
    out.srm_states.push_back(std::move(phi));
  }
  out.povm.validate();
  out.outcome_matrix = outcome_matrix_from(family.states(), out.srm_states);
  return out;
}

double srm_cost_circulant(const GramSpectrum& spectrum, const CirculantCost& circ) {
  const int n = spectrum.n();
  if (circ.n() != n) throw DimensionMismatchError("srm_cost_circulant: sizes differ");
  if (!spectrum.fourier_ordered) {
    throw Error("srm_cost_circulant: spectrum is not in Fourier order");
  }
  if (!circ.symmetric) {
    throw Error("srm_cost_circulant: cost coefficients are not symmetric");
  }
  const double lam_max = spectrum.eigenvalues.maxCoeff();
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    Complex amp = 0.0;
    for (int l = 0; l < n; ++l) {
      const double lam = spectrum.eigenvalues(l);
      if (lam > kSupportCutoff * lam_max) {
        amp += std::sqrt(lam) * unit_phase(static_cast<double>(k) * l / n);
      }
    }
    total += circ.coeffs(k) * std::norm(amp);
  }
  return total / (static_cast<double>(n) * n);
}

double min_error_symmetric(const GramSpectrum& spectrum) {
  const int n = spectrum.n();
  const double lam_max = spectrum.eigenvalues.maxCoeff();
  double amp = 0.0;
  for (int l = 0; l < n; ++l) {
    const double lam = spectrum.eigenvalues(l);
    if (lam > kSupportCutoff * lam_max) amp += std::sqrt(lam);
  }
  return 1.0 - amp * amp / (static_cast<double>(n) * n);
}

} // namespace mincost
