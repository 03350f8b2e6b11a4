#include "mincost/costs.hpp"

#include <cmath>
#include <string>

#include "mincost/linalg.hpp"

namespace mincost {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

CostMatrix CirculantCost::to_matrix() const {
  const int N = n();
  CostMatrix m(N, N);
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) m(i, (i + k) % N) = coeffs(k);
  }
  return m;
}

CirculantCost CirculantCost::from_coeffs(const RealVector& c) {
  const int N = static_cast<int>(c.size());
  CirculantCost out;
  out.coeffs = c;
  out.symmetric = true;
  for (int k = 1; k < N; ++k) {
    if (std::abs(c(k) - c((N - k) % N)) > kStructureTol) {
      out.symmetric = false;
      break;
    }
  }
  out.dft_eigenvalues.resize(N);
  for (int nn = 0; nn < N; ++nn) {
    Complex acc = 0.0;
    for (int k = 0; k < N; ++k) {
      const double ang = kTwoPi * k * nn / N;
      acc += c(k) * Complex(std::cos(ang), std::sin(ang));
    }
    out.dft_eigenvalues(nn) = acc.real();
  }
  return out;
}

RealMatrix outcome_probabilities(const Ensemble& ensemble, const Povm& povm, double tol) {
  ensemble.validate();
  povm.validate(tol);
  if (povm.dim() != ensemble.dim()) {
    throw DimensionMismatchError("outcome_probabilities: povm and states have different dims");
  }
  const int N = ensemble.n_states();
  const int M = povm.n_outcomes();
  RealMatrix b(N, M);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < M; ++j) {
      const double p = (povm.elements[j] * ensemble.states[i]).trace().real();
      if (p < -tol || p > 1.0 + tol) {
        throw InvalidPovmError("outcome probability " + std::to_string(p) + " out of range");
      }
      b(i, j) = std::min(std::max(p, 0.0), 1.0);
    }
    const double row = b.row(i).sum();
    if (std::abs(row - 1.0) > tol * M + 1e-12) {
      throw InvalidPovmError("outcome probabilities for state " + std::to_string(i) +
                             " sum to " + std::to_string(row));
    }
  }
  return b;
}

double average_cost(const Ensemble& ensemble, const CostMatrix& cost, const Povm& povm,
                    double tol) {
  if (cost.rows() != ensemble.n_states() || cost.cols() != povm.n_outcomes()) {
    throw DimensionMismatchError("average_cost: cost matrix shape mismatch");
  }
  const RealMatrix b = outcome_probabilities(ensemble, povm, tol);
  double total = 0.0;
  for (int i = 0; i < cost.rows(); ++i) {
    total += ensemble.priors[i] * cost.row(i).dot(b.row(i));
  }
  return total;
}

CostMatrix min_error_cost(int n) {
  if (n < 1) throw DimensionMismatchError("min_error_cost: n < 1");
  return CostMatrix::Ones(n, n) - CostMatrix::Identity(n, n);
}

RowDecomposition constant_row_decompose(const CostMatrix& cost, const RealVector& priors,
                                        RowShiftMode mode) {
  if (priors.size() != cost.rows()) {
    throw DimensionMismatchError("constant_row_decompose: priors do not match rows");
  }
  RowDecomposition out;
  out.row_offsets.resize(cost.rows());
  for (Eigen::Index i = 0; i < cost.rows(); ++i) {
    out.row_offsets(i) = mode == RowShiftMode::subtract_row_min ? cost.row(i).minCoeff()
                                                                : cost.row(i).maxCoeff();
  }
  out.remainder = cost - out.row_offsets.replicate(1, cost.cols());
  out.shift_cost = priors.dot(out.row_offsets);
  return out;
}

std::optional<CirculantCost> circulant_structure(const CostMatrix& cost, double tol) {
  if (cost.rows() != cost.cols()) throw NotSquareError("circulant_structure: not square");
  const int N = static_cast<int>(cost.rows());
  for (int i = 1; i < N; ++i) {
    for (int k = 0; k < N; ++k) {
      if (std::abs(cost(i, (i + k) % N) - cost(0, k)) > tol) return std::nullopt;
    }
  }
  return CirculantCost::from_coeffs(cost.row(0).transpose());
}

bool n4_negativity_check(double c0, double c1, double c2) {
  const bool nonpositive = c0 <= 0.0 && c1 <= 0.0 && c2 <= 0.0;
  return nonpositive && c2 >= c0 && c1 >= 0.5 * (c0 + c2);
}

CostMatrix mixed_error_to_pure_cost(const MixtureSpec& spec, const RealVector& priors) {
  spec.validate();
  const int N = spec.n();
  if (priors.size() != N) {
    throw DimensionMismatchError("mixed_error_to_pure_cost: priors do not match mixture");
  }
  CostMatrix c(N, N);
  for (int m = 0; m < N; ++m) {
    for (int i = 0; i < N; ++i) c(m, i) = 1.0 - N * priors(i) * spec.coefficients(i, m);
  }
  return c;
}

} // namespace mincost
