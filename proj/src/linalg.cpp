#include "mincost/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

namespace mincost {

ComplexMatrix HermitianEigen::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

HermitianEigen hermitian_eig(const ComplexMatrix& m, double tol_herm) {
  if (m.rows() != m.cols()) {
    throw NotSquareError("hermitian_eig: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  const double herm_defect = max_abs_entry(m - m.adjoint());
  if (herm_defect > tol_herm) {
    throw NotHermitianError("hermitian_eig: |m - m^dagger| = " + std::to_string(herm_defect));
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed");
  }
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix func_on_support(const ComplexMatrix& m, const std::function<double(double)>& f,
                              double support_cutoff) {
  const HermitianEigen eig = hermitian_eig(m);
  const double scale = eig.eigenvalues.size() == 0 ? 0.0 : eig.eigenvalues.cwiseAbs().maxCoeff();
  const double cutoff = support_cutoff * scale;
  RealVector g(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double w = eig.eigenvalues(i);
    if (w < -cutoff) {
      throw NegativeEigenvalueError("func_on_support: eigenvalue " + std::to_string(w) +
                                    " below support cutoff");
    }
    g(i) = w > cutoff ? f(w) : 0.0;
  }
  return eig.eigenvectors * g.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix inv_sqrt_on_support(const ComplexMatrix& m, double support_cutoff) {
  return func_on_support(
      m, [](double w) { return 1.0 / std::sqrt(w); }, support_cutoff);
}

ComplexMatrix support_projector(const ComplexMatrix& m, double support_cutoff) {
  return func_on_support(
      m, [](double) { return 1.0; }, support_cutoff);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

PsdCheck is_psd(const ComplexMatrix& m, double tol) {
  const HermitianEigen eig = hermitian_eig(m);
  const double min_eig = eig.eigenvalues.size() == 0 ? 0.0 : eig.eigenvalues.minCoeff();
  return PsdCheck{min_eig >= -tol, min_eig};
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  const int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
  if (m.rows() != total || m.cols() != total) {
    throw DimensionMismatchError("partial_trace: operator does not match factor dimensions");
  }
  std::vector<int> traced;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) traced.push_back(i);
  }
  int keep_dim = 1;
  for (int i : keep) keep_dim *= dims[i];
  int traced_dim = 1;
  for (int i : traced) traced_dim *= dims[i];

  // strides of each factor in the big-endian composite index
  std::vector<int> stride(dims.size());
  int s = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    stride[i] = s;
    s *= dims[i];
  }
  auto compose = [&](int kept, int tr) {
    int idx = 0;
    int k = kept;
    for (int pos = static_cast<int>(keep.size()) - 1; pos >= 0; --pos) {
      const int f = keep[pos];
      idx += (k % dims[f]) * stride[f];
      k /= dims[f];
    }
    int t = tr;
    for (int pos = static_cast<int>(traced.size()) - 1; pos >= 0; --pos) {
      const int f = traced[pos];
      idx += (t % dims[f]) * stride[f];
      t /= dims[f];
    }
    return idx;
  };

  ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
  for (int r = 0; r < keep_dim; ++r) {
    for (int c = 0; c < keep_dim; ++c) {
      Complex acc = 0.0;
      for (int t = 0; t < traced_dim; ++t) {
        acc += m(compose(r, t), compose(c, t));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

} // namespace mincost
