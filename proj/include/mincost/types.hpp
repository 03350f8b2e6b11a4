#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mincost {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// A density operator is a Hermitian PSD trace-one ComplexMatrix; a pure
// state is a unit-norm ComplexVector.
using DensityOperator = ComplexMatrix;
using PureState = ComplexVector;

// Cost of declaring outcome j when state i was sent: entries C(i, j).
using CostMatrix = RealMatrix;

constexpr double kHermitianTol = 1e-9;   // max-entry tolerance on m - m^dagger
constexpr double kSupportCutoff = 1e-12; // relative eigenvalue cutoff for pseudo-inverses
constexpr double kStructureTol = 1e-9;   // entry tolerance for structure detection
constexpr double kPovmTol = 1e-9;        // PSD / completeness tolerance for measurements

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSquareError : Error {
  using Error::Error;
};
struct NotHermitianError : Error {
  using Error::Error;
};
struct NegativeEigenvalueError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct NotNormalizedError : Error {
  using Error::Error;
};
struct CutoffTooSmallError : Error {
  using Error::Error;
};
struct InvalidMixtureError : Error {
  using Error::Error;
};
struct InvalidPovmError : Error {
  using Error::Error;
};
struct DegenerateInputError : Error {
  using Error::Error;
};
struct UnsupportedPriorsError : Error {
  using Error::Error;
};
struct TableOutOfRangeError : Error {
  using Error::Error;
};
struct NotMonotoneRangeError : Error {
  using Error::Error;
};

struct NoConvergenceError : Error {
  NoConvergenceError(int iterations_, double best_cost_, const std::string& what_)
      : Error(what_), iterations(iterations_), best_cost(best_cost_) {}
  int iterations;
  double best_cost;
};

} // namespace mincost
