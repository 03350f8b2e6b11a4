#pragma once

#include <vector>

#include "mincost/types.hpp"

namespace mincost {

/// A generalized measurement: positive semidefinite elements summing to the
/// identity on their working space. When the elements act on a larger space
/// than the states occupy, the sum may be a projector instead of the full
/// identity; validation accepts that as long as the defect is itself a
/// projector.
struct Povm {
  std::vector<ComplexMatrix> elements;

  int dim() const { return elements.empty() ? 0 : static_cast<int>(elements.front().rows()); }
  int n_outcomes() const { return static_cast<int>(elements.size()); }

  /// I - sum of elements.
  ComplexMatrix completeness_defect() const;

  /// Throws InvalidPovmError unless all elements are PSD within tol and the
  /// completeness defect is zero or a projector within tol.
  void validate(double tol = kPovmTol) const;

  /// Strict check: sum of elements equals the full identity within tol.
  bool complete_on_full_space(double tol = kPovmTol) const;
};

/// Projective measurement onto an orthonormal set of vectors.
Povm projective_povm(const std::vector<ComplexVector>& basis);

/// Tensor product of measurements, outcome index big-endian in the factors.
Povm product_povm(const std::vector<Povm>& factors);

} // namespace mincost
