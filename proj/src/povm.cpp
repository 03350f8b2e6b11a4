#include "mincost/povm.hpp"

#include <string>

#include "mincost/linalg.hpp"

namespace mincost {

ComplexMatrix Povm::completeness_defect() const {
  if (elements.empty()) throw InvalidPovmError("povm has no elements");
  ComplexMatrix sum = ComplexMatrix::Zero(elements.front().rows(), elements.front().cols());
  for (const auto& e : elements) sum += e;
  return ComplexMatrix::Identity(sum.rows(), sum.cols()) - sum;
}

void Povm::validate(double tol) const {
  if (elements.empty()) throw InvalidPovmError("povm has no elements");
  const Eigen::Index d = elements.front().rows();
  for (const auto& e : elements) {
    if (e.rows() != d || e.cols() != d) {
      throw InvalidPovmError("povm elements have mismatched dimensions");
    }
    const PsdCheck chk = is_psd(e, tol);
    if (!chk.psd) {
      throw InvalidPovmError("povm element not PSD, min eigenvalue " +
                             std::to_string(chk.min_eigenvalue));
    }
  }
  const ComplexMatrix defect = completeness_defect();
  if (max_abs_entry(defect) <= tol) return;
  // allow completeness on a subspace: the defect must be a projector
  const PsdCheck chk = is_psd(defect, tol);
  if (!chk.psd || max_abs_entry(defect * defect - defect) > tol * 10) {
    throw InvalidPovmError("povm elements do not sum to the identity on a working space");
  }
}

bool Povm::complete_on_full_space(double tol) const {
  return max_abs_entry(completeness_defect()) <= tol;
}

Povm projective_povm(const std::vector<ComplexVector>& basis) {
  Povm p;
  p.elements.reserve(basis.size());
  for (const auto& v : basis) p.elements.push_back(outer(v));
  p.validate();
  return p;
}

Povm product_povm(const std::vector<Povm>& factors) {
  if (factors.empty()) throw InvalidPovmError("product_povm: no factors");
  Povm out = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    Povm next;
    next.elements.reserve(out.elements.size() * factors[f].elements.size());
    for (const auto& a : out.elements) {
      for (const auto& b : factors[f].elements) {
        next.elements.push_back(kron(a, b));
      }
    }
    out = std::move(next);
  }
  return out;
}

} // namespace mincost
