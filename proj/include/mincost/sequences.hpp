#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mincost/costs.hpp"
#include "mincost/ensembles.hpp"
#include "mincost/oracle.hpp"
#include "mincost/povm.hpp"
#include "mincost/types.hpp"

namespace mincost {

/// L independent copies of one local alphabet. Global sequence k is encoded
/// big-endian: k = sum_i k(i) * N^(L-1-i), subsystem 0 most significant.
class SequenceEnsemble {
public:
  SequenceEnsemble(Ensemble local_ensemble, int length);

  const Ensemble& local_ensemble() const { return local_; }
  int length() const { return length_; }
  int n_local() const { return local_.n_states(); }
  int n_global() const { return n_global_; }
  int local_dim() const { return local_.dim(); }

  /// Digits k(0..L-1) of a global index.
  std::vector<int> digits(int k) const;
  int index_of(const std::vector<int>& digits) const;

  /// The N^L product states with product priors.
  const Ensemble& global_ensemble() const { return global_; }

private:
  Ensemble local_;
  int length_;
  int n_global_;
  Ensemble global_;
};

/// Global cost as a function of the sum of per-subsystem local costs.
/// Tables are indexed by the (integer) value of the sum; convexity/concavity
/// tags are caller-supplied and validated only on attainable sums.
struct GlobalCostFunction {
  enum class Kind { Linear, Step, Table };
  Kind kind = Kind::Linear;
  double a = 1.0; // Linear: f(x) = a x + b
  double b = 0.0;
  double threshold = 0.0; // Step: f(x) = 1 if x >= threshold else 0
  std::vector<double> table;
  bool convex_tag = false;
  bool concave_tag = false;
  CostMatrix local_cost;

  double eval(double sum) const;

  static GlobalCostFunction linear(double a, double b, CostMatrix local_cost);
  static GlobalCostFunction step(double threshold, CostMatrix local_cost);
  static GlobalCostFunction from_table(std::vector<double> values, CostMatrix local_cost);
};

/// Realizes the N^L x N^L global cost matrix
/// C(k1, k2) = f(sum_i local(k1(i), k2(i))).
CostMatrix build_global_cost(const SequenceEnsemble& seq, const GlobalCostFunction& f);

/// Minimum cost for a linear function of the sum of local costs: the product
/// of local minimum-cost measurements achieves a * sum_i local_min + b.
std::pair<double, Povm> linear_case_minimum(const SequenceEnsemble& seq, double a, double b,
                                            const CostMatrix& local_cost,
                                            const OracleConfig& config = {});

/// Bounds from the convexity/concavity tags: convex gives an upper bound and
/// concave a lower bound, both equal to the sum of local minima of the
/// per-subsystem transformed cost (1/L) f(L * local). Throws
/// NotMonotoneRangeError when a tag contradicts the attainable sums.
std::pair<std::optional<double>, std::optional<double>> convexity_bounds(
    const SequenceEnsemble& seq, const GlobalCostFunction& f, const OracleConfig& config = {});

/// The entangled two-qubit basis in which every outcome rules out one of the
/// four products of {|0>, |+>}: outcome j declares sequence j and never fires
/// on the sequence with both letters flipped.
Povm pbr_basis();

/// Entry (j, k) is true when outcome j never occurs on state k
/// (Tr(Pi_j rho_k) <= 1e-12): the outcome eliminates that state.
std::vector<std::vector<bool>> elimination_check(const Povm& povm,
                                                 const std::vector<DensityOperator>& states);

/// The local-measurement reduction of a global POVM when the cost depends
/// only on the subsystems in `keep`: outcomes are accumulated over the
/// remaining subsystems and partial-traced against their average state.
Povm reduce_povm_to_subsystems(const Povm& povm, const SequenceEnsemble& seq,
                               const std::vector<int>& keep);

/// All values the sum of local costs can attain over length-L sequences.
std::vector<double> attainable_sums(const CostMatrix& local_cost, int length);

} // namespace mincost
