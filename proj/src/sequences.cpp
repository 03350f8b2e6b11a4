#include "mincost/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "mincost/linalg.hpp"

namespace mincost {

SequenceEnsemble::SequenceEnsemble(Ensemble local_ensemble, int length)
    : local_(std::move(local_ensemble)), length_(length) {
  local_.validate();
  if (length_ < 1) throw DimensionMismatchError("sequence: length < 1");
  n_global_ = 1;
  for (int i = 0; i < length_; ++i) n_global_ *= local_.n_states();

  global_.states.assign(1, ComplexMatrix::Identity(1, 1));
  global_.priors.assign(1, 1.0);
  for (int i = 0; i < length_; ++i) {
    Ensemble next;
    next.states.reserve(global_.states.size() * local_.n_states());
    for (std::size_t a = 0; a < global_.states.size(); ++a) {
      for (int b = 0; b < local_.n_states(); ++b) {
        next.states.push_back(kron(global_.states[a], local_.states[b]));
        next.priors.push_back(global_.priors[a] * local_.priors[b]);
      }
    }
    global_ = std::move(next);
  }
}

std::vector<int> SequenceEnsemble::digits(int k) const {
  std::vector<int> out(length_);
  for (int i = length_ - 1; i >= 0; --i) {
    out[i] = k % n_local();
    k /= n_local();
  }
  return out;
}

int SequenceEnsemble::index_of(const std::vector<int>& digits) const {
  int k = 0;
  for (int d : digits) k = k * n_local() + d;
  return k;
}

double GlobalCostFunction::eval(double sum) const {
  switch (kind) {
    case Kind::Linear:
      return a * sum + b;
    case Kind::Step:
      return sum >= threshold ? 1.0 : 0.0;
    case Kind::Table: {
      const double idx = std::round(sum);
      if (std::abs(sum - idx) > 1e-9 || idx < 0 ||
          idx >= static_cast<double>(table.size())) {
        throw TableOutOfRangeError("global cost table has no entry for sum " +
                                   std::to_string(sum));
      }
      return table[static_cast<std::size_t>(idx)];
    }
  }
  throw Error("global cost: unknown kind");
}

GlobalCostFunction GlobalCostFunction::linear(double a, double b, CostMatrix local_cost) {
  GlobalCostFunction f;
  f.kind = Kind::Linear;
  f.a = a;
  f.b = b;
  f.local_cost = std::move(local_cost);
  f.convex_tag = f.concave_tag = true;
  return f;
}

GlobalCostFunction GlobalCostFunction::step(double threshold, CostMatrix local_cost) {
  GlobalCostFunction f;
  f.kind = Kind::Step;
  f.threshold = threshold;
  f.local_cost = std::move(local_cost);
  return f;
}

GlobalCostFunction GlobalCostFunction::from_table(std::vector<double> values,
                                                  CostMatrix local_cost) {
  GlobalCostFunction f;
  f.kind = Kind::Table;
  f.table = std::move(values);
  f.local_cost = std::move(local_cost);
  return f;
}

CostMatrix build_global_cost(const SequenceEnsemble& seq, const GlobalCostFunction& f) {
  if (f.local_cost.rows() != seq.n_local() || f.local_cost.cols() != seq.n_local()) {
    throw DimensionMismatchError("build_global_cost: local cost must be NxN");
  }
  const int ng = seq.n_global();
  CostMatrix global(ng, ng);
  for (int k1 = 0; k1 < ng; ++k1) {
    const auto d1 = seq.digits(k1);
    for (int k2 = 0; k2 < ng; ++k2) {
      const auto d2 = seq.digits(k2);
      double sum = 0.0;
      for (int i = 0; i < seq.length(); ++i) sum += f.local_cost(d1[i], d2[i]);
      global(k1, k2) = f.eval(sum);
    }
  }
  return global;
}

std::pair<double, Povm> linear_case_minimum(const SequenceEnsemble& seq, double a, double b,
                                            const CostMatrix& local_cost,
                                            const OracleConfig& config) {
  const OracleResult local =
      minimize_cost(seq.local_ensemble(), local_cost, static_cast<int>(local_cost.cols()),
                    config);
  const double value = a * seq.length() * local.min_cost + b;
  Povm product = product_povm(std::vector<Povm>(seq.length(), local.povm));
  return {value, std::move(product)};
}

std::vector<double> attainable_sums(const CostMatrix& local_cost, int length) {
  std::set<double> sums{0.0};
  for (int i = 0; i < length; ++i) {
    std::set<double> next;
    for (double s : sums) {
      for (Eigen::Index r = 0; r < local_cost.rows(); ++r) {
        for (Eigen::Index c = 0; c < local_cost.cols(); ++c) {
          next.insert(s + local_cost(r, c));
        }
      }
    }
    sums = std::move(next);
  }
  return {sums.begin(), sums.end()};
}

namespace {

// slope-monotonicity check of f on a sorted finite grid
void validate_tag(const GlobalCostFunction& f, const std::vector<double>& grid, bool convex) {
  for (std::size_t i = 2; i < grid.size(); ++i) {
    const double s0 = (f.eval(grid[i - 1]) - f.eval(grid[i - 2])) / (grid[i - 1] - grid[i - 2]);
    const double s1 = (f.eval(grid[i]) - f.eval(grid[i - 1])) / (grid[i] - grid[i - 1]);
    if (convex ? s1 < s0 - 1e-12 : s1 > s0 + 1e-12) {
      throw NotMonotoneRangeError(std::string("global cost is not ") +
                                  (convex ? "convex" : "concave") + " on the attainable sums");
    }
  }
}

} // namespace

std::pair<std::optional<double>, std::optional<double>> convexity_bounds(
    const SequenceEnsemble& seq, const GlobalCostFunction& f, const OracleConfig& config) {
  if (!f.convex_tag && !f.concave_tag) return {std::nullopt, std::nullopt};
  const int len = seq.length();
  // grid containing every point the Jensen split touches
  std::vector<double> grid = attainable_sums(f.local_cost, len);
  for (Eigen::Index r = 0; r < f.local_cost.rows(); ++r) {
    for (Eigen::Index c = 0; c < f.local_cost.cols(); ++c) {
      grid.push_back(len * f.local_cost(r, c));
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double x, double y) { return std::abs(x - y) < 1e-12; }),
             grid.end());
  if (f.convex_tag) validate_tag(f, grid, true);
  if (f.concave_tag) validate_tag(f, grid, false);

  // per-subsystem transformed local cost (1/L) f(L * entry)
  CostMatrix transformed(f.local_cost.rows(), f.local_cost.cols());
  for (Eigen::Index r = 0; r < f.local_cost.rows(); ++r) {
    for (Eigen::Index c = 0; c < f.local_cost.cols(); ++c) {
      transformed(r, c) = f.eval(len * f.local_cost(r, c)) / len;
    }
  }
  const OracleResult local = minimize_cost(
      seq.local_ensemble(), transformed, static_cast<int>(transformed.cols()), config);
  const double sum_of_local = len * local.min_cost;

  std::pair<std::optional<double>, std::optional<double>> out;
  if (f.concave_tag) out.first = sum_of_local;  // lower bound
  if (f.convex_tag) out.second = sum_of_local;  // upper bound
  return out;
}

Povm pbr_basis() {
  ComplexVector zero(2), one(2), plus(2), minus(2);
  zero << 1, 0;
  one << 0, 1;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  minus << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  const double r = 1 / std::sqrt(2.0);
  // outcome j declares the product state with letters (j >> 1, j & 1),
  // letter 0 = |0>, letter 1 = |+>
  const ComplexVector phi00 = r * (kron(plus, minus) + kron(minus, plus));
  const ComplexVector phi0p = r * (kron(plus, one) + kron(minus, zero));
  const ComplexVector phip0 = r * (kron(zero, minus) + kron(one, plus));
  const ComplexVector phipp = r * (kron(zero, one) + kron(one, zero));
  return projective_povm({phi00, phi0p, phip0, phipp});
}

std::vector<std::vector<bool>> elimination_check(const Povm& povm,
                                                 const std::vector<DensityOperator>& states) {
  if (states.empty()) throw DimensionMismatchError("elimination_check: no states");
  std::vector<std::vector<bool>> out(povm.n_outcomes(),
                                     std::vector<bool>(states.size(), false));
  for (int j = 0; j < povm.n_outcomes(); ++j) {
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (states[k].rows() != povm.dim()) {
        throw DimensionMismatchError("elimination_check: dimension mismatch");
      }
      out[j][k] = (povm.elements[j] * states[k]).trace().real() <= 1e-12;
    }
  }
  return out;
}

Povm reduce_povm_to_subsystems(const Povm& povm, const SequenceEnsemble& seq,
                               const std::vector<int>& keep) {
  const int d_loc = seq.local_dim();
  const std::vector<int> dims(seq.length(), d_loc);
  // average state of the traced-out subsystems
  ComplexMatrix avg_local = ComplexMatrix::Zero(d_loc, d_loc);
  for (int b = 0; b < seq.n_local(); ++b) {
    avg_local += seq.local_ensemble().priors[b] * seq.local_ensemble().states[b];
  }
  // weight operator: identity on kept factors, average state elsewhere
  ComplexMatrix weight = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < seq.length(); ++i) {
    const bool kept = std::find(keep.begin(), keep.end(), i) != keep.end();
    weight = kron(weight, kept ? ComplexMatrix::Identity(d_loc, d_loc) : avg_local);
  }

  int n_kept_outcomes = 1;
  for (std::size_t i = 0; i < keep.size(); ++i) n_kept_outcomes *= seq.n_local();

  Povm reduced;
  reduced.elements.assign(n_kept_outcomes, ComplexMatrix());
  int kept_dim = 1;
  for (std::size_t i = 0; i < keep.size(); ++i) kept_dim *= d_loc;
  for (auto& e : reduced.elements) e = ComplexMatrix::Zero(kept_dim, kept_dim);

  for (int k = 0; k < seq.n_global(); ++k) {
    const auto dg = seq.digits(k);
    std::vector<int> kept_digits;
    kept_digits.reserve(keep.size());
    for (int i : keep) kept_digits.push_back(dg[i]);
    int idx = 0;
    for (int d : kept_digits) idx = idx * seq.n_local() + d;
    reduced.elements[idx] += partial_trace(povm.elements[k] * weight, dims, keep);
  }
  return reduced;
}

} // namespace mincost
