#include <doctest.h>

#include <cmath>

#include "mincost/costs.hpp"
#include "mincost/linalg.hpp"
#include "mincost/oracle.hpp"
#include "mincost/sequences.hpp"
#include "mincost/srm.hpp"
#include "testutil.hpp"

using namespace mincost;

namespace {
OracleConfig fast_config(std::uint64_t seed = 1) {
  OracleConfig cfg;
  cfg.seed = seed;
  cfg.restarts = 2;
  return cfg;
}
} // namespace

TEST_CASE("two-state discrimination reaches the helstrom value") {
  ComplexVector zero(2), plus(2);
  zero << 1, 0;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const Ensemble e = Ensemble::uniform_pure({zero, plus});
  const OracleResult res = minimize_cost(e, min_error_cost(2), 2, fast_config());
  const double expected = 0.5 * (1.0 - 1.0 / std::sqrt(2.0));
  CHECK(std::abs(res.min_cost - expected) < 1e-7);
  CHECK(res.duality_gap < 1e-7);
  CHECK(res.povm.complete_on_full_space(1e-8));
}

TEST_CASE("coherent alphabet minimum error via the solver") {
  const auto fam = coherent_symmetric_family(2.0, 4);
  const OracleResult res =
      minimize_cost(fam.pure_ensemble(), min_error_cost(4), 4, fast_config());
  CHECK(std::abs(res.min_cost - 0.000168) < 1e-6);
}

TEST_CASE("solver certifies the SRM cost on circulant NSD instances") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 5; ++trial) {
    const auto fam = symmetric_from_coeffs(testutil::random_family_coeffs(4, rng), 4);
    const auto circ = CirculantCost::from_coeffs(testutil::random_nsd_circulant4(rng));
    const double closed = srm_cost_circulant(family_spectrum(fam), circ);
    const OracleResult res =
        minimize_cost(fam.pure_ensemble(), circ.to_matrix(), 4, fast_config());
    CHECK(std::abs(res.min_cost - closed) < 1e-6);
  }
}

TEST_CASE("oracle cost is invariant under constant-row shifts") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    const Ensemble e = testutil::random_pure_ensemble(3, 2, rng);
    const CostMatrix c = testutil::random_cost(3, 3, rng);
    RealVector offsets(3);
    for (int i = 0; i < 3; ++i) offsets(i) = std::uniform_real_distribution<>(-1, 1)(rng);
    double shift = 0.0;
    for (int i = 0; i < 3; ++i) shift += e.priors[i] * offsets(i);
    const OracleResult base = minimize_cost(e, c, 3, fast_config());
    const OracleResult moved =
        minimize_cost(e, c + CostMatrix(offsets.replicate(1, 3)), 3, fast_config());
    CHECK(std::abs(moved.min_cost - base.min_cost - shift) < 2e-7);
  }
}

TEST_CASE("solver never beats a certified candidate by more than the tolerance") {
  std::mt19937_64 rng(109);
  const auto fam = symmetric_from_coeffs(testutil::random_family_coeffs(4, rng), 4);
  const SrmResult srm = srm_symmetric(fam);
  const CostMatrix cost = min_error_cost(4);
  const double srm_cost = average_cost(fam.pure_ensemble(), cost, srm.povm);
  const OracleResult res = minimize_cost(fam.pure_ensemble(), cost, 4, fast_config());
  CHECK(res.min_cost <= srm_cost + 1e-8);
}

TEST_CASE("different seeds give matching minima") {
  std::mt19937_64 rng(113);
  const Ensemble e = testutil::random_pure_ensemble(3, 3, rng);
  const CostMatrix c = testutil::random_cost(3, 3, rng);
  const OracleResult a = minimize_cost(e, c, 3, fast_config(1));
  const OracleResult b = minimize_cost(e, c, 3, fast_config(999));
  CHECK(std::abs(a.min_cost - b.min_cost) < 2e-8);
}

TEST_CASE("deterministic for a fixed seed") {
  std::mt19937_64 rng(127);
  const Ensemble e = testutil::random_pure_ensemble(3, 2, rng);
  const CostMatrix c = testutil::random_cost(3, 3, rng);
  const OracleResult a = minimize_cost(e, c, 3, fast_config(42));
  const OracleResult b = minimize_cost(e, c, 3, fast_config(42));
  CHECK(a.min_cost == b.min_cost);
  CHECK(a.iterations == b.iterations);
  for (int j = 0; j < 3; ++j) {
    CHECK(frobenius(a.povm.elements[j] - b.povm.elements[j]) == 0.0);
  }
}

TEST_CASE("extra outcomes are allowed and unused") {
  ComplexVector zero(2), plus(2);
  zero << 1, 0;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const Ensemble e = Ensemble::uniform_pure({zero, plus});
  const OracleResult res = minimize_cost(e, min_error_cost(2), 3, fast_config());
  const double expected = 0.5 * (1.0 - 1.0 / std::sqrt(2.0));
  CHECK(std::abs(res.min_cost - expected) < 1e-6);
  CHECK(res.povm.elements[2].trace().real() < 1e-6);
  CHECK_THROWS_AS(minimize_cost(e, min_error_cost(2), 1, fast_config()),
                  DimensionMismatchError);
}

TEST_CASE("product measurement baseline on the step cost") {
  ComplexVector zero(2), plus(2);
  zero << 1, 0;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const Ensemble local = Ensemble::uniform_pure({zero, plus});
  const SequenceEnsemble seq(local, 2);
  const CostMatrix global =
      build_global_cost(seq, GlobalCostFunction::step(2.0, min_error_cost(2)));
  const OracleResult res = minimize_over_product_povms(
      {local, local}, {min_error_cost(2), min_error_cost(2)}, global, fast_config());
  const double p = 0.5 * (1.0 - 1.0 / std::sqrt(2.0));
  CHECK(std::abs(res.min_cost - p * p) < 1e-7);
  // the product is a stationary point but not globally optimal here
  CHECK(res.duality_gap > 1e-3);
}

TEST_CASE("single-factor product optimization matches the plain solver") {
  std::mt19937_64 rng(131);
  const Ensemble e = testutil::random_pure_ensemble(3, 2, rng);
  const CostMatrix c = testutil::random_cost(3, 3, rng, 0.0, 1.0);
  const OracleResult direct = minimize_cost(e, c, 3, fast_config());
  const OracleResult product = minimize_over_product_povms({e}, {c}, c, fast_config());
  CHECK(std::abs(direct.min_cost - product.min_cost) < 1e-6);
}
