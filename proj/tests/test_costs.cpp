#include <doctest.h>

#include <cmath>

#include "mincost/costs.hpp"
#include "mincost/linalg.hpp"
#include "mincost/srm.hpp"
#include "testutil.hpp"

using namespace mincost;

TEST_CASE("min_error_cost") {
  CHECK(min_error_cost(1)(0, 0) == 0.0);
  const CostMatrix c2 = min_error_cost(2);
  CHECK(c2(0, 0) == 0.0);
  CHECK(c2(0, 1) == 1.0);
  const CostMatrix c4 = min_error_cost(4);
  CHECK(c4.diagonal().cwiseAbs().maxCoeff() == 0.0);
  CHECK(c4.sum() == doctest::Approx(12.0));
}

TEST_CASE("average_cost on perfect discrimination") {
  std::vector<PureState> basis;
  for (int i = 0; i < 3; ++i) {
    PureState v = PureState::Zero(3);
    v(i) = 1.0;
    basis.push_back(v);
  }
  const Ensemble e = Ensemble::uniform_pure(basis);
  const Povm projective = projective_povm(basis);
  CHECK(average_cost(e, min_error_cost(3), projective) == doctest::Approx(0.0));
}

TEST_CASE("constant-row matrices cost the same for every measurement") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 3);
    const Ensemble e = testutil::random_mixed_ensemble(n, d, rng);
    RealVector offsets(n);
    for (int i = 0; i < n; ++i) offsets(i) = std::uniform_real_distribution<>(-2, 2)(rng);
    const CostMatrix c = offsets.replicate(1, n);
    double expected = 0.0;
    for (int i = 0; i < n; ++i) expected += e.priors[i] * offsets(i);
    const Povm povm = testutil::random_povm(d, n, rng);
    CHECK(average_cost(e, c, povm) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("two-state helstrom value from the SRM") {
  // equiprobable |0>, |+>: minimum error (1 - 1/sqrt 2)/2
  ComplexVector zero(2), plus(2);
  zero << 1, 0;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const Ensemble e = Ensemble::uniform_pure({zero, plus});
  const SrmResult srm = srm_general({zero, plus});
  const double expected = 0.5 * (1.0 - 1.0 / std::sqrt(2.0));
  CHECK(average_cost(e, min_error_cost(2), srm.povm) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("constant_row_decompose") {
  const CostMatrix c = testutil::qds_cost_matrix();
  const RealVector uniform = RealVector::Constant(4, 0.25);
  const auto dec = constant_row_decompose(c, uniform);
  CHECK(dec.shift_cost == doctest::Approx(1.3815e-4).epsilon(1e-12));
  CHECK(dec.remainder.minCoeff() >= 0.0);
  for (int i = 0; i < 4; ++i) {
    CHECK(dec.remainder.row(i).minCoeff() == doctest::Approx(0.0));
    CHECK(dec.row_offsets(i) == doctest::Approx(c(i, i))); // diagonal is smallest here
  }

  // already constant-row: remainder vanishes
  RealVector offs(3);
  offs << 1, 2, 3;
  const CostMatrix flat = offs.replicate(1, 3);
  const auto dec2 = constant_row_decompose(flat, RealVector::Constant(3, 1.0 / 3));
  CHECK(max_abs_entry(dec2.remainder.cast<Complex>()) == 0.0);

  // min-error matrix: offsets vanish
  const auto dec3 = constant_row_decompose(min_error_cost(4), RealVector::Constant(4, 0.25));
  CHECK(dec3.shift_cost == 0.0);
  CHECK(max_abs_entry((dec3.remainder - min_error_cost(4)).cast<Complex>()) == 0.0);

  // row-max mode leaves a nonpositive remainder with a zero per row
  const auto dec4 =
      constant_row_decompose(c, uniform, RowShiftMode::subtract_row_max);
  CHECK(dec4.remainder.maxCoeff() == doctest::Approx(0.0));
  for (int i = 0; i < 4; ++i) {
    CHECK(dec4.remainder.row(i).maxCoeff() == doctest::Approx(0.0));
    CHECK(dec4.row_offsets(i) == doctest::Approx(c.row(i).maxCoeff()));
  }
}

TEST_CASE("shifting by a constant-row matrix moves every cost by the shift") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int d = 2;
    const Ensemble e = testutil::random_mixed_ensemble(n, d, rng);
    const CostMatrix c = testutil::random_cost(n, n, rng);
    RealVector offsets(n);
    for (int i = 0; i < n; ++i) offsets(i) = std::uniform_real_distribution<>(-1, 1)(rng);
    const CostMatrix shifted = c + CostMatrix(offsets.replicate(1, n));
    double shift = 0.0;
    for (int i = 0; i < n; ++i) shift += e.priors[i] * offsets(i);
    const Povm povm = testutil::random_povm(d, n, rng);
    const double base = average_cost(e, c, povm);
    CHECK(average_cost(e, shifted, povm) - base == doctest::Approx(shift).epsilon(1e-10));
  }
}

TEST_CASE("circulant_structure detection") {
  const auto minerr = circulant_structure(min_error_cost(4));
  REQUIRE(minerr.has_value());
  CHECK(minerr->symmetric);
  RealVector expect_c(4);
  expect_c << 0, 1, 1, 1;
  CHECK((minerr->coeffs - expect_c).cwiseAbs().maxCoeff() == 0.0);
  RealVector expect_dft(4);
  expect_dft << 3, -1, -1, -1;
  CHECK((minerr->dft_eigenvalues - expect_dft).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(!circulant_structure(testutil::qds_cost_matrix()).has_value());

  const auto ident = circulant_structure(CostMatrix::Identity(5, 5));
  REQUIRE(ident.has_value());
  CHECK(ident->coeffs(0) == 1.0);
  CHECK(ident->coeffs.tail(4).cwiseAbs().maxCoeff() == 0.0);
  CHECK((ident->dft_eigenvalues.array() - 1.0).abs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(circulant_structure(CostMatrix::Zero(2, 3)), NotSquareError);
}

TEST_CASE("circulant realization round-trips") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    RealVector c(n);
    for (int k = 0; k < n; ++k) c(k) = std::uniform_real_distribution<>(-1, 1)(rng);
    const auto circ = CirculantCost::from_coeffs(c);
    const auto detected = circulant_structure(circ.to_matrix());
    REQUIRE(detected.has_value());
    CHECK((detected->coeffs - c).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("n4_negativity_check matches the DFT eigenvalue signs") {
  // values from the bounding walkthrough
  CHECK(n4_negativity_check(-1.55e-3, -0.92e-3, -0.51e-3));
  CHECK(n4_negativity_check(-1.55e-3, -0.21e-3, 0.0));
  // all DFT eigenvalues nonpositive here as well
  CHECK(n4_negativity_check(-1.0, 0.0, -1.0));
  CHECK(!n4_negativity_check(-1.0, -1.0, 0.0)); // c1 < (c0+c2)/2
  CHECK(!n4_negativity_check(0.1, -0.5, -0.5)); // positive coefficient

  std::mt19937_64 rng(53);
  for (int t = 0; t < 200; ++t) {
    std::uniform_real_distribution<> uni(-1.0, 0.0);
    const double c0 = uni(rng), c1 = uni(rng), c2 = uni(rng);
    RealVector c(4);
    c << c0, c1, c2, c1;
    const auto circ = CirculantCost::from_coeffs(c);
    const bool dft_nsd = circ.dft_eigenvalues.maxCoeff() <= 1e-12;
    CHECK(n4_negativity_check(c0, c1, c2) == dft_nsd);
  }
}

TEST_CASE("mixed_error_to_pure_cost recovers the error matrix for pure inputs") {
  const int n = 4;
  const RealVector uniform = RealVector::Constant(n, 1.0 / n);
  const CostMatrix c =
      mixed_error_to_pure_cost(MixtureSpec{RealMatrix::Identity(n, n)}, uniform);
  CHECK(max_abs_entry((c - min_error_cost(n)).cast<Complex>()) < 1e-14);

  const CostMatrix flat =
      mixed_error_to_pure_cost(MixtureSpec{RealMatrix::Constant(n, n, 1.0 / n)}, uniform);
  CHECK((flat.array() - (1.0 - 1.0 / n)).abs().maxCoeff() < 1e-14);
}

TEST_CASE("pure cost equals mixed error probability for any measurement") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const auto fam = symmetric_from_coeffs(testutil::random_family_coeffs(n, rng), n);
    // random valid mixture rows
    RealMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
      RealVector row(n);
      for (int m = 0; m < n; ++m) row(m) = std::uniform_real_distribution<>(0.01, 1.0)(rng);
      a.row(i) = row / row.sum();
    }
    const MixtureSpec spec{a};
    const std::vector<double> priors = testutil::random_priors(n, rng);
    const Ensemble mixed = mix_symmetric(fam, spec);
    Ensemble weighted = mixed;
    weighted.priors = priors;

    const Povm povm = testutil::random_povm(fam.dim(), n, rng);
    double p_err = 1.0;
    for (int i = 0; i < n; ++i) {
      p_err -= priors[i] * (povm.elements[i] * weighted.states[i]).trace().real();
    }
    RealVector eta(n);
    for (int i = 0; i < n; ++i) eta(i) = priors[i];
    const CostMatrix c = mixed_error_to_pure_cost(spec, eta);
    const double pure_cost = average_cost(fam.pure_ensemble(), c, povm);
    CHECK(pure_cost == doctest::Approx(p_err).epsilon(1e-12));
  }
}
