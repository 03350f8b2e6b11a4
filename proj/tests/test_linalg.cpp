#include <doctest.h>

#include <cmath>

#include "mincost/linalg.hpp"
#include "testutil.hpp"

using namespace mincost;

TEST_CASE("hermitian_eig on trivial matrices") {
  const auto eye = hermitian_eig(ComplexMatrix::Identity(2, 2));
  CHECK(eye.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(eye.eigenvalues(1) == doctest::Approx(1.0));

  ComplexMatrix d(2, 2);
  d << 3, 0, 0, -1;
  const auto de = hermitian_eig(d);
  CHECK(de.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(de.eigenvalues(1) == doctest::Approx(3.0));
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), NotSquareError);
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitianError);
}

TEST_CASE("eigen reconstruction on random hermitian matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const ComplexMatrix m = testutil::random_hermitian(n, rng);
    const auto eig = hermitian_eig(m);
    CHECK(frobenius(eig.reconstruct() - m) <= 1e-10 * std::max(1.0, frobenius(m)));
    CHECK(max_abs_entry(eig.eigenvectors.adjoint() * eig.eigenvectors -
                        ComplexMatrix::Identity(n, n)) < 1e-12);
    for (Eigen::Index i = 1; i < eig.eigenvalues.size(); ++i) {
      CHECK(eig.eigenvalues(i - 1) <= eig.eigenvalues(i));
    }
  }
}

TEST_CASE("func_on_support handles rank-deficient matrices") {
  ComplexMatrix m(2, 2);
  m << 4, 0, 0, 0;
  const ComplexMatrix r = inv_sqrt_on_support(m);
  CHECK(r(0, 0).real() == doctest::Approx(0.5));
  CHECK(std::abs(r(1, 1)) == doctest::Approx(0.0));

  CHECK(max_abs_entry(inv_sqrt_on_support(ComplexMatrix::Identity(3, 3)) -
                      ComplexMatrix::Identity(3, 3)) < 1e-14);
}

TEST_CASE("func_on_support with identity function projects onto the support") {
  std::mt19937_64 rng(5);
  const ComplexMatrix v = testutil::random_complex_matrix(4, 2, rng);
  const ComplexMatrix psd = v * v.adjoint(); // rank 2
  const ComplexMatrix back = func_on_support(psd, [](double w) { return w; });
  CHECK(frobenius(back - psd) < 1e-10 * frobenius(psd));
  const ComplexMatrix proj = support_projector(psd);
  CHECK(std::abs(proj.trace().real() - 2.0) < 1e-10);
  CHECK(frobenius(proj * psd - psd) < 1e-10 * frobenius(psd));
}

TEST_CASE("func_on_support rejects indefinite input") {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -0.5;
  CHECK_THROWS_AS(inv_sqrt_on_support(m), NegativeEigenvalueError);
}

TEST_CASE("inverse square root composes to the support projector") {
  // four symmetric coherent states: Phi^{-1/2} Phi Phi^{-1/2} = projector
  const auto family = coherent_symmetric_family(2.0, 4);
  ComplexMatrix phi = ComplexMatrix::Zero(family.dim(), family.dim());
  for (const auto& s : family.states()) phi += outer(s);
  const ComplexMatrix root = inv_sqrt_on_support(phi);
  const ComplexMatrix proj = support_projector(phi);
  CHECK(frobenius(root * phi * root - proj) < 1e-10);
  CHECK(std::abs(proj.trace().real() - family.dim_span()) < 1e-10);
}

TEST_CASE("kron basics") {
  const ComplexMatrix eye2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_entry(kron(eye2, eye2) - ComplexMatrix::Identity(4, 4)) == 0.0);

  ComplexMatrix a(2, 2), b(2, 2);
  a << 1, 0, 0, 0;
  b << 0, 0, 0, 1;
  const ComplexMatrix k = kron(a, b);
  CHECK(k(1, 1).real() == doctest::Approx(1.0));
  CHECK(std::abs(k.trace()) == doctest::Approx(1.0));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix x = testutil::random_complex_matrix(3, 3, rng);
    const ComplexMatrix y = testutil::random_complex_matrix(2, 2, rng);
    CHECK(std::abs(kron(x, y).trace() - x.trace() * y.trace()) < 1e-12);
  }
}

TEST_CASE("kron of vectors matches kron of projectors") {
  ComplexVector zero(2), plus(2);
  zero << 1, 0;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const ComplexMatrix lhs = outer(kron(zero, plus));
  const ComplexMatrix rhs = kron(outer(zero), outer(plus));
  CHECK(frobenius(lhs - rhs) < 1e-14);
}

TEST_CASE("is_psd") {
  const auto ok = is_psd(ComplexMatrix::Identity(2, 2));
  CHECK(ok.psd);
  CHECK(ok.min_eigenvalue == doctest::Approx(1.0));

  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -0.5;
  const auto bad = is_psd(m);
  CHECK(!bad.psd);
  CHECK(bad.min_eigenvalue == doctest::Approx(-0.5));
}

TEST_CASE("is_psd of both signs forces a negligible matrix") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const double tol = 1e-9;
    ComplexMatrix tiny = 1e-11 * testutil::random_hermitian(n, rng);
    if (is_psd(tiny, tol).psd && is_psd((-tiny).eval(), tol).psd) {
      CHECK(frobenius(tiny) <= n * tol);
    }
  }
}

TEST_CASE("partial trace of a product factors") {
  std::mt19937_64 rng(23);
  const ComplexMatrix a = testutil::random_density(2, rng);
  const ComplexMatrix b = testutil::random_density(3, rng);
  const ComplexMatrix ab = kron(a, b);
  CHECK(frobenius(partial_trace(ab, {2, 3}, {0}) - a) < 1e-12);
  CHECK(frobenius(partial_trace(ab, {2, 3}, {1}) - b) < 1e-12);
  CHECK(std::abs(partial_trace(ab, {2, 3}, {}).trace().real() - 1.0) < 1e-12);
}
