#include "ggp/linalg.hpp"
#include "ggp/numeric.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <random>

using namespace ggp;

namespace {

SymMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set_sym(i, j, g(rng));
  return m;
}

}  // namespace

TEST_CASE("trivial spectra") {
  CHECK(jacobi_eigenvalues(SymMatrix::from_rows(3, {3, 0, 0, 0, 1, 0, 0, 0, 2})) == std::vector<double>{1, 2, 3});
  const auto e = jacobi_eigenvalues(SymMatrix::from_rows(2, {2, 1, 1, 2}));
  CHECK(e[0] == doctest::Approx(1.0));
  CHECK(e[1] == doctest::Approx(3.0));
  CHECK_THROWS_AS(SymMatrix::from_rows(2, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_rows(2, {1, 2, 2}), std::invalid_argument);
}

TEST_CASE("Jacobi eigenvalues agree with Eigen") {
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
    const auto m = random_symmetric(n, 1000 + n);
    Eigen::MatrixXd em(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) em(long(i), long(j)) = m(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(em, Eigen::EigenvaluesOnly);
    const auto ours = jacobi_eigenvalues(m);
    REQUIRE(ours.size() == n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(ours[i] == doctest::Approx(solver.eigenvalues()(long(i))).epsilon(1e-9).scale(m.frobenius_norm()));
  }
}

TEST_CASE("non-convergence is reported") {
  const auto m = random_symmetric(12, 5);
  CHECK_THROWS_AS(jacobi_eigenvalues(m, JacobiOptions{1e-12, 1}), NumericError);
}

TEST_CASE("PSD rule") {
  const auto ones = SymMatrix(4, 1.0);  // eigenvalues 0, 0, 0, 4
  const auto r = check_psd(ones, 1e-8);
  CHECK(r.psd);
  CHECK(r.threshold == doctest::Approx(-2e-8));
  const auto neg = check_psd(SymMatrix::from_rows(2, {1, 2, 2, 1}), 1e-8);
  CHECK_FALSE(neg.psd);
  CHECK(neg.min_eigenvalue == doctest::Approx(-1.0));
}

TEST_CASE("parallel product equals the serial reference bit for bit") {
  const auto a = random_symmetric(37, 11);
  const auto a2 = multiply_commuting_serial(a, a);
  for (int threads : {1, 2, 5}) {
    const auto p = multiply_commuting(a, a, ExecConfig{threads});
    CHECK(std::equal(p.values().begin(), p.values().end(), a2.values().begin()));
  }
  CHECK(frobenius_inner(a, a) == doctest::Approx(a2.trace()));
  CHECK(a2.is_symmetric());
}
