#include "ggp/permgroup.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace ggp;

TEST_CASE("permutation basics") {
  const Permutation s({2, 3, 1});
  const Permutation t({2, 1, 3});
  // (s t)(i) = s(t(i)).
  CHECK((s * t).str() == "[3,2,1]");
  CHECK((t * s).str() == "[1,3,2]");
  CHECK(s.inverse().str() == "[3,1,2]");
  CHECK((s * s.inverse()).is_identity());
  CHECK(Permutation::cycle(4, {1, 3}).str() == "[3,2,1,4]");
  CHECK(t.extended(2).str() == "[2,1,3,4,5]");
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("S(n) listing") {
  const auto s3 = all_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front().is_identity());
  CHECK(s3.back().str() == "[3,2,1]");
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK(all_permutations(5).size() == 120);
}

TEST_CASE("isolated fixed points") {
  CHECK(isolated_fixed_points(Permutation::identity(4)) == 4);
  CHECK(isolated_fixed_points(Permutation({2, 1, 3})) == 1);
  CHECK(isolated_fixed_points(Permutation({3, 2, 1})) == 0);
  CHECK(isolated_fixed_points(Permutation({1, 3, 2, 4})) == 2);
  CHECK(big_h(Permutation({1, 3, 2, 4})) == 2);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      REQUIRE(isolated_fixed_points(p) == oracle::isolated_fixed_points(p.images()));
      REQUIRE(young_subgroup_count(p) == isolated_fixed_points(p));
    }
}

TEST_CASE("embedding into pair partitions") {
  const auto v = embed(Permutation({2, 1, 3}));
  CHECK(v.str() == "{(1,5),(2,6),(3,4)}");
  // Crossings of the embedded partition are the inversions of sigma.
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto e = embed(p);
      REQUIRE(crossings(e) == oracle::inversions(p.images()));
      REQUIRE(statistics(e).h == isolated_fixed_points(p));
    }
}

TEST_CASE("group identities") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(young_subgroup_identity(n).passed);
    CHECK(embedding_consistency(n).passed);
    CHECK(restriction_stability(n).passed);
  }
  CHECK(young_subgroup_identity(5).checked == 720);
  CHECK(delta_subadditivity(4).passed);
}

TEST_CASE("kernels") {
  auto hf = [](const Permutation& s) { return double(isolated_fixed_points(s)); };
  const auto k = kernel_matrix(3, hf);
  const auto s3 = all_permutations(3);
  for (std::size_t a = 0; a < s3.size(); ++a) {
    CHECK(k(a, a) == 3.0);
    for (std::size_t b = 0; b < s3.size(); ++b) CHECK(k(a, b) == hf(s3[a].inverse() * s3[b]));
  }
  const auto serial = kernel_matrix_serial(5, hf);
  for (int threads : {1, 3}) {
    const auto par = kernel_matrix(5, hf, ExecConfig{threads});
    CHECK(std::equal(par.values().begin(), par.values().end(), serial.values().begin()));
  }
  CHECK_THROWS_AS(kernel_matrix(6, hf), SizeLimitError);
  // f(sigma) != f(sigma^{-1}) gives a non-symmetric kernel.
  CHECK_THROWS_AS(kernel_matrix(3, [](const Permutation& s) { return double(s(1)); }), std::invalid_argument);
}

TEST_CASE("positive definiteness") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(check_positive_definite(n, [](const Permutation& s) { return double(isolated_fixed_points(s)); }, 1e-8).psd);
    CHECK(check_positive_definite(n, [](const Permutation& s) { return std::pow(2.0, isolated_fixed_points(s)); },
                                  1e-8)
              .psd);
    CHECK(check_positive_definite(n, [](const Permutation& s) { return std::exp(-0.5 * big_h(s)); }, 1e-8).psd);
    CHECK(check_cnd(n, 1e-8).passed);
  }
  // -h is not positive definite.
  CHECK_FALSE(
      check_positive_definite(3, [](const Permutation& s) { return -double(isolated_fixed_points(s)); }, 1e-8).psd);
}

TEST_CASE("metric axioms") {
  const auto m3 = metric_checks(3);
  CHECK(m3.passed);
  CHECK(m3.exhaustive);
  CHECK(m3.triples == 216);
  const auto m4 = metric_checks(4);
  CHECK(m4.passed);
  CHECK(m4.triples == 13824);
  const auto m6 = metric_checks(6, 5000, 1);
  CHECK(m6.passed);
  CHECK_FALSE(m6.exhaustive);
  CHECK(m6.triples == 5000);
}
