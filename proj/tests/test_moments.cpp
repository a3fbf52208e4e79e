#include "ggp/moments.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace ggp;

namespace {

MomentSequence seq(std::initializer_list<Rational> xs) { return MomentSequence{std::vector<Rational>(xs)}; }
CumulantSequence cum(std::initializer_list<Rational> xs) { return CumulantSequence{std::vector<Rational>(xs)}; }

}  // namespace

TEST_CASE("even non-crossing partitions match a filtered set-partition oracle") {
  for (int k = 0; k <= 10; k += 2) {
    std::set<std::vector<std::vector<int>>> expected;
    for (auto& p : oracle::nc_even(k)) expected.insert(p);
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& p : enumerate_nc_even(k)) seen.insert(p.blocks());
    CHECK(seen == expected);
  }
  // |NC_e(2n)| = binom(3n, n) / (2n + 1).
  const int counts[] = {1, 3, 12, 55, 273, 1428};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_nc_even(2 * n).size() == static_cast<std::size_t>(counts[n - 1]));
  CHECK_THROWS_AS(enumerate_nc_even(5), std::invalid_argument);
}

TEST_CASE("reference laws") {
  CHECK(semicircle_moments(5) == seq({1, 2, 5, 14, 42}));
  CHECK(gaussian_moments(5) == seq({1, 3, 15, 105, 945}));
  CHECK(cumulants_from_moments(semicircle_moments(6)) == cum({1, 0, 0, 0, 0, 0}));
  // The Gaussian's free cumulants count connected pairings.
  CHECK(cumulants_from_moments(gaussian_moments(6)) == cum({1, 1, 4, 27, 248, 2830}));
  CHECK(moments_of_weight(WeightSpec::constant(), 5) == gaussian_moments(5));
  CHECK(moments_of_weight(WeightSpec::crossing_power(Rational(0)), 5) == semicircle_moments(5));
}

TEST_CASE("moment-cumulant relation on a hand example") {
  // m4 = r4 + 2 r2^2 ; m6 = r6 + 6 r2 r4 + 5 r2^3 over NC_e.
  const auto m = moments_from_cumulants(cum({2, 3, 5}));
  CHECK(m == seq({2, 3 + 2 * 4, 5 + 6 * 2 * 3 + 5 * 8}));
  CHECK(cumulants_from_moments(m) == cum({2, 3, 5}));
}

TEST_CASE("round trip on random rational sequences") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    CumulantSequence r;
    const int N = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < N; ++i)
      r.even.emplace_back(static_cast<long>(rng() % 31) - 15, static_cast<long>(rng() % 7) + 1);
    CHECK(cumulants_from_moments(moments_from_cumulants(r)) == r);
  }
}

TEST_CASE("free convolution and dilation") {
  // semicircle [+] semicircle is the semicircle of variance 2.
  CHECK(free_convolve(semicircle_moments(5), semicircle_moments(5), 5) == dilate(semicircle_moments(5), Rational(2)));
  CHECK(dilate(gaussian_moments(3), Rational(1, 4)) == seq({Rational(1, 4), Rational(3, 16), Rational(15, 64)}));
  CHECK(free_convolve(semicircle_moments(3), gaussian_moments(3), 3) == seq({2, 9, 56}));
  CHECK(moments_of_weight(WeightSpec::singleton_count_power(Rational(2)), 3) == seq({2, 9, 56}));
}

TEST_CASE("main lemma for several weights") {
  for (const auto& spec : {WeightSpec::constant(), WeightSpec::singleton_h_power(Rational(1, 2)),
                           WeightSpec::crossing_power(Rational(1, 3)), WeightSpec::component_power(Rational(2, 3)),
                           WeightSpec::singleton_count_power(Rational(3, 2))}) {
    CHECK(moments_from_cumulants(cumulants_from_connected(spec, 5)) == moments_of_weight(spec, 5));
  }
}

TEST_CASE("mu_b moments") {
  const auto half = mu_b_moments(WeightSpec::constant(), Rational(1, 2), 3);
  // H-distribution at 2n = 4 is {0: 2, 2: 1}, so m4 = 2 + b^2.
  CHECK(half.weighted.at(2) == Rational(9, 4));
  CHECK(half.weighted == half.convolution);
  CHECK(mu_b_moments(WeightSpec::constant(), Rational(0), 5).weighted == semicircle_moments(5));
  CHECK(mu_b_moments(WeightSpec::constant(), Rational(1), 5).weighted == gaussian_moments(5));
  const auto q = mu_b_moments(WeightSpec::crossing_power(Rational(1, 3)), Rational(2, 5), 5);
  CHECK(q.weighted == q.convolution);
  CHECK_THROWS_AS(mu_b_moments(WeightSpec::constant(), Rational(3, 2), 3), std::invalid_argument);
  CHECK_THROWS_AS(mu_b_moments(WeightSpec::singleton_count_power(Rational(2)), Rational(1, 2), 3),
                  std::invalid_argument);
}

TEST_CASE("dilation semigroup") {
  for (const auto& b : {Rational(1, 2), Rational(1, 3)})
    for (const auto& c : {Rational(1, 2), Rational(2, 3)}) CHECK(semigroup_check(b, c, 6).passed);
}

TEST_CASE("mixed moments") {
  // Gram matrix of vectors drawn from an orthonormal family by label.
  auto gram = [](std::vector<int> labels) {
    const std::size_t k = labels.size();
    std::vector<double> v(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) v[i * k + j] = labels[i] == labels[j] ? 1.0 : 0.0;
    return GramMatrix(SymMatrix::from_rows(k, v));
  };
  // <f1 f1 f2 f2>: only {(1,2),(3,4)} survives.
  CHECK(mixed_moment(WeightSpec::constant(), gram({1, 1, 2, 2})) == doctest::Approx(1.0));
  // <f1 f2 f1 f2>: only the crossing pairing survives, weight q.
  CHECK(mixed_moment(WeightSpec::crossing_power(Rational(1, 3)), gram({1, 2, 1, 2})) == doctest::Approx(1.0 / 3.0));
  // <f1 f2 f2 f1>: the nested pairing.
  CHECK(mixed_moment(WeightSpec::singleton_h_power(Rational(0)), gram({1, 2, 2, 1})) == doctest::Approx(1.0));
  CHECK(mixed_moment(WeightSpec::constant(), GramMatrix::repeated_unit(3)) == 0.0);
  CHECK(mixed_moment(WeightSpec::singleton_h_power(Rational(1, 2)), GramMatrix::repeated_unit(6)) ==
        doctest::Approx(to_double(mu_b_moments(WeightSpec::constant(), Rational(1, 2), 3).weighted.at(3))));
}

TEST_CASE("Hankel positivity") {
  CHECK(hankel_psd(semicircle_moments(5), 1e-9).psd);
  CHECK(hankel_psd(gaussian_moments(4), 1e-9).psd);
  // m4 < m2^2 is impossible for a probability measure.
  const auto bad = hankel_psd(seq({1, Rational(1, 2)}), 1e-9);
  CHECK_FALSE(bad.psd);
  CHECK(bad.min_eigenvalue < 0);
  CHECK_FALSE(bad.note.empty());
}
