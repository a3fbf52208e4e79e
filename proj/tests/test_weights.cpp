#include "ggp/weights.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace ggp;

namespace {

PairPartition from_pairs(const oracle::Pairs& p) {
  std::vector<Block> blocks;
  for (auto [a, b] : p) blocks.push_back({a, b});
  return PairPartition(blocks);
}

}  // namespace

TEST_CASE("weights on a fixed partition") {
  const PairPartition v({{1, 4}, {2, 6}, {3, 5}, {7, 8}});  // cr 2, h 1, cc 2, n 4
  CHECK(evaluate(WeightSpec::constant(), v) == 1);
  CHECK(evaluate(WeightSpec::crossing_power(Rational(1, 3)), v) == Rational(1, 9));
  CHECK(evaluate(WeightSpec::component_power(Rational(2, 3)), v) == Rational(4, 9));
  CHECK(evaluate(WeightSpec::singleton_h_power(Rational(1, 2)), v) == Rational(1, 8));
  CHECK(evaluate(WeightSpec::singleton_count_power(Rational(2)), v) == 2);
  const auto prod = WeightSpec::product({WeightSpec::crossing_power(Rational(1, 3)),
                                         WeightSpec::singleton_count_power(Rational(2))});
  CHECK(evaluate(prod, v) == Rational(2, 9));
  // 0^0 = 1: a non-crossing partition has weight 1 under q = 0.
  CHECK(evaluate(WeightSpec::crossing_power(Rational(0)), PairPartition({{1, 2}, {3, 4}})) == 1);
  CHECK(evaluate(WeightSpec::crossing_power(Rational(0)), v) == 0);
}

TEST_CASE("weighted sums over the distribution match direct summation") {
  const std::vector<WeightSpec> specs = {
      WeightSpec::constant(), WeightSpec::crossing_power(Rational(1, 3)),
      WeightSpec::component_power(Rational(2, 3)), WeightSpec::singleton_h_power(Rational(1, 2)),
      WeightSpec::singleton_count_power(Rational(2)),
      WeightSpec::product({WeightSpec::crossing_power(Rational(-1)), WeightSpec::singleton_h_power(Rational(3, 4))})};
  for (int n = 1; n <= 5; ++n) {
    const auto dist = statistic_distribution(n);
    for (const auto& spec : specs) {
      Rational all = 0, connected = 0;
      for (const auto& p : oracle::matchings(n)) {
        const auto v = from_pairs(p);
        const Rational t = evaluate(spec, v);
        all += t;
        if (oracle::components(p) == 1) connected += t;
      }
      CHECK(weighted_sum(spec, dist) == all);
      CHECK(weighted_connected_sum(spec, dist) == connected);
    }
  }
}

TEST_CASE("statistic polynomials") {
  const auto h3 = statistic_polynomial(StatisticFamily::big_h, 3);
  CHECK(h3.str("b") == "5 + 6b^2 + 4b^3");
  CHECK(h3.evaluate(Rational(1, 2)) == Rational(5) + Rational(6, 4) + Rational(4, 8));
  CHECK(h3.coefficient_sum() == 15);
  // q-Gaussian at 2n = 6: 5 + 6q + 3q^2 + q^3.
  const auto cr3 = statistic_polynomial(StatisticFamily::crossings, 3);
  CHECK(cr3.str("q") == "5 + 6q + 3q^2 + q^3");
  CHECK(family_of(WeightSpec::Kind::singleton_count_power) == StatisticFamily::singletons);
}

TEST_CASE("strong multiplicativity and traceability") {
  for (const auto& spec : {WeightSpec::crossing_power(Rational(1, 3)), WeightSpec::component_power(Rational(2, 3)),
                           WeightSpec::singleton_h_power(Rational(1, 2)),
                           WeightSpec::singleton_count_power(Rational(2))}) {
    const auto r = check_strong_multiplicativity(spec, 5);
    CHECK_MESSAGE(r.passed, spec.str() << ": " << r.detail);
    CHECK(r.checked == 1 + 3 + 15 + 105 + 945);
  }
  for (auto s : {Statistic::cr, Statistic::h, Statistic::cc, Statistic::big_h}) {
    const auto r = check_traceability(s, 6);
    CHECK(r.passed);
  }
}
