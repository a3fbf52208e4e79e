#pragma once

// Weight functions t on pair partitions. Every weight here depends on V only
// through (n, cr, h, cc), so sums over P2(2n) reduce to sums over the joint
// statistic distribution.

#include "ggp/numeric.hpp"
#include "ggp/pairings.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ggp {

class WeightSpec {
 public:
  enum class Kind {
    constant,               // 1
    crossing_power,         // q^cr(V)
    component_power,        // s^(n - cc(V))
    singleton_h_power,      // b^H(V), H = n - h
    singleton_count_power,  // beta^h(V)
    product,
  };

  static WeightSpec constant();
  static WeightSpec crossing_power(Rational q);
  static WeightSpec component_power(Rational s);
  static WeightSpec singleton_h_power(Rational b);
  static WeightSpec singleton_count_power(Rational beta);
  static WeightSpec product(std::vector<WeightSpec> factors);

  Kind kind() const { return kind_; }
  /// Parameter of a primitive weight (1 for constant, unused for product).
  const Rational& param() const { return param_; }
  const std::vector<WeightSpec>& factors() const { return factors_; }

  std::string str() const;  // e.g. "b^H(1/2)*q^cr(1/3)"

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;

 private:
  WeightSpec(Kind kind, Rational param, std::vector<WeightSpec> factors = {});

  Kind kind_ = Kind::constant;
  Rational param_{1};
  std::vector<WeightSpec> factors_;
};

/// t evaluated on the statistics of a partition. 0^0 = 1.
Rational evaluate(const WeightSpec& spec, const ChordStatistics& stats);
Rational evaluate(const WeightSpec& spec, const PairPartition& v);

/// sum over V in P2(2n) of t(V), read off the joint distribution.
Rational weighted_sum(const WeightSpec& spec, const StatisticDistribution& dist);
/// Same, restricted to connected V (cc = 1).
Rational weighted_connected_sum(const WeightSpec& spec, const StatisticDistribution& dist);

enum class StatisticFamily {
  crossings,        // cr
  component_defect, // n - cc
  big_h,            // H = n - h
  singletons,       // h
};

/// Distribution of one statistic over P2(2n) as a polynomial in the weight
/// parameter: coefficient[k] = #{V : statistic(V) = k}.
struct StatisticPolynomial {
  int n = 0;
  StatisticFamily family = StatisticFamily::big_h;
  std::map<int, BigInt> coefficients;

  Rational evaluate(const Rational& x) const;
  BigInt coefficient_sum() const;
  std::string str(const std::string& var) const;  // "5 + 6b^2 + 4b^3"
};

StatisticFamily family_of(WeightSpec::Kind kind);

StatisticPolynomial statistic_polynomial(StatisticFamily family, const StatisticDistribution& dist);
StatisticPolynomial statistic_polynomial(StatisticFamily family, int n, const EnumerationLimits& limits = {},
                                         const ExecConfig& exec = {});

struct PropertyReport {
  bool passed = true;
  std::uint64_t checked = 0;
  std::optional<PairPartition> counterexample;
  std::string detail;
};

/// t(V) == product over crossing-graph components C of t(standardize(C)),
/// for every V with n <= nmax.
PropertyReport check_strong_multiplicativity(const WeightSpec& spec, int nmax, const EnumerationLimits& limits = {});

enum class Statistic { cr, h, cc, big_h };

int statistic_value(Statistic statistic, const ChordStatistics& stats);

/// statistic(V) == statistic(rotate(V)) for every V with n <= nmax.
PropertyReport check_traceability(Statistic statistic, int nmax, const EnumerationLimits& limits = {});

}  // namespace ggp
