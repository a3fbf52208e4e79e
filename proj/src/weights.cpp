#include "ggp/weights.hpp"

#include <stdexcept>

namespace ggp {

WeightSpec::WeightSpec(Kind kind, Rational param, std::vector<WeightSpec> factors)
    : kind_(kind), param_(std::move(param)), factors_(std::move(factors)) {}

WeightSpec WeightSpec::constant() { return {Kind::constant, Rational(1)}; }
WeightSpec WeightSpec::crossing_power(Rational q) { return {Kind::crossing_power, std::move(q)}; }
WeightSpec WeightSpec::component_power(Rational s) { return {Kind::component_power, std::move(s)}; }
WeightSpec WeightSpec::singleton_h_power(Rational b) { return {Kind::singleton_h_power, std::move(b)}; }
WeightSpec WeightSpec::singleton_count_power(Rational beta) { return {Kind::singleton_count_power, std::move(beta)}; }
WeightSpec WeightSpec::product(std::vector<WeightSpec> factors) {
  return {Kind::product, Rational(1), std::move(factors)};
}

std::string WeightSpec::str() const {
  switch (kind_) {
    case Kind::constant: return "1";
    case Kind::crossing_power: return "q^cr(" + to_string(param_) + ")";
    case Kind::component_power: return "s^(n-cc)(" + to_string(param_) + ")";
    case Kind::singleton_h_power: return "b^H(" + to_string(param_) + ")";
    case Kind::singleton_count_power: return "beta^h(" + to_string(param_) + ")";
    case Kind::product: {
      if (factors_.empty()) return "1";
      std::string out;
      for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? "*" : "") + factors_[i].str();
      return out;
    }
  }
  return "?";
}

Rational evaluate(const WeightSpec& spec, const ChordStatistics& s) {
  using Kind = WeightSpec::Kind;
  switch (spec.kind()) {
    case Kind::constant: return Rational(1);
    case Kind::crossing_power: return ipow(spec.param(), static_cast<unsigned>(s.cr));
    case Kind::component_power: return ipow(spec.param(), static_cast<unsigned>(s.n - s.cc));
    case Kind::singleton_h_power: return ipow(spec.param(), static_cast<unsigned>(s.big_h()));
    case Kind::singleton_count_power: return ipow(spec.param(), static_cast<unsigned>(s.h));
    case Kind::product: {
      Rational out{1};
      for (const auto& f : spec.factors()) out *= evaluate(f, s);
      return out;
    }
  }
  throw std::logic_error("unknown weight kind");
}

Rational evaluate(const WeightSpec& spec, const PairPartition& v) { return evaluate(spec, statistics(v)); }

namespace {

template <class Pred>
Rational sum_cells(const WeightSpec& spec, const StatisticDistribution& dist, Pred keep) {
  Rational out{0};
  for (const auto& [key, count] : dist.counts) {
    const auto [cr, h, cc] = key;
    if (!keep(cc)) continue;
    out += Rational(count) * evaluate(spec, ChordStatistics{dist.n, cr, h, cc});
  }
  return out;
}

}  // namespace

Rational weighted_sum(const WeightSpec& spec, const StatisticDistribution& dist) {
  return sum_cells(spec, dist, [](int) { return true; });
}

Rational weighted_connected_sum(const WeightSpec& spec, const StatisticDistribution& dist) {
  return sum_cells(spec, dist, [](int cc) { return cc == 1; });
}

Rational StatisticPolynomial::evaluate(const Rational& x) const {
  Rational out{0};
  for (const auto& [k, c] : coefficients) out += Rational(c) * ipow(x, static_cast<unsigned>(k));
  return out;
}

BigInt StatisticPolynomial::coefficient_sum() const {
  BigInt out = 0;
  for (const auto& [k, c] : coefficients) out += c;
  return out;
}

std::string StatisticPolynomial::str(const std::string& var) const {
  std::string out;
  for (const auto& [k, c] : coefficients) {
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str();
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

StatisticFamily family_of(WeightSpec::Kind kind) {
  using Kind = WeightSpec::Kind;
  switch (kind) {
    case Kind::crossing_power: return StatisticFamily::crossings;
    case Kind::component_power: return StatisticFamily::component_defect;
    case Kind::singleton_h_power: return StatisticFamily::big_h;
    case Kind::singleton_count_power: return StatisticFamily::singletons;
    default: throw std::invalid_argument("weight kind has no single-statistic family");
  }
}

StatisticPolynomial statistic_polynomial(StatisticFamily family, const StatisticDistribution& dist) {
  StatisticPolynomial out;
  out.n = dist.n;
  out.family = family;
  for (const auto& [key, count] : dist.counts) {
    const auto [cr, h, cc] = key;
    int exponent = 0;
    switch (family) {
      case StatisticFamily::crossings: exponent = cr; break;
      case StatisticFamily::component_defect: exponent = dist.n - cc; break;
      case StatisticFamily::big_h: exponent = dist.n - h; break;
      case StatisticFamily::singletons: exponent = h; break;
    }
    out.coefficients[exponent] += count;
  }
  return out;
}

StatisticPolynomial statistic_polynomial(StatisticFamily family, int n, const EnumerationLimits& limits,
                                         const ExecConfig& exec) {
  return statistic_polynomial(family, statistic_distribution(n, exec, limits));
}

PropertyReport check_strong_multiplicativity(const WeightSpec& spec, int nmax, const EnumerationLimits& limits) {
  PropertyReport report;
  for (int n = 1; n <= nmax && report.passed; ++n) {
    for (const auto& v : enumerate_pairings(n, limits)) {
      ++report.checked;
      Rational factored{1};
      for (const auto& comp : connected_components(v).components) factored *= evaluate(spec, standardize(comp));
      const Rational direct = evaluate(spec, v);
      if (factored != direct) {
        report.passed = false;
        report.counterexample = v;
        report.detail = spec.str() + ": t(V) = " + to_string(direct) + " but product over components = " +
                        to_string(factored) + " at V = " + v.str();
        break;
      }
    }
  }
  return report;
}

int statistic_value(Statistic statistic, const ChordStatistics& s) {
  switch (statistic) {
    case Statistic::cr: return s.cr;
    case Statistic::h: return s.h;
    case Statistic::cc: return s.cc;
    case Statistic::big_h: return s.big_h();
  }
  throw std::logic_error("unknown statistic");
}

PropertyReport check_traceability(Statistic statistic, int nmax, const EnumerationLimits& limits) {
  PropertyReport report;
  for (int n = 1; n <= nmax && report.passed; ++n) {
    for (const auto& v : enumerate_pairings(n, limits)) {
      ++report.checked;
      const auto rotated = rotate(v);
      const int before = statistic_value(statistic, statistics(v));
      const int after = statistic_value(statistic, statistics(rotated));
      if (before != after) {
        report.passed = false;
        report.counterexample = v;
        report.detail = "statistic changes under rotation: " + v.str() + " -> " + rotated.str();
        break;
      }
    }
  }
  return report;
}

}  // namespace ggp
