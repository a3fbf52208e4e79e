#include "ggp/verify.hpp"

#include "ggp/moments.hpp"
#include "ggp/numeric.hpp"
#include "ggp/pairings.hpp"
#include "ggp/permgroup.hpp"
#include "ggp/randmat.hpp"
#include "ggp/weights.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <random>
#include <set>
#include <sstream>

namespace ggp {

namespace {

// Published integer sequences, n = 1, 2, ...
const std::vector<std::uint64_t> kPairings = {1, 3, 15, 105, 945, 10395, 135135, 2027025};
const std::vector<std::uint64_t> kConnected = {1, 1, 4, 27, 248, 2830};
const std::vector<std::uint64_t> kSingletonTotals = {1, 4, 21, 144, 1245, 13140, 164745};
const std::vector<std::uint64_t> kMarkovLimit = {2, 9, 56};

// Collects failure messages; a check passes when none were recorded.
class Findings {
 public:
  void expect(bool condition, const std::string& message) {
    if (!condition) failures_.push_back(message);
  }
  bool passed() const { return failures_.empty(); }
  std::string summary(const std::string& on_success) const {
    if (failures_.empty()) return on_success;
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 5) out += "; ... (" + std::to_string(failures_.size()) + " failures)";
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome pairing_counts(VerifyLevel level, const ExecConfig&) {
  const int nmax = level == VerifyLevel::full ? 8 : 7;
  Findings f;
  for (int n = 1; n <= nmax; ++n) {
    std::uint64_t count = 0;
    std::set<PairPartition> distinct;
    for (const auto& v : enumerate_pairings(n)) {
      ++count;
      if (n <= 6) distinct.insert(v);
    }
    f.expect(count == kPairings[static_cast<std::size_t>(n - 1)],
             "n=" + std::to_string(n) + ": stream length " + std::to_string(count));
    if (n <= 6) f.expect(distinct.size() == count, "n=" + std::to_string(n) + ": duplicate partitions in stream");
  }
  return {f.passed(), f.summary("(2n-1)!! = 1..." + std::to_string(kPairings[static_cast<std::size_t>(nmax - 1)]) +
                                    " for n = 1.." + std::to_string(nmax))};
}

Outcome connected_counts(VerifyLevel, const ExecConfig& exec) {
  Findings f;
  const auto riordan = riordan_connected(6);
  for (int n = 1; n <= 6; ++n) {
    const BigInt brute = statistic_distribution(n, exec).connected();
    const BigInt expected = kConnected[static_cast<std::size_t>(n - 1)];
    f.expect(brute == expected, "c_" + std::to_string(2 * n) + " brute force = " + brute.str());
    f.expect(riordan[static_cast<std::size_t>(n - 1)] == brute,
             "c_" + std::to_string(2 * n) + " recurrence = " + riordan[static_cast<std::size_t>(n - 1)].str());
  }
  return {f.passed(), f.summary("c_2..c_12 = 1,1,4,27,248,2830 by enumeration and recurrence")};
}

Outcome singleton_totals(VerifyLevel, const ExecConfig& exec) {
  Findings f;
  for (int n = 1; n <= 7; ++n) {
    const BigInt expected = kSingletonTotals[static_cast<std::size_t>(n - 1)];
    const BigInt closed = total_singletons_closed_form(n);
    const BigInt enumerated = statistic_distribution(n, exec).singleton_total();
    f.expect(closed == expected, "T_" + std::to_string(2 * n) + " closed form = " + closed.str());
    f.expect(enumerated == expected, "T_" + std::to_string(2 * n) + " enumeration = " + enumerated.str());
  }
  return {f.passed(), f.summary("T_2..T_14 = 1,4,21,144,1245,13140,164745 by closed form and enumeration")};
}

std::vector<WeightSpec> oracle_specs() {
  return {WeightSpec::constant(), WeightSpec::singleton_h_power(Rational(1, 2)),
          WeightSpec::crossing_power(Rational(1, 3)), WeightSpec::component_power(Rational(2, 3))};
}

Outcome cumulant_oracle(VerifyLevel, const ExecConfig& exec) {
  Findings f;
  for (const auto& spec : oracle_specs()) {
    const auto direct = moments_of_weight(spec, 5, {}, exec);
    const auto via_cumulants = moments_from_cumulants(cumulants_from_connected(spec, 5, {}, exec));
    f.expect(direct == via_cumulants,
             spec.str() + ": [" + join(direct.even) + "] vs [" + join(via_cumulants.even) + "]");
  }
  return {f.passed(), f.summary("connected-partition cumulants reproduce the moments exactly for 4 weights, N = 5")};
}

const std::vector<Rational>& mixing_parameters() {
  static const std::vector<Rational> bs = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  return bs;
}

Outcome main_theorem(VerifyLevel, const ExecConfig& exec) {
  Findings f;
  for (const auto& b : mixing_parameters()) {
    try {
      const auto mu = mu_b_moments(WeightSpec::constant(), b, 5, {}, exec);
      f.expect(mu.weighted == mu.convolution, "b=" + to_string(b) + ": paths differ");
      if (b == 0) f.expect(mu.weighted == semicircle_moments(5), "b=0 is not Catalan: " + join(mu.weighted.even));
      if (b == 1) f.expect(mu.weighted == gaussian_moments(5), "b=1 is not (2n-1)!!: " + join(mu.weighted.even));
    } catch (const ConsistencyError& e) {
      f.expect(false, e.what());
    }
  }
  return {f.passed(), f.summary("sum b^H(V) equals D_sqrt(b) gamma_1 [+] D_sqrt(1-b) gamma_0 for b in {0,1/4,1/2,3/4,1}, N = 5")};
}

Outcome cumulant_scaling(VerifyLevel, const ExecConfig& exec) {
  Findings f;
  auto bs = mixing_parameters();
  bs.push_back(Rational(1, 3));
  for (const auto& b : bs) {
    const auto m = moments_of_weight(WeightSpec::singleton_h_power(b), 5, {}, exec);
    const auto r = cumulants_from_moments(m);
    f.expect(r.at(1) == 1, "b=" + to_string(b) + ": r_2 = " + to_string(r.at(1)));
    for (int n = 2; n <= 5; ++n) {
      const Rational expected = ipow(b, static_cast<unsigned>(n)) * Rational(BigInt(kConnected[static_cast<std::size_t>(n - 1)]));
      f.expect(r.at(n) == expected, "b=" + to_string(b) + ": r_" + std::to_string(2 * n) + " = " + to_string(r.at(n)) +
                                        ", expected " + to_string(expected));
    }
  }
  return {f.passed(), f.summary("r_2 = 1 and r_2n = b^n c_2n for 2 <= n <= 5")};
}

Outcome semigroup(VerifyLevel, const ExecConfig& exec) {
  Findings f;
  for (const auto& b : {Rational(1, 2), Rational(1, 3)})
    for (const auto& c : {Rational(1, 2), Rational(2, 3)}) {
      const auto report = semigroup_check(b, c, 6, {}, exec);
      f.expect(report.passed, "b=" + to_string(b) + ", c=" + to_string(c) + ": [" + join(report.direct.even) +
                                  "] vs [" + join(report.composed.even) + "]");
    }
  return {f.passed(), f.summary("rho_bc = D_sqrt(c) rho_b [+] D_sqrt(1-c) gamma_0 for 4 (b, c) pairs, N = 6")};
}

Outcome markov_limit(VerifyLevel, const ExecConfig& exec) {
  Findings f;
  const auto weighted = moments_of_weight(WeightSpec::singleton_count_power(2), 3, {}, exec);
  const auto convolved = free_convolve(semicircle_moments(3), gaussian_moments(3), 3);
  for (int n = 1; n <= 3; ++n) {
    const Rational expected{BigInt(kMarkovLimit[static_cast<std::size_t>(n - 1)])};
    f.expect(weighted.at(n) == expected, "sum 2^h at 2n=" + std::to_string(2 * n) + " = " + to_string(weighted.at(n)));
    f.expect(convolved.at(n) == expected, "gamma_0 [+] gamma_1 at 2n=" + std::to_string(2 * n) + " = " + to_string(convolved.at(n)));
  }
  return {f.passed(), f.summary("sum 2^h(V) = 2, 9, 56 = moments of gamma_0 [+] gamma_1")};
}

Outcome monte_carlo(VerifyLevel level, const ExecConfig& exec) {
  McConfig cfg;
  cfg.n = level == VerifyLevel::full ? 1000 : 400;
  cfg.trials = 20;
  cfg.kmax = 6;
  cfg.law = EntryLaw::rademacher;
  cfg.seed = 42;
  const auto report = run_mc(cfg, exec);
  std::ostringstream detail;
  detail << "n=" << cfg.n << ", trials=" << cfg.trials << ":";
  for (const auto& m : report.moments) {
    detail << " m" << m.k << "=" << format_real(m.mean) << "±" << format_real(m.std_error);
    if (m.k % 2 == 0) detail << " (z=" << (m.z ? format_real(*m.z) : "undefined") << ")";
  }
  return {report.passed, detail.str()};
}

double exp_weight(double x, int h) { return std::exp(-x * h); }

Outcome permutation_suite(VerifyLevel level, const ExecConfig& exec) {
  Findings f;
  for (int n = 1; n <= 6; ++n) {
    const auto r = embedding_consistency(n);
    f.expect(r.passed, r.detail);
  }
  for (int n = 1; n <= 5; ++n) {
    const auto r = young_subgroup_identity(n);
    f.expect(r.passed, r.detail);
  }
  constexpr double tol = 1e-8;
  const auto h_psd = check_positive_definite(4, [](const Permutation& s) { return double(isolated_fixed_points(s)); }, tol, exec);
  f.expect(h_psd.psd, "h_4 not PSD, min eigenvalue " + format_real(h_psd.min_eigenvalue));
  const auto b_psd = check_positive_definite(
      4, [](const Permutation& s) { return std::pow(2.0, isolated_fixed_points(s)); }, tol, exec);
  f.expect(b_psd.psd, "2^h_4 not PSD, min eigenvalue " + format_real(b_psd.min_eigenvalue));
  const auto e_psd = check_positive_definite(4, [](const Permutation& s) { return exp_weight(0.5, big_h(s)); }, tol, exec);
  f.expect(e_psd.psd, "exp(-0.5 H) not PSD, min eigenvalue " + format_real(e_psd.min_eigenvalue));
  const auto cnd = check_cnd(4, tol, exec);
  f.expect(cnd.centered.psd, "centered H kernel on S(4) not PSD, min eigenvalue " + format_real(cnd.centered.min_eigenvalue));
  const auto metric4 = metric_checks(4);
  f.expect(metric4.passed && metric4.exhaustive, "S(4) metric: " + metric4.detail);
  f.expect(metric4.triples == 13824, "S(4) metric covered " + std::to_string(metric4.triples) + " triples");
  const std::uint64_t samples = level == VerifyLevel::full ? 100000 : 10000;
  const auto metric6 = metric_checks(6, samples);
  f.expect(metric6.passed, "S(6) metric: " + metric6.detail);
  f.expect(metric6.triples == samples, "S(6) metric sampled " + std::to_string(metric6.triples) + " triples");
  std::ostringstream ok;
  ok << "embedding n<=6, Young-subgroup identity |S(n+1)|<=720, min eigenvalues h:" << format_real(h_psd.min_eigenvalue)
     << " 2^h:" << format_real(b_psd.min_eigenvalue) << " exp(-H/2):" << format_real(e_psd.min_eigenvalue)
     << " centered:" << format_real(cnd.centered.min_eigenvalue) << ", metric S(4) 13824 triples, S(6) " << samples
     << " sampled";
  return {f.passed(), f.summary(ok.str())};
}

Outcome property_suite(VerifyLevel, const ExecConfig&) {
  Findings f;
  for (auto s : {Statistic::cr, Statistic::h, Statistic::cc}) {
    const auto r = check_traceability(s, 6);
    f.expect(r.passed, r.detail);
  }
  const std::vector<WeightSpec> primitives = {
      WeightSpec::crossing_power(Rational(1, 3)), WeightSpec::component_power(Rational(2, 3)),
      WeightSpec::singleton_h_power(Rational(1, 2)), WeightSpec::singleton_count_power(Rational(2))};
  for (const auto& spec : primitives) {
    const auto r = check_strong_multiplicativity(spec, 5);
    f.expect(r.passed, r.detail);
  }
  std::mt19937_64 engine(2024);
  constexpr int kSequences = 40;
  for (int trial = 0; trial < kSequences; ++trial) {
    CumulantSequence r;
    const int N = 1 + static_cast<int>(engine() % 6);
    for (int n = 1; n <= N; ++n) {
      const auto num = static_cast<long>(engine() % 41) - 20;
      const auto den = static_cast<long>(engine() % 9) + 1;
      r.even.emplace_back(num, den);
    }
    const auto back = cumulants_from_moments(moments_from_cumulants(r));
    f.expect(back == r, "round trip changed [" + join(r.even) + "] into [" + join(back.even) + "]");
  }
  return {f.passed(), f.summary("rotation invariance n<=6, component factorization of 4 weights n<=5, 40 random round trips")};
}

struct CheckSpec {
  const char* id;
  const char* title;
  double budget_seconds;
  Outcome (*run)(VerifyLevel, const ExecConfig&);
};

const CheckSpec kChecks[] = {
    {"AC1", "pair partition counts", 120.0, pairing_counts},
    {"AC2", "connected pairings vs recurrence", 10.0, connected_counts},
    {"AC3", "singleton totals", 60.0, singleton_totals},
    {"AC4", "moment/cumulant oracle over connected pairings", 30.0, cumulant_oracle},
    {"AC5", "b^H weights vs free convolution with the semicircle", 30.0, main_theorem},
    {"AC6", "free cumulant scaling under mixing", 10.0, cumulant_scaling},
    {"AC7", "dilation semigroup", 10.0, semigroup},
    {"AC8", "Markov limit moments", 5.0, markov_limit},
    {"AC9", "Markov random matrix Monte Carlo", 300.0, monte_carlo},
    {"AC10", "permutation group suite", 180.0, permutation_suite},
    {"AC11", "property suite", 120.0, property_suite},
};

}  // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, const ExecConfig& exec, const CheckCallback& on_result) {
  std::vector<CheckResult> out;
  for (const auto& check : kChecks) {
    CheckResult r;
    r.id = check.id;
    r.title = check.title;
    r.budget_seconds = check.budget_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto outcome = check.run(level, exec);
      r.passed = outcome.passed;
      r.detail = outcome.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.within_budget = r.seconds <= r.budget_seconds;
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ggp
