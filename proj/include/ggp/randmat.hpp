#pragma once

// Monte Carlo for Markov random matrices M = X - diag(row sums of X): the
// spectral moments of M / sqrt(n) approach those of gamma_0 [+] gamma_1,
// m_{2n} = sum over P2(2n) of 2^h(V).

#include "ggp/linalg.hpp"
#include "ggp/parallel.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ggp {

enum class EntryLaw { rademacher, gaussian };

std::string to_string(EntryLaw law);
EntryLaw parse_entry_law(const std::string& name);  // throws std::invalid_argument

/// Entry source. std::mt19937_64 is a twisted generalized feedback shift
/// register whose output sequence is fixed by the C++ standard; uniforms and
/// normals are derived here (not via <random> distributions, whose output is
/// implementation defined) so streams are identical across toolchains.
class EntrySampler {
 public:
  EntrySampler(EntryLaw law, std::uint64_t seed) : law_(law), engine_(seed) {}

  double next();

 private:
  double uniform_open();  // (0, 1)

  EntryLaw law_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);
/// Seed of trial `trial` for a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// X symmetric with i.i.d. entries on and above the diagonal (filled row by
/// row), returned as M = X - diag(row sums of X).
SymMatrix sample_markov(std::size_t n, EntryLaw law, std::uint64_t seed);

/// m_k = (1/n) trace((M / sqrt(n))^k), k = 1..kmax, from matrix powers up to
/// ceil(kmax / 2) and trace(A^(a+b)) = <A^a, A^b>_F.
std::vector<double> empirical_moments(const SymMatrix& m, int kmax, const ExecConfig& exec = {});
std::vector<double> empirical_moments_serial(const SymMatrix& m, int kmax);

/// Moments of the empirical eigenvalue distribution of M / sqrt(n).
std::vector<double> spectral_moments(const std::vector<double>& eigenvalues_of_m, std::size_t n, int kmax);

/// Sorted eigenvalues (cyclic Jacobi).
std::vector<double> spectrum(const SymMatrix& m);

struct McConfig {
  std::size_t n = 1000;
  int trials = 20;
  int kmax = 6;
  EntryLaw law = EntryLaw::rademacher;
  std::uint64_t seed = 42;
};

/// Throws std::invalid_argument for n < 2, trials < 1 or kmax < 2.
void validate(const McConfig& cfg);

struct MomentEstimate {
  int k = 0;
  double mean = 0.0;
  double std_error = 0.0;             // sample standard deviation / sqrt(trials); 0 when trials == 1
  double target = 0.0;                // gamma_M moment (0 for odd k)
  std::optional<double> z;            // (mean - target) / stderr, undefined when stderr == 0
  bool passed = true;
};

struct McReport {
  McConfig config;
  std::vector<MomentEstimate> moments;  // k = 1..kmax
  /// Even k: z <= 4. Odd k in {3, 5}: |mean| <= 3 stderr. Undefined z does
  /// not fail (a single trial has no error estimate).
  bool passed = true;
};

/// gamma_M = gamma_0 [+] gamma_1 even moment of order k (k even), exact, as a double.
double markov_limit_moment(int k);

McReport run_mc(const McConfig& cfg, const ExecConfig& exec = {});
/// Serial reference: same per-trial seeds, same fixed-order reduction.
McReport run_mc_serial(const McConfig& cfg);

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  std::uint64_t count = 0;
};

/// Equal-width histogram over [min, max] of the values.
std::vector<HistogramBin> histogram(const std::vector<double>& values, int bins);
/// CSV with header "bin_left,bin_right,count".
void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins);

}  // namespace ggp
