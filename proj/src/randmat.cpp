#include "ggp/randmat.hpp"

#include "ggp/moments.hpp"
#include "ggp/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ggp {

std::string to_string(EntryLaw law) { return law == EntryLaw::rademacher ? "rademacher" : "gaussian"; }

EntryLaw parse_entry_law(const std::string& name) {
  if (name == "rademacher") return EntryLaw::rademacher;
  if (name == "gaussian") return EntryLaw::gaussian;
  throw std::invalid_argument("unknown entry law '" + name + "' (expected rademacher or gaussian)");
}

double EntrySampler::uniform_open() {
  // 53 random bits, shifted by half an ulp so the result is never 0.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double EntrySampler::next() {
  if (law_ == EntryLaw::rademacher) return (engine_() >> 63) ? 1.0 : -1.0;
  if (spare_normal_) {
    const double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  // Box-Muller.
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return mix64(mix64(seed) ^ trial); }

SymMatrix sample_markov(std::size_t n, EntryLaw law, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("Markov matrix needs n >= 2");
  EntrySampler sampler(law, seed);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set_sym(i, j, sampler.next());
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (double x : m.row(i)) row_sum += x;
    m(i, i) -= row_sum;
  }
  return m;
}

namespace {

template <class Multiply>
std::vector<double> trace_moments(const SymMatrix& m, int kmax, Multiply&& multiply) {
  if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  const std::size_t n = m.size();
  const double dim = static_cast<double>(n);
  SymMatrix a = m;
  const double inv_sqrt_n = 1.0 / std::sqrt(dim);
  for (double& x : a.values()) x *= inv_sqrt_n;

  // powers[p] = A^p, p = 1..ceil(kmax / 2).
  const int half = (kmax + 1) / 2;
  std::vector<SymMatrix> powers;
  powers.reserve(static_cast<std::size_t>(half) + 1);
  powers.emplace_back();  // unused A^0
  powers.push_back(a);
  for (int p = 2; p <= half; ++p) powers.push_back(multiply(powers[static_cast<std::size_t>(p - 1)], a));

  std::vector<double> out(static_cast<std::size_t>(kmax));
  out[0] = a.trace() / dim;
  for (int k = 2; k <= kmax; ++k) {
    const int lo = k / 2;
    const int hi = k - lo;
    out[static_cast<std::size_t>(k - 1)] =
        frobenius_inner(powers[static_cast<std::size_t>(lo)], powers[static_cast<std::size_t>(hi)]) / dim;
  }
  return out;
}

}  // namespace

std::vector<double> empirical_moments(const SymMatrix& m, int kmax, const ExecConfig& exec) {
  return trace_moments(m, kmax, [&](const SymMatrix& x, const SymMatrix& y) { return multiply_commuting(x, y, exec); });
}

std::vector<double> empirical_moments_serial(const SymMatrix& m, int kmax) {
  return trace_moments(m, kmax, [](const SymMatrix& x, const SymMatrix& y) { return multiply_commuting_serial(x, y); });
}

std::vector<double> spectral_moments(const std::vector<double>& eigenvalues_of_m, std::size_t n, int kmax) {
  std::vector<double> out(static_cast<std::size_t>(kmax), 0.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (double lambda : eigenvalues_of_m) {
    const double x = lambda * scale;
    double p = 1.0;
    for (int k = 1; k <= kmax; ++k) {
      p *= x;
      out[static_cast<std::size_t>(k - 1)] += p;
    }
  }
  for (double& v : out) v /= static_cast<double>(n);
  return out;
}

std::vector<double> spectrum(const SymMatrix& m) { return jacobi_eigenvalues(m); }

void validate(const McConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("randmat: n must be >= 2");
  if (cfg.trials < 1) throw std::invalid_argument("randmat: trials must be >= 1");
  if (cfg.kmax < 2) throw std::invalid_argument("randmat: kmax must be >= 2");
  if (cfg.kmax > 2 * kHardMaxN) throw std::invalid_argument("randmat: kmax must be <= " + std::to_string(2 * kHardMaxN));
}

double markov_limit_moment(int k) {
  if (k < 1) throw std::invalid_argument("moment order must be >= 1");
  if (k % 2 == 1) return 0.0;
  // Cumulants of gamma_0 [+] gamma_1 add; this agrees with sum over P2(k) of 2^h(V).
  const int half = k / 2;
  return to_double(free_convolve(semicircle_moments(half), gaussian_moments(half), half).at(half));
}

namespace {

McReport summarize(const McConfig& cfg, const std::vector<std::vector<double>>& per_trial) {
  McReport report;
  report.config = cfg;
  const double trials = static_cast<double>(cfg.trials);
  const int half = cfg.kmax / 2;
  const auto limit = free_convolve(semicircle_moments(half), gaussian_moments(half), half);
  for (int k = 1; k <= cfg.kmax; ++k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    MomentEstimate e;
    e.k = k;
    double sum = 0.0;
    for (const auto& t : per_trial) sum += t[idx];
    e.mean = sum / trials;
    if (cfg.trials > 1) {
      double ss = 0.0;
      for (const auto& t : per_trial) ss += (t[idx] - e.mean) * (t[idx] - e.mean);
      e.std_error = std::sqrt(ss / (trials - 1.0)) / std::sqrt(trials);
    }
    e.target = k % 2 == 0 ? to_double(limit.at(k / 2)) : 0.0;
    if (e.std_error > 0.0) e.z = (e.mean - e.target) / e.std_error;
    if (k % 2 == 0) {
      e.passed = !e.z || std::abs(*e.z) <= 4.0;
    } else if (k >= 3 && e.std_error > 0.0) {
      e.passed = std::abs(e.mean) <= 3.0 * e.std_error;
    }
    report.passed = report.passed && e.passed;
    report.moments.push_back(e);
  }
  return report;
}

}  // namespace

McReport run_mc(const McConfig& cfg, const ExecConfig& exec) {
  validate(cfg);
  std::vector<std::vector<double>> per_trial(static_cast<std::size_t>(cfg.trials));
  const int threads = resolve_threads(exec);
  if (threads > 1 && cfg.trials > 1) {
    // Trials in parallel, each with a serial kernel.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int t = 0; t < cfg.trials; ++t) {
      const auto m = sample_markov(cfg.n, cfg.law, trial_seed(cfg.seed, static_cast<std::uint64_t>(t)));
      per_trial[static_cast<std::size_t>(t)] = empirical_moments_serial(m, cfg.kmax);
    }
  } else {
    for (int t = 0; t < cfg.trials; ++t) {
      const auto m = sample_markov(cfg.n, cfg.law, trial_seed(cfg.seed, static_cast<std::uint64_t>(t)));
      per_trial[static_cast<std::size_t>(t)] = empirical_moments(m, cfg.kmax, exec);
    }
  }
  return summarize(cfg, per_trial);
}

McReport run_mc_serial(const McConfig& cfg) {
  validate(cfg);
  std::vector<std::vector<double>> per_trial;
  for (int t = 0; t < cfg.trials; ++t) {
    const auto m = sample_markov(cfg.n, cfg.law, trial_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    per_trial.push_back(empirical_moments_serial(m, cfg.kmax));
  }
  return summarize(cfg, per_trial);
}

std::vector<HistogramBin> histogram(const std::vector<double>& values, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  if (values.empty()) return {};
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / bins;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    out[static_cast<std::size_t>(b)].left = lo + b * width;
    out[static_cast<std::size_t>(b)].right = b + 1 == bins ? hi : lo + (b + 1) * width;
  }
  for (double v : values) {
    auto b = static_cast<int>((v - lo) / width);
    b = std::clamp(b, 0, bins - 1);
    ++out[static_cast<std::size_t>(b)].count;
  }
  return out;
}

void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins) {
  out << "bin_left,bin_right,count\n";
  for (const auto& b : bins) out << format_real(b.left) << ',' << format_real(b.right) << ',' << b.count << '\n';
}

}  // namespace ggp
