#include "ggp/moments.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ggp {

MomentSequence MomentSequence::truncated(int N) const {
  if (N > order()) throw std::invalid_argument("moment sequence shorter than requested order");
  return MomentSequence{{even.begin(), even.begin() + N}};
}

std::string join(const std::vector<Rational>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + to_string(values[i]);
  return out;
}

MomentSequence semicircle_moments(int N) {
  MomentSequence m;
  for (int n = 1; n <= N; ++n) m.even.emplace_back(catalan(static_cast<unsigned>(n)));
  return m;
}

MomentSequence gaussian_moments(int N) {
  MomentSequence m;
  for (int n = 1; n <= N; ++n) m.even.emplace_back(double_factorial_odd(static_cast<unsigned>(n)));
  return m;
}

GramMatrix GramMatrix::repeated_unit(std::size_t k) { return GramMatrix(SymMatrix(k, 1.0)); }

namespace {

std::vector<StatisticDistribution> distributions(int N, const EnumerationLimits& limits, const ExecConfig& exec) {
  if (N < 1) throw std::invalid_argument("moment order N must be >= 1");
  require_within_cap(N, limits);
  std::vector<StatisticDistribution> out;
  for (int n = 1; n <= N; ++n) out.push_back(statistic_distribution(n, exec, limits));
  return out;
}

MomentSequence weighted_moments(const WeightSpec& spec, const std::vector<StatisticDistribution>& dists) {
  MomentSequence m;
  for (const auto& d : dists) m.even.push_back(weighted_sum(spec, d));
  return m;
}

}  // namespace

double mixed_moment(const WeightSpec& spec, const GramMatrix& gram, const EnumerationLimits& limits) {
  const auto k = static_cast<int>(gram.size());
  if (k % 2 == 1) return 0.0;
  if (k == 0) return 1.0;
  std::map<std::tuple<int, int, int>, double> weight_cache;
  double total = 0.0;
  for (const auto& v : enumerate_pairings(k / 2, limits)) {
    const auto s = statistics(v);
    auto [it, inserted] = weight_cache.try_emplace({s.cr, s.h, s.cc}, 0.0);
    if (inserted) it->second = to_double(evaluate(spec, s));
    if (it->second == 0.0) continue;
    double term = it->second;
    for (const auto& b : v.blocks()) term *= gram(static_cast<std::size_t>(b.lo), static_cast<std::size_t>(b.hi));
    total += term;
  }
  return total;
}

MomentSequence moments_of_weight(const WeightSpec& spec, int N, const EnumerationLimits& limits,
                                 const ExecConfig& exec) {
  return weighted_moments(spec, distributions(N, limits, exec));
}

CumulantSequence cumulants_from_connected(const WeightSpec& spec, int N, const EnumerationLimits& limits,
                                          const ExecConfig& exec) {
  CumulantSequence r;
  for (const auto& d : distributions(N, limits, exec)) r.even.push_back(weighted_connected_sum(spec, d));
  return r;
}

namespace {

// Depth-first construction of NC_e(k). The block containing the smallest
// unfilled point of the current interval grows by points at odd offsets, so
// every gap it leaves has even length; each gap and the tail are filled
// independently afterwards, which is exactly non-crossingness.
class NcEvenBuilder {
 public:
  NcEvenBuilder(int k, const std::function<void(const std::vector<std::vector<int>>&)>& visit)
      : visit_(visit) {
    if (k > 0) pending_.push_back({1, k});
  }

  void run() { fill(); }

 private:
  using Interval = std::pair<int, int>;  // closed, may be empty (first > second)

  void fill() {
    if (pending_.empty()) {
      visit_(blocks_);
      return;
    }
    const Interval iv = pending_.back();
    pending_.pop_back();
    if (iv.first > iv.second) {
      fill();
    } else {
      blocks_.push_back({iv.first});
      std::vector<Interval> gaps;
      extend(iv.second, gaps);
      blocks_.pop_back();
    }
    pending_.push_back(iv);
  }

  void extend(int right, std::vector<Interval>& gaps) {
    auto& block = blocks_.back();
    const int last = block.back();
    for (int next = last + 1; next <= right; next += 2) {
      blocks_.back().push_back(next);
      gaps.push_back({last + 1, next - 1});
      if (blocks_.back().size() % 2 == 0) {
        const std::size_t mark = pending_.size();
        pending_.push_back({next + 1, right});
        for (const auto& g : gaps) pending_.push_back(g);
        fill();
        pending_.resize(mark);
      }
      extend(right, gaps);
      gaps.pop_back();
      blocks_.back().pop_back();
    }
  }

  const std::function<void(const std::vector<std::vector<int>>&)>& visit_;
  std::vector<Interval> pending_;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace

void for_each_nc_even(int k, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("NC_e(k) needs even k >= 0, got " + std::to_string(k));
  if (k > kMaxNcEvenPoints)
    throw SizeLimitError("k = " + std::to_string(k) + " exceeds the NC_e cap k <= " + std::to_string(kMaxNcEvenPoints));
  NcEvenBuilder(k, visit).run();
}

std::vector<SetPartition> enumerate_nc_even(int k) {
  std::vector<SetPartition> out;
  for_each_nc_even(k, [&](const std::vector<std::vector<int>>& blocks) { out.emplace_back(k, blocks); });
  return out;
}

std::map<std::vector<int>, BigInt> nc_even_block_profile(int n) {
  std::map<std::vector<int>, std::uint64_t> counts;
  for_each_nc_even(2 * n, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end());
    ++counts[sizes];
  });
  std::map<std::vector<int>, BigInt> out;
  for (const auto& [sizes, c] : counts) out.emplace(sizes, BigInt(c));
  return out;
}

namespace {

Rational profile_product(const std::vector<int>& sizes, const std::vector<Rational>& r) {
  Rational p{1};
  for (int s : sizes) p *= r[static_cast<std::size_t>(s / 2 - 1)];
  return p;
}

}  // namespace

MomentSequence moments_from_cumulants(const CumulantSequence& r) {
  MomentSequence m;
  for (int n = 1; n <= r.order(); ++n) {
    Rational total{0};
    for (const auto& [sizes, count] : nc_even_block_profile(n)) total += Rational(count) * profile_product(sizes, r.even);
    m.even.push_back(std::move(total));
  }
  return m;
}

CumulantSequence cumulants_from_moments(const MomentSequence& m) {
  CumulantSequence r;
  r.even.reserve(m.even.size());
  for (int n = 1; n <= m.order(); ++n) {
    Rational rest{0};
    for (const auto& [sizes, count] : nc_even_block_profile(n)) {
      if (sizes.size() == 1) continue;  // the single block {1..2n} carries r_{2n} itself
      rest += Rational(count) * profile_product(sizes, r.even);
    }
    r.even.push_back(m.at(n) - rest);
  }
  return r;
}

MomentSequence free_convolve(const MomentSequence& a, const MomentSequence& b, int N) {
  const auto ra = cumulants_from_moments(a.truncated(N));
  const auto rb = cumulants_from_moments(b.truncated(N));
  CumulantSequence sum;
  for (int n = 1; n <= N; ++n) sum.even.push_back(ra.at(n) + rb.at(n));
  return moments_from_cumulants(sum);
}

MomentSequence dilate(const MomentSequence& m, const Rational& lambda_squared) {
  if (lambda_squared < 0) throw std::invalid_argument("dilation needs lambda^2 >= 0");
  MomentSequence out;
  Rational scale{1};
  for (const auto& value : m.even) {
    scale *= lambda_squared;
    out.even.push_back(value * scale);
  }
  return out;
}

MuBMoments mu_b_moments(const WeightSpec& spec, const Rational& b, int N, const EnumerationLimits& limits,
                        const ExecConfig& exec) {
  if (b < 0 || b > 1) throw std::invalid_argument("mu_b needs 0 <= b <= 1, got " + to_string(b));
  if (evaluate(spec, PairPartition({{1, 2}})) != 1)
    throw std::invalid_argument("mu_b needs a normalized weight (t of a single pair = 1): " + spec.str());
  const auto mult = check_strong_multiplicativity(spec, std::min(N, 4), limits);
  if (!mult.passed) throw std::invalid_argument("mu_b needs a strongly multiplicative weight: " + mult.detail);

  const auto dists = distributions(N, limits, exec);
  MuBMoments out;
  out.weighted = weighted_moments(WeightSpec::product({spec, WeightSpec::singleton_h_power(b)}), dists);
  out.convolution = free_convolve(dilate(weighted_moments(spec, dists), b), dilate(semicircle_moments(N), 1 - b), N);
  if (out.weighted != out.convolution) {
    throw ConsistencyError("mu_b(" + spec.str() + ", b=" + to_string(b) + "): weighted sum [" +
                           join(out.weighted.even) + "] != free convolution [" + join(out.convolution.even) + "]");
  }
  return out;
}

SemigroupReport semigroup_check(const Rational& b, const Rational& c, int N, const EnumerationLimits& limits,
                                const ExecConfig& exec) {
  if (b < 0 || b > 1 || c < 0 || c > 1) throw std::invalid_argument("semigroup_check needs b, c in [0, 1]");
  const auto one = WeightSpec::constant();
  SemigroupReport report;
  report.direct = mu_b_moments(one, b * c, N, limits, exec).weighted;
  const auto rho_b = mu_b_moments(one, b, N, limits, exec).weighted;
  report.composed = free_convolve(dilate(rho_b, c), dilate(semicircle_moments(N), 1 - c), N);
  report.passed = report.direct == report.composed;
  return report;
}

HankelReport hankel_psd(const MomentSequence& m, double tol) {
  const auto N = static_cast<std::size_t>(m.order());
  auto moment = [&](std::size_t order) -> double {
    if (order == 0) return 1.0;
    if (order % 2 == 1) return 0.0;
    return to_double(m.at(static_cast<int>(order / 2)));
  };
  SymMatrix hankel(N + 1);
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t j = 0; j <= N; ++j) hankel(i, j) = moment(i + j);
  const auto psd = check_psd(hankel, tol);
  HankelReport report;
  report.psd = psd.psd;
  report.min_eigenvalue = psd.min_eigenvalue;
  report.note = psd.psd ? "Hankel matrix is positive semidefinite: necessary (not sufficient) evidence of a moment sequence"
                        : "Hankel matrix is not positive semidefinite: not a moment sequence of a probability measure";
  return report;
}

}  // namespace ggp
