#include "ggp/permgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ggp {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x]) throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  auto im = identity(n).images_;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int from = points[i];
    const int to = points[(i + 1) % points.size()];
    if (from < 1 || from > n) throw std::invalid_argument("cycle point out of range");
    im[static_cast<std::size_t>(from - 1)] = to;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  return Permutation(std::move(inv));
}

Permutation Permutation::extended(int extra) const {
  auto im = images_;
  for (int k = 1; k <= extra; ++k) im.push_back(degree() + k);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k + 1)) return false;
  return true;
}

std::string Permutation::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) out += (k ? "," : "") + std::to_string(images_[k]);
  return out + "]";
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> im(tau.images_.size());
  for (std::size_t k = 0; k < im.size(); ++k) im[k] = sigma(tau.images_[k]);
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("all_permutations: n must lie in 1..10");
  std::vector<Permutation> out;
  auto im = Permutation::identity(n).images();
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

PairPartition embed(const Permutation& sigma) {
  const int n = sigma.degree();
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) blocks.push_back({k, 2 * n + 1 - sigma(k)});
  return PairPartition(std::move(blocks));
}

int isolated_fixed_points(const Permutation& sigma) {
  int h = 0;
  int prefix_max = 0;  // max of sigma(1..k-1); the prefix is preserved iff it equals k-1
  for (int k = 1; k <= sigma.degree(); ++k) {
    if (sigma(k) == k && prefix_max == k - 1) ++h;
    prefix_max = std::max(prefix_max, sigma(k));
  }
  return h;
}

int big_h(const Permutation& sigma) { return sigma.degree() - isolated_fixed_points(sigma); }

int young_subgroup_count(const Permutation& sigma) {
  const int n = sigma.degree();
  int count = 0;
  for (int k = 1; k <= n; ++k) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      if (i == k) continue;
      const bool left = i < k;
      const int image = sigma(i);
      ok = image != k && (image < k) == left;
    }
    if (ok) ++count;
  }
  return count;
}

GroupCheck young_subgroup_identity(int n) {
  GroupCheck out;
  for (const auto& sigma : all_permutations(n + 1)) {
    ++out.checked;
    const int h = isolated_fixed_points(sigma);
    const int sum = young_subgroup_count(sigma);
    if (h != sum) {
      out.passed = false;
      out.detail = "sigma = " + sigma.str() + ": h = " + std::to_string(h) + ", Young-subgroup sum = " + std::to_string(sum);
      break;
    }
  }
  return out;
}

GroupCheck embedding_consistency(int n) {
  GroupCheck out;
  for (const auto& sigma : all_permutations(n)) {
    ++out.checked;
    const int direct = isolated_fixed_points(sigma);
    const int via = statistics(embed(sigma)).h;
    if (direct != via) {
      out.passed = false;
      out.detail = "sigma = " + sigma.str() + ": isolated fixed points " + std::to_string(direct) +
                   " != singletons of " + embed(sigma).str() + " (" + std::to_string(via) + ")";
      break;
    }
  }
  return out;
}

GroupCheck restriction_stability(int n) {
  GroupCheck out;
  for (const auto& sigma : all_permutations(n)) {
    ++out.checked;
    if (big_h(sigma) != big_h(sigma.extended())) {
      out.passed = false;
      out.detail = "H changes under S(n) -> S(n+1) for sigma = " + sigma.str();
      break;
    }
  }
  return out;
}

namespace {

// Delta_k with k = 0..n-1: 0 iff k+1 is an isolated fixed point.
int delta(const Permutation& sigma, int k) {
  const int point = k + 1;
  if (sigma(point) != point) return 1;
  for (int i = 1; i < point; ++i)
    if (sigma(i) >= point) return 1;
  return 0;
}

}  // namespace

GroupCheck delta_subadditivity(int n) {
  GroupCheck out;
  const auto group = all_permutations(n);
  for (const auto& sigma : group) {
    for (const auto& tau : group) {
      const auto prod = sigma * tau;
      for (int k = 0; k < n; ++k) {
        ++out.checked;
        if (delta(prod, k) > delta(sigma, k) + delta(tau, k)) {
          out.passed = false;
          out.detail = "Delta_" + std::to_string(k) + " not subadditive at sigma = " + sigma.str() + ", tau = " + tau.str();
          return out;
        }
      }
    }
  }
  return out;
}

namespace {

void require_kernel_degree(int n) {
  if (n < 1) throw std::invalid_argument("group degree must be >= 1");
  if (n > kMaxKernelDegree)
    throw SizeLimitError("degree n = " + std::to_string(n) + " exceeds the Gram-matrix cap n <= " +
                         std::to_string(kMaxKernelDegree));
}

void fill_kernel_row(const std::vector<Permutation>& group, const std::vector<Permutation>& inverses,
                     const GroupFunction& f, std::size_t a, SymMatrix& out) {
  for (std::size_t b = 0; b < group.size(); ++b) out(a, b) = f(inverses[a] * group[b]);
}

void require_symmetric(const SymMatrix& k) {
  if (!k.is_symmetric(1e-12 * (1.0 + k.max_abs_entry())))
    throw std::invalid_argument("kernel is not symmetric: f(sigma) != f(sigma^-1)");
}

}  // namespace

SymMatrix kernel_matrix(int n, const GroupFunction& f, const ExecConfig& exec) {
  require_kernel_degree(n);
  const auto group = all_permutations(n);
  std::vector<Permutation> inverses;
  for (const auto& g : group) inverses.push_back(g.inverse());
  SymMatrix out(group.size());
  const auto rows = static_cast<std::int64_t>(group.size());
#pragma omp parallel for schedule(static) num_threads(resolve_threads(exec))
  for (std::int64_t a = 0; a < rows; ++a) fill_kernel_row(group, inverses, f, static_cast<std::size_t>(a), out);
  require_symmetric(out);
  return out;
}

SymMatrix kernel_matrix_serial(int n, const GroupFunction& f) {
  require_kernel_degree(n);
  const auto group = all_permutations(n);
  std::vector<Permutation> inverses;
  for (const auto& g : group) inverses.push_back(g.inverse());
  SymMatrix out(group.size());
  for (std::size_t a = 0; a < group.size(); ++a) fill_kernel_row(group, inverses, f, a, out);
  require_symmetric(out);
  return out;
}

PsdReport check_positive_definite(int n, const GroupFunction& f, double tol, const ExecConfig& exec) {
  return check_psd(kernel_matrix(n, f, exec), tol);
}

CndReport check_cnd(int n, double tol, const ExecConfig& exec) {
  CndReport report;
  const auto k = kernel_matrix(n, [](const Permutation& s) { return static_cast<double>(big_h(s)); }, exec);
  const std::size_t order = k.size();

  // -P K P with P = I - J / order.
  std::vector<double> row_mean(order, 0.0);
  double total_mean = 0.0;
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) row_mean[i] += k(i, j);
    row_mean[i] /= static_cast<double>(order);
    total_mean += row_mean[i];
  }
  total_mean /= static_cast<double>(order);
  SymMatrix centered(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) centered(i, j) = -(k(i, j) - row_mean[i] - row_mean[j] + total_mean);
  report.centered = check_psd(centered, tol);
  report.passed = report.centered.psd;

  for (double x : {0.1, 0.5, 1.0, 2.0}) {
    SymMatrix e(order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) e(i, j) = std::exp(-x * k(i, j));
    auto r = check_psd(e, tol);
    report.passed = report.passed && r.psd;
    report.exponentials.emplace_back(x, r);
  }
  return report;
}

namespace {

// Uniformly random element of S(n) by Fisher-Yates on engine output.
Permutation random_permutation(int n, std::mt19937_64& engine) {
  auto im = Permutation::identity(n).images();
  for (int i = n - 1; i > 0; --i) std::swap(im[static_cast<std::size_t>(i)], im[engine() % static_cast<std::uint64_t>(i + 1)]);
  return Permutation(std::move(im));
}

struct MetricState {
  MetricReport& report;

  bool fail(const std::string& what) {
    report.passed = false;
    report.detail = what;
    return false;
  }

  // Axioms involving one or two elements.
  bool pair(const Permutation& s, const Permutation& t, int d_st) {
    if (d_st != big_h(t.inverse() * s)) return fail("d not symmetric at " + s.str() + ", " + t.str());
    if (d_st == 0 && s != t) return fail("d(sigma, tau) = 0 with sigma != tau: " + s.str() + ", " + t.str());
    if (d_st > big_h(s) + big_h(t))
      return fail("H(sigma^-1 tau) > H(sigma) + H(tau) at " + s.str() + ", " + t.str());
    return true;
  }

  bool triple(const Permutation& r, const Permutation& s, const Permutation& t) {
    ++report.triples;
    const int d_st = big_h(s.inverse() * t);
    const int d_sr = big_h(s.inverse() * r);
    const int d_rt = big_h(r.inverse() * t);
    if (d_st > d_sr + d_rt) return fail("triangle inequality fails at " + s.str() + ", " + r.str() + ", " + t.str());
    if (big_h((r * s).inverse() * (r * t)) != d_st)
      return fail("left invariance fails at rho = " + r.str() + ", " + s.str() + ", " + t.str());
    return true;
  }
};

}  // namespace

MetricReport metric_checks(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("metric_checks: n >= 1 required");
  MetricReport report;
  MetricState state{report};
  if (big_h(Permutation::identity(n)) != 0) {
    state.fail("H(e) != 0");
    return report;
  }

  if (n <= kMaxKernelDegree) {
    report.exhaustive = true;
    const auto group = all_permutations(n);
    const std::size_t order = group.size();
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < order; ++i) index.emplace(group[i], i);
    std::vector<std::size_t> inv(order);
    std::vector<int> h(order);
    for (std::size_t i = 0; i < order; ++i) {
      inv[i] = index.at(group[i].inverse());
      h[i] = big_h(group[i]);
    }
    for (std::size_t i = 0; i < order; ++i)
      if (h[i] != h[inv[i]]) {
        state.fail("H(sigma) != H(sigma^-1) at " + group[i].str());
        return report;
      }
    std::vector<std::size_t> mult(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) mult[a * order + b] = index.at(group[a] * group[b]);
    auto d = [&](std::size_t a, std::size_t b) { return h[mult[inv[a] * order + b]]; };

    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        const int dab = d(a, b);
        if (dab != d(b, a)) {
          state.fail("d not symmetric at " + group[a].str() + ", " + group[b].str());
          return report;
        }
        if (dab == 0 && a != b) {
          state.fail("d = 0 off the diagonal at " + group[a].str() + ", " + group[b].str());
          return report;
        }
        if (dab > h[a] + h[b])
          {
          state.fail("H(sigma^-1 tau) > H(sigma) + H(tau) at " + group[a].str() + ", " + group[b].str());
          return report;
        }
      }
    for (std::size_t r = 0; r < order; ++r)
      for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
          ++report.triples;
          const int dab = d(a, b);
          if (dab > d(a, r) + d(r, b))
            {
          state.fail("triangle inequality fails at " + group[a].str() + ", " + group[r].str() + ", " +
                              group[b].str());
          return report;
        }
          if (d(mult[r * order + a], mult[r * order + b]) != dab)
            {
          state.fail("left invariance fails at rho = " + group[r].str() + ", " + group[a].str() + ", " +
                              group[b].str());
          return report;
        }
        }
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 engine(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto r = random_permutation(n, engine);
    const auto s = random_permutation(n, engine);
    const auto t = random_permutation(n, engine);
    if (big_h(s) != big_h(s.inverse())) {
          state.fail("H(sigma) != H(sigma^-1) at " + s.str());
          return report;
        }
    if (!state.pair(s, t, big_h(s.inverse() * t))) return report;
    if (!state.triple(r, s, t)) return report;
  }
  return report;
}

}  // namespace ggp
