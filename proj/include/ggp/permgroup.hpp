#pragma once

// Symmetric groups S(n) through the embedding j(sigma) = {(k, 2n+1-sigma(k))}
// into pair partitions: isolated fixed points h_n, the length function
// H = n - h_n, Gram-matrix positive definiteness and metric axioms.
//
// Composition is (sigma * tau)(i) = sigma(tau(i)); kernels are indexed by
// sigma_a^{-1} sigma_b with S(n) listed in lexicographic one-line order.

#include "ggp/linalg.hpp"
#include "ggp/pairings.hpp"
#include "ggp/parallel.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ggp {

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation, 1-based images. Throws std::invalid_argument unless a
  /// bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The cycle (c_1 c_2 ... c_m) in S(n).
  static Permutation cycle(int n, const std::vector<int>& points);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// The same permutation in S(degree() + extra), fixing the new points.
  Permutation extended(int extra = 1) const;
  bool is_identity() const;

  std::string str() const;  // "[2,1,3]"

  friend Permutation operator*(const Permutation& sigma, const Permutation& tau);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Largest degree for which Gram matrices (order n!) are built.
inline constexpr int kMaxKernelDegree = 5;

/// All of S(n) in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

PairPartition embed(const Permutation& sigma);

/// #{k : sigma(k) = k and sigma maps {1..k-1} onto itself}.
int isolated_fixed_points(const Permutation& sigma);

/// H(sigma) = n - h_n(sigma).
int big_h(const Permutation& sigma);

/// #{k : sigma preserves {1..k-1} and {k+1..n} setwise}: the sum of the
/// indicator functions of the Young subgroups S(k-1) x S~(n-k).
int young_subgroup_count(const Permutation& sigma);

struct GroupCheck {
  bool passed = true;
  std::uint64_t checked = 0;
  std::string detail;  // first failure
};

/// h_{n+1} == young_subgroup_count on all of S(n+1).
GroupCheck young_subgroup_identity(int n);

/// isolated_fixed_points(sigma) == h(embed(sigma)) on all of S(n).
GroupCheck embedding_consistency(int n);

/// big_h(sigma) == big_h(sigma.extended()) on all of S(n).
GroupCheck restriction_stability(int n);

/// Delta_k(sigma tau) <= Delta_k(sigma) + Delta_k(tau) for every k and all
/// pairs, where Delta_k = 1 - indicator that k+1 is an isolated fixed point.
GroupCheck delta_subadditivity(int n);

using GroupFunction = std::function<double(const Permutation&)>;

/// [f(sigma_a^{-1} sigma_b)] over S(n), n <= kMaxKernelDegree; rows are
/// filled in parallel. Throws SizeLimitError above the cap.
SymMatrix kernel_matrix(int n, const GroupFunction& f, const ExecConfig& exec = {});
SymMatrix kernel_matrix_serial(int n, const GroupFunction& f);

PsdReport check_positive_definite(int n, const GroupFunction& f, double tol, const ExecConfig& exec = {});

struct CndReport {
  bool passed = false;
  PsdReport centered;  // -P K P, P the projector onto zero-sum vectors
  std::vector<std::pair<double, PsdReport>> exponentials;  // x -> exp(-x K)
};

/// Conditional negative definiteness of H on S(n): the centered kernel and the
/// Schoenberg exponentials exp(-x H) for x in {0.1, 0.5, 1, 2}.
CndReport check_cnd(int n, double tol, const ExecConfig& exec = {});

struct MetricReport {
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t triples = 0;
  std::string detail;  // first violation, with the offending elements
};

/// H(e) = 0, H(sigma) = H(sigma^{-1}), H(sigma^{-1} tau) <= H(sigma) + H(tau),
/// d(sigma, tau) = 0 => sigma = tau, d(rho sigma, rho tau) = d(sigma, tau) and
/// the triangle inequality for d(sigma, tau) = H(sigma^{-1} tau).
/// Exhaustive over all triples for n <= kMaxKernelDegree; otherwise
/// `samples` random triples drawn from `seed`.
MetricReport metric_checks(int n, std::uint64_t samples = 100000, std::uint64_t seed = 7);

}  // namespace ggp
