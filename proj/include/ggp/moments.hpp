#pragma once

// Moment calculus of symmetric laws: even moments, free cumulants, the free
// moment-cumulant relation over even non-crossing partitions, free additive
// convolution and dilation. Everything is exact rational arithmetic.

#include "ggp/linalg.hpp"
#include "ggp/numeric.hpp"
#include "ggp/pairings.hpp"
#include "ggp/set_partition.hpp"
#include "ggp/weights.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ggp {

/// Even moments m_2, m_4, ..., m_{2N}; odd moments are zero.
struct MomentSequence {
  std::vector<Rational> even;

  int order() const { return static_cast<int>(even.size()); }
  /// m_{2n}, n >= 1; m_0 = 1 is implicit.
  const Rational& at(int n) const { return even.at(static_cast<std::size_t>(n - 1)); }
  MomentSequence truncated(int N) const;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// Free cumulants r_2, r_4, ..., r_{2N}; odd cumulants are zero.
struct CumulantSequence {
  std::vector<Rational> even;

  int order() const { return static_cast<int>(even.size()); }
  const Rational& at(int n) const { return even.at(static_cast<std::size_t>(n - 1)); }

  friend bool operator==(const CumulantSequence&, const CumulantSequence&) = default;
};

std::string join(const std::vector<Rational>& values, const std::string& sep = ",");

MomentSequence semicircle_moments(int N);  // Catalan numbers
MomentSequence gaussian_moments(int N);    // (2n-1)!!

/// Symmetric matrix of inner products <f_i|f_j>, i, j = 1..k.
class GramMatrix {
 public:
  explicit GramMatrix(SymMatrix entries) : entries_(std::move(entries)) {}
  /// Gram matrix of one unit vector repeated k times (all entries 1).
  static GramMatrix repeated_unit(std::size_t k);

  std::size_t size() const { return entries_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i - 1, j - 1); }  // 1-based

 private:
  SymMatrix entries_;
};

/// 0 for odd k, else sum over V in P2(k) of t(V) * prod_{(i,j) in V} G[i][j].
double mixed_moment(const WeightSpec& spec, const GramMatrix& gram, const EnumerationLimits& limits = {});

/// m_{2n} = sum over P2(2n) of t(V), n = 1..N.
MomentSequence moments_of_weight(const WeightSpec& spec, int N, const EnumerationLimits& limits = {},
                                 const ExecConfig& exec = {});

/// r_{2n} = sum over connected V in P2(2n) of t(V), n = 1..N.
CumulantSequence cumulants_from_connected(const WeightSpec& spec, int N, const EnumerationLimits& limits = {},
                                          const ExecConfig& exec = {});

/// Largest k accepted by enumerate_nc_even.
inline constexpr int kMaxNcEvenPoints = 2 * kHardMaxN;

/// Calls visit(blocks) for every non-crossing partition of {1..k} whose blocks
/// all have even size; blocks are passed in construction order.
void for_each_nc_even(int k, const std::function<void(const std::vector<std::vector<int>>&)>& visit);
std::vector<SetPartition> enumerate_nc_even(int k);

/// Block-size profile of NC_e(2n): sorted block sizes -> number of partitions.
std::map<std::vector<int>, BigInt> nc_even_block_profile(int n);

/// m_{2n} = sum over NC_e(2n) of prod_B r_{|B|}.
MomentSequence moments_from_cumulants(const CumulantSequence& r);

/// Inverse of moments_from_cumulants by recursive subtraction:
/// r_{2n} = m_{2n} - sum over multi-block pi in NC_e(2n) of prod_B r_{|B|}.
CumulantSequence cumulants_from_moments(const MomentSequence& m);

/// Moments of the law whose free cumulants are the sum of the inputs'.
MomentSequence free_convolve(const MomentSequence& a, const MomentSequence& b, int N);

/// Moments of the dilation D_lambda: m_{2n} -> lambda^{2n} m_{2n}. Only
/// lambda^2 enters, which keeps sqrt(b) dilations exact.
MomentSequence dilate(const MomentSequence& m, const Rational& lambda_squared);

struct MuBMoments {
  MomentSequence weighted;     // sum over V of b^H(V) t(V)
  MomentSequence convolution;  // D_sqrt(b) mu  [+]  D_sqrt(1-b) semicircle
};

/// Moments of mu_b computed both ways; throws ConsistencyError when they
/// differ and std::invalid_argument when spec is not normalized and strongly
/// multiplicative or b lies outside [0, 1].
MuBMoments mu_b_moments(const WeightSpec& spec, const Rational& b, int N, const EnumerationLimits& limits = {},
                        const ExecConfig& exec = {});

struct SemigroupReport {
  bool passed = false;
  MomentSequence direct;    // rho_{bc}
  MomentSequence composed;  // D_sqrt(c) rho_b [+] D_sqrt(1-c) semicircle
};

/// rho_{bc} == D_sqrt(c) rho_b [+] D_sqrt(1-c) gamma_0 at moment level, rho_b = mu_b(constant, b).
SemigroupReport semigroup_check(const Rational& b, const Rational& c, int N, const EnumerationLimits& limits = {},
                                const ExecConfig& exec = {});

struct HankelReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  std::string note;
};

/// PSD test of [m_{i+j}]_{0<=i,j<=N} with m_0 = 1 and odd entries 0.
/// Positive semidefiniteness is necessary, not sufficient, for m to be a
/// moment sequence; the report says so.
HankelReport hankel_psd(const MomentSequence& m, double tol);

}  // namespace ggp
