#pragma once

// Pair partitions of {1..2n} (chord diagrams) and their crossing-graph
// statistics.

#include "ggp/numeric.hpp"
#include "ggp/parallel.hpp"
#include "ggp/set_partition.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ggp {

struct Block {
  int lo = 0;
  int hi = 0;
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Largest n the enumeration machinery supports at all.
inline constexpr int kHardMaxN = 10;

/// Enumeration cap. The default admits 2n = 16 (2,027,025 partitions);
/// raise max_n to 9 for 2n = 18.
struct EnumerationLimits {
  int max_n = 8;
};

/// Throws SizeLimitError naming the cap when n exceeds it.
void require_within_cap(int n, const EnumerationLimits& limits);

/// A perfect matching of {1..2n}, stored canonically: (lo, hi) with lo < hi,
/// blocks sorted by lo.
class PairPartition {
 public:
  PairPartition() = default;

  /// Validates and canonicalizes. Throws std::invalid_argument if the blocks
  /// are not a perfect matching of {1..2n}.
  explicit PairPartition(std::vector<Block> blocks);

  int n() const { return static_cast<int>(blocks_.size()); }
  int points() const { return 2 * n(); }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// partner(k) for k in 1..2n.
  int partner(int k) const;

  std::string str() const;  // "{(1,3),(2,4)}"

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
  friend auto operator<=>(const PairPartition&, const PairPartition&) = default;

 private:
  friend class PairingCursor;
  std::vector<Block> blocks_;
};

struct ChordStatistics {
  int n = 0;
  int cr = 0;  // crossing block pairs
  int h = 0;   // singletons: blocks crossing nothing
  int cc = 0;  // components of the crossing graph
  int big_h() const { return n - h; }
  friend bool operator==(const ChordStatistics&, const ChordStatistics&) = default;
};

ChordStatistics statistics(const PairPartition& v);

int crossings(const PairPartition& v);

struct SingletonResult {
  std::vector<Block> blocks;
  int h = 0;
};
SingletonResult singleton_blocks(const PairPartition& v);

struct ComponentResult {
  int cc = 0;
  /// Components of the crossing graph (vertices = blocks, edges = crossing
  /// pairs), ordered by their first block.
  std::vector<std::vector<Block>> components;
};
ComponentResult connected_components(const PairPartition& v);

/// Collapses each crossing-graph component to its point support.
SetPartition phi(const PairPartition& v);

/// k -> 1 + (k mod 2n), re-canonicalized.
PairPartition rotate(const PairPartition& v);

/// Relabels the support of a set of blocks to {1..2m} preserving order.
PairPartition standardize(const std::vector<Block>& blocks);

/// (2n-1)!! as a machine integer; n <= kHardMaxN.
std::uint64_t pairing_count(int n);

/// Walks P2(2n) in the fixed order "pair the smallest free index with each
/// larger free index, ascending". Position i of the stream corresponds to a
/// mixed-radix number whose last digit varies fastest, so any position can be
/// reached directly with seek().
class PairingCursor {
 public:
  explicit PairingCursor(int n);

  void seek(std::uint64_t index);
  /// Advances; returns false after the last partition.
  bool next();

  const PairPartition& current() const { return current_; }
  std::uint64_t index() const { return index_; }
  std::uint64_t size() const { return total_; }

 private:
  void rebuild();

  int n_;
  std::uint64_t total_;
  std::uint64_t index_ = 0;
  std::array<int, kHardMaxN> digits_{};
  PairPartition current_;
};

/// Input range over P2(2n); respects the enumeration cap.
class PairingRange {
 public:
  class iterator {
   public:
    using value_type = PairPartition;
    using difference_type = std::ptrdiff_t;
    using reference = const PairPartition&;
    using pointer = const PairPartition*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(int n) : cursor_(n), done_(false) {}

    reference operator*() const { return cursor_.current(); }
    pointer operator->() const { return &cursor_.current(); }
    iterator& operator++() {
      done_ = !cursor_.next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    PairingCursor cursor_{1};
    bool done_ = true;
  };

  PairingRange(int n, const EnumerationLimits& limits);
  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

inline PairingRange enumerate_pairings(int n, const EnumerationLimits& limits = {}) {
  return PairingRange(n, limits);
}

/// Parallel fold over P2(2n). `visit(const PairPartition&, Acc&)` is applied
/// to every partition; partial accumulators are combined with
/// `merge(Acc& into, const Acc& from)` in a worker-count independent order.
template <class Acc, class Visit, class Merge>
Acc fold_pairings(int n, const Acc& identity, Visit&& visit, Merge&& merge, const ExecConfig& exec = {},
                  const EnumerationLimits& limits = {}) {
  require_within_cap(n, limits);
  const std::uint64_t total = pairing_count(n);
  return chunked_fold(
      total, 256, identity,
      [&](std::uint64_t begin, std::uint64_t end, Acc& acc) {
        PairingCursor cursor(n);
        cursor.seek(begin);
        for (std::uint64_t i = begin; i < end; ++i) {
          visit(cursor.current(), acc);
          cursor.next();
        }
      },
      merge, exec);
}

/// Serial reference for fold_pairings: one pass over the stream.
template <class Acc, class Visit>
Acc fold_pairings_serial(int n, Acc acc, Visit&& visit, const EnumerationLimits& limits = {}) {
  for (const auto& v : enumerate_pairings(n, limits)) visit(v, acc);
  return acc;
}

/// Exact joint distribution of (cr, h, cc) over P2(2n).
struct StatisticDistribution {
  using Key = std::tuple<int, int, int>;  // (cr, h, cc)
  int n = 0;
  std::map<Key, BigInt> counts;

  BigInt total() const;
  BigInt non_crossing() const;     // cells with cr = 0
  BigInt connected() const;        // cells with cc = 1
  BigInt singleton_total() const;  // sum of h * count
  std::map<int, BigInt> big_h_marginal() const;

  friend bool operator==(const StatisticDistribution&, const StatisticDistribution&) = default;
};

StatisticDistribution statistic_distribution(int n, const ExecConfig& exec = {}, const EnumerationLimits& limits = {});
StatisticDistribution statistic_distribution_serial(int n, const EnumerationLimits& limits = {});

/// c_2, c_4, ..., c_{2 nmax} from c_2 = 1, c_{2(n+1)} = n * sum_{i=1..n} c_{2i} c_{2(n+1-i)}.
std::vector<BigInt> riordan_connected(int nmax);

/// T_{2n} from the closed form n * sum_{k=0}^{n-1} p_{2k} p_{2(n-1-k)}, p = (2k-1)!!.
BigInt total_singletons_closed_form(int n);

struct TotalSingletons {
  BigInt value;                      // closed form
  std::optional<BigInt> enumerated;  // sum of h(V), when n is within the cap
};

/// Computes both paths when n is within the cap; throws ConsistencyError if
/// they disagree.
TotalSingletons total_singletons(int n, const EnumerationLimits& limits = {}, const ExecConfig& exec = {});

/// |NC2(2n)| = Catalan(n).
BigInt count_nc_pairings(int n);

}  // namespace ggp
