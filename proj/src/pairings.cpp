#include "ggp/pairings.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ggp {

void require_within_cap(int n, const EnumerationLimits& limits) {
  if (n < 1) throw std::invalid_argument("pair partitions need n >= 1, got " + std::to_string(n));
  const int cap = std::min(limits.max_n, kHardMaxN);
  if (n > cap) {
    throw SizeLimitError("n = " + std::to_string(n) + " exceeds the enumeration cap n <= " + std::to_string(cap) +
                         " (2n <= " + std::to_string(2 * cap) + ")");
  }
}

PairPartition::PairPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  const int points = 2 * static_cast<int>(blocks_.size());
  std::vector<char> seen(static_cast<std::size_t>(points) + 1, 0);
  for (auto& b : blocks_) {
    if (b.lo > b.hi) std::swap(b.lo, b.hi);
    if (b.lo < 1 || b.hi > points || b.lo == b.hi || seen[b.lo] || seen[b.hi])
      throw std::invalid_argument("not a perfect matching of {1.." + std::to_string(points) + "}");
    seen[b.lo] = seen[b.hi] = 1;
  }
  std::sort(blocks_.begin(), blocks_.end());
}

int PairPartition::partner(int k) const {
  for (const auto& b : blocks_) {
    if (b.lo == k) return b.hi;
    if (b.hi == k) return b.lo;
  }
  throw std::out_of_range("point " + std::to_string(k) + " not in ground set");
}

std::string PairPartition::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(blocks_[i].lo) + "," + std::to_string(blocks_[i].hi) + ")";
  }
  return out + "}";
}

namespace {

inline bool cross(const Block& a, const Block& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

// Adjacency bitmasks of the crossing graph; blocks are few (n <= kHardMaxN
// for enumeration, but any size is accepted here).
std::vector<std::uint64_t> crossing_graph(const PairPartition& v) {
  const auto& bl = v.blocks();
  const std::size_t n = bl.size();
  if (n > 64) throw std::invalid_argument("crossing graph limited to 64 blocks");
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (cross(bl[a], bl[b])) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
      }
  return adj;
}

std::vector<std::uint64_t> component_masks(const std::vector<std::uint64_t>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint64_t> out;
  std::uint64_t unvisited = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  while (unvisited) {
    std::uint64_t comp = unvisited & (~unvisited + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t grown = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) grown |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = grown & ~comp;
      comp |= grown;
    }
    out.push_back(comp);
    unvisited &= ~comp;
  }
  return out;
}

}  // namespace

ChordStatistics statistics(const PairPartition& v) {
  const auto& bl = v.blocks();
  const int n = v.n();
  ChordStatistics s;
  s.n = n;
  if (n > 64) throw std::invalid_argument("statistics limited to 64 blocks");
  std::array<std::uint64_t, 64> adj{};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // Canonical order: bl[a].lo < bl[b].lo.
      if (bl[b].lo < bl[a].hi && bl[a].hi < bl[b].hi) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
        ++s.cr;
      }
    }
  }
  std::uint64_t unvisited = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int a = 0; a < n; ++a)
    if (adj[a] == 0) ++s.h;
  while (unvisited) {
    std::uint64_t comp = unvisited & (~unvisited + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t grown = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) grown |= adj[std::countr_zero(f)];
      frontier = grown & ~comp;
      comp |= grown;
    }
    ++s.cc;
    unvisited &= ~comp;
  }
  return s;
}

int crossings(const PairPartition& v) {
  const auto& bl = v.blocks();
  int cr = 0;
  for (std::size_t a = 0; a < bl.size(); ++a)
    for (std::size_t b = a + 1; b < bl.size(); ++b)
      if (cross(bl[a], bl[b])) ++cr;
  return cr;
}

SingletonResult singleton_blocks(const PairPartition& v) {
  const auto adj = crossing_graph(v);
  SingletonResult out;
  for (std::size_t a = 0; a < adj.size(); ++a)
    if (adj[a] == 0) out.blocks.push_back(v.blocks()[a]);
  out.h = static_cast<int>(out.blocks.size());
  return out;
}

ComponentResult connected_components(const PairPartition& v) {
  ComponentResult out;
  for (std::uint64_t mask : component_masks(crossing_graph(v))) {
    std::vector<Block> comp;
    for (std::uint64_t m = mask; m; m &= m - 1) comp.push_back(v.blocks()[static_cast<std::size_t>(std::countr_zero(m))]);
    out.components.push_back(std::move(comp));
  }
  out.cc = static_cast<int>(out.components.size());
  return out;
}

SetPartition phi(const PairPartition& v) {
  std::vector<std::vector<int>> blocks;
  for (const auto& comp : connected_components(v).components) {
    std::vector<int> support;
    for (const auto& b : comp) {
      support.push_back(b.lo);
      support.push_back(b.hi);
    }
    blocks.push_back(std::move(support));
  }
  return SetPartition(v.points(), std::move(blocks));
}

PairPartition rotate(const PairPartition& v) {
  const int points = v.points();
  std::vector<Block> out;
  out.reserve(v.blocks().size());
  for (const auto& b : v.blocks()) out.push_back({1 + b.lo % points, 1 + b.hi % points});
  return PairPartition(std::move(out));
}

PairPartition standardize(const std::vector<Block>& blocks) {
  std::vector<int> support;
  for (const auto& b : blocks) {
    support.push_back(b.lo);
    support.push_back(b.hi);
  }
  std::sort(support.begin(), support.end());
  auto rank = [&](int x) { return 1 + static_cast<int>(std::lower_bound(support.begin(), support.end(), x) - support.begin()); };
  std::vector<Block> out;
  for (const auto& b : blocks) out.push_back({rank(b.lo), rank(b.hi)});
  return PairPartition(std::move(out));
}

std::uint64_t pairing_count(int n) {
  if (n < 0 || n > kHardMaxN) throw std::invalid_argument("pairing_count: n out of range");
  std::uint64_t out = 1;
  for (int k = 1; k <= n; ++k) out *= static_cast<std::uint64_t>(2 * k - 1);
  return out;
}

PairingCursor::PairingCursor(int n) : n_(n), total_(0) {
  if (n < 1 || n > kHardMaxN) throw std::invalid_argument("PairingCursor: n must lie in 1.." + std::to_string(kHardMaxN));
  total_ = pairing_count(n);
  current_.blocks_.resize(static_cast<std::size_t>(n));
  rebuild();
}

void PairingCursor::seek(std::uint64_t index) {
  if (index >= total_) throw std::out_of_range("PairingCursor::seek past the end");
  index_ = index;
  for (int i = n_ - 1; i >= 0; --i) {
    const auto radix = static_cast<std::uint64_t>(2 * (n_ - i) - 1);
    digits_[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  rebuild();
}

bool PairingCursor::next() {
  for (int i = n_ - 1; i >= 0; --i) {
    const int radix = 2 * (n_ - i) - 1;
    if (++digits_[i] < radix) {
      ++index_;
      rebuild();
      return true;
    }
    digits_[i] = 0;
  }
  index_ = 0;
  rebuild();
  return false;
}

void PairingCursor::rebuild() {
  std::array<int, 2 * kHardMaxN> free{};
  int nfree = 2 * n_;
  for (int i = 0; i < nfree; ++i) free[i] = i + 1;
  for (int level = 0; level < n_; ++level) {
    const int pick = 1 + digits_[level];
    current_.blocks_[level] = {free[0], free[pick]};
    // Drop positions 0 and pick, keeping ascending order.
    int w = 0;
    for (int r = 1; r < nfree; ++r)
      if (r != pick) free[w++] = free[r];
    nfree -= 2;
  }
}

PairingRange::PairingRange(int n, const EnumerationLimits& limits) : n_(n) { require_within_cap(n, limits); }

BigInt StatisticDistribution::total() const {
  BigInt out = 0;
  for (const auto& [key, count] : counts) out += count;
  return out;
}

BigInt StatisticDistribution::non_crossing() const {
  BigInt out = 0;
  for (const auto& [key, count] : counts)
    if (std::get<0>(key) == 0) out += count;
  return out;
}

BigInt StatisticDistribution::connected() const {
  BigInt out = 0;
  for (const auto& [key, count] : counts)
    if (std::get<2>(key) == 1) out += count;
  return out;
}

BigInt StatisticDistribution::singleton_total() const {
  BigInt out = 0;
  for (const auto& [key, count] : counts) out += count * std::get<1>(key);
  return out;
}

std::map<int, BigInt> StatisticDistribution::big_h_marginal() const {
  std::map<int, BigInt> out;
  for (const auto& [key, count] : counts) out[n - std::get<1>(key)] += count;
  return out;
}

namespace {

// Dense counting table indexed by (cr, h, cc); machine counts suffice since
// (2n-1)!! < 2^64 for n <= kHardMaxN.
struct DenseCounts {
  int n = 0;
  int max_cr = 0;
  std::vector<std::uint64_t> cells;

  explicit DenseCounts(int n_) : n(n_), max_cr(n_ * (n_ - 1) / 2) {
    cells.assign(static_cast<std::size_t>((max_cr + 1) * (n + 1) * (n + 1)), 0);
  }
  std::size_t slot(const ChordStatistics& s) const {
    return static_cast<std::size_t>((s.cr * (n + 1) + s.h) * (n + 1) + s.cc);
  }
  void add(const PairPartition& v) { ++cells[slot(statistics(v))]; }
  void merge(const DenseCounts& other) {
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += other.cells[i];
  }
  StatisticDistribution to_distribution() const {
    StatisticDistribution out;
    out.n = n;
    for (int cr = 0; cr <= max_cr; ++cr)
      for (int h = 0; h <= n; ++h)
        for (int cc = 0; cc <= n; ++cc) {
          const auto count = cells[static_cast<std::size_t>((cr * (n + 1) + h) * (n + 1) + cc)];
          if (count) out.counts[{cr, h, cc}] = BigInt(count);
        }
    return out;
  }
};

}  // namespace

StatisticDistribution statistic_distribution(int n, const ExecConfig& exec, const EnumerationLimits& limits) {
  require_within_cap(n, limits);
  auto dense = fold_pairings(
      n, DenseCounts(n), [](const PairPartition& v, DenseCounts& acc) { acc.add(v); },
      [](DenseCounts& into, const DenseCounts& from) { into.merge(from); }, exec, limits);
  return dense.to_distribution();
}

StatisticDistribution statistic_distribution_serial(int n, const EnumerationLimits& limits) {
  require_within_cap(n, limits);
  auto dense = fold_pairings_serial(n, DenseCounts(n), [](const PairPartition& v, DenseCounts& acc) { acc.add(v); }, limits);
  return dense.to_distribution();
}

std::vector<BigInt> riordan_connected(int nmax) {
  if (nmax < 1) throw std::invalid_argument("riordan_connected: nmax >= 1 required");
  // c[m] holds c_{2m}.
  std::vector<BigInt> c(static_cast<std::size_t>(nmax) + 1, 0);
  c[1] = 1;
  for (int n = 1; n < nmax; ++n) {
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) sum += c[i] * c[n + 1 - i];
    c[n + 1] = n * sum;
  }
  return {c.begin() + 1, c.end()};
}

BigInt total_singletons_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("total_singletons: n >= 1 required");
  BigInt sum = 0;
  for (int k = 0; k <= n - 1; ++k)
    sum += double_factorial_odd(static_cast<unsigned>(k)) * double_factorial_odd(static_cast<unsigned>(n - 1 - k));
  return n * sum;
}

TotalSingletons total_singletons(int n, const EnumerationLimits& limits, const ExecConfig& exec) {
  TotalSingletons out{total_singletons_closed_form(n), std::nullopt};
  if (n <= std::min(limits.max_n, kHardMaxN)) {
    out.enumerated = statistic_distribution(n, exec, limits).singleton_total();
    if (*out.enumerated != out.value) {
      throw ConsistencyError("T_" + std::to_string(2 * n) + ": closed form " + out.value.str() + " != enumeration " +
                             out.enumerated->str());
    }
  }
  return out;
}

BigInt count_nc_pairings(int n) {
  if (n < 1) throw std::invalid_argument("count_nc_pairings: n >= 1 required");
  return catalan(static_cast<unsigned>(n));
}

}  // namespace ggp
