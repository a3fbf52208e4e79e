#include "ggp/pairings.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace ggp;

namespace {

oracle::Pairs as_pairs(const PairPartition& v) {
  oracle::Pairs out;
  for (const auto& b : v.blocks()) out.emplace_back(b.lo, b.hi);
  return out;
}

PairPartition from_pairs(const oracle::Pairs& p) {
  std::vector<Block> blocks;
  for (auto [a, b] : p) blocks.push_back({a, b});
  return PairPartition(blocks);
}

}  // namespace

TEST_CASE("canonical form and validation") {
  const PairPartition v({{6, 2}, {1, 4}, {3, 5}});
  CHECK(v.str() == "{(1,4),(2,6),(3,5)}");
  CHECK(v.partner(6) == 2);
  CHECK(v.partner(3) == 5);
  CHECK_THROWS_AS(PairPartition({{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PairPartition({{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PairPartition({{1, 1}}), std::invalid_argument);
}

TEST_CASE("statistics of fixed examples") {
  const PairPartition v({{1, 4}, {2, 6}, {3, 5}});
  CHECK(crossings(v) == 2);
  CHECK(statistics(v) == ChordStatistics{3, 2, 0, 1});

  const PairPartition nested({{1, 6}, {2, 3}, {4, 5}});
  CHECK(statistics(nested) == ChordStatistics{3, 0, 3, 3});

  const PairPartition mixed({{1, 3}, {2, 4}, {5, 6}});
  const auto s = singleton_blocks(mixed);
  CHECK(s.h == 1);
  REQUIRE(s.blocks.size() == 1);
  CHECK(s.blocks[0] == Block{5, 6});
  const auto c = connected_components(mixed);
  CHECK(c.cc == 2);
  CHECK(c.components[0].size() == 2);
  CHECK(phi(mixed).str() == "{{1,2,3,4},{5,6}}");
}

TEST_CASE("enumeration matches an independent generator") {
  for (int n = 1; n <= 6; ++n) {
    std::set<oracle::Pairs> expected;
    for (auto& p : oracle::matchings(n)) expected.insert(p);
    std::set<oracle::Pairs> seen;
    std::uint64_t count = 0;
    for (const auto& v : enumerate_pairings(n)) {
      seen.insert(as_pairs(v));
      ++count;
    }
    CHECK(count == pairing_count(n));
    CHECK(seen == expected);
  }
}

TEST_CASE("statistics agree with brute force on every partition, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : oracle::matchings(n)) {
      const auto s = statistics(from_pairs(p));
      REQUIRE(s.cr == oracle::crossings(p));
      REQUIRE(s.h == oracle::singletons(p));
      REQUIRE(s.cc == oracle::components(p));
    }
  }
}

TEST_CASE("cursor seek reproduces the stream") {
  const int n = 5;
  std::vector<PairPartition> stream;
  for (const auto& v : enumerate_pairings(n)) stream.push_back(v);
  PairingCursor cursor(n);
  for (std::uint64_t i : {0ULL, 1ULL, 17ULL, 400ULL, 944ULL}) {
    cursor.seek(i);
    CHECK(cursor.current() == stream[i]);
    CHECK(cursor.index() == i);
  }
  // Stream order is increasing in the canonical comparison.
  CHECK(std::is_sorted(stream.begin(), stream.end()));
  CHECK(stream.front().str() == "{(1,2),(3,4),(5,6),(7,8),(9,10)}");
}

TEST_CASE("joint distributions") {
  const auto d2 = statistic_distribution(2);
  CHECK(d2.counts.size() == 2);
  CHECK(d2.counts.at({0, 2, 2}) == 2);
  CHECK(d2.counts.at({1, 0, 1}) == 1);

  const auto h3 = statistic_distribution(3).big_h_marginal();
  CHECK(h3.size() == 3);
  CHECK(h3.at(0) == 5);
  CHECK(h3.at(2) == 6);
  CHECK(h3.at(3) == 4);

  for (int n = 1; n <= 7; ++n) {
    const auto d = statistic_distribution(n);
    CHECK(d.total() == BigInt(pairing_count(n)));
    CHECK(d.non_crossing() == count_nc_pairings(n));
    CHECK(d.non_crossing() == catalan(static_cast<unsigned>(n)));
  }
}

TEST_CASE("parallel distribution equals the serial reference for any thread count") {
  for (int n : {4, 6, 7}) {
    const auto serial = statistic_distribution_serial(n);
    for (int threads : {1, 2, 3, 8}) CHECK(statistic_distribution(n, ExecConfig{threads}) == serial);
  }
}

TEST_CASE("connected counts and singleton totals") {
  const auto c = riordan_connected(8);
  const int expected[] = {1, 1, 4, 27, 248, 2830, 38232, 593859};
  for (int i = 0; i < 8; ++i) CHECK(c[static_cast<std::size_t>(i)] == expected[i]);
  for (int n = 1; n <= 6; ++n) CHECK(statistic_distribution(n).connected() == c[static_cast<std::size_t>(n - 1)]);

  const int t[] = {1, 4, 21, 144, 1245, 13140, 164745};
  for (int n = 1; n <= 7; ++n) {
    const auto r = total_singletons(n);
    CHECK(r.value == t[n - 1]);
    REQUIRE(r.enumerated);
    CHECK(*r.enumerated == r.value);
  }
  // Beyond the cap only the closed form is available.
  const auto big = total_singletons(12);
  CHECK_FALSE(big.enumerated);
  CHECK(big.value == total_singletons_closed_form(12));
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_pairings(9), SizeLimitError);
  CHECK_NOTHROW(enumerate_pairings(9, EnumerationLimits{9}));
  CHECK_THROWS_AS(statistic_distribution(11, {}, EnumerationLimits{11}), SizeLimitError);
  try {
    require_within_cap(9, {});
    FAIL("expected SizeLimitError");
  } catch (const SizeLimitError& e) {
    CHECK(std::string(e.what()).find('8') != std::string::npos);
  }
}

TEST_CASE("rotation and standardization") {
  const PairPartition v({{1, 2}, {3, 5}, {4, 6}});
  CHECK(rotate(v).str() == "{(1,5),(2,3),(4,6)}");
  PairPartition w = v;
  for (int i = 0; i < 6; ++i) w = rotate(w);
  CHECK(w == v);
  CHECK(standardize({{3, 7}, {5, 9}}).str() == "{(1,3),(2,4)}");
  for (const auto& x : enumerate_pairings(5)) {
    const auto p = phi(x);
    REQUIRE(p.is_non_crossing());
    REQUIRE(p.all_blocks_even());
  }
}
