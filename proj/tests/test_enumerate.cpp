#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "partpat/enumerate.hpp"
#include "partpat/pattern.hpp"

using namespace partpat;

TEST_CASE("counts with no patterns are the Bell numbers") {
  int max_n = 14;
  CountVector cv = count_avoiders({}, max_n);
  auto bell = bell_numbers(max_n);
  for (int n = 0; n <= max_n; ++n) CHECK(cv[n] == bell[static_cast<size_t>(n)]);
}

TEST_CASE("single size-3 patterns count 2^(n-1)") {
  for (const char* sigma : {"112", "121", "122", "123"}) {
    CountVector cv = count_avoiders({Rgs::parse(sigma)}, 14);
    CHECK(cv[0] == 1);
    for (int n = 1; n <= 14; ++n) CHECK(cv[n] == BigInt(1) << (n - 1));
  }
}

TEST_CASE("enumeration visits avoiders in lexicographic order") {
  std::vector<Rgs> seen;
  enumerate_avoiders({Rgs::parse("112")}, 3, [&](const Rgs& p) { seen.push_back(p); });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0].str() == "111");
  CHECK(seen[1].str() == "121");
  CHECK(seen[2].str() == "122");
  CHECK(seen[3].str() == "123");
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("pattern 1 kills everything") {
  std::vector<Rgs> seen;
  enumerate_avoiders({Rgs::parse("1")}, 1, [&](const Rgs& p) { seen.push_back(p); });
  CHECK(seen.empty());
  CountVector cv = count_avoiders({Rgs::parse("1")}, 4);
  CHECK(cv[0] == 1);
  for (int n = 1; n <= 4; ++n) CHECK(cv[n] == 0);
}

TEST_CASE("empty pattern is contained even in the empty word") {
  CountVector cv = count_avoiders({Rgs()}, 3);
  for (int n = 0; n <= 3; ++n) CHECK(cv[n] == 0);
}

TEST_CASE("redundant patterns are dropped") {
  auto reduced = minimal_pattern_set({Rgs::parse("112"), Rgs::parse("1123"), Rgs::parse("112")});
  REQUIRE(reduced.size() == 1);
  CHECK(reduced[0].str() == "112");
  CHECK(count_avoiders({Rgs::parse("112"), Rgs::parse("1123")}, 10) ==
        count_avoiders({Rgs::parse("112")}, 10));
}

TEST_CASE("blocked counts match Stirling numbers without patterns") {
  CountTable t = count_avoiders_by_blocks({}, 6);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(4, 2) == 7);
  CHECK(t.at(5, 3) == 25);
  CHECK(t.at(6, 3) == 90);
  // zero block count only for the empty partition
  CHECK(t.at(3, 0) == 0);
}

TEST_CASE("size cap forces zero counts: {123,1111}") {
  // at most two blocks with all blocks of size <= 3 cannot exceed size 6
  CountVector cv = count_avoiders({Rgs::parse("123"), Rgs::parse("1111")}, 8);
  CHECK(cv[6] > 0);
  CHECK(cv[7] == 0);
  CHECK(cv[8] == 0);
}

TEST_CASE("pair counts 1+(n-1)2^(n-2): {1221,1232} and {1221,1223}") {
  for (const char* other : {"1232", "1223"}) {
    CountVector cv = count_avoiders({Rgs::parse("1221"), Rgs::parse(other)}, 6);
    std::vector<long> expected{1, 1, 2, 5, 13, 33, 81};
    for (int n = 0; n <= 6; ++n) CHECK(cv[n] == expected[static_cast<size_t>(n)]);
  }
}

TEST_CASE("adding a pattern never increases counts") {
  std::vector<Rgs> base{Rgs::parse("1212")};
  std::vector<Rgs> more{Rgs::parse("1212"), Rgs::parse("1221")};
  CountVector a = count_avoiders(base, 9);
  CountVector b = count_avoiders(more, 9);
  for (int n = 0; n <= 9; ++n) CHECK(b[n] <= a[n]);
}

TEST_CASE("profile counts") {
  ProfileCounts pc = profile_counts({}, 2);
  REQUIRE(pc.size() == 2);
  CHECK(pc.at(Profile{2}) == 1);
  CHECK(pc.at(Profile{1, 1}) == 1);

  for (int n = 0; n <= 8; ++n) {
    CHECK(profile_counts({Rgs::parse("121")}, n) == profile_counts({Rgs::parse("112")}, n));
    CHECK(profile_counts({Rgs::parse("1213")}, n) == profile_counts({Rgs::parse("1231")}, n));
  }

  // values sum to the avoider count
  ProfileCounts pc6 = profile_counts({Rgs::parse("1212")}, 6);
  BigInt total = 0;
  for (const auto& [profile, c] : pc6) total += c;
  CHECK(total == count_avoiders({Rgs::parse("1212")}, 6)[6]);
}

TEST_CASE("sharded enumeration merges to the sequential order") {
  std::vector<Rgs> patterns{Rgs::parse("1212"), Rgs::parse("1221")};
  int n = 8;
  std::vector<Rgs> sequential;
  enumerate_avoiders(patterns, n, [&](const Rgs& p) { sequential.push_back(p); });

  AvoiderSearch search(patterns, n);
  std::vector<Rgs> merged;
  for (const auto& prefix : search.shard_prefixes(3)) {
    AvoiderSearch shard(patterns, n);
    shard.run_subtree(prefix, [&](const SearchView& view) {
      if (static_cast<int>(view.word.size()) == n)
        merged.emplace_back(std::vector<int>(view.word.begin(), view.word.end()));
    });
  }
  CHECK(merged == sequential);
}

TEST_CASE("worker counts do not change count_avoiders") {
  std::vector<Rgs> patterns{Rgs::parse("1123"), Rgs::parse("1211")};
  CountVector one = count_avoiders(patterns, 11, 1);
  CountVector four = count_avoiders(patterns, 11, 4);
  CHECK(one.counts == four.counts);
}

TEST_CASE("component distribution tracks sizes and component counts") {
  auto dist = component_distribution({Rgs::parse("1212")}, 5);
  CHECK(dist.at({0, 0}) == 1);
  CHECK(dist.at({1, 1}) == 1);
  // noncrossing partitions of [n] with 1 component: 11 -> {11}? n=2: 11 and 12;
  // 12 = 1[1] has two components, 11 is connected
  CHECK(dist.at({2, 1}) == 1);
  CHECK(dist.at({2, 2}) == 1);
  BigInt total = 0;
  for (const auto& [key, c] : dist)
    if (key.first == 5) total += c;
  CHECK(total == count_avoiders({Rgs::parse("1212")}, 5)[5]);
}

TEST_CASE("fasc triangle by enumeration") {
  FascTriangle a = fasc_triangle(FascVariant::A, 6);
  CHECK(a.at(4, 3, 2) == 2);
  CHECK(a.at(4, 3, 3) == 3);
  FascTriangle b = fasc_triangle(FascVariant::B, 6);
  CHECK(b.at(4, 3, 2) == 2);
  CHECK(b.at(5, 3, 3) == 4);
  FascTriangle c = fasc_triangle(FascVariant::C, 6);
  CHECK(c.at(5, 3, 3) == 3);
  CHECK(c.at(4, 3, 2) == 2);
}

TEST_CASE("fasc bounds and triangle row sums") {
  // 2 <= fasc <= n-k+2 for every partition with at least two blocks
  for (int n = 2; n <= 8; ++n)
    enumerate_avoiders({}, n, [&](const Rgs& p) {
      if (p.num_blocks() < 2) return;
      int t = fasc(p);
      CHECK(t >= 2);
      CHECK(t <= n - p.num_blocks() + 2);
    });

  FascTriangle a = fasc_triangle(FascVariant::A, 10);
  std::vector<Rgs> pats{Rgs::parse("1123"), Rgs::parse("1211")};
  CountTable by_blocks = count_avoiders_by_blocks(pats, 10);
  CHECK(by_blocks.at(4, 3) == 5);
  for (int n = 2; n <= 10; ++n)
    for (int k = 2; k <= n; ++k) {
      BigInt row = 0;
      for (int t = 2; t <= n - k + 2; ++t) row += a.at(n, k, t);
      CHECK(row == by_blocks.at(n, k));
    }
}

TEST_CASE("pruned search agrees with filtering by the occurrence search") {
  // the automaton pruning and the backtracking containment test are
  // independent code paths; random pattern sets must give identical counts
  std::mt19937_64 rng(31);
  std::vector<Rgs> pool;
  for (int k = 3; k <= 5; ++k)
    enumerate_avoiders({}, k, [&](const Rgs& p) { pool.push_back(p); });
  std::vector<Rgs> everything;
  for (int n = 0; n <= 8; ++n)
    enumerate_avoiders({}, n, [&](const Rgs& p) { everything.push_back(p); });

  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> set_size(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rgs> patterns;
    for (int i = set_size(rng); i > 0; --i) patterns.push_back(pool[pick(rng)]);
    CountVector fast = count_avoiders(patterns, 8);
    std::vector<BigInt> slow(9, 0);
    for (const Rgs& host : everything) {
      bool avoids = true;
      for (const Rgs& pat : patterns)
        if (contains(host, Pattern(pat))) {
          avoids = false;
          break;
        }
      if (avoids) ++slow[static_cast<size_t>(host.size())];
    }
    for (int n = 0; n <= 8; ++n) {
      INFO("trial ", trial, " n=", n);
      CHECK(fast[n] == slow[static_cast<size_t>(n)]);
    }
  }
}
