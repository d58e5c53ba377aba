#pragma once

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <vector>

namespace partpat {

using BigInt = mpz_class;

/// Exact avoider counts indexed by size, counts[n] = |P_n(patterns)|.
struct CountVector {
  int max_n = 0;
  std::vector<BigInt> counts;  // length max_n + 1

  const BigInt& operator[](int n) const { return counts[static_cast<size_t>(n)]; }
  bool operator==(const CountVector&) const = default;
};

/// Counts split by number of blocks: (n, k) -> |P_{n,k}(patterns)|.
struct CountTable {
  int max_n = 0;
  std::map<std::pair<int, int>, BigInt> counts;

  BigInt at(int n, int k) const {
    auto it = counts.find({n, k});
    return it == counts.end() ? BigInt(0) : it->second;
  }
};

/// Block-size sequence of a partition in standard order.
using Profile = std::vector<int>;
using ProfileCounts = std::map<Profile, BigInt>;

enum class FascVariant { A, B, C };

/// Triangle of counts (n, k, t): partitions with k blocks and final-ascent
/// statistic t, restricted by the variant's avoidance class.
struct FascTriangle {
  FascVariant variant = FascVariant::A;
  int max_n = 0;
  std::map<std::tuple<int, int, int>, BigInt> entries;

  BigInt at(int n, int k, int t) const {
    auto it = entries.find({n, k, t});
    return it == entries.end() ? BigInt(0) : it->second;
  }
  bool operator==(const FascTriangle&) const = default;
};

}  // namespace partpat
