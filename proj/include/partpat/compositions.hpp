#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partpat/count.hpp"

namespace partpat {

/// A finite sequence of positive integers.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);
  static Composition parse(std::string_view literal);  // "3,1,1"

  int size() const;    // sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  std::string str() const;

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition& o) const { return parts <=> o.parts; }
};

/// True iff b contains a subsequence of length a.length whose components are
/// componentwise >= a (b "dominates" a).  Greedy left-to-right.
bool dominates(const Composition& b, const Composition& a);

/// Number of compositions of n dominating a.  DP over (remaining size,
/// greedily matched prefix of a); cross-validated against the brute-force
/// path in tests.
BigInt count_dominating(const Composition& a, int n);

/// Same count by explicit enumeration of all 2^(n-1) compositions.
BigInt count_dominating_brute(const Composition& a, int n);

/// First n <= max_n where the dominating counts of a and b differ.
std::optional<int> simcomp_first_diff(const Composition& a, const Composition& b, int max_n);

/// Bounded check of the dominance-count equivalence (the relation itself is
/// a condition over all n).
bool simcomp_check(const Composition& a, const Composition& b, int max_n);

/// Swap construction: given b dominating a and 1 <= r < a.length, reverses
/// the middle block of b between the minimal prefix dominating
/// a_1..a_{r-1} and the maximal suffix dominating a_{r+2}..; the result
/// dominates a with components r, r+1 swapped, and the construction is an
/// involution between the two dominator sets.  Throws unless b dominates a.
Composition bijection_multi1(const Composition& b, const Composition& a, int r);

/// Merge construction for a ending in 2: maps compositions NOT dominating a
/// to compositions not dominating (a_1,..,a_{m-1},1,1) by collapsing the
/// trailing run of 1s after the minimal prefix match.  Throws if a does not
/// end in 2 or b dominates a.
Composition bijection_multi2(const Composition& b, const Composition& a);

/// Weakly decreasing form with every 2 replaced by 1,1 (a "2-free integer
/// partition"); idempotent, and equivalent to the input under simcomp.
Composition normalize_2free(const Composition& a);

/// Number of 2-free integer partitions of k (OEIS A027336).
BigInt xi(int k);

std::vector<Composition> all_compositions(int n);
std::vector<Composition> two_free_partitions(int k);

}  // namespace partpat
