#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "partpat/rgs.hpp"

namespace partpat {

/// A containment pattern: an Rgs plus structural caches used by occurrence
/// search and the classifier.
class Pattern {
 public:
  Pattern() = default;  // the empty pattern, contained in everything
  explicit Pattern(Rgs rgs);
  static Pattern parse(std::string_view literal) { return Pattern(Rgs::parse(literal)); }

  const Rgs& rgs() const { return rgs_; }
  int size() const { return rgs_.size(); }
  bool connected() const { return connected_; }
  const std::vector<Rgs>& component_list() const { return components_; }

  /// 0-based index of the first occurrence of `symbol` in the word, or -1.
  int first_position(int symbol) const;

 private:
  Rgs rgs_;
  std::vector<Rgs> components_;
  std::vector<int> first_pos_;
  bool connected_ = false;
};

/// Positions (1-based, strictly increasing) of a pattern occurrence in a host.
struct Occurrence {
  std::vector<int> indices;
  bool operator==(const Occurrence&) const = default;
};

bool contains(const Rgs& host, const Pattern& pattern);
bool contains(const Rgs& host, const Rgs& pattern);

/// Occurrence whose last index is minimal, ties broken by lexicographically
/// smallest index sequence; nullopt when the host avoids the pattern.
std::optional<Occurrence> leftmost_occurrence(const Rgs& host, const Pattern& pattern);

/// Occurrence maximizing the host value at the first index; the first index
/// is canonicalized to the first position of that value's block and the
/// remaining indices are the lexicographically smallest completion.
std::optional<Occurrence> topmost_occurrence(const Rgs& host, const Pattern& pattern);

/// Builds a pattern from a template such as "1[112]1": each bracketed part
/// is shifted past all symbols that occur before it.  Grammar:
///   expr := item+ ; item := symbol | '[' expr ']'
/// Throws std::invalid_argument on malformed templates or non-RGF results.
Rgs substitute(std::string_view tmpl);

/// Same, with every empty bracket "[]" filled from `parts` in order.
Rgs substitute(std::string_view tmpl, std::span<const Rgs> parts);

// Pattern families.  Compositions index block sizes; all parts must be >= 1.
Rgs family_tau112(std::span<const int> a);   // 12..m m^(am-1) .. 1^(a1-1)
Rgs family_tau121(std::span<const int> a);   // 1^a1 2^a2 .. m^am
Rgs family_ones_two_ones(int j, int k);      // 1^j 2 1^k   (j >= 1, k >= 0)
Rgs family_incr_power(int k, int a);         // 1 2 .. (k-1) k^a
Rgs family_ones(int k);                      // 1^k
Rgs family_incr(int k);                      // 1 2 .. k

}  // namespace partpat
