#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partpat {

/// A set partition of [n] in canonical sequential form: word()[i] is the
/// 1-based index of the block containing element i+1.  Valid words are
/// restricted growth functions: the first symbol is 1 and every symbol
/// exceeds the running maximum by at most one, so a k-block partition uses
/// exactly the symbols 1..k.
class Rgs {
 public:
  Rgs() = default;  // the empty partition of [0]

  /// Throws std::invalid_argument if `word` is not a restricted growth word.
  explicit Rgs(std::vector<int> word);

  static bool valid_word(std::span<const int> word);

  /// Literal format: digits ("1212") when all symbols are <= 9, otherwise
  /// comma-separated ("1,2,3,10,2").  Throws on malformed or non-RGF input.
  static Rgs parse(std::string_view literal);

  /// Builds the canonical word from blocks given in any order.  Throws
  /// std::invalid_argument unless the blocks are nonempty, disjoint and
  /// cover [n] exactly.
  static Rgs from_blocks(std::vector<std::vector<int>> blocks);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  int num_blocks() const { return static_cast<int>(block_sizes_.size()); }
  std::span<const int> word() const { return word_; }
  int operator[](int i) const { return word_[static_cast<size_t>(i)]; }

  /// block_sizes()[j] is the size of block j+1 (blocks in standard order).
  std::span<const int> block_sizes() const { return block_sizes_; }

  std::vector<std::vector<int>> to_blocks() const;

  std::string str() const;

  bool operator==(const Rgs&) const = default;
  auto operator<=>(const Rgs& o) const { return word_ <=> o.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> block_sizes_;
};

/// True iff p has no occurrence of 1212.
bool is_noncrossing(const Rgs& p);

/// Unique factorization p = c1[c2]...[cm] into nonempty connected parts.
/// A component boundary sits after position i when every later symbol
/// exceeds every earlier one; this extends the non-crossing notion to all
/// partitions.
std::vector<Rgs> components(const Rgs& p);

/// Rebuilds sigma1[sigma2]...[sigmam] from parts (inverse of components).
Rgs concat_components(std::span<const Rgs> parts);

/// sigma[tau]: tau appended with all symbols shifted above sigma's.
Rgs append_shifted(const Rgs& sigma, const Rgs& tau);

bool is_connected(const Rgs& p);

/// n - m + 1, where m is the position of the final ascent.  Throws
/// std::domain_error when p has fewer than two blocks (no ascent exists).
int fasc(const Rgs& p);

}  // namespace partpat
