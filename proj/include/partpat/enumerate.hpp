#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "partpat/count.hpp"
#include "partpat/rgs.hpp"

namespace partpat {

/// Read-only view of the search node handed to visitors.  `word` is the
/// current avoider; the other fields are maintained incrementally.
struct SearchView {
  std::span<const int> word;
  int num_blocks;                    // max symbol
  int last_ascent;                   // 1-based position m with w[m] < w[m+1]; 0 if none
  std::span<const int> block_sizes;  // multiplicity of symbol j+1, length num_blocks
};

/// Depth-first enumeration of pattern-avoiding restricted growth words with
/// incremental containment pruning.  For every pattern the search keeps the
/// set of reachable states of a subsequence automaton over the current
/// prefix (a state records how much of the pattern is matched and which host
/// values its symbols took); an extension that would complete a match is
/// never explored, so exactly the avoiders are visited, in lexicographic
/// order per length.
class AvoiderSearch {
 public:
  /// The pattern set is reduced first: duplicates and patterns containing
  /// another pattern of the set are dropped.
  AvoiderSearch(std::vector<Rgs> patterns, int max_n);

  /// True when some pattern is empty (contained even in the empty word).
  bool nothing_avoids() const { return nothing_avoids_; }

  /// Visits every avoider of every size 0..max_n (preorder, so each word is
  /// visited before its extensions).
  template <typename F>
  void run(F&& visit) {
    if (nothing_avoids_) return;
    reset();
    visit_node(visit);
    descend(visit, max_n_);
  }

  /// Avoider prefixes of exactly `depth` symbols, in lexicographic order;
  /// search work below them is independent, which is what shard workers use.
  std::vector<std::vector<int>> shard_prefixes(int depth);

  /// Visits avoiders of size `prefix.size()`..max_n in the subtree below
  /// `prefix` (the prefix itself included).  The prefix must be an avoider.
  template <typename F>
  void run_subtree(std::span<const int> prefix, F&& visit) {
    if (nothing_avoids_) return;
    reset();
    for (int v : prefix)
      if (!push_symbol(v)) throw std::invalid_argument("prefix is not an avoider");
    visit_node(visit);
    descend(visit, max_n_);
  }

 private:
  struct PatternAuto {
    std::vector<int> word;        // pattern symbols
    std::vector<int> prefix_max;  // prefix_max[j] = max of word[0..j-1]
    int k = 0;                    // pattern length
  };

  // State encoding: matched count j in the top 4 bits, host value assigned
  // to pattern symbol s in bits 5(s-1)..5s-1.  Sorting keys therefore groups
  // states by j, with the nearly-complete ones in the tail.
  static constexpr int kJShift = 60;
  static constexpr uint64_t kValMask = 31;

  static int state_j(uint64_t s) { return static_cast<int>(s >> kJShift); }
  static int state_val(uint64_t s, int sym) {
    return static_cast<int>((s >> (5 * (sym - 1))) & kValMask);
  }

  void reset();
  bool would_complete(int v) const;  // does appending v finish some pattern?
  bool push_symbol(int v);           // returns false (and does not push) if pruned
  void pop_symbol();

  template <typename F>
  void visit_node(F&& visit) {
    visit(SearchView{std::span<const int>(word_), max_value_,
                     last_ascent_.empty() ? 0 : last_ascent_.back(),
                     std::span<const int>(block_sizes_.data(), static_cast<size_t>(max_value_))});
  }

  template <typename F>
  void descend(F&& visit, int max_depth) {
    if (static_cast<int>(word_.size()) >= max_depth) return;
    int top = max_value_ + 1;
    for (int v = 1; v <= top; ++v) {
      if (!push_symbol(v)) continue;
      visit_node(visit);
      descend(visit, max_depth);
      pop_symbol();
    }
  }

  std::vector<PatternAuto> pats_;
  int max_n_;
  bool nothing_avoids_ = false;

  // search stacks
  std::vector<int> word_;
  std::vector<int> block_sizes_;
  std::vector<int> last_ascent_;                       // per depth
  std::vector<int> max_value_stack_;                   // per depth
  int max_value_ = 0;
  std::vector<std::vector<uint64_t>> states_;          // [pattern] flat stack of states
  std::vector<std::vector<size_t>> state_offsets_;     // [pattern][depth] -> start in states_
};

/// Reduce a pattern set: drop duplicates and any pattern containing another
/// member (avoiding the smaller one already implies avoiding it).
std::vector<Rgs> minimal_pattern_set(std::vector<Rgs> patterns);

/// Visits P_n(patterns) exactly, in lexicographic order.
void enumerate_avoiders(const std::vector<Rgs>& patterns, int n,
                        const std::function<void(const Rgs&)>& sink);

/// counts[m] = |P_m(patterns)| for m <= max_n.  With workers > 1 the search
/// is split at a fixed prefix depth and shards run concurrently; per-shard
/// tallies are summed in lexicographic shard order, so results are identical
/// to the single-threaded run.
CountVector count_avoiders(const std::vector<Rgs>& patterns, int max_n, int workers = 1);

CountTable count_avoiders_by_blocks(const std::vector<Rgs>& patterns, int max_n);

/// Avoider counts of size n keyed by block-size sequence.
ProfileCounts profile_counts(const std::vector<Rgs>& patterns, int n);

/// (n, number of components) -> count of avoiders, n <= max_n.
std::map<std::pair<int, int>, BigInt> component_distribution(const std::vector<Rgs>& patterns,
                                                             int max_n);

/// Exact triangles computed by enumeration.  Variant A counts
/// P_{n,k}(1123,1211) by final-ascent statistic, B counts P_{n,k}(1123,111),
/// C counts P_{n,k}(1123,1222) restricted to words not ending in 1.
FascTriangle fasc_triangle(FascVariant variant, int max_n);

/// Bell numbers via the Bell-triangle recurrence (enumeration-independent
/// reference values).
std::vector<BigInt> bell_numbers(int max_n);

}  // namespace partpat
