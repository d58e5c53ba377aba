#include "partpat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "partpat/pattern.hpp"

namespace partpat {

std::vector<Rgs> minimal_pattern_set(std::vector<Rgs> patterns) {
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  std::vector<Rgs> keep;
  for (size_t i = 0; i < patterns.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < patterns.size() && !redundant; ++j)
      if (j != i && contains(patterns[i], patterns[j])) redundant = true;
    if (!redundant) keep.push_back(patterns[i]);
  }
  return keep;
}

AvoiderSearch::AvoiderSearch(std::vector<Rgs> patterns, int max_n) : max_n_(max_n) {
  if (max_n_ < 0) throw std::invalid_argument("max_n must be >= 0");
  if (max_n_ > 31) throw std::invalid_argument("search limited to words of size <= 31");
  for (Rgs& p : minimal_pattern_set(std::move(patterns))) {
    if (p.empty()) {
      nothing_avoids_ = true;
      continue;
    }
    PatternAuto pa;
    pa.word.assign(p.word().begin(), p.word().end());
    pa.k = p.size();
    pa.prefix_max.assign(static_cast<size_t>(pa.k) + 1, 0);
    for (int j = 0; j < pa.k; ++j)
      pa.prefix_max[static_cast<size_t>(j) + 1] =
          std::max(pa.prefix_max[static_cast<size_t>(j)], pa.word[static_cast<size_t>(j)]);
    if (pa.k > 15 || pa.prefix_max.back() > 12)
      throw std::invalid_argument("pattern too large for the match-state encoding");
    pats_.push_back(std::move(pa));
  }
}

void AvoiderSearch::reset() {
  word_.clear();
  word_.reserve(static_cast<size_t>(max_n_));
  block_sizes_.assign(static_cast<size_t>(max_n_) + 1, 0);
  last_ascent_.assign(1, 0);
  max_value_stack_.assign(1, 0);
  max_value_ = 0;
  states_.assign(pats_.size(), {});
  state_offsets_.assign(pats_.size(), {});
  for (size_t p = 0; p < pats_.size(); ++p) {
    states_[p].reserve(1024);
    states_[p].push_back(0);  // empty match state
    state_offsets_[p].assign(1, 0);
    state_offsets_[p].push_back(1);  // depth-0 states are [0, 1)
  }
}

bool AvoiderSearch::would_complete(int v) const {
  for (size_t p = 0; p < pats_.size(); ++p) {
    const PatternAuto& pa = pats_[p];
    size_t depth = word_.size();
    size_t lo = state_offsets_[p][depth];
    size_t hi = state_offsets_[p][depth + 1];
    // states are sorted, so the j = k-1 states form the tail
    for (size_t i = hi; i > lo; --i) {
      uint64_t s = states_[p][i - 1];
      int j = state_j(s);
      if (j < pa.k - 1) break;
      int sym = pa.word[static_cast<size_t>(j)];
      int m = pa.prefix_max[static_cast<size_t>(j)];
      bool ok = sym <= m ? v == state_val(s, sym) : (j == 0 || v > state_val(s, m));
      if (ok) return true;
    }
  }
  return false;
}

bool AvoiderSearch::push_symbol(int v) {
  if (v < 1 || v > max_value_ + 1 || static_cast<int>(word_.size()) >= max_n_)
    return false;
  if (would_complete(v)) return false;

  size_t depth = word_.size();
  for (size_t p = 0; p < pats_.size(); ++p) {
    const PatternAuto& pa = pats_[p];
    std::vector<uint64_t>& st = states_[p];
    size_t lo = state_offsets_[p][depth];
    size_t hi = state_offsets_[p][depth + 1];
    // carry every old state forward, then add the advanced ones
    for (size_t i = lo; i < hi; ++i) st.push_back(st[i]);
    size_t child_lo = st.size() - (hi - lo);
    for (size_t i = lo; i < hi; ++i) {
      uint64_t s = st[i];
      int j = state_j(s);
      int sym = pa.word[static_cast<size_t>(j)];
      int m = pa.prefix_max[static_cast<size_t>(j)];
      uint64_t ns;
      if (sym <= m) {
        if (v != state_val(s, sym)) continue;
        ns = s + (uint64_t{1} << kJShift);
      } else {
        if (j > 0 && v <= state_val(s, m)) continue;
        ns = (s + (uint64_t{1} << kJShift)) | (static_cast<uint64_t>(v) << (5 * (sym - 1)));
      }
      st.push_back(ns);
    }
    std::sort(st.begin() + static_cast<ptrdiff_t>(child_lo), st.end());
    st.erase(std::unique(st.begin() + static_cast<ptrdiff_t>(child_lo), st.end()), st.end());
    state_offsets_[p].push_back(st.size());
  }

  last_ascent_.push_back(!word_.empty() && word_.back() < v ? static_cast<int>(word_.size())
                                                            : last_ascent_.back());
  word_.push_back(v);
  ++block_sizes_[static_cast<size_t>(v - 1)];
  max_value_stack_.push_back(std::max(max_value_, v));
  max_value_ = max_value_stack_.back();
  return true;
}

void AvoiderSearch::pop_symbol() {
  int v = word_.back();
  word_.pop_back();
  --block_sizes_[static_cast<size_t>(v - 1)];
  last_ascent_.pop_back();
  max_value_stack_.pop_back();
  max_value_ = max_value_stack_.back();
  size_t depth = word_.size();
  for (size_t p = 0; p < pats_.size(); ++p) {
    states_[p].resize(state_offsets_[p][depth + 1]);
    state_offsets_[p].pop_back();
  }
}

std::vector<std::vector<int>> AvoiderSearch::shard_prefixes(int depth) {
  std::vector<std::vector<int>> out;
  if (nothing_avoids_) return out;
  int saved = max_n_;
  max_n_ = std::min(max_n_, depth);
  reset();
  auto collect = [&](const SearchView& view) {
    if (static_cast<int>(view.word.size()) == depth)
      out.emplace_back(view.word.begin(), view.word.end());
  };
  visit_node(collect);
  descend(collect, max_n_);
  max_n_ = saved;
  return out;
}

void enumerate_avoiders(const std::vector<Rgs>& patterns, int n,
                        const std::function<void(const Rgs&)>& sink) {
  AvoiderSearch search(patterns, n);
  search.run([&](const SearchView& view) {
    if (static_cast<int>(view.word.size()) == n)
      sink(Rgs(std::vector<int>(view.word.begin(), view.word.end())));
  });
}

namespace {

std::vector<long> count_all_depths(AvoiderSearch& search, int max_n,
                                        std::span<const int> prefix) {
  std::vector<long> tally(static_cast<size_t>(max_n) + 1, 0);
  auto visit = [&](const SearchView& view) { ++tally[view.word.size()]; };
  if (prefix.empty())
    search.run(visit);
  else
    search.run_subtree(prefix, visit);
  return tally;
}

}  // namespace

CountVector count_avoiders(const std::vector<Rgs>& patterns, int max_n, int workers) {
  CountVector out;
  out.max_n = max_n;
  out.counts.assign(static_cast<size_t>(max_n) + 1, 0);
  AvoiderSearch probe(patterns, max_n);
  if (probe.nothing_avoids()) return out;

  const int shard_depth = 3;
  if (workers <= 1 || max_n <= shard_depth + 1) {
    auto tally = count_all_depths(probe, max_n, {});
    for (int n = 0; n <= max_n; ++n) out.counts[static_cast<size_t>(n)] = tally[static_cast<size_t>(n)];
    return out;
  }

  // shallow part once, then one task per shard prefix
  {
    AvoiderSearch shallow(patterns, shard_depth);
    auto tally = count_all_depths(shallow, shard_depth, {});
    for (int n = 0; n <= shard_depth; ++n) out.counts[static_cast<size_t>(n)] = tally[static_cast<size_t>(n)];
  }
  auto prefixes = probe.shard_prefixes(shard_depth);
  std::vector<std::vector<long>> partials(prefixes.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    AvoiderSearch local(patterns, max_n);
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) break;
      partials[i] = count_all_depths(local, max_n, prefixes[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& part : partials)
    for (int n = shard_depth + 1; n <= max_n; ++n)
      out.counts[static_cast<size_t>(n)] += part[static_cast<size_t>(n)];
  return out;
}

CountTable count_avoiders_by_blocks(const std::vector<Rgs>& patterns, int max_n) {
  CountTable out;
  out.max_n = max_n;
  AvoiderSearch search(patterns, max_n);
  search.run([&](const SearchView& view) {
    ++out.counts[{static_cast<int>(view.word.size()), view.num_blocks}];
  });
  if (!search.nothing_avoids()) out.counts[{0, 0}] = 1;
  return out;
}

ProfileCounts profile_counts(const std::vector<Rgs>& patterns, int n) {
  ProfileCounts out;
  AvoiderSearch search(patterns, n);
  search.run([&](const SearchView& view) {
    if (static_cast<int>(view.word.size()) == n)
      ++out[Profile(view.block_sizes.begin(), view.block_sizes.end())];
  });
  return out;
}

std::map<std::pair<int, int>, BigInt> component_distribution(const std::vector<Rgs>& patterns,
                                                             int max_n) {
  std::map<std::pair<int, int>, BigInt> out;
  AvoiderSearch search(patterns, max_n);
  std::vector<int> suffix_min(static_cast<size_t>(max_n) + 1);
  search.run([&](const SearchView& view) {
    int n = static_cast<int>(view.word.size());
    if (n == 0) {
      ++out[{0, 0}];
      return;
    }
    suffix_min[static_cast<size_t>(n)] = 1 << 30;
    for (int i = n - 1; i >= 0; --i)
      suffix_min[static_cast<size_t>(i)] =
          std::min(suffix_min[static_cast<size_t>(i) + 1], view.word[static_cast<size_t>(i)]);
    int comps = 1;
    int prefix_max = 0;
    for (int i = 0; i + 1 < n; ++i) {
      prefix_max = std::max(prefix_max, view.word[static_cast<size_t>(i)]);
      if (suffix_min[static_cast<size_t>(i) + 1] > prefix_max) ++comps;
    }
    ++out[{n, comps}];
  });
  return out;
}

FascTriangle fasc_triangle(FascVariant variant, int max_n) {
  if (max_n < 2) throw std::invalid_argument("fasc_triangle needs max_n >= 2");
  FascTriangle out;
  out.variant = variant;
  out.max_n = max_n;
  std::vector<Rgs> patterns{Rgs::parse("1123")};
  switch (variant) {
    case FascVariant::A: patterns.push_back(Rgs::parse("1211")); break;
    case FascVariant::B: patterns.push_back(Rgs::parse("111")); break;
    case FascVariant::C: patterns.push_back(Rgs::parse("1222")); break;
  }
  AvoiderSearch search(patterns, max_n);
  search.run([&](const SearchView& view) {
    int n = static_cast<int>(view.word.size());
    if (view.num_blocks < 2) return;
    if (variant == FascVariant::C && view.word.back() == 1) return;
    int t = n - view.last_ascent + 1;
    ++out.entries[{n, view.num_blocks, t}];
  });
  return out;
}

std::vector<BigInt> bell_numbers(int max_n) {
  // Bell triangle: row r starts with the last entry of row r-1, each entry
  // adds its left neighbor and the entry above it.
  std::vector<BigInt> bell{1};
  std::vector<BigInt> row{1};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const BigInt& above : row) next.push_back(next.back() + above);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}


}  // namespace partpat
