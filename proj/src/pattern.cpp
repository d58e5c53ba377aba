#include "partpat/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace partpat {

Pattern::Pattern(Rgs rgs) : rgs_(std::move(rgs)) {
  components_ = components(rgs_);
  connected_ = components_.size() == 1;
  first_pos_.assign(static_cast<size_t>(rgs_.num_blocks()), -1);
  for (int i = 0; i < rgs_.size(); ++i) {
    int s = rgs_[i];
    if (first_pos_[static_cast<size_t>(s - 1)] < 0) first_pos_[static_cast<size_t>(s - 1)] = i;
  }
}

int Pattern::first_position(int symbol) const {
  if (symbol < 1 || symbol > rgs_.num_blocks()) return -1;
  return first_pos_[static_cast<size_t>(symbol - 1)];
}

namespace {

struct OccSearch {
  std::span<const int> host;
  std::span<const int> pat;
  std::vector<int> pat_prefix_max;  // pat_prefix_max[j] = max of pat[0..j-1]
  std::vector<int> assigned;        // host value for pattern symbol s (1-based)
  std::vector<int> picked;          // chosen 0-based host positions

  explicit OccSearch(std::span<const int> h, std::span<const int> p) : host(h), pat(p) {
    pat_prefix_max.assign(p.size() + 1, 0);
    for (size_t j = 0; j < p.size(); ++j)
      pat_prefix_max[j + 1] = std::max(pat_prefix_max[j], p[j]);
    assigned.assign(pat_prefix_max.back() + 1, 0);
    picked.reserve(p.size());
  }

  // Positions are tried in increasing order, so the first full match found
  // is the lexicographically smallest one under the given constraints.
  bool search(size_t j, int from, int last_exact) {
    if (j == pat.size()) return true;
    int s = pat[j];
    bool fresh = s > pat_prefix_max[j];
    int hi = static_cast<int>(host.size());
    if (last_exact >= 0 && j + 1 == pat.size()) {
      // final symbol pinned to one position
      from = last_exact;
      hi = last_exact + 1;
    } else if (last_exact >= 0) {
      hi = last_exact;  // leave room for the pinned last position
    }
    for (int p = from; p < hi; ++p) {
      int v = host[static_cast<size_t>(p)];
      if (fresh) {
        if (j > 0 && v <= assigned[static_cast<size_t>(pat_prefix_max[j])]) continue;
        assigned[static_cast<size_t>(s)] = v;
      } else if (v != assigned[static_cast<size_t>(s)]) {
        continue;
      }
      picked.push_back(p);
      if (search(j + 1, p + 1, last_exact)) return true;
      picked.pop_back();
    }
    return false;
  }
};

std::optional<Occurrence> find_occurrence(const Rgs& host, const Rgs& pat, int first_fixed,
                                          int last_exact) {
  if (pat.empty()) return Occurrence{};
  if (pat.size() > host.size()) return std::nullopt;
  OccSearch s(host.word(), pat.word());
  if (first_fixed >= 0) {
    s.assigned[1] = host[first_fixed];
    s.picked.push_back(first_fixed);
    if (pat.size() == 1) {
      if (last_exact >= 0 && last_exact != first_fixed) return std::nullopt;
    } else if (!s.search(1, first_fixed + 1, last_exact)) {
      return std::nullopt;
    }
  } else if (!s.search(0, 0, last_exact)) {
    return std::nullopt;
  }
  Occurrence occ;
  occ.indices.reserve(s.picked.size());
  for (int p : s.picked) occ.indices.push_back(p + 1);
  return occ;
}

}  // namespace

bool contains(const Rgs& host, const Rgs& pattern) {
  return find_occurrence(host, pattern, -1, -1).has_value();
}

bool contains(const Rgs& host, const Pattern& pattern) { return contains(host, pattern.rgs()); }

std::optional<Occurrence> leftmost_occurrence(const Rgs& host, const Pattern& pattern) {
  const Rgs& pat = pattern.rgs();
  if (pat.empty()) return Occurrence{};
  for (int e = pat.size() - 1; e < host.size(); ++e)
    if (auto occ = find_occurrence(host, pat, -1, e)) return occ;
  return std::nullopt;
}

std::optional<Occurrence> topmost_occurrence(const Rgs& host, const Pattern& pattern) {
  const Rgs& pat = pattern.rgs();
  if (pat.empty()) return Occurrence{};
  std::vector<int> first_pos(static_cast<size_t>(host.num_blocks()) + 1, -1);
  for (int i = host.size() - 1; i >= 0; --i) first_pos[static_cast<size_t>(host[i])] = i;
  for (int b = host.num_blocks(); b >= 1; --b)
    if (auto occ = find_occurrence(host, pat, first_pos[static_cast<size_t>(b)], -1)) return occ;
  return std::nullopt;
}

namespace {

class TemplateParser {
 public:
  TemplateParser(std::string_view tmpl, std::span<const Rgs> parts) : in_(tmpl), parts_(parts) {}

  Rgs run() {
    parse_expr(0, true);
    if (pos_ != in_.size()) fail("unbalanced ']'");
    if (next_part_ < parts_.size()) fail("unused substitution parts");
    if (!Rgs::valid_word(skeleton_)) fail("skeleton is not a restricted growth word");
    if (!Rgs::valid_word(word_)) fail("result is not a restricted growth word");
    return Rgs(std::move(word_));
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("invalid template '" + std::string(in_) + "': " + why);
  }

  void append(int v) {
    word_.push_back(v);
    if (v >= static_cast<int>(seen_.size())) seen_.resize(static_cast<size_t>(v) + 1, false);
    if (!seen_[static_cast<size_t>(v)]) {
      seen_[static_cast<size_t>(v)] = true;
      ++distinct_;
    }
  }

  void parse_expr(int shift, bool top = false) {
    bool any = false;
    while (pos_ < in_.size() && in_[pos_] != ']') {
      char c = in_[pos_];
      if (c == '[') {
        ++pos_;
        int inner_shift = distinct_;
        if (pos_ < in_.size() && in_[pos_] == ']') {
          // empty bracket: pull the next explicit part
          if (next_part_ >= parts_.size()) fail("more [] slots than parts");
          for (int v : parts_[next_part_++].word()) append(v + inner_shift);
        } else {
          parse_expr(inner_shift);
        }
        if (pos_ >= in_.size() || in_[pos_] != ']') fail("missing ']'");
        ++pos_;
        any = true;
      } else if (c >= '1' && c <= '9') {
        int v = c - '0';
        ++pos_;
        if (shift == 0) skeleton_.push_back(v);
        append(v + shift);
        any = true;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (!any && !top) fail("empty expression");
  }

  std::string_view in_;
  std::span<const Rgs> parts_;
  size_t pos_ = 0;
  size_t next_part_ = 0;
  int distinct_ = 0;
  std::vector<bool> seen_;
  std::vector<int> word_;
  std::vector<int> skeleton_;
};

}  // namespace

Rgs substitute(std::string_view tmpl, std::span<const Rgs> parts) {
  return TemplateParser(tmpl, parts).run();
}

Rgs substitute(std::string_view tmpl) { return substitute(tmpl, {}); }

namespace {

void require_positive(std::span<const int> a) {
  if (a.empty()) throw std::invalid_argument("family: composition must be nonempty");
  for (int x : a)
    if (x < 1) throw std::invalid_argument("family: composition parts must be positive");
}

}  // namespace

Rgs family_tau112(std::span<const int> a) {
  require_positive(a);
  int m = static_cast<int>(a.size());
  std::vector<int> word;
  for (int i = 1; i <= m; ++i) word.push_back(i);
  for (int i = m; i >= 1; --i)
    for (int r = 1; r < a[static_cast<size_t>(i - 1)]; ++r) word.push_back(i);
  return Rgs(std::move(word));
}

Rgs family_tau121(std::span<const int> a) {
  require_positive(a);
  std::vector<int> word;
  for (size_t i = 0; i < a.size(); ++i)
    for (int r = 0; r < a[i]; ++r) word.push_back(static_cast<int>(i) + 1);
  return Rgs(std::move(word));
}

Rgs family_ones_two_ones(int j, int k) {
  if (j < 1 || k < 0) throw std::invalid_argument("family: need j >= 1, k >= 0");
  std::vector<int> word(static_cast<size_t>(j), 1);
  word.push_back(2);
  word.insert(word.end(), static_cast<size_t>(k), 1);
  return Rgs(std::move(word));
}

Rgs family_incr_power(int k, int a) {
  if (k < 1 || a < 1) throw std::invalid_argument("family: need k >= 1, a >= 1");
  std::vector<int> word;
  for (int i = 1; i < k; ++i) word.push_back(i);
  word.insert(word.end(), static_cast<size_t>(a), k);
  return Rgs(std::move(word));
}

Rgs family_ones(int k) {
  if (k < 1) throw std::invalid_argument("family: need k >= 1");
  return Rgs(std::vector<int>(static_cast<size_t>(k), 1));
}

Rgs family_incr(int k) {
  if (k < 1) throw std::invalid_argument("family: need k >= 1");
  std::vector<int> word;
  for (int i = 1; i <= k; ++i) word.push_back(i);
  return Rgs(std::move(word));
}

}  // namespace partpat
