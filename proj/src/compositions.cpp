#include "partpat/compositions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace partpat {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::parse(std::string_view literal) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < literal.size()) {
    size_t next = literal.find(',', pos);
    if (next == std::string_view::npos) next = literal.size();
    std::string_view tok = literal.substr(pos, next - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
      throw std::invalid_argument("bad composition literal: " + std::string(literal));
    parts.push_back(v);
    pos = next + 1;
  }
  return Composition(std::move(parts));
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::str() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

bool dominates(const Composition& b, const Composition& a) {
  size_t j = 0;
  for (int x : b.parts) {
    if (j == a.parts.size()) break;
    if (x >= a.parts[j]) ++j;
  }
  return j == a.parts.size();
}

BigInt count_dominating(const Composition& a, int n) {
  if (n < 0) return 0;
  int m = a.length();
  // match[j][c]: greedy state after consuming one component of size c from state j
  // dp[s][j]: compositions of s whose greedy match, started in state j, ends at m
  std::vector<std::vector<BigInt>> dp(static_cast<size_t>(n) + 1,
                                      std::vector<BigInt>(static_cast<size_t>(m) + 1, 0));
  for (int j = 0; j <= m; ++j) dp[0][static_cast<size_t>(j)] = (j == m) ? 1 : 0;
  for (int s = 1; s <= n; ++s)
    for (int j = 0; j <= m; ++j) {
      BigInt acc = 0;
      for (int c = 1; c <= s; ++c) {
        int nj = (j < m && c >= a.parts[static_cast<size_t>(j)]) ? j + 1 : j;
        acc += dp[static_cast<size_t>(s - c)][static_cast<size_t>(nj)];
      }
      dp[static_cast<size_t>(s)][static_cast<size_t>(j)] = acc;
    }
  return dp[static_cast<size_t>(n)][0];
}

BigInt count_dominating_brute(const Composition& a, int n) {
  BigInt total = 0;
  for (const Composition& b : all_compositions(n))
    if (dominates(b, a)) ++total;
  return total;
}

std::optional<int> simcomp_first_diff(const Composition& a, const Composition& b, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    if (count_dominating(a, n) != count_dominating(b, n)) return n;
  return std::nullopt;
}

bool simcomp_check(const Composition& a, const Composition& b, int max_n) {
  return !simcomp_first_diff(a, b, max_n).has_value();
}

namespace {

// smallest i such that (b_1..b_i) dominates prefix; -1 if none
int min_prefix_match(const Composition& b, std::span<const int> prefix) {
  size_t j = 0;
  if (prefix.empty()) return 0;
  for (size_t i = 0; i < b.parts.size(); ++i) {
    if (b.parts[i] >= prefix[j]) ++j;
    if (j == prefix.size()) return static_cast<int>(i) + 1;
  }
  return -1;
}

// largest j such that (b_{j+1}..b_k) dominates suffix; -1 if none
int max_suffix_match(const Composition& b, std::span<const int> suffix) {
  int k = b.length();
  if (suffix.empty()) return k;
  size_t j = suffix.size();
  for (int i = k; i >= 1; --i) {
    if (b.parts[static_cast<size_t>(i - 1)] >= suffix[j - 1]) --j;
    if (j == 0) return i - 1;
  }
  return -1;
}

}  // namespace

Composition bijection_multi1(const Composition& b, const Composition& a, int r) {
  if (r < 1 || r >= a.length()) throw std::invalid_argument("bijection_multi1: bad swap index");
  if (!dominates(b, a)) throw std::invalid_argument("bijection_multi1: b must dominate a");
  std::span<const int> parts(a.parts);
  int i = min_prefix_match(b, parts.subspan(0, static_cast<size_t>(r - 1)));
  int j = max_suffix_match(b, parts.subspan(static_cast<size_t>(r + 1)));
  Composition out = b;
  std::reverse(out.parts.begin() + i, out.parts.begin() + j);
  return out;
}

Composition bijection_multi2(const Composition& b, const Composition& a) {
  if (a.parts.empty() || a.parts.back() != 2)
    throw std::invalid_argument("bijection_multi2: a must end in 2");
  if (dominates(b, a)) throw std::invalid_argument("bijection_multi2: b must not dominate a");
  std::span<const int> parts(a.parts);
  int i = min_prefix_match(b, parts.subspan(0, parts.size() - 1));
  if (i < 0 || i == b.length()) return b;
  // b dominates the prefix of a, so everything after position i must be 1
  int tail = b.length() - i;
  Composition out;
  out.parts.assign(b.parts.begin(), b.parts.begin() + i);
  out.parts.push_back(tail);
  return out;
}

Composition normalize_2free(const Composition& a) {
  std::vector<int> parts;
  for (int x : a.parts) {
    if (x == 2) {
      parts.push_back(1);
      parts.push_back(1);
    } else {
      parts.push_back(x);
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Composition(std::move(parts));
}

BigInt xi(int k) {
  if (k < 0) return 0;
  return static_cast<long>(two_free_partitions(k).size());
}

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int c = 1; c <= rest; ++c) {
      cur.push_back(c);
      self(self, rest - c);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Composition> two_free_partitions(int k) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int c = std::min(rest, max_part); c >= 1; --c) {
      if (c == 2) continue;
      cur.push_back(c);
      self(self, rest - c, c);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(rec, k, std::max(k, 1));
  return out;
}

}  // namespace partpat
