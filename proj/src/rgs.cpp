#include "partpat/rgs.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace partpat {

namespace {

std::vector<int> tally_blocks(std::span<const int> word) {
  int k = 0;
  for (int v : word) k = std::max(k, v);
  std::vector<int> sizes(static_cast<size_t>(k), 0);
  for (int v : word) ++sizes[static_cast<size_t>(v - 1)];
  return sizes;
}

}  // namespace

Rgs::Rgs(std::vector<int> word) : word_(std::move(word)) {
  if (!valid_word(word_)) throw std::invalid_argument("not a restricted growth word");
  block_sizes_ = tally_blocks(word_);
}

bool Rgs::valid_word(std::span<const int> word) {
  int running_max = 0;
  for (int v : word) {
    if (v < 1 || v > running_max + 1) return false;
    running_max = std::max(running_max, v);
  }
  return true;
}

Rgs Rgs::parse(std::string_view literal) {
  struct Reject {
    std::string_view lit;
    [[noreturn]] void operator()() const {
      throw std::invalid_argument("not a restricted growth word: " + std::string(lit));
    }
  } reject{literal};
  std::vector<int> word;
  if (literal.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= literal.size()) {
      size_t next = literal.find(',', pos);
      if (next == std::string_view::npos) next = literal.size();
      std::string_view tok = literal.substr(pos, next - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size())
        throw std::invalid_argument("bad pattern literal: " + std::string(literal));
      word.push_back(v);
      pos = next + 1;
      if (next == literal.size()) break;
    }
  } else {
    for (char c : literal) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("bad pattern literal: " + std::string(literal));
      word.push_back(c - '0');
    }
  }
  if (!valid_word(word)) reject();
  return Rgs(std::move(word));
}

Rgs Rgs::from_blocks(std::vector<std::vector<int>> blocks) {
  size_t n = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("invalid block cover: empty block");
    n += b.size();
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  std::vector<int> word(n, 0);
  for (size_t j = 0; j < blocks.size(); ++j) {
    for (int e : blocks[j]) {
      if (e < 1 || static_cast<size_t>(e) > n || word[static_cast<size_t>(e - 1)] != 0)
        throw std::invalid_argument("invalid block cover: blocks must partition [n]");
      word[static_cast<size_t>(e - 1)] = static_cast<int>(j) + 1;
    }
  }
  return Rgs(std::move(word));
}

std::vector<std::vector<int>> Rgs::to_blocks() const {
  std::vector<std::vector<int>> blocks(static_cast<size_t>(num_blocks()));
  for (int i = 0; i < size(); ++i) blocks[static_cast<size_t>(word_[static_cast<size_t>(i)] - 1)].push_back(i + 1);
  return blocks;
}

std::string Rgs::str() const {
  std::string out;
  if (num_blocks() <= 9) {
    for (int v : word_) out += static_cast<char>('0' + v);
  } else {
    for (size_t i = 0; i < word_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(word_[i]);
    }
  }
  return out;
}

bool is_noncrossing(const Rgs& p) {
  // 1212 occurs iff some value reappears after a larger value that itself
  // reappears later; a direct quadruple scan is fine at these sizes.
  auto w = p.word();
  int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (w[b] <= w[a]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (w[c] != w[a]) continue;
        for (int d = c + 1; d < n; ++d)
          if (w[d] == w[b]) return false;
      }
    }
  return true;
}

namespace {

// 0-based boundary positions: i is a boundary when min(w[i+1..]) > max(w[..i]).
std::vector<int> boundary_positions(std::span<const int> w) {
  int n = static_cast<int>(w.size());
  std::vector<int> out;
  if (n == 0) return out;
  std::vector<int> suffix_min(static_cast<size_t>(n) + 1, 1 << 30);
  for (int i = n - 1; i >= 0; --i)
    suffix_min[static_cast<size_t>(i)] = std::min(suffix_min[static_cast<size_t>(i) + 1], w[static_cast<size_t>(i)]);
  int prefix_max = 0;
  for (int i = 0; i + 1 < n; ++i) {
    prefix_max = std::max(prefix_max, w[static_cast<size_t>(i)]);
    if (suffix_min[static_cast<size_t>(i) + 1] > prefix_max) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<Rgs> components(const Rgs& p) {
  std::vector<Rgs> out;
  if (p.empty()) return out;
  auto w = p.word();
  std::vector<int> cuts = boundary_positions(w);
  int start = 0;
  int offset = 0;
  cuts.push_back(p.size() - 1);
  for (int cut : cuts) {
    std::vector<int> part;
    part.reserve(static_cast<size_t>(cut - start + 1));
    for (int i = start; i <= cut; ++i) part.push_back(w[static_cast<size_t>(i)] - offset);
    out.emplace_back(std::move(part));
    offset += out.back().num_blocks();
    start = cut + 1;
  }
  return out;
}

Rgs concat_components(std::span<const Rgs> parts) {
  std::vector<int> word;
  int offset = 0;
  for (const Rgs& part : parts) {
    for (int v : part.word()) word.push_back(v + offset);
    offset += part.num_blocks();
  }
  return Rgs(std::move(word));
}

Rgs append_shifted(const Rgs& sigma, const Rgs& tau) {
  std::vector<int> word(sigma.word().begin(), sigma.word().end());
  for (int v : tau.word()) word.push_back(v + sigma.num_blocks());
  return Rgs(std::move(word));
}

bool is_connected(const Rgs& p) {
  return !p.empty() && boundary_positions(p.word()).empty();
}

int fasc(const Rgs& p) {
  auto w = p.word();
  for (int i = p.size() - 1; i >= 1; --i)
    if (w[static_cast<size_t>(i - 1)] < w[static_cast<size_t>(i)]) return p.size() - i + 1;
  throw std::domain_error("fasc undefined: partition has no ascent");
}

}  // namespace partpat
