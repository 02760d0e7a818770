#pragma once

// Set partitions, braids and their arc diagrams.
//
// Ground sets are 1-indexed: a partition of [n] covers {1, ..., n}.

#include "ncpart/errors.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

struct Arc {
  int left = 0;
  int right = 0;

  bool is_loop() const { return left == right; }
  auto operator<=>(const Arc&) const = default;
};

class SetPartition {
 public:
  SetPartition() = default;

  /// Validates and normalizes: elements ascending within a block, blocks
  /// ordered by minimum element.
  static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks) {
    if (n < 1) throw std::invalid_argument("partition ground set must be non-empty");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (auto& block : blocks) {
      if (block.empty()) throw std::invalid_argument("empty block");
      for (int x : block) {
        if (x < 1 || x > n)
          throw std::invalid_argument("element " + std::to_string(x) + " outside [1," +
                                      std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(x)])
          throw std::invalid_argument("element " + std::to_string(x) + " repeated");
        seen[static_cast<std::size_t>(x)] = 1;
      }
      std::sort(block.begin(), block.end());
    }
    for (int x = 1; x <= n; ++x)
      if (!seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("element " + std::to_string(x) + " missing");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SetPartition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    return p;
  }

  static SetPartition singletons(int n) {
    std::vector<std::vector<int>> blocks;
    for (int x = 1; x <= n; ++x) blocks.push_back({x});
    return from_blocks(n, std::move(blocks));
  }

  /// Blocks are the connected components of `arcs` over [n]; loops are ignored.
  static SetPartition from_arcs(int n, const std::vector<Arc>& arcs) {
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        auto& px = parent[static_cast<std::size_t>(x)];
        px = parent[static_cast<std::size_t>(px)];
        x = px;
      }
      return x;
    };
    for (const Arc& a : arcs) {
      if (a.left < 1 || a.right > n || a.left > a.right)
        throw std::invalid_argument("arc outside ground set");
      parent[static_cast<std::size_t>(find(a.right))] = find(a.left);
    }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n) + 1);
    for (int x = 1; x <= n; ++x) by_root[static_cast<std::size_t>(find(x))].push_back(x);
    std::vector<std::vector<int>> blocks;
    for (auto& b : by_root)
      if (!b.empty()) blocks.push_back(std::move(b));
    return from_blocks(n, std::move(blocks));
  }

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  bool operator==(const SetPartition&) const = default;
  auto operator<=>(const SetPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Arcs plus loops over [n]. Every vertex is the left endpoint of at most
/// one arc and the right endpoint of at most one arc; a loop uses both roles.
struct Braid {
  int n = 0;
  std::vector<Arc> arcs;

  bool is_valid() const {
    std::vector<char> as_left(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> as_right(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& a : arcs) {
      if (a.left < 1 || a.right > n || a.left > a.right) return false;
      if (as_left[static_cast<std::size_t>(a.left)]++ || as_right[static_cast<std::size_t>(a.right)]++)
        return false;
    }
    return true;
  }

  bool has_loop() const {
    return std::any_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.is_loop(); });
  }

  bool operator==(const Braid&) const = default;
};

/// Standard representation: consecutive elements of each block joined,
/// sorted by left endpoint.
inline std::vector<Arc> canonical_arcs(const SetPartition& p) {
  std::vector<Arc> arcs;
  for (const auto& block : p.blocks())
    for (std::size_t k = 1; k < block.size(); ++k) arcs.push_back({block[k - 1], block[k]});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

/// How arcs that share an endpoint are treated. In a braid, (i,j) and (j,l)
/// with i < j < l are drawn as crossing.
enum class CrossingConvention { partition, braid };

inline bool arcs_cross(const Arc& x, const Arc& y, CrossingConvention convention) {
  const Arc& a = x.left < y.left ? x : y;
  const Arc& b = x.left < y.left ? y : x;
  if (a.is_loop() || b.is_loop() || a.left == b.left) return false;
  if (convention == CrossingConvention::braid) return a.left < b.left && b.left <= a.right && a.right < b.right;
  return a.left < b.left && b.left < a.right && a.right < b.right;
}

/// Largest k such that some k arcs mutually cross; loops never participate.
///
/// A mutually crossing set, sorted by left endpoint, also has increasing right
/// endpoints and every left endpoint precedes the first right endpoint. Fixing
/// the first arc reduces the search to a longest strictly increasing run of
/// right endpoints among the arcs that cross it from the right.
inline int max_mutual_crossing(std::vector<Arc> arcs,
                               CrossingConvention convention = CrossingConvention::partition) {
  std::erase_if(arcs, [](const Arc& a) { return a.is_loop(); });
  std::sort(arcs.begin(), arcs.end());
  int best = arcs.empty() ? 0 : 1;
  std::vector<int> tails;
  for (std::size_t first = 0; first < arcs.size(); ++first) {
    tails.clear();
    for (std::size_t c = first + 1; c < arcs.size(); ++c) {
      if (!arcs_cross(arcs[first], arcs[c], convention)) continue;
      int r = arcs[c].right;
      auto it = std::lower_bound(tails.begin(), tails.end(), r);
      if (it == tails.end())
        tails.push_back(r);
      else
        *it = r;
    }
    best = std::max(best, 1 + static_cast<int>(tails.size()));
  }
  return best;
}

inline int max_mutual_crossing(const SetPartition& p) { return max_mutual_crossing(canonical_arcs(p)); }

inline int max_mutual_crossing(const Braid& b) {
  return max_mutual_crossing(b.arcs, CrossingConvention::braid);
}

inline bool is_k_noncrossing(const SetPartition& p, int k) { return max_mutual_crossing(p) < k; }

/// Every pair of distinct elements sharing a block differs by at least m.
inline bool is_m_regular(const SetPartition& p, int m) {
  for (const auto& block : p.blocks())
    for (std::size_t k = 1; k < block.size(); ++k)
      if (block[k] - block[k - 1] < m) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Block notation: `{1,5}{2}{3,7,10}`, optionally prefixed by `n=<N>:`.

inline std::string format_partition(const SetPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(block[k]);
    }
    out += '}';
  }
  return out;
}

namespace detail {

class BlockParser {
 public:
  explicit BlockParser(std::string_view text) : text_(text) {}

  SetPartition parse() {
    std::optional<int> declared_n;
    skip_space();
    if (peek() == 'n') {
      ++pos_;
      skip_space();
      expect('=');
      skip_space();
      declared_n = number();
      skip_space();
      expect(':');
    }
    std::vector<std::vector<int>> blocks;
    std::vector<std::size_t> first_seen;  // offset of each element's first occurrence
    int max_element = 0;
    skip_space();
    while (pos_ < text_.size()) {
      expect('{');
      std::vector<int> block;
      skip_space();
      if (peek() == '}') fail("empty block");
      while (true) {
        skip_space();
        std::size_t at = pos_;
        int x = number();
        if (x < 1) fail_at("elements must be positive", at);
        if (static_cast<std::size_t>(x) >= first_seen.size()) first_seen.resize(static_cast<std::size_t>(x) + 1, npos);
        if (first_seen[static_cast<std::size_t>(x)] != npos)
          fail_at("element " + std::to_string(x) + " repeated", at);
        first_seen[static_cast<std::size_t>(x)] = at;
        block.push_back(x);
        max_element = std::max(max_element, x);
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect('}');
        break;
      }
      blocks.push_back(std::move(block));
      skip_space();
    }
    if (blocks.empty()) fail("no blocks");
    int n = declared_n.value_or(max_element);
    if (n < 1) fail("n must be positive");
    if (max_element > n) fail("element " + std::to_string(max_element) + " exceeds n=" + std::to_string(n));
    for (int x = 1; x <= n; ++x)
      if (static_cast<std::size_t>(x) >= first_seen.size() || first_seen[static_cast<std::size_t>(x)] == npos)
        fail("element " + std::to_string(x) + " missing");
    return SetPartition::from_blocks(n, std::move(blocks));
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  int number() {
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) fail_at("number too large", start);
      ++pos_;
    }
    if (pos_ == start + (negative ? 1 : 0)) fail_at("expected a number", start);
    return static_cast<int>(negative ? -value : value);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SetPartition parse_partition(std::string_view text) { return detail::BlockParser(text).parse(); }

/// Diagnostic arc list, e.g. `(1,5) (3,7)`.
inline std::string format_arcs(const std::vector<Arc>& arcs) {
  std::string out;
  for (const Arc& a : arcs) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(a.left) + ',' + std::to_string(a.right) + ')';
  }
  return out;
}

}  // namespace ncpart
