#pragma once

// Exact count tables indexed by (step s, coordinates i, j) and their
// line-oriented cache format.

#include "ncpart/bigint.hpp"
#include "ncpart/errors.hpp"

#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace ncpart {

enum class TableKind {
  quarter_plane,  // a(s,i,j): walks in i,j >= 0
  omega,          // w(s,i,j): walks in the chamber i > j >= 0
  f_kernel,       // f(l,i,j) = a(2l+1,i,j)
  sigma_star,     // loop-free braid walks in the chamber
};

inline const char* kind_token(TableKind kind) {
  switch (kind) {
    case TableKind::quarter_plane: return "a";
    case TableKind::omega: return "omega";
    case TableKind::f_kernel: return "f";
    case TableKind::sigma_star: return "sigma_star";
  }
  return "?";
}

inline std::optional<TableKind> kind_from_token(const std::string& token) {
  for (TableKind k : {TableKind::quarter_plane, TableKind::omega, TableKind::f_kernel, TableKind::sigma_star})
    if (token == kind_token(k)) return k;
  return std::nullopt;
}

/// Dense layered grid of BigCount. Layer s stores coordinates below
/// extent(s); chamber kinds store only the triangle i > j. Reads outside the
/// stored region return zero.
class CountTable {
 public:
  CountTable(TableKind kind, int n) : kind_(kind), n_(n) {
    if (n < 0) throw std::invalid_argument("table size must be nonnegative");
    const int layers = kind == TableKind::f_kernel ? n : 2 * n + 1;
    layers_.reserve(static_cast<std::size_t>(layers));
    for (int s = 0; s < layers; ++s) {
      const int e = extent_for(kind, s);
      layers_.emplace_back(triangular() ? static_cast<std::size_t>(e) * static_cast<std::size_t>(e - 1) / 2
                                        : static_cast<std::size_t>(e) * static_cast<std::size_t>(e));
    }
  }

  TableKind kind() const { return kind_; }
  int n() const { return n_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }

  /// Coordinates 0 <= i, j < extent(s) may be stored.
  int extent(int s) const { return extent_for(kind_, s); }

  bool stores(int s, int i, int j) const {
    if (s < 0 || s >= layer_count() || i < 0 || j < 0) return false;
    const int e = extent(s);
    if (i >= e || j >= e) return false;
    return !triangular() || i > j;
  }

  const BigCount& at(int s, int i, int j) const {
    if (!stores(s, i, j)) return zero();
    return layers_[static_cast<std::size_t>(s)][index(s, i, j)];
  }

  void set(int s, int i, int j, BigCount value) {
    if (!stores(s, i, j)) {
      if (value == 0) return;
      throw std::out_of_range("cell (" + std::to_string(s) + "," + std::to_string(i) + "," + std::to_string(j) +
                              ") outside the " + kind_token(kind_) + " table");
    }
    layers_[static_cast<std::size_t>(s)][index(s, i, j)] = std::move(value);
  }

  /// Visits nonzero cells in lexicographic (s, i, j) order.
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    for (int s = 0; s < layer_count(); ++s) {
      const int e = extent(s);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < (triangular() ? i : e); ++j) {
          const BigCount& v = at(s, i, j);
          if (v != 0) fn(s, i, j, v);
        }
    }
  }

  std::size_t nonzero_count() const {
    std::size_t count = 0;
    for_each_nonzero([&](int, int, int, const BigCount&) { ++count; });
    return count;
  }

  bool operator==(const CountTable& other) const {
    return kind_ == other.kind_ && n_ == other.n_ && layers_ == other.layers_;
  }

 private:
  static int extent_for(TableKind kind, int s) {
    switch (kind) {
      case TableKind::quarter_plane:
      case TableKind::omega: return 2 + s / 2;     // first coordinate <= 1 + floor(s/2)
      case TableKind::f_kernel: return 2 + s;      // layer l holds a(2l+1)
      case TableKind::sigma_star: return 2 + (s + 1) / 2;  // odd steps add
    }
    return 0;
  }

  bool triangular() const { return kind_ == TableKind::omega || kind_ == TableKind::sigma_star; }

  std::size_t index(int s, int i, int j) const {
    if (triangular()) return static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2 + static_cast<std::size_t>(j);
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(extent(s)) + static_cast<std::size_t>(j);
  }

  static const BigCount& zero() {
    static const BigCount z = 0;
    return z;
  }

  TableKind kind_;
  int n_;
  std::vector<std::vector<BigCount>> layers_;
};

// ---------------------------------------------------------------------------
// Cache file:
//   NCWALK v1 kind=<a|omega|f|sigma_star> n=<n>
//   <s> <i> <j> <decimal value>      one line per nonzero cell, sorted
//   END <entry-count>

inline constexpr const char* kCacheMagic = "NCWALK";
inline constexpr const char* kCacheVersion = "v1";

inline void save_table(const CountTable& table, std::ostream& out) {
  out << kCacheMagic << ' ' << kCacheVersion << " kind=" << kind_token(table.kind()) << " n=" << table.n() << '\n';
  std::size_t count = 0;
  table.for_each_nonzero([&](int s, int i, int j, const BigCount& v) {
    out << s << ' ' << i << ' ' << j << ' ' << v << '\n';
    ++count;
  });
  out << "END " << count << '\n';
}

/// Recomputes cell (s,i,j) from layer s-1 (or l-1 for f) using the forward
/// step rule of the table kind. Layer 0 cells are checked against the
/// initial condition.
inline BigCount recompute_cell(const CountTable& t, int s, int i, int j) {
  using Step = std::array<int, 2>;
  static constexpr std::array<Step, 3> removes{{{0, 0}, {-1, 0}, {0, -1}}};
  static constexpr std::array<Step, 3> adds{{{0, 0}, {1, 0}, {0, 1}}};
  if (t.kind() == TableKind::f_kernel) {
    if (s == 0) return ((i == 1 || i == 0) && j == 0) ? 1 : 0;
    BigCount v = 3 * t.at(s - 1, i, j);
    for (auto [di, dj] : std::array<Step, 6>{{{-1, 0}, {0, -1}, {1, 0}, {1, -1}, {0, 1}, {-1, 1}}})
      v += t.at(s - 1, i + di, j + dj);
    return v;
  }
  if (s == 0) return (i == 1 && j == 0) ? 1 : 0;
  // P-walks remove on odd steps; loop-free braid walks add on odd steps.
  const bool odd = s % 2 == 1;
  const bool adding = t.kind() == TableKind::sigma_star ? odd : !odd;
  const auto& steps = adding ? adds : removes;
  if (t.kind() == TableKind::sigma_star && !odd) {
    // Even layer: pairs (o, e) from layer s-2 excluding (+e1, -e1).
    BigCount v = 0;
    for (auto [oi, oj] : adds)
      for (auto [ei, ej] : removes) {
        if (oi == 1 && ei == -1) continue;
        const int mi = i - ei, mj = j - ej;  // intermediate point
        const int pi = mi - oi, pj = mj - oj;
        if (!(mi > mj && mj >= 0) || !(pi > pj && pj >= 0)) continue;
        v += t.at(s - 2, pi, pj);
      }
    return v;
  }
  BigCount v = 0;
  for (auto [di, dj] : steps) v += t.at(s - 1, i - di, j - dj);
  return v;
}

inline CountTable load_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw TableError("empty cache file");
  std::istringstream header(line);
  std::string magic, version, kind_field, n_field;
  header >> magic >> version >> kind_field >> n_field;
  if (magic != kCacheMagic) throw TableError("not an " + std::string(kCacheMagic) + " cache file");
  if (version != kCacheVersion) throw TableError("unsupported cache version '" + version + "'");
  if (kind_field.rfind("kind=", 0) != 0 || n_field.rfind("n=", 0) != 0) throw TableError("malformed header");
  auto kind = kind_from_token(kind_field.substr(5));
  if (!kind) throw TableError("unknown table kind '" + kind_field.substr(5) + "'");
  int n = 0;
  try {
    n = std::stoi(n_field.substr(2));
  } catch (const std::exception&) {
    throw TableError("malformed n in header");
  }
  if (n < 0) throw TableError("negative n in header");

  CountTable table(*kind, n);
  std::vector<std::array<int, 3>> cells;
  bool ended = false;
  std::size_t declared = 0;
  std::tuple<int, int, int> last{-1, -1, -1};
  while (std::getline(in, line)) {
    if (line.rfind("END", 0) == 0) {
      std::istringstream tail(line.substr(3));
      if (!(tail >> declared)) throw TableError("malformed END line");
      ended = true;
      break;
    }
    std::istringstream row(line);
    int s, i, j;
    std::string digits;
    if (!(row >> s >> i >> j >> digits)) throw TableError("malformed entry line: " + line);
    if (std::make_tuple(s, i, j) <= last) throw TableError("entries not strictly sorted at: " + line);
    last = {s, i, j};
    BigCount value;
    try {
      value = BigCount(digits);
    } catch (const std::exception&) {
      throw TableError("malformed value: " + line);
    }
    if (value <= 0) throw TableError("nonpositive entry: " + line);
    if (!table.stores(s, i, j)) throw TableError("entry outside table bounds: " + line);
    table.set(s, i, j, std::move(value));
    cells.push_back({s, i, j});
  }
  if (!ended) throw TableError("truncated cache file (no END line)");
  if (declared != cells.size())
    throw TableError("END declares " + std::to_string(declared) + " entries, found " + std::to_string(cells.size()));

  // Spot check: first, middle and last entries.
  if (!cells.empty()) {
    for (std::size_t pick : {std::size_t{0}, cells.size() / 2, cells.size() - 1}) {
      auto [s, i, j] = cells[pick];
      if (recompute_cell(table, s, i, j) != table.at(s, i, j))
        throw TableError("recurrence spot check failed at (" + std::to_string(s) + "," + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    }
  }
  return table;
}

}  // namespace ncpart
