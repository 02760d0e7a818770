#pragma once

// Two-row vacillating tableaux and their bijections with 3-noncrossing
// partitions and braids.
//
// A tableau over n vertices is a sequence of 2n+1 shapes. Vertex v owns the
// two moves that lead into shapes 2v-1 and 2v. In the partition flavor the
// first of these removes a square or does nothing and the second adds a
// square or does nothing; the braid flavor swaps the roles.

#include "ncpart/core_model.hpp"
#include "ncpart/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

struct Shape {
  int row1 = 0;
  int row2 = 0;

  bool is_valid() const { return row2 >= 0 && row1 >= row2; }
  bool is_empty() const { return row1 == 0 && row2 == 0; }
  bool operator==(const Shape&) const = default;
};

enum class Move { nothing, add_row1, add_row2, remove_row1, remove_row2 };

inline bool is_add(Move m) { return m == Move::add_row1 || m == Move::add_row2; }
inline bool is_remove(Move m) { return m == Move::remove_row1 || m == Move::remove_row2; }
inline int move_row(Move m) { return (m == Move::add_row1 || m == Move::remove_row1) ? 1 : 2; }

inline Shape apply_move(Shape s, Move m) {
  switch (m) {
    case Move::nothing: break;
    case Move::add_row1: ++s.row1; break;
    case Move::add_row2: ++s.row2; break;
    case Move::remove_row1: --s.row1; break;
    case Move::remove_row2: --s.row2; break;
  }
  return s;
}

/// The single move taking `from` to `to`, if one exists.
inline std::optional<Move> move_between(Shape from, Shape to) {
  for (Move m : {Move::nothing, Move::add_row1, Move::add_row2, Move::remove_row1, Move::remove_row2})
    if (apply_move(from, m) == to) return m;
  return std::nullopt;
}

inline const char* move_name(Move m) {
  switch (m) {
    case Move::nothing: return "nothing";
    case Move::add_row1: return "+1";
    case Move::add_row2: return "+2";
    case Move::remove_row1: return "-1";
    case Move::remove_row2: return "-2";
  }
  return "?";
}

/// Lattice embedding of a shape: a = row1 + 1, b = row2. Shapes map into the
/// chamber W2 = {a > b >= 0}; the empty shape is (1,0).
struct WalkPoint {
  int a = 1;
  int b = 0;

  static WalkPoint of(Shape s) { return {s.row1 + 1, s.row2}; }
  Shape shape() const { return {a - 1, b}; }
  bool in_chamber() const { return a > b && b >= 0; }
  bool in_quarter_plane() const { return a >= 0 && b >= 0; }

  WalkPoint moved(Move m) const { return of(apply_move(shape(), m)); }

  bool operator==(const WalkPoint&) const = default;
  auto operator<=>(const WalkPoint&) const = default;
};

enum class Flavor { partition, braid };

struct VacillatingTableau {
  Flavor flavor = Flavor::partition;
  std::vector<Shape> shapes{Shape{}};

  int vertex_count() const { return static_cast<int>(shapes.size() / 2); }

  /// Move leading into shape k, 1 <= k < shapes.size(). Only meaningful for
  /// adjacent shapes that differ by a single square.
  Move move(std::size_t k) const {
    auto m = move_between(shapes[k - 1], shapes[k]);
    if (!m) throw std::invalid_argument("shapes " + std::to_string(k - 1) + " and " + std::to_string(k) +
                                        " are not related by an elementary move");
    return *m;
  }

  std::vector<Move> moves() const {
    std::vector<Move> out;
    for (std::size_t k = 1; k < shapes.size(); ++k) out.push_back(move(k));
    return out;
  }

  static VacillatingTableau from_moves(Flavor flavor, const std::vector<Move>& moves) {
    VacillatingTableau t{flavor, {Shape{}}};
    for (Move m : moves) t.shapes.push_back(apply_move(t.shapes.back(), m));
    return t;
  }

  bool operator==(const VacillatingTableau&) const = default;
};

struct Violation {
  std::size_t index;  // shape index, or move index for step/parity violations
  std::string kind;   // "length", "start", "end", "shape", "step", "parity"
  std::string detail;
};

/// Empty result means the tableau is valid.
inline std::vector<Violation> validate_tableau(const VacillatingTableau& t) {
  std::vector<Violation> out;
  const auto& s = t.shapes;
  if (s.empty() || s.size() % 2 == 0) {
    out.push_back({s.size(), "length", "a tableau over n vertices has 2n+1 shapes"});
    if (s.empty()) return out;
  }
  if (!s.front().is_empty()) out.push_back({0, "start", "first shape must be empty"});
  if (!s.back().is_empty()) out.push_back({s.size() - 1, "end", "last shape must be empty"});
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!s[k].is_valid()) out.push_back({k, "shape", "row lengths must satisfy row1 >= row2 >= 0"});
  for (std::size_t k = 1; k < s.size(); ++k) {
    auto m = move_between(s[k - 1], s[k]);
    if (!m) {
      out.push_back({k, "step", "not a single-square move"});
      continue;
    }
    const bool odd = k % 2 == 1;
    const bool removes_first = t.flavor == Flavor::partition;
    if (*m == Move::nothing) continue;
    const bool ok = odd ? (removes_first ? is_remove(*m) : is_add(*m))
                        : (removes_first ? is_add(*m) : is_remove(*m));
    if (!ok)
      out.push_back({k, "parity",
                     std::string(move_name(*m)) + " not allowed at " + (odd ? "odd" : "even") + " step"});
  }
  return out;
}

namespace detail {

inline void require_valid(const VacillatingTableau& t, Flavor flavor) {
  if (t.flavor != flavor) throw std::invalid_argument("tableau has the wrong flavor");
  auto violations = validate_tableau(t);
  if (!violations.empty())
    throw std::invalid_argument("invalid tableau: " + violations.front().kind + " at " +
                                std::to_string(violations.front().index) + ": " + violations.front().detail);
}

/// Standard two-row filling; rows strictly increase and row2[k] > row1[k].
class TwoRowFilling {
 public:
  void place(int row, int value) {
    if (!rows_[0].empty() && rows_[0].back() >= value) throw LogicError("placed entry is not the maximum");
    if (!rows_[1].empty() && rows_[1].back() >= value) throw LogicError("placed entry is not the maximum");
    rows_[static_cast<std::size_t>(row - 1)].push_back(value);
    if (rows_[1].size() > rows_[0].size()) throw LogicError("row 2 longer than row 1");
  }

  /// Reverse row insertion from the last cell of `row`; returns the entry
  /// that leaves the filling.
  int extract(int row) {
    auto& r1 = rows_[0];
    auto& r2 = rows_[1];
    if (row == 1) {
      if (r1.empty() || r1.size() == r2.size()) throw LogicError("row 1 has no removable corner");
      int x = r1.back();
      r1.pop_back();
      return x;
    }
    if (r2.empty()) throw LogicError("row 2 is empty");
    int x = r2.back();
    r2.pop_back();
    auto it = std::lower_bound(r1.begin(), r1.end(), x);  // first entry >= x
    if (it == r1.begin()) throw LogicError("no row-1 entry below extracted value");
    --it;
    int expelled = *it;
    *it = x;
    check_columns();
    return expelled;
  }

  /// Row insertion; returns the row whose length grew.
  int insert(int value) {
    auto& r1 = rows_[0];
    auto it = std::upper_bound(r1.begin(), r1.end(), value);
    if (it == r1.end()) {
      r1.push_back(value);
      return 1;
    }
    int bumped = *it;
    *it = value;
    auto& r2 = rows_[1];
    auto it2 = std::upper_bound(r2.begin(), r2.end(), bumped);
    if (it2 != r2.end()) throw std::invalid_argument("not 3-noncrossing: insertion needs a third row");
    r2.push_back(bumped);
    check_columns();
    return 2;
  }

  /// Removes `value` if it is the largest entry; returns its row or 0.
  int remove_max(int value) {
    for (int row : {1, 2}) {
      auto& r = rows_[static_cast<std::size_t>(row - 1)];
      if (!r.empty() && r.back() == value) {
        r.pop_back();
        if (rows_[1].size() > rows_[0].size()) throw LogicError("deleted entry was not at a corner");
        return row;
      }
    }
    return 0;
  }

  bool empty() const { return rows_[0].empty() && rows_[1].empty(); }
  Shape shape() const { return {static_cast<int>(rows_[0].size()), static_cast<int>(rows_[1].size())}; }

 private:
  void check_columns() const {
    for (std::size_t k = 0; k < rows_[1].size(); ++k)
      if (rows_[1][k] <= rows_[0][k]) throw LogicError("column order violated");
  }

  std::vector<int> rows_[2];
};

}  // namespace detail

/// Forward direction of the insertion bijection: the removal at the first
/// step of vertex v expels m and records arc (m, v); the addition at its
/// second step stores v.
inline SetPartition tableau_to_partition(const VacillatingTableau& t) {
  detail::require_valid(t, Flavor::partition);
  const int n = t.vertex_count();
  if (n == 0) throw std::invalid_argument("partition tableau needs at least one vertex");
  detail::TwoRowFilling filling;
  std::vector<Arc> arcs;
  for (int v = 1; v <= n; ++v) {
    Move closing = t.move(2 * static_cast<std::size_t>(v) - 1);
    Move opening = t.move(2 * static_cast<std::size_t>(v));
    if (is_remove(closing)) arcs.push_back({filling.extract(move_row(closing)), v});
    if (is_add(opening)) filling.place(move_row(opening), v);
    if (!(filling.shape() == t.shapes[2 * static_cast<std::size_t>(v)])) throw LogicError("filling diverged from shape");
  }
  if (!filling.empty()) throw LogicError("filling not empty after last vertex");
  std::sort(arcs.begin(), arcs.end());
  SetPartition p = SetPartition::from_arcs(n, arcs);
  if (canonical_arcs(p) != arcs) throw LogicError("recorded arcs are not a standard representation");
  return p;
}

/// Inverse direction, built right to left. Throws std::invalid_argument if
/// the partition contains a 3-crossing.
inline VacillatingTableau partition_to_tableau(const SetPartition& p) {
  const int n = p.n();
  std::vector<int> left_of(static_cast<std::size_t>(n) + 1, 0);  // arc (left_of[v], v)
  for (const Arc& a : canonical_arcs(p)) left_of[static_cast<std::size_t>(a.right)] = a.left;

  std::vector<Move> moves(2 * static_cast<std::size_t>(n), Move::nothing);
  detail::TwoRowFilling filling;
  for (int v = n; v >= 1; --v) {
    if (int row = filling.remove_max(v))
      moves[2 * static_cast<std::size_t>(v) - 1] = row == 1 ? Move::add_row1 : Move::add_row2;
    if (int m = left_of[static_cast<std::size_t>(v)]) {
      int row = filling.insert(m);
      moves[2 * static_cast<std::size_t>(v) - 2] = row == 1 ? Move::remove_row1 : Move::remove_row2;
    }
  }
  if (!filling.empty()) throw LogicError("filling not empty after first vertex");
  return VacillatingTableau::from_moves(Flavor::partition, moves);
}

/// Braid flavor: the first step of vertex v stores v, the second expels m
/// and records arc (m, v). m == v is a loop.
inline Braid braid_tableau_to_braid(const VacillatingTableau& t) {
  detail::require_valid(t, Flavor::braid);
  const int n = t.vertex_count();
  detail::TwoRowFilling filling;
  Braid braid{n, {}};
  for (int v = 1; v <= n; ++v) {
    Move opening = t.move(2 * static_cast<std::size_t>(v) - 1);
    Move closing = t.move(2 * static_cast<std::size_t>(v));
    if (is_add(opening)) filling.place(move_row(opening), v);
    if (is_remove(closing)) braid.arcs.push_back({filling.extract(move_row(closing)), v});
  }
  if (!filling.empty()) throw LogicError("filling not empty after last vertex");
  std::sort(braid.arcs.begin(), braid.arcs.end());
  return braid;
}

/// Partition walk over [n] to braid walk over [n-1]: the first and last
/// moves are always `nothing` and are dropped; braid vertex i receives the
/// second move of partition vertex i and the first move of vertex i+1.
inline VacillatingTableau theta_forward(const VacillatingTableau& t) {
  detail::require_valid(t, Flavor::partition);
  if (t.vertex_count() < 1) throw std::invalid_argument("partition tableau needs at least one vertex");
  if (t.move(1) != Move::nothing || t.move(t.shapes.size() - 1) != Move::nothing)
    throw LogicError("partition walk must start and end with a stay");
  return VacillatingTableau{Flavor::braid, std::vector<Shape>(t.shapes.begin() + 1, t.shapes.end() - 1)};
}

inline VacillatingTableau theta_inverse(const VacillatingTableau& t) {
  detail::require_valid(t, Flavor::braid);
  VacillatingTableau out{Flavor::partition, {}};
  out.shapes.reserve(t.shapes.size() + 2);
  out.shapes.push_back(Shape{});
  out.shapes.insert(out.shapes.end(), t.shapes.begin(), t.shapes.end());
  out.shapes.push_back(Shape{});
  return out;
}

/// True iff some braid vertex performs (+row1, -row1), i.e. carries a loop.
inline bool has_loop_pair(const VacillatingTableau& braid_walk) {
  for (int v = 1; v <= braid_walk.vertex_count(); ++v)
    if (braid_walk.move(2 * static_cast<std::size_t>(v) - 1) == Move::add_row1 &&
        braid_walk.move(2 * static_cast<std::size_t>(v)) == Move::remove_row1)
      return true;
  return false;
}

// Serialization: one `row1.row2` token per shape.

inline std::string format_tableau(const VacillatingTableau& t) {
  std::string out;
  for (const Shape& s : t.shapes) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s.row1) + '.' + std::to_string(s.row2);
  }
  return out;
}

inline VacillatingTableau parse_tableau(std::string_view text, Flavor flavor) {
  VacillatingTableau t{flavor, {}};
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    int v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') v = v * 10 + (text[pos++] - '0');
    if (pos == start) throw ParseError("expected a row length", start);
    return v;
  };
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    Shape s;
    s.row1 = read_int();
    if (pos >= text.size() || text[pos] != '.') throw ParseError("expected '.' between row lengths", pos);
    ++pos;
    s.row2 = read_int();
    t.shapes.push_back(s);
  }
  if (t.shapes.empty()) throw ParseError("empty tableau", 0);
  return t;
}

inline std::vector<WalkPoint> walk_points(const VacillatingTableau& t) {
  std::vector<WalkPoint> out;
  out.reserve(t.shapes.size());
  for (const Shape& s : t.shapes) out.push_back(WalkPoint::of(s));
  return out;
}

}  // namespace ncpart
