#pragma once

// Exact walk counts behind both samplers.
//
//   a(s,i,j)   walks of length s from (1,0) in the quarter plane whose odd
//              steps are in {-e1,-e2,0} and even steps in {+e1,+e2,0}
//   w(s,i,j)   the same walks confined to the chamber i > j >= 0; obtained by
//              reflection, w(s,i,j) = a(s,i,j) - a(s,j,i)
//   f(l,i,j)   a(2l+1,i,j), the coefficients of the kernel series; computed
//              either directly or from the kernel equation
//   s*(s,i,j)  chamber walks with odd steps in {+e1,+e2,0}, even steps in
//              {-e1,-e2,0} and no vertex pair (+e1,-e1)
//
// Memory: every table is O(n^3) BigCount cells. At the default cap n = 256
// an omega table holds ~2.9M cells of up to ~250 decimal digits, about
// 400 MB resident; n = 128 needs about a tenth of that.

#include "ncpart/bigint.hpp"
#include "ncpart/count_table.hpp"
#include "ncpart/errors.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

inline constexpr int kDefaultMaxN = 256;

struct BuildLimits {
  int max_n = kDefaultMaxN;
  bool allow_large = false;

  void check(int n) const {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > max_n && !allow_large)
      throw CapError("n=" + std::to_string(n) + " exceeds the table cap of " + std::to_string(max_n) +
                     "; pass --allow-large to override");
  }
};

namespace detail {

using Step = std::array<int, 2>;
inline constexpr std::array<Step, 3> kRemoveSteps{{{0, 0}, {-1, 0}, {0, -1}}};
inline constexpr std::array<Step, 3> kAddSteps{{{0, 0}, {1, 0}, {0, 1}}};

/// Square scratch grid, zero outside.
class Grid {
 public:
  explicit Grid(int extent) : extent_(extent), cells_(static_cast<std::size_t>(extent) * static_cast<std::size_t>(extent)) {}

  int extent() const { return extent_; }
  bool inside(int i, int j) const { return i >= 0 && j >= 0 && i < extent_ && j < extent_; }
  const BigCount& at(int i, int j) const {
    static const BigCount zero = 0;
    return inside(i, j) ? cells_[static_cast<std::size_t>(i * extent_ + j)] : zero;
  }
  BigCount& ref(int i, int j) { return cells_[static_cast<std::size_t>(i * extent_ + j)]; }

 private:
  int extent_;
  std::vector<BigCount> cells_;
};

/// One layer of the quarter-plane recursion: layer s from layer s-1.
inline Grid next_quarter_plane_layer(const Grid& prev, int s) {
  Grid cur(2 + s / 2);
  const auto& steps = s % 2 == 1 ? kRemoveSteps : kAddSteps;
  for (int i = 0; i < cur.extent(); ++i)
    for (int j = 0; j < cur.extent(); ++j) {
      BigCount v = 0;
      for (auto [di, dj] : steps) v += prev.at(i - di, j - dj);
      cur.ref(i, j) = std::move(v);
    }
  return cur;
}

inline Grid initial_quarter_plane_layer() {
  Grid g(2);
  g.ref(1, 0) = 1;
  return g;
}

inline BigCount reflect(const BigCount& direct, const BigCount& mirrored, int s, int i, int j) {
  BigCount w = direct - mirrored;
  if (w < 0)
    throw LogicError("reflection produced a negative chamber count at (" + std::to_string(s) + "," +
                     std::to_string(i) + "," + std::to_string(j) + ")");
  return w;
}

}  // namespace detail

/// First cell (s,i,j) where two tables of equal shape disagree.
inline std::optional<std::array<int, 3>> first_difference(const CountTable& x, const CountTable& y) {
  const int layers = std::max(x.layer_count(), y.layer_count());
  for (int s = 0; s < layers; ++s) {
    const int e = std::max(s < x.layer_count() ? x.extent(s) : 0, s < y.layer_count() ? y.extent(s) : 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j)
        if (x.at(s, i, j) != y.at(s, i, j)) return std::array<int, 3>{s, i, j};
  }
  return std::nullopt;
}

/// Throws LogicError naming the first differing cell.
inline void require_equal_tables(const CountTable& x, const CountTable& y, std::string_view what) {
  if (auto d = first_difference(x, y))
    throw LogicError(std::string(what) + " disagree at (" + std::to_string((*d)[0]) + "," + std::to_string((*d)[1]) +
                     "," + std::to_string((*d)[2]) + ")");
}

// ---------------------------------------------------------------------------
// Quarter plane and chamber

inline CountTable build_q2_table(int n, const BuildLimits& limits = {}) {
  limits.check(n);
  CountTable a(TableKind::quarter_plane, n);
  detail::Grid layer = detail::initial_quarter_plane_layer();
  a.set(0, 1, 0, 1);
  for (int s = 1; s <= 2 * n; ++s) {
    layer = detail::next_quarter_plane_layer(layer, s);
    for (int i = 0; i < layer.extent(); ++i)
      for (int j = 0; j < layer.extent(); ++j) a.set(s, i, j, layer.at(i, j));
  }
  return a;
}

inline CountTable build_omega_table(const CountTable& a) {
  if (a.kind() != TableKind::quarter_plane) throw std::invalid_argument("omega needs a quarter-plane table");
  CountTable w(TableKind::omega, a.n());
  for (int s = 0; s < a.layer_count(); ++s)
    for (int i = 0; i < w.extent(s); ++i)
      for (int j = 0; j < i; ++j) w.set(s, i, j, detail::reflect(a.at(s, i, j), a.at(s, j, i), s, i, j));
  return w;
}

/// Same result as build_omega_table(build_q2_table(n)) while holding only
/// one quarter-plane layer at a time.
inline CountTable build_omega_table(int n, const BuildLimits& limits = {}) {
  limits.check(n);
  CountTable w(TableKind::omega, n);
  detail::Grid layer = detail::initial_quarter_plane_layer();
  w.set(0, 1, 0, 1);
  for (int s = 1; s <= 2 * n; ++s) {
    layer = detail::next_quarter_plane_layer(layer, s);
    for (int i = 0; i < w.extent(s); ++i)
      for (int j = 0; j < i; ++j) w.set(s, i, j, detail::reflect(layer.at(i, j), layer.at(j, i), s, i, j));
  }
  return w;
}

/// w(2n,1,0), the number of 3-noncrossing partitions of [n], in O(n^2) memory.
inline BigCount count_noncrossing_partitions(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  detail::Grid layer = detail::initial_quarter_plane_layer();
  for (int s = 1; s <= 2 * n; ++s) layer = detail::next_quarter_plane_layer(layer, s);
  return detail::reflect(layer.at(1, 0), layer.at(0, 1), 2 * n, 1, 0);
}

// ---------------------------------------------------------------------------
// Kernel coefficients

enum class FMethod { direct, kernel_recursion };

inline CountTable build_f_table(const CountTable& a) {
  if (a.kind() != TableKind::quarter_plane) throw std::invalid_argument("f needs a quarter-plane table");
  CountTable f(TableKind::f_kernel, a.n());
  for (int l = 0; l < f.layer_count(); ++l)
    for (int i = 0; i < f.extent(l); ++i)
      for (int j = 0; j < f.extent(l); ++j) f.set(l, i, j, a.at(2 * l + 1, i, j));
  return f;
}

/// [x^0 t^s] x^ell Y0^m for the kernel root Y0, by Lagrange inversion:
///   (m/s) * sum_j C(s,j) C(s,j+m) C(2j+m, j-ell).
/// The m/s factor is applied to the whole sum, which must be divisible.
inline BigSigned lagrange_coeff(long ell, long m, long s, Binomials& binom) {
  if (s < 1) throw std::invalid_argument("lagrange_coeff needs s >= 1");
  if (m < 0) throw std::invalid_argument("lagrange_coeff needs m >= 0");
  if (m == 0) return 0;
  BigSigned sum = 0;
  for (long j = 0; j + m <= s; ++j) {
    const BigCount& c3 = binom(2 * j + m, j - ell);
    if (c3 == 0) continue;
    sum += binom(s, j) * binom(s, j + m) * c3;
  }
  BigSigned numerator = sum * m;
  if (numerator % s != 0)
    throw LogicError("Lagrange coefficient not integral for ell=" + std::to_string(ell) + " m=" + std::to_string(m) +
                     " s=" + std::to_string(s));
  return numerator / s;
}

inline BigSigned lagrange_coeff(long ell, long m, long s) {
  Binomials binom;
  return lagrange_coeff(ell, m, s, binom);
}

enum class Axis { horizontal, vertical };

/// [x^i t^l] H(x;t) (horizontal) or [y^j t^l] V(y;t) (vertical): counts of
/// even quarter-plane walks of length 2l ending on an axis, extracted from
///   xH(x) + x^-1 V(x^-1) = x^2 + (x^-2 + x + x^2) Y0 + (x^-3 - x^-1) Y0^2 - x^-2 Y0^3.
inline BigCount axis_coeff(Axis axis, int index, int ell, Binomials& binom) {
  if (index < 0 || ell < 0) throw std::invalid_argument("axis_coeff needs nonnegative arguments");
  struct Monomial {
    int x_power;
    int y_power;
    int sign;
  };
  static constexpr std::array<Monomial, 7> kTerms{{
      {2, 0, 1}, {-2, 1, 1}, {1, 1, 1}, {2, 1, 1}, {-3, 2, 1}, {-1, 2, -1}, {-2, 3, -1}}};
  const int shift = axis == Axis::horizontal ? -index - 1 : index + 1;
  BigSigned total = 0;
  for (const auto& term : kTerms) {
    const int power = term.x_power + shift;
    if (term.y_power == 0) {
      if (ell == 0 && power == 0) total += term.sign;
      continue;
    }
    if (ell == 0) continue;  // Y0 = O(t)
    BigSigned c = lagrange_coeff(power, term.y_power, ell, binom);
    if (term.sign > 0)
      total += c;
    else
      total -= c;
  }
  if (total < 0)
    throw LogicError("negative axis coefficient at index " + std::to_string(index) + ", l=" + std::to_string(ell));
  return total;
}

inline BigCount axis_coeff(Axis axis, int index, int ell) {
  Binomials binom;
  return axis_coeff(axis, index, ell, binom);
}

/// f(l,i,0) or f(l,0,j) as an alternating sum of axis coefficients at t^(l+1).
inline BigCount f_boundary(int i, int j, int ell, Binomials& binom) {
  if (i < 0 || j < 0 || ell < 0) throw std::invalid_argument("f_boundary needs nonnegative arguments");
  if (i != 0 && j != 0) throw std::invalid_argument("f_boundary needs i == 0 or j == 0");
  const Axis axis = j == 0 ? Axis::horizontal : Axis::vertical;
  const int index = j == 0 ? i : j;
  BigSigned total = 0;
  for (int k = 0; k <= index; ++k) {
    BigCount c = axis_coeff(axis, k, ell + 1, binom);
    if ((index - k) % 2 == 0)
      total += c;
    else
      total -= c;
  }
  if (total < 0) throw LogicError("negative boundary coefficient");
  return total;
}

inline BigCount f_boundary(int i, int j, int ell) {
  Binomials binom;
  return f_boundary(i, j, ell, binom);
}

namespace detail {

/// Kernel route: axis cells from Lagrange inversion, interior cells from
///   f(l,i,j) = 3 f(l-1,i,j) + f(l-1,i-1,j) + f(l-1,i,j-1) + f(l-1,i+1,j)
///            + f(l-1,i+1,j-1) + f(l-1,i,j+1) + f(l-1,i-1,j+1).
inline CountTable build_f_table_kernel(int n) {
  CountTable f(TableKind::f_kernel, n);
  if (n == 0) return f;
  f.set(0, 0, 0, 1);  // the single step -e1 from (1,0)
  f.set(0, 1, 0, 1);  // the single stay
  Binomials binom;
  for (int l = 1; l < n; ++l) {
    const int e = f.extent(l);
    // Boundary by telescoping: f(l,i,0) = [x^i t^(l+1)]H - f(l,i-1,0).
    BigSigned prev = 0;
    for (int i = 0; i < e; ++i) {
      BigSigned v = BigSigned(axis_coeff(Axis::horizontal, i, l + 1, binom)) - prev;
      if (v < 0) throw LogicError("kernel route produced a negative axis cell");
      f.set(l, i, 0, v);
      prev = v;
    }
    prev = f.at(l, 0, 0);
    for (int j = 1; j < e; ++j) {
      BigSigned v = BigSigned(axis_coeff(Axis::vertical, j, l + 1, binom)) - prev;
      if (v < 0) throw LogicError("kernel route produced a negative axis cell");
      f.set(l, 0, j, v);
      prev = v;
    }
    for (int i = 1; i < e; ++i)
      for (int j = 1; j < e; ++j) {
        BigCount v = 3 * f.at(l - 1, i, j);
        v += f.at(l - 1, i - 1, j);
        v += f.at(l - 1, i, j - 1);
        v += f.at(l - 1, i + 1, j);
        v += f.at(l - 1, i + 1, j - 1);
        v += f.at(l - 1, i, j + 1);
        v += f.at(l - 1, i - 1, j + 1);
        f.set(l, i, j, std::move(v));
      }
  }
  return f;
}

}  // namespace detail

inline CountTable build_f_table(int n, FMethod method, const BuildLimits& limits = {}) {
  limits.check(n);
  if (method == FMethod::direct) return build_f_table(build_q2_table(n, limits));
  return detail::build_f_table_kernel(n);
}

// ---------------------------------------------------------------------------
// Loop-free braid walks

enum class SigmaMethod { inclusion_exclusion, direct_dp };

namespace detail {

inline bool in_chamber(int i, int j) { return i > j && j >= 0; }

/// Odd layer 2l+1 from even layer 2l: one add step, no constraint yet.
inline void sigma_odd_layer(CountTable& t, int s) {
  for (int i = 0; i < t.extent(s); ++i)
    for (int j = 0; j < i; ++j) {
      BigCount v = 0;
      for (auto [di, dj] : kAddSteps) v += t.at(s - 1, i - di, j - dj);
      t.set(s, i, j, std::move(v));
    }
}

}  // namespace detail

/// Inclusion-exclusion over marked (+e1,-e1) pairs:
///   s*(2l,i,j) = sum_h (-1)^h C(l,h) w(2(l-h)+1, i, j),
/// odd layers from the preceding even layer. Needs w up to step 2n+1.
inline CountTable build_sigma_star(int n, const CountTable& omega) {
  if (omega.kind() != TableKind::omega) throw std::invalid_argument("sigma_star needs an omega table");
  if (omega.layer_count() < 2 * n + 2) throw std::invalid_argument("omega table too small: need steps up to 2n+1");
  CountTable t(TableKind::sigma_star, n);
  Binomials binom;
  for (int l = 0; l <= n; ++l) {
    const int s = 2 * l;
    for (int i = 0; i < t.extent(s); ++i)
      for (int j = 0; j < i; ++j) {
        BigSigned v = 0;
        for (int h = 0; h <= l; ++h) {
          const BigCount& w = omega.at(2 * (l - h) + 1, i, j);
          if (w == 0) continue;
          BigSigned term = binom(l, h) * w;
          if (h % 2 == 0)
            v += term;
          else
            v -= term;
        }
        if (v < 0) throw LogicError("inclusion-exclusion produced a negative count");
        t.set(s, i, j, v);
      }
    if (s + 1 <= 2 * n) detail::sigma_odd_layer(t, s + 1);
  }
  return t;
}

namespace detail {

/// Direct stepping of the constrained walk. Odd-layer states carry one bit,
/// "the last odd step was +e1", which forbids a following -e1.
inline CountTable build_sigma_star_dp(int n) {
  CountTable t(TableKind::sigma_star, n);
  t.set(0, 1, 0, 1);
  for (int l = 0; l < n; ++l) {
    const int even = 2 * l;
    const int odd = even + 1;
    Grid total(t.extent(odd));
    Grid flagged(t.extent(odd));
    for (int i = 0; i < t.extent(even); ++i)
      for (int j = 0; j < i; ++j) {
        const BigCount& c = t.at(even, i, j);
        if (c == 0) continue;
        for (auto [di, dj] : kAddSteps) {
          const int qi = i + di, qj = j + dj;
          if (!in_chamber(qi, qj)) continue;
          total.ref(qi, qj) += c;
          if (di == 1) flagged.ref(qi, qj) += c;
        }
      }
    for (int i = 0; i < total.extent(); ++i)
      for (int j = 0; j < i; ++j) t.set(odd, i, j, total.at(i, j));

    Grid next(t.extent(odd + 1));
    for (int i = 0; i < total.extent(); ++i)
      for (int j = 0; j < i; ++j) {
        const BigCount& all = total.at(i, j);
        if (all == 0) continue;
        BigCount unflagged = all - flagged.at(i, j);
        for (auto [di, dj] : kRemoveSteps) {
          const int ri = i + di, rj = j + dj;
          if (!in_chamber(ri, rj)) continue;
          next.ref(ri, rj) += di == -1 ? unflagged : all;
        }
      }
    for (int i = 0; i < next.extent(); ++i)
      for (int j = 0; j < i; ++j) t.set(odd + 1, i, j, next.at(i, j));
  }
  return t;
}

}  // namespace detail

inline CountTable build_sigma_star(int n, SigmaMethod method, const BuildLimits& limits = {}) {
  limits.check(n);
  if (method == SigmaMethod::direct_dp) return detail::build_sigma_star_dp(n);
  return build_sigma_star(n, build_omega_table(n + 1, BuildLimits{n + 1, false}));
}

/// s*(2(n-1),1,0), the number of 2-regular 3-noncrossing partitions of [n],
/// by inclusion-exclusion over w(2k+1,1,0) in O(n^2) memory.
inline BigCount count_two_regular_partitions(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int m = n - 1;
  std::vector<BigCount> odd_omega;  // w(2k+1,1,0), k = 0..m
  detail::Grid layer = detail::initial_quarter_plane_layer();
  for (int s = 1; s <= 2 * m + 1; ++s) {
    layer = detail::next_quarter_plane_layer(layer, s);
    if (s % 2 == 1) odd_omega.push_back(detail::reflect(layer.at(1, 0), layer.at(0, 1), s, 1, 0));
  }
  Binomials binom;
  BigSigned v = 0;
  for (int h = 0; h <= m; ++h) {
    BigSigned term = binom(m, h) * odd_omega[static_cast<std::size_t>(m - h)];
    if (h % 2 == 0)
      v += term;
    else
      v -= term;
  }
  if (v < 0) throw LogicError("inclusion-exclusion produced a negative count");
  return v;
}

}  // namespace ncpart
