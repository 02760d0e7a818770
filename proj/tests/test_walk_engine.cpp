#include "ncpart/verify.hpp"
#include "ncpart/walk_engine.hpp"

#include <gtest/gtest.h>

using namespace ncpart;

namespace {

// Suffixes of B*-walks: length-L walks from (a,b) to (1,0), counted by
// depth-first search from the start point.
std::uint64_t b_star_suffixes(int a, int b, int length) {
  auto rec = [&](auto&& self, int step, int x, int y, bool plus_e1) -> std::uint64_t {
    if (step == length) return x == 1 && y == 0;
    const int next = step + 1;
    const int sign = next % 2 == 1 ? 1 : -1;
    std::uint64_t total = 0;
    for (auto [dx, dy] : {std::pair{0, 0}, std::pair{sign, 0}, std::pair{0, sign}}) {
      const int nx = x + dx, ny = y + dy;
      if (!(nx > ny && ny >= 0)) continue;
      if (next % 2 == 0 && plus_e1 && dx == -1) continue;
      total += self(self, next, nx, ny, next % 2 == 1 && dx == 1);
    }
    return total;
  };
  return rec(rec, 0, a, b, false);
}

}  // namespace

TEST(QuarterPlane, Examples) {
  CountTable a = build_q2_table(3);
  EXPECT_EQ(a.at(0, 1, 0), 1);
  EXPECT_EQ(a.at(0, 0, 0), 0);
  EXPECT_EQ(a.at(2, 1, 0), 2);
  EXPECT_EQ(a.at(3, 0, 0), 4);
  EXPECT_EQ(a.at(3, 0, 0), enumerate_walks(WalkKind::p_q2, 3, {0, 0}));
}

TEST(QuarterPlane, EvenColumnIdentity) {
  CountTable a = build_q2_table(10);
  for (int l = 1; l <= 10; ++l)
    for (int i = 0; i < a.extent(2 * l); ++i)
      for (int j = 0; j < a.extent(2 * l); ++j)
        EXPECT_EQ(a.at(2 * l, i, j), a.at(2 * l - 1, i - 1, j) + a.at(2 * l - 1, i, j - 1) + a.at(2 * l - 1, i, j));
}

TEST(QuarterPlane, ReflectionNonnegative) {
  CountTable a = build_q2_table(12);
  for (int s = 0; s < a.layer_count(); ++s)
    for (int i = 0; i < a.extent(s); ++i)
      for (int j = 0; j < i; ++j) EXPECT_GE(a.at(s, i, j), a.at(s, j, i));
}

TEST(Omega, Examples) {
  CountTable w = build_omega_table(6);
  EXPECT_EQ(w.at(0, 1, 0), 1);
  EXPECT_EQ(w.at(3, 1, 0), 2);
  EXPECT_EQ(w.at(12, 1, 0), 202);
}

TEST(Omega, StreamingMatchesReflectionOfQuarterPlane) {
  EXPECT_EQ(build_omega_table(15), build_omega_table(build_q2_table(15)));
}

TEST(Omega, CountsMatchEnumeration) {
  CountTable w = build_omega_table(9);
  for (int n = 1; n <= 9; ++n) {
    const auto oracle = enumerate_partitions(n, PartitionFilter::noncrossing3).size();
    EXPECT_EQ(w.at(2 * n, 1, 0), oracle);
    EXPECT_EQ(count_noncrossing_partitions(n), oracle);
  }
}

TEST(Omega, KnownSequence) {
  const int expected[] = {1, 2, 5, 15, 52, 202, 859, 3930, 19095};
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(count_noncrossing_partitions(n), expected[n - 1]);
}

TEST(Omega, ReconstructionFromF) {
  const int n = 12;
  CountTable w = build_omega_table(n);
  CountTable f = build_f_table(n, FMethod::direct);
  for (int l = 0; l < f.layer_count(); ++l)
    for (int i = 0; i < w.extent(2 * l + 2); ++i)
      for (int j = 0; j < i; ++j) {
        EXPECT_EQ(w.at(2 * l + 1, i, j), f.at(l, i, j) - f.at(l, j, i));
        BigSigned even = f.at(l, i, j) + f.at(l, i - 1, j) + f.at(l, i, j - 1) - f.at(l, j, i) - f.at(l, j - 1, i) -
                         f.at(l, j, i - 1);
        EXPECT_EQ(w.at(2 * l + 2, i, j), even) << l << ' ' << i << ' ' << j;
      }
}

TEST(FTable, LevelZero) {
  CountTable f = build_f_table(3, FMethod::kernel_recursion);
  EXPECT_EQ(f.at(0, 1, 0), 1);
  EXPECT_EQ(f.at(0, 0, 0), 1);
  EXPECT_EQ(f.at(0, 2, 0), 0);
  EXPECT_EQ(f.at(1, 0, 0), 4);
}

TEST(FTable, RoutesAgree) {
  for (int n = 1; n <= 20; ++n)
    EXPECT_EQ(build_f_table(n, FMethod::direct), build_f_table(n, FMethod::kernel_recursion)) << n;
}

TEST(FTable, DirectIsOddQuarterPlaneLayers) {
  CountTable a = build_q2_table(8);
  CountTable f = build_f_table(a);
  for (int l = 0; l < f.layer_count(); ++l)
    for (int i = 0; i < f.extent(l); ++i)
      for (int j = 0; j < f.extent(l); ++j) EXPECT_EQ(f.at(l, i, j), a.at(2 * l + 1, i, j));
}

TEST(FTable, NonzeroBeyondL) {
  CountTable f = build_f_table(4, FMethod::direct);
  for (int l = 0; l < 4; ++l) EXPECT_EQ(f.at(l, l + 1, 0), 1);
}

TEST(Lagrange, Examples) {
  EXPECT_EQ(lagrange_coeff(0, 0, 1), 0);
  EXPECT_EQ(lagrange_coeff(5, 0, 1), 0);
  EXPECT_EQ(lagrange_coeff(0, 1, 1), 1);
  EXPECT_EQ(lagrange_coeff(-1, 1, 1), 1);
}

TEST(Lagrange, MatchesSeriesIteration) {
  // Y0 from the fixed point x*Y = t(1+x+Y)(x+Y+xY), as a polynomial in
  // t with Laurent coefficients in x, truncated at t^S.
  constexpr int S = 6, X = 3 * S + 4;  // x exponents in [-X, X]
  using Poly = std::vector<std::vector<BigSigned>>;  // [t][x + X]
  auto zero = [] { return Poly(S + 1, std::vector<BigSigned>(2 * X + 1)); };
  auto mul = [&](const Poly& p, const Poly& q) {
    Poly r = zero();
    for (int a = 0; a <= S; ++a)
      for (int b = 0; a + b <= S; ++b)
        for (int u = 0; u <= 2 * X; ++u)
          if (p[a][u] != 0)
            for (int v = 0; v <= 2 * X; ++v)
              if (q[b][v] != 0 && u + v - X >= 0 && u + v - X <= 2 * X) r[a + b][u + v - X] += p[a][u] * q[b][v];
    return r;
  };
  auto mono = [&](int t, int x) {
    Poly p = zero();
    p[t][x + X] = 1;
    return p;
  };
  auto add = [&](Poly p, const Poly& q) {
    for (int a = 0; a <= S; ++a)
      for (int u = 0; u <= 2 * X; ++u) p[a][u] += q[a][u];
    return p;
  };
  Poly y = zero();
  for (int it = 0; it < S; ++it) {
    Poly xy = mul(mono(0, 1), y);
    Poly rhs = mul(mono(1, -1), mul(add(add(mono(0, 0), mono(0, 1)), y), add(add(mono(0, 1), y), xy)));
    y = rhs;
  }
  Poly power = mono(0, 0);
  for (int m = 1; m <= 3; ++m) {
    power = mul(power, y);
    for (int s = 1; s <= S; ++s)
      for (int ell = -4; ell <= 4; ++ell) {
        // [x^0 t^s] x^ell Y^m = [x^-ell t^s] Y^m
        EXPECT_EQ(lagrange_coeff(ell, m, s), power[s][-ell + X]) << ell << ' ' << m << ' ' << s;
      }
  }
}

TEST(Axis, Examples) {
  EXPECT_EQ(axis_coeff(Axis::horizontal, 1, 0), 1);
  EXPECT_EQ(axis_coeff(Axis::horizontal, 1, 1), 2);
  EXPECT_EQ(axis_coeff(Axis::vertical, 1, 1), 1);
}

TEST(Axis, MatchesQuarterPlane) {
  CountTable a = build_q2_table(15);
  Binomials binom;
  for (int l = 0; l <= 15; ++l)
    for (int i = 0; i <= l + 2; ++i) {
      EXPECT_EQ(axis_coeff(Axis::horizontal, i, l, binom), a.at(2 * l, i, 0)) << i << ' ' << l;
      EXPECT_EQ(axis_coeff(Axis::vertical, i, l, binom), a.at(2 * l, 0, i)) << i << ' ' << l;
    }
}

TEST(FBoundary, Examples) {
  EXPECT_EQ(f_boundary(1, 0, 0), 1);
  EXPECT_EQ(f_boundary(0, 0, 1), 4);
  EXPECT_EQ(f_boundary(2, 0, 1), enumerate_walks(WalkKind::p_q2, 3, {2, 0}));
}

TEST(FBoundary, MatchesDirectTable) {
  CountTable f = build_f_table(12, FMethod::direct);
  for (int l = 0; l < 12; ++l)
    for (int k = 0; k < f.extent(l); ++k) {
      EXPECT_EQ(f_boundary(k, 0, l), f.at(l, k, 0));
      EXPECT_EQ(f_boundary(0, k, l), f.at(l, 0, k));
    }
}

TEST(SigmaStar, Examples) {
  CountTable s = build_sigma_star(4, SigmaMethod::direct_dp);
  EXPECT_EQ(s.at(0, 1, 0), 1);
  EXPECT_EQ(s.at(2, 1, 0), 1);
  EXPECT_EQ(s.at(4, 1, 0), 2);
  EXPECT_EQ(s.at(6, 1, 0), 5);
}

TEST(SigmaStar, RoutesAgree) {
  for (int n = 0; n <= 20; ++n)
    EXPECT_EQ(build_sigma_star(n, SigmaMethod::inclusion_exclusion), build_sigma_star(n, SigmaMethod::direct_dp)) << n;
}

TEST(SigmaStar, CountsMatchEnumeration) {
  CountTable s = build_sigma_star(8, SigmaMethod::direct_dp);
  for (int n = 1; n <= 9; ++n) {
    const auto oracle = enumerate_partitions(n, PartitionFilter::two_regular_noncrossing3).size();
    EXPECT_EQ(s.at(2 * (n - 1), 1, 0), oracle);
    EXPECT_EQ(count_two_regular_partitions(n), oracle);
  }
}

TEST(SigmaStar, MatchesWalkEnumeration) {
  CountTable s = build_sigma_star(6, SigmaMethod::direct_dp);
  for (int len = 0; len <= 12; ++len)
    for (int i = 0; i < s.extent(len); ++i)
      for (int j = 0; j < i; ++j) EXPECT_EQ(s.at(len, i, j), enumerate_walks(WalkKind::b_star_w2, len, {i, j}));
}

TEST(SigmaStar, ReversalSymmetry) {
  CountTable s = build_sigma_star(5, SigmaMethod::direct_dp);
  for (int len = 0; len <= 10; len += 2)
    for (int a = 1; a <= 2 + len / 2; ++a)
      for (int b = 0; b < a; ++b) EXPECT_EQ(s.at(len, a, b), b_star_suffixes(a, b, len)) << len << ' ' << a << ' ' << b;
}

TEST(SigmaStar, IeNeedsLargerOmega) {
  EXPECT_THROW(build_sigma_star(5, build_omega_table(5)), std::invalid_argument);
}

TEST(Limits, CapNamesOverride) {
  try {
    build_omega_table(257);
    FAIL();
  } catch (const CapError& e) {
    EXPECT_NE(std::string(e.what()).find("--allow-large"), std::string::npos);
  }
  EXPECT_NO_THROW(BuildLimits({256, false}).check(256));
  EXPECT_NO_THROW(BuildLimits({256, true}).check(1000));
}

TEST(TableCompare, NamesFirstDifference) {
  CountTable x = build_omega_table(4);
  CountTable y = x;
  y.set(5, 2, 1, y.at(5, 2, 1) + 1);
  auto d = first_difference(x, y);
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (std::array<int, 3>{5, 2, 1}));
  try {
    require_equal_tables(x, y, "omega");
    FAIL();
  } catch (const LogicError& e) {
    EXPECT_NE(std::string(e.what()).find("(5,2,1)"), std::string::npos);
  }
}
