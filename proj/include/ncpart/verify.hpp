#pragma once

// Brute-force oracles and statistical checks.
//
// The enumerators here share nothing with the walk engine or the samplers
// beyond the predicates of core_model: partitions come from restricted
// growth strings and walks from plain depth-first search.

#include "ncpart/bigint.hpp"
#include "ncpart/core_model.hpp"
#include "ncpart/count_table.hpp"
#include "ncpart/errors.hpp"
#include "ncpart/random_stream.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/tableau.hpp"
#include "ncpart/walk_engine.hpp"

#include <boost/math/distributions/normal.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ncpart {

inline constexpr int kMaxEnumeratedPartitions = 12;
inline constexpr int kMaxEnumeratedWalkLength = 24;
inline constexpr int kMaxCrossCheck = 9;

enum class PartitionFilter { all, noncrossing3, two_regular_noncrossing3 };

/// All partitions of [n] passing `filter`, in restricted-growth-string order.
inline std::vector<SetPartition> enumerate_partitions(int n, PartitionFilter filter = PartitionFilter::all) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kMaxEnumeratedPartitions)
    throw CapError("partition enumeration is capped at n=" + std::to_string(kMaxEnumeratedPartitions));
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> b(static_cast<std::size_t>(blocks));
    for (int x = 0; x < n; ++x) b[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
    SetPartition p = SetPartition::from_blocks(n, std::move(b));
    if (filter != PartitionFilter::all && max_mutual_crossing(p) >= 3) return;
    if (filter == PartitionFilter::two_regular_noncrossing3 && !is_m_regular(p, 2)) return;
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      emit();
      return;
    }
    for (int label = 0; label <= used; ++label) {
      rgs[static_cast<std::size_t>(pos)] = label;
      self(self, pos + 1, std::max(used, label + 1));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 1);
  return out;
}

enum class WalkKind {
  p_q2,        // odd steps remove, even steps add; quarter plane
  p_w2,        // same steps; chamber a > b >= 0
  b_w2,        // odd steps add, even steps remove; chamber
  b_star_w2,   // b_w2 without a vertex pair (+e1, -e1)
};

namespace detail {

struct WalkSearch {
  WalkKind kind;
  int length;

  bool allowed(int a, int b) const { return kind == WalkKind::p_q2 ? (a >= 0 && b >= 0) : (a > b && b >= 0); }

  bool adds_at(int step) const {
    const bool odd = step % 2 == 1;
    return (kind == WalkKind::p_q2 || kind == WalkKind::p_w2) ? !odd : odd;
  }

  /// Calls visit(a, b) for the endpoint of every walk; prunes with `reachable`.
  template <class Visit, class Reachable>
  void run(Visit&& visit, Reachable&& reachable) const {
    auto rec = [&](auto&& self, int step, int a, int b, bool last_odd_was_plus_e1) -> void {
      if (!reachable(a, b, length - step)) return;
      if (step == length) {
        visit(a, b);
        return;
      }
      const int next = step + 1;
      const int sign = adds_at(next) ? 1 : -1;
      const int deltas[3][2] = {{0, 0}, {sign, 0}, {0, sign}};
      for (auto& d : deltas) {
        int na = a + d[0], nb = b + d[1];
        if (!allowed(na, nb)) continue;
        bool plus_e1 = d[0] == 1;
        if (kind == WalkKind::b_star_w2 && next % 2 == 0 && last_odd_was_plus_e1 && d[0] == -1) continue;
        self(self, next, na, nb, next % 2 == 1 ? plus_e1 : false);
      }
    };
    rec(rec, 0, 1, 0, false);
  }
};

}  // namespace detail

/// Number of walks of `kind` from (1,0) of the given length ending at `end`.
inline BigCount enumerate_walks(WalkKind kind, int length, WalkPoint end) {
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  if (length > kMaxEnumeratedWalkLength)
    throw CapError("walk enumeration is capped at length " + std::to_string(kMaxEnumeratedWalkLength));
  std::uint64_t count = 0;
  detail::WalkSearch{kind, length}.run([&](int a, int b) { count += (a == end.a && b == end.b); },
                                       [&](int a, int b, int remaining) {
                                         return std::abs(a - end.a) + std::abs(b - end.b) <= remaining;
                                       });
  return count;
}

/// Endpoint tally of every walk of `kind` and the given length.
inline std::map<WalkPoint, std::uint64_t> enumerate_walk_endpoints(WalkKind kind, int length) {
  if (length > kMaxEnumeratedWalkLength)
    throw CapError("walk enumeration is capped at length " + std::to_string(kMaxEnumeratedWalkLength));
  std::map<WalkPoint, std::uint64_t> tally;
  detail::WalkSearch{kind, length}.run([&](int a, int b) { ++tally[WalkPoint{a, b}]; },
                                       [](int, int, int) { return true; });
  return tally;
}

/// Every valid two-row tableau over n vertices of the given flavor.
inline std::vector<VacillatingTableau> enumerate_tableaux(int n, Flavor flavor) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<VacillatingTableau> out;
  VacillatingTableau t{flavor, {Shape{}}};
  const int length = 2 * n;
  auto rec = [&](auto&& self, int step) -> void {
    const Shape cur = t.shapes.back();
    if (cur.row1 > length - step) return;  // cannot return to empty
    if (step == length) {
      if (cur.is_empty()) out.push_back(t);
      return;
    }
    const int next = step + 1;
    const bool adds = (flavor == Flavor::partition) == (next % 2 == 0);
    const std::array<Move, 3> moves = adds ? std::array{Move::nothing, Move::add_row1, Move::add_row2}
                                           : std::array{Move::nothing, Move::remove_row1, Move::remove_row2};
    for (Move m : moves) {
      Shape s = apply_move(cur, m);
      if (!s.is_valid()) continue;
      t.shapes.push_back(s);
      self(self, next);
      t.shapes.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Chi-square uniformity

enum class PBound { pass, fail_low, fail_high };

inline const char* pbound_name(PBound b) {
  switch (b) {
    case PBound::pass: return "pass";
    case PBound::fail_low: return "fail_low";
    case PBound::fail_high: return "fail_high";
  }
  return "?";
}

struct UniformityReport {
  std::size_t universe_size = 0;
  std::uint64_t sample_count = 0;
  double chi_square = 0;
  std::size_t degrees_of_freedom = 0;
  double lower_quantile = 0;
  double upper_quantile = 0;
  PBound p_bound = PBound::pass;
  std::uint64_t min_class_count = 0;

  bool passed() const { return p_bound == PBound::pass; }
};

inline constexpr double kChiSquareLowerTail = 0.0005;
inline constexpr double kChiSquareUpperTail = 0.9995;

/// Wilson-Hilferty approximation of the chi-square quantile.
inline double chi_square_quantile(double p, double dof) {
  const double z = boost::math::quantile(boost::math::normal_distribution<double>(), p);
  const double c = 2.0 / (9.0 * dof);
  return dof * std::pow(1.0 - c + z * std::sqrt(c), 3.0);
}

/// X^2 over the whole universe (unobserved classes included) against the
/// uniform expectation expected_total / |universe|.
inline UniformityReport chi_square_uniformity(const std::map<std::string, std::uint64_t>& counts,
                                              const std::vector<std::string>& universe, std::uint64_t expected_total) {
  if (universe.size() < 2) throw std::invalid_argument("chi-square needs at least two classes");
  std::set<std::string> members(universe.begin(), universe.end());
  for (const auto& [key, count] : counts)
    if (!members.count(key)) throw LogicError("sampled structure " + key + " is outside the universe");

  UniformityReport r;
  r.universe_size = universe.size();
  r.degrees_of_freedom = universe.size() - 1;
  const double expected = static_cast<double>(expected_total) / static_cast<double>(universe.size());
  r.min_class_count = std::numeric_limits<std::uint64_t>::max();
  for (const auto& key : members) {
    auto it = counts.find(key);
    const std::uint64_t observed = it == counts.end() ? 0 : it->second;
    r.sample_count += observed;
    r.min_class_count = std::min(r.min_class_count, observed);
    const double diff = static_cast<double>(observed) - expected;
    r.chi_square += diff * diff / expected;
  }
  r.lower_quantile = chi_square_quantile(kChiSquareLowerTail, static_cast<double>(r.degrees_of_freedom));
  r.upper_quantile = chi_square_quantile(kChiSquareUpperTail, static_cast<double>(r.degrees_of_freedom));
  r.p_bound = r.chi_square < r.lower_quantile   ? PBound::fail_low
              : r.chi_square > r.upper_quantile ? PBound::fail_high
                                                : PBound::pass;
  return r;
}

struct UniformityRun {
  UniformityReport report;
  std::vector<std::uint64_t> seeds;  // one entry per attempt
};

inline std::vector<std::string> universe_keys(Variant variant, int n) {
  std::vector<std::string> keys;
  for (const auto& p : enumerate_partitions(
           n, variant == Variant::plain ? PartitionFilter::noncrossing3 : PartitionFilter::two_regular_noncrossing3))
    keys.push_back(format_partition(p));
  return keys;
}

using DrawFn = std::function<std::string(RandomStream&)>;

/// Draws samples_per_class * |universe| structures and tests them. A
/// failure is retried once with seed + 1; the second verdict is final.
inline UniformityRun uniformity_test(const std::vector<std::string>& universe, const DrawFn& draw,
                                     std::uint64_t samples_per_class, std::uint64_t seed) {
  const std::uint64_t total = samples_per_class * universe.size();
  UniformityRun run;
  for (int attempt = 0; attempt < 2; ++attempt) {
    RandomStream rng(seed + static_cast<std::uint64_t>(attempt));
    run.seeds.push_back(rng.seed());
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t k = 0; k < total; ++k) ++counts[draw(rng)];
    run.report = chi_square_uniformity(counts, universe, total);
    if (run.report.passed()) break;
  }
  return run;
}

inline UniformityRun uniformity_test(const PartitionSampler& sampler, std::uint64_t samples_per_class,
                                     std::uint64_t seed) {
  return uniformity_test(
      universe_keys(sampler.variant(), sampler.n()),
      [&](RandomStream& rng) { return format_partition(sampler(rng)); }, samples_per_class, seed);
}

// ---------------------------------------------------------------------------
// Cross-check suite

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string details;
};

struct CrossCheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  /// `CHECK <name> <pass|fail> <details>`, one line per identity family.
  std::string summary() const {
    std::string out;
    for (const auto& c : checks) out += "CHECK " + c.name + ' ' + (c.pass ? "pass" : "fail") + ' ' + c.details + '\n';
    return out;
  }

  std::string text() const {
    std::string out;
    for (const auto& c : checks)
      out += std::string(c.pass ? "[ ok ] " : "[FAIL] ") + c.name + ": " + c.details + '\n';
    out += all_passed() ? "all identities hold\n" : "identity failures detected\n";
    return out;
  }
};

namespace detail {

inline std::string cell(int s, int i, int j) {
  return "(" + std::to_string(s) + "," + std::to_string(i) + "," + std::to_string(j) + ")";
}

/// Compares every stored cell of `table` for layers < layers against DFS
/// endpoint tallies of the matching walk kind.
inline std::optional<std::string> compare_with_walks(const CountTable& table, WalkKind kind, int layers) {
  for (int s = 0; s < layers; ++s) {
    auto tally = enumerate_walk_endpoints(kind, s);
    for (int i = 0; i < table.extent(s); ++i)
      for (int j = 0; j < table.extent(s); ++j) {
        if (!table.stores(s, i, j)) continue;
        auto it = tally.find(WalkPoint{i, j});
        BigCount expected = it == tally.end() ? 0 : it->second;
        if (table.at(s, i, j) != expected)
          return std::string(kind_token(table.kind())) + cell(s, i, j) + " table=" + table.at(s, i, j).str() +
                 " enumerated=" + expected.str();
      }
    for (const auto& [p, count] : tally)
      if (!table.stores(s, p.a, p.b))
        return std::string(kind_token(table.kind())) + cell(s, p.a, p.b) + " reachable but not stored";
  }
  return std::nullopt;
}

}  // namespace detail

using TableFault = std::function<void(CountTable&)>;

/// Runs every identity family for n = 1..n_max. `fault`, if set, mutates the
/// omega table before any check reads it.
inline CrossCheckReport cross_check_suite(int n_max, const TableFault& fault = {}) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  if (n_max > kMaxCrossCheck) throw CapError("cross-check suite is capped at n_max=" + std::to_string(kMaxCrossCheck));
  CrossCheckReport report;
  auto run = [&](const std::string& name, auto&& body) {
    CheckResult r{name, true, ""};
    try {
      r.details = body();
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = e.what();
    }
    report.checks.push_back(std::move(r));
  };
  auto fail = [](const std::string& what) -> std::string { throw LogicError(what); };

  CountTable omega = build_omega_table(n_max + 1);
  if (fault) fault(omega);

  run("partition_count", [&] {
    for (int n = 1; n <= n_max; ++n) {
      const auto expected = enumerate_partitions(n, PartitionFilter::noncrossing3).size();
      if (omega.at(2 * n, 1, 0) != expected)
        fail("n=" + std::to_string(n) + " w" + detail::cell(2 * n, 1, 0) + "=" + omega.at(2 * n, 1, 0).str() +
             " enumerated=" + std::to_string(expected));
    }
    return "w(2n,1,0) = |P3(n)| for n <= " + std::to_string(n_max);
  });

  run("two_regular_count", [&] {
    CountTable sigma = build_sigma_star(n_max - 1, omega);
    for (int n = 1; n <= n_max; ++n) {
      const auto expected = enumerate_partitions(n, PartitionFilter::two_regular_noncrossing3).size();
      if (sigma.at(2 * (n - 1), 1, 0) != expected)
        fail("n=" + std::to_string(n) + " s*" + detail::cell(2 * (n - 1), 1, 0) + "=" +
             sigma.at(2 * (n - 1), 1, 0).str() + " enumerated=" + std::to_string(expected));
    }
    return "s*(2(n-1),1,0) = |P3,2(n)| for n <= " + std::to_string(n_max);
  });

  run("tableau_round_trip", [&] {
    std::size_t checked = 0;
    for (int n = 1; n <= n_max; ++n) {
      std::set<SetPartition> images;
      for (const auto& t : enumerate_tableaux(n, Flavor::partition)) {
        SetPartition p = tableau_to_partition(t);
        if (!(partition_to_tableau(p) == t)) fail("tableau " + format_tableau(t) + " does not round trip");
        images.insert(std::move(p));
      }
      auto expected = enumerate_partitions(n, PartitionFilter::noncrossing3);
      if (images != std::set<SetPartition>(expected.begin(), expected.end()))
        fail("tableaux over [" + std::to_string(n) + "] do not map onto P3(n)");
      checked += expected.size();
    }
    return std::to_string(checked) + " partitions round trip";
  });

  run("theta_bijection", [&] {
    for (int n = 1; n <= n_max; ++n) {
      auto partition_walks = enumerate_tableaux(n, Flavor::partition);
      auto braid_walks = enumerate_tableaux(n - 1, Flavor::braid);
      if (partition_walks.size() != braid_walks.size())
        fail("n=" + std::to_string(n) + ": " + std::to_string(partition_walks.size()) + " partition walks vs " +
             std::to_string(braid_walks.size()) + " braid walks");
      for (const auto& t : partition_walks) {
        auto b = theta_forward(t);
        if (!(theta_inverse(b) == t)) fail("theta_inverse(theta_forward(t)) != t for " + format_tableau(t));
        const bool regular = is_m_regular(tableau_to_partition(t), 2);
        if (regular == has_loop_pair(b)) fail("2-regularity and loop-freeness disagree for " + format_tableau(t));
      }
      for (const auto& b : braid_walks)
        if (!(theta_forward(theta_inverse(b)) == b)) fail("theta_forward(theta_inverse(b)) != b for " + format_tableau(b));
    }
    return "bijective and 2-regular <-> loop-free for n <= " + std::to_string(n_max);
  });

  run("f_routes", [&] {
    require_equal_tables(build_f_table(n_max, FMethod::direct), build_f_table(n_max, FMethod::kernel_recursion),
                         "f tables (direct vs kernel)");
    return "direct = kernel recursion for n=" + std::to_string(n_max);
  });

  run("sigma_star_routes", [&] {
    require_equal_tables(build_sigma_star(n_max, omega), build_sigma_star(n_max, SigmaMethod::direct_dp),
                         "sigma_star tables (inclusion-exclusion vs direct)");
    return "inclusion-exclusion = direct for n=" + std::to_string(n_max);
  });

  run("axis_identities", [&] {
    CountTable a = build_q2_table(n_max);
    Binomials binom;
    for (int l = 0; l <= n_max; ++l)
      for (int i = 0; i <= l + 1; ++i) {
        if (axis_coeff(Axis::horizontal, i, l, binom) != a.at(2 * l, i, 0))
          fail("horizontal i=" + std::to_string(i) + " l=" + std::to_string(l));
        if (axis_coeff(Axis::vertical, i, l, binom) != a.at(2 * l, 0, i))
          fail("vertical j=" + std::to_string(i) + " l=" + std::to_string(l));
      }
    return "H/V coefficients = a(2l,i,0)/a(2l,0,j) for l <= " + std::to_string(n_max);
  });

  run("walk_tables", [&] {
    if (auto d = detail::compare_with_walks(omega, WalkKind::p_w2, 2 * n_max + 1)) fail(*d);
    if (auto d = detail::compare_with_walks(build_q2_table(n_max), WalkKind::p_q2, 2 * n_max + 1)) fail(*d);
    CountTable sigma = build_sigma_star(n_max - 1, SigmaMethod::direct_dp);
    if (auto d = detail::compare_with_walks(sigma, WalkKind::b_star_w2, 2 * (n_max - 1) + 1)) fail(*d);
    return "a, w and s* tables match depth-first enumeration up to length " + std::to_string(2 * n_max);
  });

  return report;
}

}  // namespace ncpart
