#include "ncpart/verify.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

using namespace ncpart;

TEST(EnumeratePartitions, Examples) {
  EXPECT_EQ(enumerate_partitions(3).size(), 5u);
  EXPECT_EQ(enumerate_partitions(6, PartitionFilter::noncrossing3).size(), 202u);
  EXPECT_EQ(enumerate_partitions(4, PartitionFilter::two_regular_noncrossing3).size(), 5u);
  EXPECT_THROW(enumerate_partitions(13), CapError);
}

TEST(EnumeratePartitions, BellNumbersAndOrder) {
  const std::size_t bell[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_partitions(n);
    EXPECT_EQ(all.size(), bell[n - 1]);
    EXPECT_EQ(std::set<SetPartition>(all.begin(), all.end()).size(), all.size());
  }
  auto three = enumerate_partitions(3);
  std::vector<std::string> text;
  for (const auto& p : three) text.push_back(format_partition(p));
  EXPECT_EQ(text, (std::vector<std::string>{"{1,2,3}", "{1,2}{3}", "{1,3}{2}", "{1}{2,3}", "{1}{2}{3}"}));
}

TEST(EnumeratePartitions, OnlyThreeCrossingAtSix) {
  auto all = enumerate_partitions(6);
  std::vector<std::string> crossing;
  for (const auto& p : all)
    if (max_mutual_crossing(p) >= 3) crossing.push_back(format_partition(p));
  EXPECT_EQ(crossing, std::vector<std::string>{"{1,4}{2,5}{3,6}"});
}

TEST(EnumerateWalks, Examples) {
  EXPECT_EQ(enumerate_walks(WalkKind::p_w2, 8, {1, 0}), 15);
  EXPECT_EQ(enumerate_walks(WalkKind::b_w2, 4, {1, 0}), 5);
  EXPECT_EQ(enumerate_walks(WalkKind::b_star_w2, 2, {1, 0}), 1);
  EXPECT_THROW(enumerate_walks(WalkKind::p_w2, 25, {1, 0}), CapError);
}

TEST(EnumerateWalks, EndpointTallyAgrees) {
  auto tally = enumerate_walk_endpoints(WalkKind::b_w2, 6);
  for (const auto& [p, c] : tally) EXPECT_EQ(enumerate_walks(WalkKind::b_w2, 6, p), c);
}

TEST(EnumerateTableaux, CountsMatch) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_tableaux(n, Flavor::partition).size(),
              enumerate_partitions(n, PartitionFilter::noncrossing3).size());
    EXPECT_EQ(BigCount(enumerate_tableaux(n - 1, Flavor::braid).size()),
              enumerate_walks(WalkKind::b_w2, 2 * (n - 1), {1, 0}));
  }
}

namespace {

std::vector<std::string> classes(int k) {
  std::vector<std::string> out;
  for (int i = 0; i < k; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

}  // namespace

TEST(ChiSquare, Degenerate) {
  auto u = classes(202);
  auto r = chi_square_uniformity({{u[0], 202000}}, u, 202000);
  EXPECT_EQ(r.p_bound, PBound::fail_high);
  EXPECT_EQ(r.degrees_of_freedom, 201u);
  EXPECT_EQ(r.min_class_count, 0u);
}

TEST(ChiSquare, ExactlyExpectedIsTooGoodToBeTrue) {
  auto u = classes(202);
  std::map<std::string, std::uint64_t> counts;
  for (const auto& c : u) counts[c] = 1000;
  auto r = chi_square_uniformity(counts, u, 202000);
  EXPECT_EQ(r.chi_square, 0.0);
  EXPECT_EQ(r.p_bound, PBound::fail_low);
  EXPECT_EQ(r.min_class_count, 1000u);
}

TEST(ChiSquare, OutsideUniverse) {
  auto u = classes(3);
  try {
    chi_square_uniformity({{"zzz", 1}}, u, 1);
    FAIL();
  } catch (const LogicError& e) {
    EXPECT_NE(std::string(e.what()).find("zzz"), std::string::npos);
  }
}

TEST(ChiSquare, WilsonHilfertyCloseToExact) {
  for (double dof : {50.0, 201.0, 1000.0}) {
    boost::math::chi_squared_distribution<double> chi(dof);
    for (double p : {kChiSquareLowerTail, kChiSquareUpperTail}) {
      const double exact = boost::math::quantile(chi, p);
      EXPECT_NEAR(chi_square_quantile(p, dof), exact, 0.02 * exact) << dof << ' ' << p;
    }
  }
}

TEST(Uniformity, RetriesOnceWithNextSeed) {
  auto u = classes(4);
  auto biased = [&](RandomStream& rng) { return u[rng.uniform_below(2).convert_to<std::size_t>()]; };
  UniformityRun run = uniformity_test(u, biased, 100, 41);
  EXPECT_FALSE(run.report.passed());
  EXPECT_EQ(run.seeds, (std::vector<std::uint64_t>{41, 42}));

  auto fair = [&](RandomStream& rng) { return u[rng.uniform_below(4).convert_to<std::size_t>()]; };
  run = uniformity_test(u, fair, 1000, 7);
  EXPECT_TRUE(run.report.passed());
  EXPECT_EQ(run.report.sample_count, 4000u);
}

TEST(CrossCheck, BuildGate) {
  CrossCheckReport r = cross_check_suite(6);
  EXPECT_EQ(r.checks.size(), 8u);
  EXPECT_TRUE(r.all_passed()) << r.text();
}

TEST(CrossCheck, Trivial) { EXPECT_TRUE(cross_check_suite(1).all_passed()); }

TEST(CrossCheck, FaultInOmegaIsNamed) {
  CrossCheckReport r = cross_check_suite(6, [](CountTable& w) { w.set(7, 2, 0, w.at(7, 2, 0) + 1); });
  EXPECT_FALSE(r.all_passed());
  const CheckResult* walks = r.find("walk_tables");
  ASSERT_NE(walks, nullptr);
  EXPECT_FALSE(walks->pass);
  EXPECT_NE(walks->details.find("(7,2,0)"), std::string::npos) << walks->details;
}

TEST(CrossCheck, FaultInCountCellIsNamed) {
  CrossCheckReport r = cross_check_suite(6, [](CountTable& w) { w.set(12, 1, 0, 203); });
  const CheckResult* count = r.find("partition_count");
  ASSERT_NE(count, nullptr);
  EXPECT_FALSE(count->pass);
  EXPECT_NE(count->details.find("(12,1,0)"), std::string::npos) << count->details;
  EXPECT_FALSE(r.find("walk_tables")->pass);
}

TEST(CrossCheck, SummaryLines) {
  CrossCheckReport r = cross_check_suite(3);
  std::istringstream lines(r.summary());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind("CHECK ", 0), 0u);
    EXPECT_NE(line.find(" pass "), std::string::npos);
    ++count;
  }
  EXPECT_EQ(count, 8);
  EXPECT_THROW(cross_check_suite(10), CapError);
}
