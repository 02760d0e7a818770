#include "ncpart/tableau.hpp"
#include "ncpart/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ncpart;

namespace {

VacillatingTableau shapes(Flavor f, std::vector<Shape> s) { return VacillatingTableau{f, std::move(s)}; }

const Shape E{0, 0};
const Shape B1{1, 0};

}  // namespace

TEST(Validate, AllSingletonTableau) { EXPECT_TRUE(validate_tableau(shapes(Flavor::partition, {E, E, E, E, E})).empty()); }

TEST(Validate, OpenThenClose) { EXPECT_TRUE(validate_tableau(shapes(Flavor::partition, {E, E, B1, E, E})).empty()); }

TEST(Validate, AddAtOddPosition) {
  auto v = validate_tableau(shapes(Flavor::partition, {E, B1, E, E, E}));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().kind, "parity");
  EXPECT_EQ(v.front().index, 1u);
}

TEST(Validate, OtherViolations) {
  EXPECT_EQ(validate_tableau(shapes(Flavor::partition, {E, E, E, E})).front().kind, "length");
  EXPECT_EQ(validate_tableau(shapes(Flavor::partition, {E, E, B1})).back().kind, "end");
  EXPECT_EQ(validate_tableau(shapes(Flavor::partition, {E, E, Shape{2, 0}, E, E})).front().kind, "step");
  EXPECT_EQ(validate_tableau(shapes(Flavor::partition, {E, E, Shape{0, 1}, E, E})).front().kind, "shape");
  EXPECT_EQ(validate_tableau(shapes(Flavor::braid, {E, E, B1, E})).front().kind, "length");
  EXPECT_EQ(validate_tableau(shapes(Flavor::braid, {E, E, B1})).front().kind, "end");
  EXPECT_EQ(validate_tableau(shapes(Flavor::braid, {E, E, B1, E, E})).front().kind, "parity");
}

TEST(Bijection, SingleArc) {
  EXPECT_EQ(format_partition(tableau_to_partition(shapes(Flavor::partition, {E, E, B1, E, E}))), "{1,2}");
  EXPECT_EQ(partition_to_tableau(parse_partition("{1,2}")), shapes(Flavor::partition, {E, E, B1, E, E}));
}

TEST(Bijection, Singletons) {
  EXPECT_EQ(format_partition(tableau_to_partition(shapes(Flavor::partition, {E, E, E, E, E, E, E}))), "{1}{2}{3}");
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(partition_to_tableau(SetPartition::singletons(n)),
              shapes(Flavor::partition, std::vector<Shape>(2 * static_cast<std::size_t>(n) + 1, E)));
}

TEST(Bijection, RejectsThreeCrossing) {
  EXPECT_THROW(partition_to_tableau(parse_partition("{1,4}{2,5}{3,6}")), std::invalid_argument);
}

TEST(Bijection, RoundTripExhaustive) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n, PartitionFilter::noncrossing3)) {
      auto t = partition_to_tableau(p);
      EXPECT_TRUE(validate_tableau(t).empty());
      EXPECT_EQ(tableau_to_partition(t), p) << format_partition(p);
    }
}

TEST(Bijection, TableauxAreInjective) {
  for (int n = 1; n <= 8; ++n) {
    std::set<SetPartition> images;
    auto all = enumerate_tableaux(n, Flavor::partition);
    for (const auto& t : all) images.insert(tableau_to_partition(t));
    EXPECT_EQ(images.size(), all.size());
    EXPECT_EQ(all.size(), enumerate_partitions(n, PartitionFilter::noncrossing3).size());
  }
}

TEST(Braid, LoopAtOne) {
  auto t = VacillatingTableau::from_moves(Flavor::braid, {Move::add_row1, Move::remove_row1});
  Braid b = braid_tableau_to_braid(t);
  EXPECT_EQ(b.arcs, (std::vector<Arc>{{1, 1}}));
  EXPECT_TRUE(b.has_loop());
}

TEST(Braid, SingleArc) {
  auto t = VacillatingTableau::from_moves(Flavor::braid,
                                          {Move::add_row1, Move::nothing, Move::nothing, Move::remove_row1});
  Braid b = braid_tableau_to_braid(t);
  EXPECT_EQ(b.arcs, (std::vector<Arc>{{1, 2}}));
  EXPECT_FALSE(b.has_loop());
}

TEST(Braid, IsolatedPoints) {
  Braid b = braid_tableau_to_braid(shapes(Flavor::braid, {E, E, E, E, E}));
  EXPECT_EQ(b.n, 2);
  EXPECT_TRUE(b.arcs.empty());
}

TEST(Braid, EnumeratedBraidsAreValidAndThreeNoncrossing) {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::vector<Arc>> seen;
    for (const auto& t : enumerate_tableaux(n, Flavor::braid)) {
      Braid b = braid_tableau_to_braid(t);
      EXPECT_TRUE(b.is_valid());
      EXPECT_LT(max_mutual_crossing(b), 3);
      seen.insert(b.arcs);
    }
    EXPECT_EQ(seen.size(), enumerate_tableaux(n, Flavor::braid).size());
  }
}

TEST(Theta, ArcOfAdjacentVerticesBecomesLoop) {
  auto b = theta_forward(partition_to_tableau(parse_partition("{1,2}")));
  EXPECT_EQ(b, VacillatingTableau::from_moves(Flavor::braid, {Move::add_row1, Move::remove_row1}));
  EXPECT_EQ(theta_inverse(b), partition_to_tableau(parse_partition("{1,2}")));
}

TEST(Theta, Singletons) {
  EXPECT_EQ(theta_forward(partition_to_tableau(parse_partition("{1}{2}"))), shapes(Flavor::braid, {E, E, E}));
  for (int m = 0; m <= 4; ++m)
    EXPECT_EQ(tableau_to_partition(theta_inverse(shapes(Flavor::braid, std::vector<Shape>(2 * m + 1, E)))),
              SetPartition::singletons(m + 1));
}

TEST(Theta, TwoRegularGivesLoopFreeArc) {
  auto b = theta_forward(partition_to_tableau(parse_partition("{1,3}{2}")));
  EXPECT_EQ(b.vertex_count(), 2);
  Braid braid = braid_tableau_to_braid(b);
  EXPECT_EQ(braid.arcs, (std::vector<Arc>{{1, 2}}));
  EXPECT_FALSE(has_loop_pair(b));
}

TEST(Theta, BijectiveAndCountPreserving) {
  for (int n = 1; n <= 8; ++n) {
    auto pw = enumerate_tableaux(n, Flavor::partition);
    auto bw = enumerate_tableaux(n - 1, Flavor::braid);
    EXPECT_EQ(pw.size(), bw.size()) << n;
    for (const auto& t : pw) EXPECT_EQ(theta_inverse(theta_forward(t)), t);
    for (const auto& b : bw) EXPECT_EQ(theta_forward(theta_inverse(b)), b);
  }
}

TEST(Theta, TwoRegularIffLoopFree) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n, PartitionFilter::noncrossing3)) {
      auto b = theta_forward(partition_to_tableau(p));
      EXPECT_EQ(is_m_regular(p, 2), !has_loop_pair(b)) << format_partition(p);
      EXPECT_EQ(is_m_regular(p, 2), !braid_tableau_to_braid(b).has_loop()) << format_partition(p);
    }
}

TEST(WalkPoints, StayInChamber) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_tableaux(n, Flavor::partition))
      for (const auto& p : walk_points(t)) EXPECT_TRUE(p.a > p.b && p.b >= 0);
}

TEST(Serialization, RoundTrip) {
  EXPECT_EQ(format_tableau(partition_to_tableau(parse_partition("{1,2}"))), "0.0 0.0 1.0 0.0 0.0");
  auto t = partition_to_tableau(parse_partition("{1,4}{2,5}{3}"));
  EXPECT_EQ(parse_tableau(format_tableau(t), Flavor::partition), t);
  EXPECT_THROW(parse_tableau("0.0 1", Flavor::partition), ParseError);
  EXPECT_THROW(parse_tableau("", Flavor::partition), ParseError);
}
