#include <gtest/gtest.h>

#include "expr.hpp"
#include "fip.hpp"

using namespace equilib;

namespace {

PointSample unit(unsigned res) { return sample_domain(Domain::box({{0, 1}}), res); }

const Bifunction kXY = expr::make_bifunction("x1*y1", 1);
const Bifunction kIndicator = expr::make_bifunction("if(abs(x1-y1) <= 0.5, 0, 1)", 1);

}  // namespace

TEST(Fip, ProductHoldsWithWitnessZero) {
  const auto s = unit(4);
  const auto r = check_fip(kXY, s, 3);
  ASSERT_TRUE(r.holds());
  EXPECT_EQ(r.subsets_checked, 5u + 10u + 10u);
  for (const auto& e : r.witness_table) EXPECT_EQ(e.witness, Point{0.0});
  EXPECT_TRUE(reverify(r, kXY, s));
}

TEST(Fip, PotentialHoldsWithArgmin) {
  const auto f = expr::make_bifunction("(y1-0.3)^2 - (x1-0.3)^2", 1);
  const auto s = unit(10);
  const auto r = check_fip(f, s, 2);
  ASSERT_TRUE(r.holds());
  // Witness for A must not exceed min over A of h(a) = (a-0.3)^2.
  auto h = [](const Point& p) { return (p[0] - 0.3) * (p[0] - 0.3); };
  for (const auto& e : r.witness_table)
    for (auto i : e.subset) EXPECT_LE(h(e.witness), h(s[i]) + 1e-9);
  EXPECT_TRUE(reverify(r, f, s));
}

TEST(Fip, ConstantPositiveViolatedOnSingleton) {
  const auto f = expr::make_bifunction("1", 1);
  const auto s = unit(3);
  const auto r = check_fip(f, s, 3);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.violated_subset, std::vector<Point>{Point{0.0}});
  EXPECT_TRUE(reverify(r, f, s));
}

TEST(FipStar, ProductViolatedOnOne) {
  const auto s = unit(1);
  const auto r = check_fip_star(kXY, s, 4, 4);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.violated_subset, std::vector<Point>{Point{1.0}});
  EXPECT_EQ(kXY(Point{1.0}, Point{1.0}), 1.0);
  EXPECT_TRUE(reverify(r, kXY, s));
}

TEST(FipStar, ProductFirstFailureAtResolutionFour) {
  const auto r = check_fip_star(kXY, unit(4), 4, 4);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.violated_subset, std::vector<Point>{Point{0.25}});
  const std::vector<Point> one{Point{1.0}};
  EXPECT_FALSE(find_witness(kXY, one, simplex_grid(one, 4).points()));
}

TEST(FipStar, IndicatorHolds) {
  const auto s = unit(4);
  const auto r = check_fip_star(kIndicator, s, 3, 4);
  ASSERT_TRUE(r.holds());
  for (const auto& e : r.witness_table) {
    for (auto i : e.subset) EXPECT_LE(std::abs(s[i][0] - e.witness[0]), 0.5);
    double lo = 1, hi = 0;
    for (auto i : e.subset) lo = std::min(lo, s[i][0]), hi = std::max(hi, s[i][0]);
    EXPECT_GE(e.witness[0], lo);
    EXPECT_LE(e.witness[0], hi);
  }
  EXPECT_TRUE(reverify(r, kIndicator, s));
}

TEST(FipStar, ConvexPotentialHolds) {
  const auto f = expr::make_bifunction("abs(y1-0.4) - abs(x1-0.4)", 1);
  EXPECT_TRUE(check_fip_star(f, unit(5), 3, 4).holds());
}

TEST(SubsetWitness, IndicatorViolatedOnEndpoints) {
  const auto r = check_subset_witness(kIndicator, unit(2), 2);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.violated_subset, (std::vector<Point>{Point{0.0}, Point{1.0}}));
}

TEST(Diagonal, ProductViolatedAtOne) {
  const auto c = diagonal_check(kXY, unit(1));
  ASSERT_FALSE(c.holds());
  const auto& w = std::get<PointWitness>(*c.witness);
  EXPECT_EQ(w.x, Point{1.0});
  EXPECT_EQ(w.value, 1.0);
}

TEST(Diagonal, PotentialAndNegativeConstantHold) {
  EXPECT_TRUE(diagonal_check(expr::make_bifunction("y1^2 - x1^2", 1), unit(4)).holds());
  EXPECT_TRUE(diagonal_check(expr::make_bifunction("-1", 1), unit(4)).holds());
}

TEST(FipVariant, Names) {
  EXPECT_EQ(to_string(FipVariant::Fip), "fip");
  EXPECT_EQ(to_string(FipVariant::FipStar), "fip_star");
}
