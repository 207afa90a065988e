#include <gtest/gtest.h>

#include "expr.hpp"
#include "oracle.hpp"
#include "solvers.hpp"

using namespace equilib;

namespace {

PointSample unit(unsigned res) { return sample_domain(Domain::box({{0, 1}}), res); }

std::vector<double> xs(const SolutionSet& s) {
  std::vector<double> out;
  for (const auto& p : s.points()) out.push_back(p[0]);
  return out;
}

ConstraintMap half_interval(double widen) {
  return ConstraintMap(
      [widen](const Point& x, const Point& y) {
        return x[0] / 2 - widen - 1e-12 <= y[0] && y[0] <= x[0] / 2 + 0.5 + widen + 1e-12;
      },
      "[x/2, x/2 + 1/2]");
}

}  // namespace

TEST(Ep, LinearArgmin) {
  EXPECT_EQ(xs(solve_ep(expr::make_bifunction("y1 - x1", 1), unit(10))),
            std::vector<double>{0.0});
}

TEST(Ep, ZeroGivesEverything) {
  EXPECT_EQ(solve_ep(expr::make_bifunction("0", 1), unit(10)).solutions.size(), 11u);
}

TEST(Ep, ProductGivesEverything) {
  EXPECT_EQ(solve_ep(expr::make_bifunction("x1*y1", 1), unit(10)).solutions.size(), 11u);
}

TEST(Mep, PotentialArgmin) {
  const auto s = solve_mep(expr::make_bifunction("(y1-0.3)^2 - (x1-0.3)^2", 1), unit(10));
  EXPECT_EQ(xs(s), std::vector<double>{0.3});
  EXPECT_EQ(s.solutions[0].slack, 0.0);
}

TEST(Mep, ProductOnlyZero) {
  EXPECT_EQ(xs(solve_mep(expr::make_bifunction("x1*y1", 1), unit(10))),
            std::vector<double>{0.0});
}

TEST(Mep, EqualsExplicitIntersection) {
  for (const char* text : {"x1*y1", "y1 - x1", "if(abs(x1-y1) <= 0.5, 0, 1)",
                           "(y1 - x1)*(1 + x1^2)"}) {
    const auto f = expr::make_bifunction(text, 1);
    const auto s = unit(8);
    const auto t = oracle::table(f, s.points());
    const auto mep = solve_mep(f, s);
    std::set<std::size_t> got;
    for (const auto& sol : mep.solutions) got.insert(sol.index);
    EXPECT_EQ(got, oracle::mep_by_intersection(t, 1e-9)) << text;
    EXPECT_EQ(xs(mep), xs(solve_ep(f.dual(), s))) << text;
  }
}

TEST(Bridge, PotentialBothInclusions) {
  const auto r = bridge_ep_mep(expr::make_bifunction("abs(y1-0.5) - abs(x1-0.5)", 1), unit(8));
  EXPECT_TRUE(r.neg_pseudo.holds());
  EXPECT_TRUE(r.ep_in_mep.holds);
  EXPECT_TRUE(r.mep_in_ep.holds);
  EXPECT_TRUE(r.artifacts.empty());
}

TEST(Bridge, ProductMintyInEpOnly) {
  // EP = all points, MEP = {0}. -f is pseudo-monotone, which gives MEP in EP
  // but not the reverse; f itself is not pseudo-monotone.
  const auto r = bridge_ep_mep(expr::make_bifunction("x1*y1", 1), unit(4));
  EXPECT_TRUE(r.neg_pseudo.holds());
  EXPECT_FALSE(r.pseudo.holds());
  EXPECT_TRUE(r.mep_in_ep.holds);
  EXPECT_FALSE(r.ep_in_mep.holds);
  ASSERT_TRUE(r.ep_in_mep.offending);
  EXPECT_EQ(*r.ep_in_mep.offending, Point{0.25});
  EXPECT_TRUE(r.artifacts.empty());
}

TEST(Bridge, LinearAndZeroAndSquare) {
  const auto lin = bridge_ep_mep(expr::make_bifunction("y1 - x1", 1), unit(10));
  EXPECT_TRUE(lin.neg_pseudo.holds());
  EXPECT_EQ(lin.ep.points(), std::vector<Point>{Point{0.0}});
  EXPECT_EQ(lin.mep.points(), std::vector<Point>{Point{0.0}});
  const auto zero = bridge_ep_mep(expr::make_bifunction("0", 1), unit(4));
  EXPECT_TRUE(zero.neg_pseudo.holds() && zero.upper_sign.holds());
  EXPECT_EQ(zero.ep.solutions.size(), 5u);
  EXPECT_EQ(zero.mep.solutions.size(), 5u);
  const auto sq = bridge_ep_mep(expr::make_bifunction("y1^2 - x1^2", 1),
                                sample_domain(Domain::box({{-1, 1}}), 10));
  EXPECT_TRUE(sq.upper_sign.holds());
  EXPECT_EQ(sq.mep.points(), std::vector<Point>{Point{0.0}});
  EXPECT_EQ(sq.ep.points(), std::vector<Point>{Point{0.0}});
  EXPECT_TRUE(sq.artifacts.empty());
}

TEST(Selection, WholeDomainIsArgmin) {
  const auto f = expr::make_bifunction("(y1-0.3)^2 - (x1-0.3)^2", 1);
  const auto s = unit(10);
  for (const auto& x : s) {
    const auto r = selection_map(f, ConstraintMap::whole_domain(), x, s);
    EXPECT_EQ(r.image, std::vector<Point>{Point{0.3}});
  }
}

TEST(Selection, LinearHalfIntervalIsMinimum) {
  const auto f = expr::make_bifunction("y1 - x1", 1);
  const auto s = unit(10);
  const auto K = half_interval(0.0);
  for (const auto& x : s) {
    const auto r = selection_map(f, K, x, s);
    ASSERT_EQ(r.image.size(), 1u);
    double lowest = 2;
    for (const auto& y : s)
      if (K(x, y)) lowest = std::min(lowest, y[0]);
    EXPECT_EQ(r.image[0][0], lowest);
  }
}

TEST(Selection, ZeroGivesConstraintTrace) {
  const auto f = expr::make_bifunction("0", 1);
  const auto s = unit(10);
  const auto r = selection_map(f, half_interval(0.0), Point{0.4}, s);
  EXPECT_EQ(r.image.size(), 6u);
}

TEST(Selection, EmptyConstraintRaised) {
  const ConstraintMap none([](const Point&, const Point&) { return false; }, "empty");
  try {
    selection_map(expr::make_bifunction("0", 1), none, Point{0.0}, unit(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyConstraint);
  }
}

TEST(Mqep, ExactHalfIntervalOnGrid) {
  // 0.05 is not a grid point, so K(0.1) starts at 0.1 on the sample.
  const auto f = expr::make_bifunction("y1 - x1", 1);
  EXPECT_EQ(xs(solve_mqep(f, half_interval(0.0), unit(10))), (std::vector<double>{0.0, 0.1}));
}

TEST(Mqep, OutwardRoundedHalfInterval) {
  const auto f = expr::make_bifunction("y1 - x1", 1);
  EXPECT_EQ(xs(solve_mqep(f, half_interval(0.05), unit(10))), std::vector<double>{0.0});
}

TEST(Mqep, WholeDomainEqualsMep) {
  const auto f = expr::make_bifunction("x1*y1", 1);
  EXPECT_EQ(xs(solve_mqep(f, ConstraintMap::whole_domain(), unit(10))),
            xs(solve_mep(f, unit(10))));
}

TEST(Mqep, ZeroGivesFixedPoints) {
  const auto f = expr::make_bifunction("0", 1);
  // x in [x/2, x/2 + 1/2] iff x <= 1.
  EXPECT_EQ(solve_mqep(f, half_interval(0.0), unit(10)).solutions.size(), 11u);
}

TEST(Qep, QuasiOptimisationUpgrade) {
  const auto f = expr::make_bifunction("y1 - x1", 1);
  const auto r = solve_qep(f, half_interval(0.05), unit(10));
  EXPECT_EQ(xs(r.qep), std::vector<double>{0.0});
  EXPECT_EQ(r.qep.solutions[0].slack, 0.0);
  ASSERT_EQ(r.upgrades.size(), 1u);
  EXPECT_TRUE(r.upgrades[0].upper_sign_local);
  EXPECT_TRUE(r.upgrades[0].solves_qep);
  EXPECT_FALSE(r.qep.notes.empty());
}

TEST(Qep, WholeDomainEqualsEp) {
  for (const char* text : {"x1*y1", "y1 - x1", "abs(x1-0.5) - abs(y1-0.5)"}) {
    const auto f = expr::make_bifunction(text, 1);
    EXPECT_EQ(xs(solve_qep(f, ConstraintMap::whole_domain(), unit(6)).qep),
              xs(solve_ep(f, unit(6))));
  }
}

TEST(Reverify, AcceptsSolverOutput) {
  const auto f = expr::make_bifunction("(y1-0.3)^2 - (x1-0.3)^2", 1);
  const auto s = unit(10);
  EXPECT_TRUE(reverify(solve_ep(f, s), f, s));
  EXPECT_TRUE(reverify(solve_mep(f, s), f, s));
  auto forged = solve_ep(f, s);
  forged.solutions.push_back({Point{0.9}, 9, 0.0});
  EXPECT_FALSE(reverify(forged, f, s));
}

TEST(ProblemKind, Names) {
  EXPECT_EQ(parse_problem_kind("mqep"), ProblemKind::MQEP);
  EXPECT_EQ(to_string(ProblemKind::EP), "ep");
  EXPECT_FALSE(parse_problem_kind("vip"));
}
