#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core.hpp"

namespace equilib {

enum class Verdict { Holds, Violated };

std::string_view to_string(Verdict v);

/// Discretization budgets. A HOLDS verdict only means no violation was found
/// within these budgets.
struct Budget {
  unsigned max_cycle_len = 4;
  unsigned max_subset = 4;
  unsigned simplex_subdivisions = 4;
  unsigned segment_subdivisions = 8;
};

// f(x,y) and f(y,x) for a pair-based violation.
struct PairWitness {
  Point x;
  Point y;
  double f_xy = 0.0;
  double f_yx = 0.0;
};

// Closed cycle: points.front() == points.back(); edge_values[i] is
// f(points[i], points[i+1]).
struct CycleWitness {
  std::vector<Point> points;
  std::vector<double> edge_values;

  std::size_t length() const { return edge_values.size(); }
};

// A finite subset A and a point x with values[i] = f(A[i], x).
struct SubsetWitness {
  std::vector<Point> subset;
  Point x;
  std::vector<double> values;
};

struct PointWitness {
  Point x;
  double value = 0.0;
};

// Upper sign violation: premise values f(x_t, x) along the open segment all
// non-positive while f(x, y) is negative.
struct SegmentWitness {
  Point x;
  Point y;
  std::vector<Point> segment;
  std::vector<double> premise_values;
  double f_xy = 0.0;
};

// Sign-continuity violation at x along direction v.
struct DirectionWitness {
  Point x;
  Vector direction;
  double conclusion_value = 0.0;
};

using Witness = std::variant<PairWitness, CycleWitness, SubsetWitness,
                             PointWitness, SegmentWitness, DirectionWitness>;

struct CheckStats {
  std::size_t checks = 0;
  std::size_t skipped = 0;
};

struct Certificate {
  Verdict verdict = Verdict::Holds;
  std::string property;
  std::optional<Witness> witness;
  CheckStats stats;
  Budget budget;
  double tol = 0.0;
  std::vector<std::string> notes;

  bool holds() const { return verdict == Verdict::Holds; }
};

}  // namespace equilib
