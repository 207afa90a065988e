#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "certificate.hpp"
#include "core.hpp"

namespace equilib {

/// Set-valued map K: C => C given by membership, contains(x, y) <=> y in K(x).
class ConstraintMap {
 public:
  using Membership = std::function<bool(const Point&, const Point&)>;

  ConstraintMap(Membership contains, std::string description);

  // The constant map K(x) = C.
  static ConstraintMap whole_domain();

  bool operator()(const Point& x, const Point& y) const { return (*fn_)(x, y); }
  const std::string& description() const { return description_; }

 private:
  std::shared_ptr<const Membership> fn_;
  std::string description_;
};

enum class ProblemKind { EP, MEP, QEP, MQEP };

std::string_view to_string(ProblemKind p);
std::optional<ProblemKind> parse_problem_kind(std::string_view name);

struct Solution {
  Point point;
  std::size_t index = 0;  // position in the sample
  // Worst value of the defining inequality, oriented so that the point is a
  // solution iff slack >= -tol: min_y f(x,y) for EP/QEP, -max_y f(y,x) for
  // MEP/MQEP.
  double slack = 0.0;
};

struct SolutionSet {
  ProblemKind problem = ProblemKind::EP;
  std::vector<Solution> solutions;
  double tol = 0.0;
  std::size_t sample_size = 0;
  std::vector<std::string> notes;

  std::vector<Point> points() const;
};

SolutionSet solve_ep(const Bifunction& f, const PointSample& sample,
                     Tolerance tol = {});

/// Minty solutions as the intersection of the sampled sublevel sets
/// F_x = {y : f(x, y) <= tol}.
SolutionSet solve_mep(const Bifunction& f, const PointSample& sample,
                      Tolerance tol = {});

struct Inclusion {
  bool holds = true;
  std::optional<Point> offending;  // first point breaking the inclusion
};

struct BridgeReport {
  SolutionSet ep;
  SolutionSet mep;
  Certificate pseudo;      // pseudo-monotonicity of f
  Certificate neg_pseudo;  // pseudo-monotonicity of -f
  Certificate upper_sign;
  Inclusion ep_in_mep;     // implied when f is pseudo-monotone
  Inclusion mep_in_ep;     // implied when -f is pseudo-monotone or by upper sign
  // Hypothesis certified but the expected inclusion fails on the sample.
  std::vector<std::string> artifacts;
};

BridgeReport bridge_ep_mep(const Bifunction& f, const PointSample& sample,
                           const Budget& budget = {}, Tolerance tol = {});

struct SelectionMapResult {
  Point x;
  std::vector<Point> image;
  bool empty = true;
  // Set when the image is empty although fip holds on K(x) at the default
  // budget: the emptiness is attributed to discretization.
  bool discretization_warning = false;
};

/// S(x) = intersection over w of G_x(w), where G_x(w) is the whole sample
/// when w is not in K(x) and {y in K(x) : f(w, y) <= tol} otherwise.
/// Throws EmptyConstraint when K(x) misses the sample.
SelectionMapResult selection_map(const Bifunction& f, const ConstraintMap& K,
                                 const Point& x, const PointSample& sample,
                                 Tolerance tol = {});

SolutionSet solve_mqep(const Bifunction& f, const ConstraintMap& K,
                       const PointSample& sample, Tolerance tol = {});

struct UpgradeNote {
  Point point;           // an MQEP solution
  bool upper_sign_local; // upper sign holds on pairs (x, y), y in K(x)
  bool solves_qep;
};

struct QepReport {
  SolutionSet qep;
  SolutionSet mqep;
  std::vector<UpgradeNote> upgrades;
};

QepReport solve_qep(const Bifunction& f, const ConstraintMap& K,
                    const PointSample& sample, const Budget& budget = {},
                    Tolerance tol = {});

/// Re-checks each listed solution's defining inequalities over the sample.
bool reverify(const SolutionSet& set, const Bifunction& f,
              const PointSample& sample,
              const ConstraintMap& K = ConstraintMap::whole_domain());

}  // namespace equilib
