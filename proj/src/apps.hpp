#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "core.hpp"
#include "fip.hpp"
#include "solvers.hpp"

namespace equilib {

/// Set-valued operator T: R^n => R^n with finitely many values at each point.
class Operator {
 public:
  using Fn = std::function<std::vector<Vector>(const Point&)>;

  Operator(Fn fn, std::size_t dim, std::string description);

  // Validated: non-empty list, each vector of the operator dimension.
  std::vector<Vector> operator()(const Point& x) const;
  std::size_t dim() const { return dim_; }
  const std::string& description() const { return description_; }

 private:
  std::shared_ptr<const Fn> fn_;
  std::size_t dim_;
  std::string description_;
};

/// f_T(x, y) = max over x* in T(x) of <x*, y - x>.
Bifunction bifunction_from_operator(const Operator& T);

enum class SignContinuity { Lower, Upper };

/// Default directions: +/- half the box extent along each axis (unit axes for
/// finite sets).
std::vector<Vector> default_directions(const Domain& domain);
/// +/- e_i for every axis.
std::vector<Vector> unit_directions(std::size_t dim);

/// Lower/upper sign-continuity with x_t = x + t v, t = k/segment_subdivisions.
/// Pairs (x, v) whose segment leaves the sample's source domain are skipped
/// and counted in stats.skipped.
Certificate check_sign_continuity(const Operator& T, const PointSample& sample,
                                  SignContinuity kind,
                                  const std::vector<Vector>& directions,
                                  unsigned segment_subdivisions, Tolerance tol = {});

/// Operator form of the finite intersection property, evaluated directly on
/// the values of T (independent of f_T).
FipReport check_operator_fip(const Operator& T, const PointSample& sample,
                             unsigned max_subset, Tolerance tol = {});

enum class VipHypothesis { NegPseudo, UpperSign };

struct VipReport {
  SolutionSet solutions;
  FipReport operator_fip;
  Certificate hypothesis;
  std::vector<std::string> warnings;
};

/// Solves the variational inequality as EP(f_T) on the sample.
VipReport solve_vip(const Operator& T, const PointSample& sample,
                    VipHypothesis hypothesis, const Budget& budget = {},
                    Tolerance tol = {}, const std::vector<Vector>& directions = {});

/// Points x with some x* in T(x) and <x*, y - x> >= -tol for all sample y.
SolutionSet solve_vip_direct(const Operator& T, const PointSample& sample,
                             Tolerance tol = {});

struct Objective {
  std::function<double(const Point&)> fn;
  std::string description;
};

/// p players, each owning a block of the joint variable, sharing the joint
/// feasible set `domain`.
class Game {
 public:
  Game(std::vector<std::vector<std::size_t>> partition,
       std::vector<Objective> objectives, std::shared_ptr<const Domain> domain);

  std::size_t players() const { return partition_.size(); }
  std::size_t dim() const { return domain_->dim(); }
  const std::vector<std::size_t>& block(std::size_t nu) const { return partition_[nu]; }
  const std::vector<std::vector<std::size_t>>& partition() const { return partition_; }
  double objective(std::size_t nu, const Point& x) const { return objectives_[nu].fn(x); }
  const Objective& objective_info(std::size_t nu) const { return objectives_[nu]; }
  const Domain& domain() const { return *domain_; }
  std::shared_ptr<const Domain> domain_ptr() const { return domain_; }

  // x with player nu's block replaced by the block of z.
  Point with_block(const Point& x, std::size_t nu, const Point& z) const;
  // x^{-nu} == y^{-nu}
  bool same_rivals(const Point& x, const Point& y, std::size_t nu) const;

 private:
  std::vector<std::vector<std::size_t>> partition_;
  std::vector<Objective> objectives_;
  std::shared_ptr<const Domain> domain_;
};

/// f_0(x, y) = sum over players of theta(y^nu, y^-nu) - theta(x^nu, y^-nu).
Bifunction nikaido_isoda(const Game& game);

/// One map per player: y in K_nu(x) iff (y^nu, x^-nu) lies in C.
std::vector<ConstraintMap> joint_constraint_map(const Domain& C, const Game& game);

struct GneCheck {
  bool pass = true;
  double worst_improvement = 0.0;
  std::vector<double> per_player;  // largest improvement per player (>= 0)
};

/// Unilateral deviations along sample points that keep the rivals' blocks
/// fixed and stay in the joint set.
GneCheck verify_gne(const Game& game, const Point& x, const PointSample& sample,
                    Tolerance tol = {});

struct GnepReport {
  SolutionSet mep;
  std::vector<Point> equilibria;  // MEP points that pass verify_gne
  std::vector<std::pair<Point, GneCheck>> rejected;
};

GnepReport solve_gnep(const Game& game, const PointSample& sample, Tolerance tol = {});

}  // namespace equilib
