#include "apps.hpp"

#include <algorithm>
#include <limits>

#include "enumerate.hpp"
#include "monotonicity.hpp"

namespace equilib {

namespace {

std::vector<double> diff(const Point& y, const Point& x) {
  std::vector<double> d(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) d[i] = y[i] - x[i];
  return d;
}

double min_pairing(const std::vector<Vector>& values, const Vector& v) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : values) m = std::min(m, dot(s, v));
  return m;
}

double max_pairing(const std::vector<Vector>& values, const Vector& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& s : values) m = std::max(m, dot(s, v));
  return m;
}

}  // namespace

Operator::Operator(Fn fn, std::size_t dim, std::string description)
    : fn_(std::make_shared<const Fn>(std::move(fn))),
      dim_(dim),
      description_(std::move(description)) {
  if (!*fn_) throw Error(ErrorCode::InvalidArgument, "empty operator");
  if (dim_ == 0) throw Error(ErrorCode::InvalidArgument, "operator dimension is 0");
}

std::vector<Vector> Operator::operator()(const Point& x) const {
  auto values = (*fn_)(x);
  if (values.empty())
    throw Error(ErrorCode::DomainError, "operator has no value at " + x.to_string());
  for (const auto& v : values)
    if (v.size() != dim_)
      throw Error(ErrorCode::DimensionMismatch, "operator value has wrong dimension");
  return values;
}

Bifunction bifunction_from_operator(const Operator& T) {
  return Bifunction(
      [T](const Point& x, const Point& y) {
        return max_pairing(T(x), diff(y, x));
      },
      "f_T[" + T.description() + "]");
}

std::vector<Vector> default_directions(const Domain& domain) {
  std::vector<Vector> dirs;
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    double len = 1.0;
    if (domain.kind() == Domain::Kind::Box) {
      const auto& b = domain.bounds()[i];
      if (b.hi > b.lo) len = (b.hi - b.lo) / 2.0;
    }
    Vector v(domain.dim(), 0.0);
    v[i] = len;
    dirs.push_back(v);
    v[i] = -len;
    dirs.push_back(v);
  }
  return dirs;
}

std::vector<Vector> unit_directions(std::size_t dim) {
  std::vector<Vector> dirs;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector v(dim, 0.0);
    v[i] = 1.0;
    dirs.push_back(v);
    v[i] = -1.0;
    dirs.push_back(v);
  }
  return dirs;
}

Certificate check_sign_continuity(const Operator& T, const PointSample& sample,
                                  SignContinuity kind,
                                  const std::vector<Vector>& directions,
                                  unsigned segment_subdivisions, Tolerance tol) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  if (segment_subdivisions < 2)
    throw Error(ErrorCode::InvalidResolution, "segment subdivisions must be >= 2");
  const Domain* domain = sample.source();
  Certificate c;
  c.property = kind == SignContinuity::Lower ? "lower-sign-continuity"
                                             : "upper-sign-continuity";
  c.tol = tol.value;
  c.budget.segment_subdivisions = segment_subdivisions;
  c.notes.emplace_back("x_t = x + t*v");
  const double m = static_cast<double>(segment_subdivisions);
  for (const auto& x : sample) {
    for (const auto& v : directions) {
      if (v.size() != x.dim())
        throw Error(ErrorCode::DimensionMismatch, "direction has wrong dimension");
      if (std::all_of(v.begin(), v.end(), [](double d) { return d == 0.0; }))
        throw Error(ErrorCode::InvalidArgument, "zero direction");
      std::vector<Point> path;
      bool inside = true;
      for (unsigned k = 1; k < segment_subdivisions && inside; ++k) {
        std::vector<double> c2(x.dim());
        for (std::size_t i = 0; i < x.dim(); ++i)
          c2[i] = x[i] + static_cast<double>(k) * v[i] / m;
        Point xt(std::move(c2));
        inside = domain == nullptr || domain->contains(xt);
        path.push_back(std::move(xt));
      }
      if (!inside) {
        ++c.stats.skipped;
        continue;
      }
      ++c.stats.checks;
      bool premise = true;
      for (const auto& xt : path)
        if (min_pairing(T(xt), v) < -tol.value) {
          premise = false;
          break;
        }
      if (!premise) continue;
      const auto tx = T(x);
      const double concl = kind == SignContinuity::Lower ? min_pairing(tx, v)
                                                         : max_pairing(tx, v);
      if (concl < -tol.value) {
        c.verdict = Verdict::Violated;
        c.witness = DirectionWitness{x, v, concl};
        return c;
      }
    }
  }
  return c;
}

FipReport check_operator_fip(const Operator& T, const PointSample& sample,
                             unsigned max_subset, Tolerance tol) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  if (max_subset == 0) throw Error(ErrorCode::InvalidArgument, "max_subset must be >= 1");
  FipReport r;
  r.variant = FipVariant::Operator;
  r.max_subset = max_subset;
  r.tol = tol.value;
  const std::size_t n = sample.size();
  std::vector<std::vector<Vector>> values;
  for (const auto& p : sample) values.push_back(T(p));
  // ok[a * n + x]: <a*, x - a> <= tol for every a* in T(a)
  std::vector<char> ok(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      const auto d = diff(sample[x], sample[a]);
      ok[a * n + x] = std::all_of(values[a].begin(), values[a].end(),
                                  [&](const Vector& s) { return dot(s, d) <= tol.value; });
    }
  detail::for_each_subset(n, max_subset, [&](const std::vector<std::size_t>& idx) {
    ++r.subsets_checked;
    for (std::size_t x = 0; x < n; ++x) {
      if (std::all_of(idx.begin(), idx.end(), [&](std::size_t a) { return ok[a * n + x]; })) {
        r.witness_table.push_back({idx, sample[x]});
        return true;
      }
    }
    r.verdict = Verdict::Violated;
    for (auto a : idx) r.violated_subset.push_back(sample[a]);
    return false;
  });
  return r;
}

VipReport solve_vip(const Operator& T, const PointSample& sample,
                    VipHypothesis hypothesis, const Budget& budget, Tolerance tol,
                    const std::vector<Vector>& directions) {
  const auto fT = bifunction_from_operator(T);
  VipReport r{solve_ep(fT, sample, tol),
              check_operator_fip(T, sample, budget.max_subset, tol),
              {},
              {}};
  if (hypothesis == VipHypothesis::NegPseudo) {
    r.hypothesis = check_property(fT.negated(), sample, PropertyKind::PseudoMonotone,
                                  budget, tol);
    r.hypothesis.property = "neg-pseudo-monotone";
  } else {
    std::vector<Vector> dirs = directions;
    if (dirs.empty() && sample.source()) dirs = default_directions(*sample.source());
    if (dirs.empty()) dirs = unit_directions(sample.dim());
    r.hypothesis = check_sign_continuity(T, sample, SignContinuity::Upper, dirs,
                                         budget.segment_subdivisions, tol);
  }
  if (r.solutions.solutions.empty() && r.operator_fip.holds() && r.hypothesis.holds())
    r.warnings.push_back(
        "operator fip and hypothesis hold on the sample but no VIP solution was "
        "found (discretization)");
  return r;
}

SolutionSet solve_vip_direct(const Operator& T, const PointSample& sample, Tolerance tol) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  SolutionSet out;
  out.problem = ProblemKind::EP;
  out.tol = tol.value;
  out.sample_size = sample.size();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Point& x = sample[i];
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& s : T(x)) {
      double worst = std::numeric_limits<double>::infinity();
      for (const auto& y : sample) worst = std::min(worst, dot(s, diff(y, x)));
      best = std::max(best, worst);
    }
    if (best >= -tol.value) out.solutions.push_back({x, i, best});
  }
  return out;
}

Game::Game(std::vector<std::vector<std::size_t>> partition,
           std::vector<Objective> objectives, std::shared_ptr<const Domain> domain)
    : partition_(std::move(partition)),
      objectives_(std::move(objectives)),
      domain_(std::move(domain)) {
  if (!domain_) throw Error(ErrorCode::InvalidArgument, "game without domain");
  if (partition_.empty()) throw Error(ErrorCode::InvalidArgument, "game needs >= 1 player");
  if (objectives_.size() != partition_.size())
    throw Error(ErrorCode::InvalidArgument, "one objective per player required");
  std::vector<int> owner(domain_->dim(), -1);
  for (std::size_t nu = 0; nu < partition_.size(); ++nu) {
    if (partition_[nu].empty())
      throw Error(ErrorCode::InvalidArgument, "player block is empty");
    for (auto i : partition_[nu]) {
      if (i >= owner.size())
        throw Error(ErrorCode::DimensionMismatch, "partition index out of range");
      if (owner[i] != -1)
        throw Error(ErrorCode::InvalidArgument, "partition blocks overlap");
      owner[i] = static_cast<int>(nu);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw Error(ErrorCode::InvalidArgument, "partition does not cover all coordinates");
  for (const auto& o : objectives_)
    if (!o.fn) throw Error(ErrorCode::InvalidArgument, "empty objective");
}

Point Game::with_block(const Point& x, std::size_t nu, const Point& z) const {
  std::vector<double> c(x.coords().begin(), x.coords().end());
  for (auto i : partition_[nu]) c[i] = z[i];
  return Point(std::move(c));
}

bool Game::same_rivals(const Point& x, const Point& y, std::size_t nu) const {
  for (std::size_t mu = 0; mu < partition_.size(); ++mu) {
    if (mu == nu) continue;
    for (auto i : partition_[mu])
      if (x[i] != y[i]) return false;
  }
  return true;
}

Bifunction nikaido_isoda(const Game& game) {
  auto g = std::make_shared<const Game>(game);
  return Bifunction(
      [g](const Point& x, const Point& y) {
        double s = 0.0;
        for (std::size_t nu = 0; nu < g->players(); ++nu)
          s += g->objective(nu, y) - g->objective(nu, g->with_block(y, nu, x));
        return s;
      },
      "nikaido-isoda");
}

std::vector<ConstraintMap> joint_constraint_map(const Domain& C, const Game& game) {
  if (C.dim() != game.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "joint set dimension " + std::to_string(C.dim()) +
                    " differs from game dimension " + std::to_string(game.dim()));
  auto set = std::make_shared<const Domain>(C);
  auto g = std::make_shared<const Game>(game);
  std::vector<ConstraintMap> maps;
  for (std::size_t nu = 0; nu < game.players(); ++nu)
    maps.emplace_back(
        [set, g, nu](const Point& x, const Point& y) {
          return set->contains(g->with_block(x, nu, y));
        },
        "K_" + std::to_string(nu + 1) + "(x^-" + std::to_string(nu + 1) + ")");
  return maps;
}

GneCheck verify_gne(const Game& game, const Point& x, const PointSample& sample,
                    Tolerance tol) {
  GneCheck r;
  const auto K = joint_constraint_map(game.domain(), game);
  for (std::size_t nu = 0; nu < game.players(); ++nu) {
    const double at_x = game.objective(nu, x);
    double best = 0.0;
    for (const auto& y : sample) {
      if (!game.same_rivals(x, y, nu) || !K[nu](x, y)) continue;
      best = std::max(best, at_x - game.objective(nu, y));
    }
    r.per_player.push_back(best);
    r.worst_improvement = std::max(r.worst_improvement, best);
    if (best > tol.value) r.pass = false;
  }
  return r;
}

GnepReport solve_gnep(const Game& game, const PointSample& sample, Tolerance tol) {
  GnepReport r{solve_mep(nikaido_isoda(game), sample, tol), {}, {}};
  for (const auto& s : r.mep.solutions) {
    auto check = verify_gne(game, s.point, sample, tol);
    if (check.pass)
      r.equilibria.push_back(s.point);
    else
      r.rejected.emplace_back(s.point, std::move(check));
  }
  return r;
}

}  // namespace equilib
