#include "solvers.hpp"

#include <algorithm>
#include <limits>

#include "fip.hpp"
#include "monotonicity.hpp"

namespace equilib {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// membership[i * n + j] <=> sample[j] in K(sample[i]).
std::vector<char> membership_table(const ConstraintMap& K, const PointSample& s) {
  const std::size_t n = s.size();
  std::vector<char> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = K(s[i], s[j]) ? 1 : 0;
  return m;
}

SolutionSet empty_set(ProblemKind p, const PointSample& s, Tolerance tol) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  SolutionSet out;
  out.problem = p;
  out.tol = tol.value;
  out.sample_size = s.size();
  return out;
}

Inclusion included(const SolutionSet& a, const SolutionSet& b) {
  Inclusion inc;
  for (const auto& s : a.solutions) {
    const bool found = std::any_of(b.solutions.begin(), b.solutions.end(),
                                   [&](const Solution& t) { return t.index == s.index; });
    if (!found) {
      inc.holds = false;
      inc.offending = s.point;
      return inc;
    }
  }
  return inc;
}

// Upper sign implication restricted to pairs (x, y) with y in K(x).
bool upper_sign_at(const Bifunction& f, const PointSample& s, std::size_t x,
                   const std::vector<char>& member, unsigned segment_subdivisions,
                   Tolerance tol) {
  const std::size_t n = s.size();
  for (std::size_t y = 0; y < n; ++y) {
    if (!member[x * n + y]) continue;
    if (f(s[x], s[y]) >= -tol.value) continue;
    bool premise = true;
    for (const auto& xt : segment_sample(s[x], s[y], segment_subdivisions))
      if (f(xt, s[x]) > tol.value) {
        premise = false;
        break;
      }
    if (premise) return false;
  }
  return true;
}

}  // namespace

ConstraintMap::ConstraintMap(Membership contains, std::string description)
    : fn_(std::make_shared<const Membership>(std::move(contains))),
      description_(std::move(description)) {
  if (!*fn_) throw Error(ErrorCode::InvalidArgument, "empty constraint map");
}

ConstraintMap ConstraintMap::whole_domain() {
  return ConstraintMap([](const Point&, const Point&) { return true; }, "K(x) = C");
}

std::string_view to_string(ProblemKind p) {
  switch (p) {
    case ProblemKind::EP: return "ep";
    case ProblemKind::MEP: return "mep";
    case ProblemKind::QEP: return "qep";
    case ProblemKind::MQEP: return "mqep";
  }
  return "unknown";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view name) {
  for (auto p : {ProblemKind::EP, ProblemKind::MEP, ProblemKind::QEP, ProblemKind::MQEP})
    if (to_string(p) == name) return p;
  return std::nullopt;
}

std::vector<Point> SolutionSet::points() const {
  std::vector<Point> out;
  for (const auto& s : solutions) out.push_back(s.point);
  return out;
}

SolutionSet solve_ep(const Bifunction& f, const PointSample& sample, Tolerance tol) {
  auto out = empty_set(ProblemKind::EP, sample, tol);
  const ValueTable t(f, sample);
  for (std::size_t x = 0; x < sample.size(); ++x) {
    double worst = kInf;
    for (std::size_t y = 0; y < sample.size(); ++y) worst = std::min(worst, t(x, y));
    if (worst >= -tol.value) out.solutions.push_back({sample[x], x, worst});
  }
  return out;
}

SolutionSet solve_mep(const Bifunction& f, const PointSample& sample, Tolerance tol) {
  auto out = empty_set(ProblemKind::MEP, sample, tol);
  const ValueTable t(f, sample);
  const std::size_t n = sample.size();
  std::vector<char> alive(n, 1);
  std::vector<double> worst(n, -kInf);
  for (std::size_t x = 0; x < n; ++x) {
    // alive &= F_x
    for (std::size_t y = 0; y < n; ++y) {
      if (t(x, y) > tol.value) alive[y] = 0;
      worst[y] = std::max(worst[y], t(x, y));
    }
  }
  for (std::size_t y = 0; y < n; ++y)
    if (alive[y]) out.solutions.push_back({sample[y], y, 0.0 - worst[y]});
  return out;
}

BridgeReport bridge_ep_mep(const Bifunction& f, const PointSample& sample,
                           const Budget& budget, Tolerance tol) {
  BridgeReport r{solve_ep(f, sample, tol),
                 solve_mep(f, sample, tol),
                 check_property(f, sample, PropertyKind::PseudoMonotone, budget, tol),
                 check_property(f.negated(), sample, PropertyKind::PseudoMonotone,
                                budget, tol),
                 check_upper_sign(f, sample, budget.segment_subdivisions, tol),
                 {},
                 {},
                 {}};
  r.ep_in_mep = included(r.ep, r.mep);
  r.mep_in_ep = included(r.mep, r.ep);
  auto flag = [&](const Certificate& hyp, const Inclusion& inc, std::string_view what,
                  std::string_view point_kind, std::string_view missing_from) {
    if (!hyp.holds() || inc.holds) return;
    r.artifacts.push_back(std::string(what) + " holds on the sample but " +
                          std::string(point_kind) + " " + inc.offending->to_string() +
                          " is not " + std::string(missing_from) +
                          " (discretization artifact)");
  };
  flag(r.pseudo, r.ep_in_mep, "f pseudo-monotone", "EP point", "a Minty solution");
  flag(r.neg_pseudo, r.mep_in_ep, "-f pseudo-monotone", "Minty point", "an EP solution");
  flag(r.upper_sign, r.mep_in_ep, "upper sign property", "Minty point", "an EP solution");
  return r;
}

SelectionMapResult selection_map(const Bifunction& f, const ConstraintMap& K,
                                 const Point& x, const PointSample& sample,
                                 Tolerance tol) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  const std::size_t n = sample.size();
  std::vector<char> in_k(n);
  std::vector<Point> kx;
  for (std::size_t j = 0; j < n; ++j) {
    in_k[j] = K(x, sample[j]) ? 1 : 0;
    if (in_k[j]) kx.push_back(sample[j]);
  }
  if (kx.empty())
    throw Error(ErrorCode::EmptyConstraint,
                "K(" + x.to_string() + ") contains no sample point");

  // y survives iff y is in G_x(w) for every w. For w outside K(x) G_x(w) is
  // the whole sample; otherwise G_x(w) = F_w intersected with K(x).
  std::vector<char> alive(n, 1);
  for (std::size_t w = 0; w < n; ++w) {
    if (!in_k[w]) continue;
    for (std::size_t y = 0; y < n; ++y)
      if (alive[y] && (!in_k[y] || f(sample[w], sample[y]) > tol.value)) alive[y] = 0;
  }
  SelectionMapResult r;
  r.x = x;
  for (std::size_t y = 0; y < n; ++y)
    if (alive[y]) r.image.push_back(sample[y]);
  r.empty = r.image.empty();
  if (r.empty) {
    const PointSample local(kx, nullptr, 0);
    r.discretization_warning =
        check_fip(f, local, Budget{}.max_subset, tol).holds();
  }
  return r;
}

SolutionSet solve_mqep(const Bifunction& f, const ConstraintMap& K,
                       const PointSample& sample, Tolerance tol) {
  auto out = empty_set(ProblemKind::MQEP, sample, tol);
  const ValueTable t(f, sample);
  const auto member = membership_table(K, sample);
  const std::size_t n = sample.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!member[x * n + x]) continue;
    double worst = -kInf;
    for (std::size_t y = 0; y < n; ++y)
      if (member[x * n + y]) worst = std::max(worst, t(y, x));
    if (worst <= tol.value) out.solutions.push_back({sample[x], x, 0.0 - worst});
  }
  return out;
}

QepReport solve_qep(const Bifunction& f, const ConstraintMap& K,
                    const PointSample& sample, const Budget& budget, Tolerance tol) {
  QepReport r;
  r.qep = empty_set(ProblemKind::QEP, sample, tol);
  const ValueTable t(f, sample);
  const auto member = membership_table(K, sample);
  const std::size_t n = sample.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!member[x * n + x]) continue;
    double worst = kInf;
    for (std::size_t y = 0; y < n; ++y)
      if (member[x * n + y]) worst = std::min(worst, t(x, y));
    if (worst >= -tol.value) r.qep.solutions.push_back({sample[x], x, worst});
  }
  r.qep.notes.push_back(
      "assumed, not checked: M = {(x,y) : f(x,y) <= 0} closed; K closed and lsc");

  r.mqep = solve_mqep(f, K, sample, tol);
  for (const auto& s : r.mqep.solutions) {
    UpgradeNote note{s.point,
                     upper_sign_at(f, sample, s.index, member,
                                   budget.segment_subdivisions, tol),
                     false};
    note.solves_qep = std::any_of(r.qep.solutions.begin(), r.qep.solutions.end(),
                                  [&](const Solution& q) { return q.index == s.index; });
    r.upgrades.push_back(note);
  }
  return r;
}

bool reverify(const SolutionSet& set, const Bifunction& f, const PointSample& sample,
              const ConstraintMap& K) {
  const double eps = set.tol;
  for (const auto& s : set.solutions) {
    const Point& x = s.point;
    const bool quasi = set.problem == ProblemKind::QEP || set.problem == ProblemKind::MQEP;
    if (quasi && !K(x, x)) return false;
    for (const auto& y : sample) {
      if (quasi && !K(x, y)) continue;
      switch (set.problem) {
        case ProblemKind::EP:
        case ProblemKind::QEP:
          if (f(x, y) < -eps) return false;
          break;
        case ProblemKind::MEP:
        case ProblemKind::MQEP:
          if (f(y, x) > eps) return false;
          break;
      }
    }
  }
  return true;
}

}  // namespace equilib
