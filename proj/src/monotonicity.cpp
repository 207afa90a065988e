#include "monotonicity.hpp"

#include <algorithm>
#include <array>

#include "enumerate.hpp"

namespace equilib {

namespace {

constexpr std::array<std::pair<PropertyKind, std::string_view>, 7> kKindNames{{
    {PropertyKind::Monotone, "monotone"},
    {PropertyKind::PseudoMonotone, "pseudo-monotone"},
    {PropertyKind::QuasiMonotone, "quasi-monotone"},
    {PropertyKind::CyclicMonotone, "cyclic-monotone"},
    {PropertyKind::CyclicQuasiMonotone, "cyclic-quasi-monotone"},
    {PropertyKind::ProperlyQuasiMonotone, "properly-quasi-monotone"},
    {PropertyKind::UpperSign, "upper-sign"},
}};

constexpr std::string_view kSegmentConvention = "x_t = (1-t)*x + t*y";

Certificate make_cert(std::string_view property, const Budget& budget,
                      Tolerance tol) {
  Certificate c;
  c.property = std::string(property);
  c.budget = budget;
  c.tol = tol.value;
  return c;
}

void violate(Certificate& c, Witness w) {
  c.verdict = Verdict::Violated;
  c.witness = std::move(w);
}

// Pair-based classes. Monotone is symmetric so only i <= j is visited.
Certificate check_pairs(const Bifunction& f, const PointSample& s,
                        PropertyKind kind, const Budget& budget, Tolerance tol) {
  auto cert = make_cert(to_string(kind), budget, tol);
  const ValueTable t(f, s);
  const double eps = tol.value;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = kind == PropertyKind::Monotone ? i : 0; j < n; ++j) {
      ++cert.stats.checks;
      const double fxy = t(i, j);
      const double fyx = t(j, i);
      bool bad = false;
      switch (kind) {
        case PropertyKind::Monotone: bad = fxy + fyx > eps; break;
        case PropertyKind::PseudoMonotone: bad = fxy >= -eps && fyx > eps; break;
        case PropertyKind::QuasiMonotone: bad = fxy > eps && fyx > eps; break;
        default: break;
      }
      if (bad) {
        violate(cert, PairWitness{s[i], s[j], fxy, fyx});
        return cert;
      }
    }
  }
  return cert;
}

Certificate check_cycles(const Bifunction& f, const PointSample& s,
                         PropertyKind kind, const Budget& budget, Tolerance tol) {
  auto cert = make_cert(to_string(kind), budget, tol);
  const ValueTable t(f, s);
  const double eps = tol.value;
  detail::for_each_cycle(
      s.size(), budget.max_cycle_len, [&](const std::vector<std::size_t>& cyc) {
        ++cert.stats.checks;
        const std::size_t len = cyc.size();
        double sum = 0.0;
        bool all_positive = true;
        for (std::size_t k = 0; k < len; ++k) {
          const double v = t(cyc[k], cyc[(k + 1) % len]);
          sum += v;
          all_positive = all_positive && v > eps;
        }
        const bool bad = kind == PropertyKind::CyclicMonotone ? sum > eps
                                                              : all_positive;
        if (!bad) return true;
        CycleWitness w;
        for (std::size_t k = 0; k <= len; ++k) w.points.push_back(s[cyc[k % len]]);
        for (std::size_t k = 0; k < len; ++k)
          w.edge_values.push_back(t(cyc[k], cyc[(k + 1) % len]));
        violate(cert, std::move(w));
        return false;
      });
  return cert;
}

Certificate check_properly_quasi(const Bifunction& f, const PointSample& s,
                                 const Budget& budget, Tolerance tol) {
  auto cert = make_cert(to_string(PropertyKind::ProperlyQuasiMonotone), budget, tol);
  const double eps = tol.value;
  detail::for_each_subset(
      s.size(), budget.max_subset, [&](const std::vector<std::size_t>& idx) {
        std::vector<Point> A;
        for (auto i : idx) A.push_back(s[i]);
        const auto hull = simplex_grid(A, budget.simplex_subdivisions);
        for (const auto& x : hull) {
          ++cert.stats.checks;
          std::vector<double> vals;
          bool some_nonpositive = false;
          for (const auto& a : A) {
            vals.push_back(f(a, x));
            if (vals.back() <= eps) {
              some_nonpositive = true;
              break;
            }
          }
          if (!some_nonpositive) {
            violate(cert, SubsetWitness{A, x, std::move(vals)});
            return false;
          }
        }
        return true;
      });
  return cert;
}

}  // namespace

std::string_view to_string(PropertyKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<PropertyKind> parse_property_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::Holds ? "HOLDS" : "VIOLATED";
}

Certificate check_property(const Bifunction& f, const PointSample& sample,
                           PropertyKind kind, const Budget& budget,
                           Tolerance tol) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  switch (kind) {
    case PropertyKind::Monotone:
    case PropertyKind::PseudoMonotone:
    case PropertyKind::QuasiMonotone:
      return check_pairs(f, sample, kind, budget, tol);
    case PropertyKind::CyclicMonotone:
    case PropertyKind::CyclicQuasiMonotone:
      if (budget.max_cycle_len == 0)
        throw Error(ErrorCode::InvalidArgument, "max_cycle_len must be >= 1");
      return check_cycles(f, sample, kind, budget, tol);
    case PropertyKind::ProperlyQuasiMonotone:
      if (budget.max_subset == 0 || budget.simplex_subdivisions == 0)
        throw Error(ErrorCode::InvalidArgument,
                    "max_subset and simplex_subdivisions must be >= 1");
      return check_properly_quasi(f, sample, budget, tol);
    case PropertyKind::UpperSign: {
      auto c = check_upper_sign(f, sample, budget.segment_subdivisions, tol);
      c.budget = budget;
      return c;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown property kind");
}

Certificate check_upper_sign(const Bifunction& f, const PointSample& sample,
                             unsigned segment_subdivisions, Tolerance tol) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  if (segment_subdivisions < 2)
    throw Error(ErrorCode::InvalidResolution, "segment subdivisions must be >= 2");
  Budget budget;
  budget.segment_subdivisions = segment_subdivisions;
  auto cert = make_cert(to_string(PropertyKind::UpperSign), budget, tol);
  cert.notes.emplace_back(kSegmentConvention);
  const double eps = tol.value;
  const ValueTable t(f, sample);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      ++cert.stats.checks;
      const double fxy = t(i, j);
      // Conclusion already satisfied: nothing to test.
      if (fxy >= -eps) continue;
      const Point& x = sample[i];
      const auto seg = segment_sample(x, sample[j], segment_subdivisions);
      std::vector<double> premise;
      bool premise_holds = true;
      for (const auto& xt : seg) {
        premise.push_back(f(xt, x));
        if (premise.back() > eps) {
          premise_holds = false;
          break;
        }
      }
      if (premise_holds) {
        violate(cert, SegmentWitness{x, sample[j], seg.points(), std::move(premise), fxy});
        return cert;
      }
    }
  }
  return cert;
}

CycleWitness extract_violation_cycle(const Bifunction& f, const PointSample& A,
                                     Tolerance tol) {
  if (A.empty()) throw Error(ErrorCode::EmptyInput, "empty point set");
  const double eps = tol.value;
  const ValueTable t(f, A);
  const std::size_t n = A.size();
  for (std::size_t x = 0; x < n; ++x) {
    double worst = t(0, x);
    for (std::size_t a = 1; a < n; ++a) worst = std::max(worst, t(a, x));
    if (worst <= eps)
      throw Error(ErrorCode::NoViolation,
                  "point " + A[x].to_string() +
                      " satisfies max_a f(a, x) <= tol; no violating cycle");
  }

  // path[k] is the index i(k+1); f(A[path[k+1]], A[path[k]]) > tol.
  std::vector<std::size_t> path{0};
  std::vector<std::size_t> first_seen(n, n);
  first_seen[0] = 0;
  while (true) {
    const std::size_t cur = path.back();
    std::size_t next = n;
    for (std::size_t j = 0; j < n; ++j)
      if (t(j, cur) > eps) {
        next = j;
        break;
      }
    if (first_seen[next] != n) {
      // Repetition: next == path[m]. Reverse the loop path[m..k].
      const std::size_t m = first_seen[next];
      CycleWitness w;
      w.points.push_back(A[path[m]]);
      for (std::size_t k = path.size(); k-- > m + 1;) w.points.push_back(A[path[k]]);
      w.points.push_back(A[path[m]]);
      for (std::size_t e = 0; e + 1 < w.points.size(); ++e)
        w.edge_values.push_back(f(w.points[e], w.points[e + 1]));
      return w;
    }
    first_seen[next] = path.size();
    path.push_back(next);
  }
}

bool replay(const Certificate& cert, const Bifunction& f) {
  if (cert.holds()) return true;
  if (!cert.witness) return false;
  const double eps = cert.tol;
  const auto kind = parse_property_kind(cert.property);
  const Witness& w = *cert.witness;

  if (const auto* p = std::get_if<PairWitness>(&w)) {
    const double fxy = f(p->x, p->y);
    const double fyx = f(p->y, p->x);
    if (fxy != p->f_xy || fyx != p->f_yx) return false;
    if (kind == PropertyKind::Monotone) return fxy + fyx > eps;
    if (kind == PropertyKind::PseudoMonotone) return fxy >= -eps && fyx > eps;
    if (kind == PropertyKind::QuasiMonotone) return fxy > eps && fyx > eps;
    return false;
  }
  if (const auto* c = std::get_if<CycleWitness>(&w)) {
    if (c->points.size() < 2 || !(c->points.front() == c->points.back()))
      return false;
    double sum = 0.0;
    bool all_positive = true;
    for (std::size_t k = 0; k + 1 < c->points.size(); ++k) {
      const double v = f(c->points[k], c->points[k + 1]);
      sum += v;
      all_positive = all_positive && v > eps;
    }
    if (kind == PropertyKind::CyclicMonotone) return sum > eps;
    return all_positive;
  }
  if (const auto* s = std::get_if<SubsetWitness>(&w)) {
    for (const auto& a : s->subset)
      if (f(a, s->x) <= eps) return false;
    return !s->subset.empty();
  }
  if (const auto* p = std::get_if<PointWitness>(&w)) {
    return f(p->x, p->x) > eps;
  }
  if (const auto* g = std::get_if<SegmentWitness>(&w)) {
    if (!(f(g->x, g->y) < -eps)) return false;
    for (const auto& xt : g->segment)
      if (f(xt, g->x) > eps) return false;
    return true;
  }
  return false;
}

}  // namespace equilib
