#include "fip.hpp"

#include "enumerate.hpp"

namespace equilib {

namespace {

FipReport make_report(FipVariant variant, unsigned max_subset,
                      unsigned subdivisions, Tolerance tol) {
  FipReport r;
  r.variant = variant;
  r.max_subset = max_subset;
  r.simplex_subdivisions = subdivisions;
  r.tol = tol.value;
  return r;
}

void require(const PointSample& sample, unsigned max_subset) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  if (max_subset == 0)
    throw Error(ErrorCode::InvalidArgument, "max_subset must be >= 1");
}

std::vector<Point> gather(const PointSample& s, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(s[i]);
  return out;
}

// Table-driven search over sample candidates: cand_ok(idx, x) decides x.
template <typename CandidateOk, typename Candidates>
FipReport run(FipReport report, const PointSample& sample, Candidates&& candidates,
              CandidateOk&& ok) {
  detail::for_each_subset(
      sample.size(), report.max_subset, [&](const std::vector<std::size_t>& idx) {
        ++report.subsets_checked;
        for (std::size_t x : candidates(idx)) {
          if (ok(idx, x)) {
            report.witness_table.push_back({idx, sample[x]});
            return true;
          }
        }
        report.verdict = Verdict::Violated;
        report.violated_subset = gather(sample, idx);
        return false;
      });
  return report;
}

}  // namespace

std::string_view to_string(FipVariant v) {
  switch (v) {
    case FipVariant::Fip: return "fip";
    case FipVariant::FipStar: return "fip_star";
    case FipVariant::InSubset: return "subset_witness";
    case FipVariant::Operator: return "operator_fip";
  }
  return "unknown";
}

std::optional<Point> find_witness(const Bifunction& f, std::span<const Point> A,
                                  std::span<const Point> candidates,
                                  Tolerance tol) {
  for (const auto& x : candidates) {
    bool ok = true;
    for (const auto& a : A)
      if (f(a, x) > tol.value) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

FipReport check_fip(const Bifunction& f, const PointSample& sample,
                    unsigned max_subset, Tolerance tol) {
  require(sample, max_subset);
  const ValueTable t(f, sample);
  std::vector<std::size_t> all(sample.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return run(make_report(FipVariant::Fip, max_subset, 0, tol), sample,
             [&](const std::vector<std::size_t>&) -> const std::vector<std::size_t>& {
               return all;
             },
             [&](const std::vector<std::size_t>& idx, std::size_t x) {
               for (auto a : idx)
                 if (t(a, x) > tol.value) return false;
               return true;
             });
}

FipReport check_subset_witness(const Bifunction& f, const PointSample& sample,
                               unsigned max_subset, Tolerance tol) {
  require(sample, max_subset);
  const ValueTable t(f, sample);
  return run(make_report(FipVariant::InSubset, max_subset, 0, tol), sample,
             [](const std::vector<std::size_t>& idx) { return idx; },
             [&](const std::vector<std::size_t>& idx, std::size_t x) {
               for (auto a : idx)
                 if (t(a, x) > tol.value) return false;
               return true;
             });
}

FipReport check_fip_star(const Bifunction& f, const PointSample& sample,
                         unsigned max_subset, unsigned simplex_subdivisions,
                         Tolerance tol) {
  require(sample, max_subset);
  if (simplex_subdivisions == 0)
    throw Error(ErrorCode::InvalidArgument, "simplex_subdivisions must be >= 1");
  auto report = make_report(FipVariant::FipStar, max_subset, simplex_subdivisions, tol);
  detail::for_each_subset(
      sample.size(), max_subset, [&](const std::vector<std::size_t>& idx) {
        ++report.subsets_checked;
        const auto A = gather(sample, idx);
        const auto hull = simplex_grid(A, simplex_subdivisions);
        if (auto x = find_witness(f, A, hull.points(), tol)) {
          report.witness_table.push_back({idx, *x});
          return true;
        }
        report.verdict = Verdict::Violated;
        report.violated_subset = A;
        return false;
      });
  return report;
}

Certificate diagonal_check(const Bifunction& f, const PointSample& sample,
                           Tolerance tol) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
  Certificate c;
  c.property = "diagonal";
  c.tol = tol.value;
  for (const auto& x : sample) {
    ++c.stats.checks;
    const double v = f(x, x);
    if (v > tol.value) {
      c.verdict = Verdict::Violated;
      c.witness = PointWitness{x, v};
      return c;
    }
  }
  return c;
}

bool reverify(const FipReport& report, const Bifunction& f,
              const PointSample& sample) {
  const Tolerance tol(report.tol);
  auto candidates_for = [&](const std::vector<Point>& A) -> std::vector<Point> {
    switch (report.variant) {
      case FipVariant::FipStar:
        return simplex_grid(A, report.simplex_subdivisions).points();
      case FipVariant::InSubset: return A;
      default: return sample.points();
    }
  };
  if (report.variant == FipVariant::Operator) return false;
  for (const auto& e : report.witness_table) {
    const auto A = gather(sample, e.subset);
    const Point w[] = {e.witness};
    if (!find_witness(f, A, w, tol)) return false;
  }
  if (report.holds()) return report.violated_subset.empty();
  const auto& A = report.violated_subset;
  return !A.empty() && !find_witness(f, A, candidates_for(A), tol);
}

}  // namespace equilib
