#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "certificate.hpp"
#include "core.hpp"

namespace equilib {

enum class FipVariant {
  Fip,       // witness searched over the whole sample
  FipStar,   // witness searched over the simplex grid of A
  InSubset,  // witness searched inside A itself
  Operator,  // operator form: <a*, x - a> <= 0 for all a in A, a* in T(a)
};

std::string_view to_string(FipVariant v);

struct FipEntry {
  std::vector<std::size_t> subset;  // indices into the sample
  Point witness;
};

struct FipReport {
  Verdict verdict = Verdict::Holds;
  FipVariant variant = FipVariant::Fip;
  std::vector<Point> violated_subset;
  // Subsets checked before the verdict was reached, with their witnesses.
  std::vector<FipEntry> witness_table;
  unsigned max_subset = 0;
  unsigned simplex_subdivisions = 0;
  double tol = 0.0;
  std::size_t subsets_checked = 0;

  bool holds() const { return verdict == Verdict::Holds; }
};

/// First candidate x (in order) with max_{a in A} f(a, x) <= tol.
std::optional<Point> find_witness(const Bifunction& f, std::span<const Point> A,
                                  std::span<const Point> candidates,
                                  Tolerance tol = {});

/// Finite intersection property: every subset A with |A| <= max_subset has
/// some x in the sample with f(a, x) <= tol for all a in A.
FipReport check_fip(const Bifunction& f, const PointSample& sample,
                    unsigned max_subset, Tolerance tol = {});

/// Star variant: the witness must come from simplex_grid(A, subdivisions).
FipReport check_fip_star(const Bifunction& f, const PointSample& sample,
                         unsigned max_subset, unsigned simplex_subdivisions,
                         Tolerance tol = {});

/// Witness restricted to A. With an unbounded subset budget this is the
/// subset characterization of cyclic quasi-monotonicity.
FipReport check_subset_witness(const Bifunction& f, const PointSample& sample,
                               unsigned max_subset, Tolerance tol = {});

/// f(x, x) <= tol for every sample point. Not implied by fip.
Certificate diagonal_check(const Bifunction& f, const PointSample& sample,
                           Tolerance tol = {});

/// Confirms a report by exhaustive re-evaluation: for VIOLATED no candidate of
/// the violated subset works, for HOLDS every recorded witness works.
bool reverify(const FipReport& report, const Bifunction& f,
              const PointSample& sample);

}  // namespace equilib
