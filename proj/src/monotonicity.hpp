#pragma once

#include <optional>
#include <string_view>

#include "certificate.hpp"
#include "core.hpp"

namespace equilib {

enum class PropertyKind {
  Monotone,
  PseudoMonotone,
  QuasiMonotone,
  CyclicMonotone,
  CyclicQuasiMonotone,
  ProperlyQuasiMonotone,
  UpperSign,
};

std::string_view to_string(PropertyKind kind);
std::optional<PropertyKind> parse_property_kind(std::string_view name);

/// Decides a generalized-monotonicity class on a finite sample.
///
/// "<= 0" is tested as <= tol, "> 0" as > tol and ">= 0" as >= -tol. Cycles
/// range over distinct sample points up to budget.max_cycle_len; subsets up
/// to budget.max_subset; convex hulls are replaced by simplex_grid and open
/// segments by segment_sample. A VIOLATED certificate carries the first
/// counterexample in enumeration order.
Certificate check_property(const Bifunction& f, const PointSample& sample,
                           PropertyKind kind, const Budget& budget = {},
                           Tolerance tol = {});

/// Upper sign property, with x_t = (1-t) x + t y.
Certificate check_upper_sign(const Bifunction& f, const PointSample& sample,
                             unsigned segment_subdivisions, Tolerance tol = {});

/// Builds a cycle with every edge value above tol from a set A on which no
/// point x has max_{a in A} f(a, x) <= tol. Starting at the first point of A
/// it repeatedly steps to the smallest a with f(a, current) > tol until a
/// point repeats, then returns the loop in reverse. Throws NoViolation when
/// some x in A does satisfy max_{a in A} f(a, x) <= tol.
CycleWitness extract_violation_cycle(const Bifunction& f, const PointSample& A,
                                     Tolerance tol = {});

/// Re-evaluates f on the stored witness and confirms that the violated
/// inequality is reproduced. HOLDS certificates trivially replay.
bool replay(const Certificate& cert, const Bifunction& f);

}  // namespace equilib
