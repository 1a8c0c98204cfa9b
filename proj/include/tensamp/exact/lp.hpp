#pragma once

// Exact feasibility for systems of linear (in)equalities over Q.
//
// A system { a_i . x  (>=|>|=)  b_i } is decided with a two-phase simplex
// (Bland's smallest-index rule, so runs are reproducible). Strict rows are
// handled by maximizing a shared slack s <= 1 subtracted from every strict
// row: the system is feasible iff the optimum has s > 0.
//
// Infeasibility is certified by Motzkin multipliers y (free on equalities,
// y >= 0 on inequalities) with
//     sum_i y_i a_i = 0,   sum_i y_i b_i >= 0,
//     sum_i y_i b_i + sum_{strict i} y_i = 1,
// which is itself found by a phase-one simplex on the alternative system.
// Expanding the combination against any candidate x gives 0 >= y.b with at
// least one strict step, a contradiction.

#include <optional>
#include <vector>

#include "tensamp/exact/linear.hpp"

namespace tensamp {

enum class Relation { GreaterEqual, Greater, Equal };

/// coeffs . x  rel  rhs
struct LinearConstraint {
  RatVec coeffs;
  Relation relation = Relation::GreaterEqual;
  Rat rhs;
};

struct FarkasCertificate {
  /// One multiplier per input constraint, in input order.
  std::vector<Rat> multipliers;
};

struct FeasibilityResult {
  std::optional<RatVec> point;
  std::optional<FarkasCertificate> certificate;

  bool feasible() const { return point.has_value(); }
};

/// Decides feasibility over Q^dim. An empty system is feasible at x = 0.
/// Exactly one of point / certificate is populated.
FeasibilityResult lp_feasible(std::size_t dim, const std::vector<LinearConstraint>& constraints);

/// True iff x satisfies every constraint exactly.
bool satisfies_all(const std::vector<LinearConstraint>& constraints, const RatVec& x);

/// Re-checks a Farkas certificate by direct expansion.
bool verify_infeasibility(const std::vector<LinearConstraint>& constraints,
                          const FarkasCertificate& certificate);

// Standard-form kernel, exposed for tests: maximize c.z subject to A z = b, z >= 0.
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RatVec z;
  Rat objective;
};

LpSolution simplex_maximize(const RatMat& a, const RatVec& b, const RatVec& c);

}  // namespace tensamp
