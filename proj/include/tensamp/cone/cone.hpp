#pragma once

// Finitely generated rational polyhedral cones.

#include <optional>
#include <vector>

#include "tensamp/exact/linear.hpp"

namespace tensamp {

struct ConeQ {
  std::size_t ambient_dim = 0;
  /// Nonzero generators; an empty list is the zero cone.
  std::vector<RatVec> generators;

  /// Throws InvariantError on zero or wrongly sized generators.
  void validate() const;
};

struct HalfSpaceQ {
  RatVec normal;
  bool strict = false;

  bool contains(const RatVec& x) const;
};

struct MembershipResult {
  bool member = false;
  /// On membership: x = sum coefficients[i] * generators[i], all >= 0.
  std::optional<RatVec> coefficients;
  /// On non-membership: primitive integer l with l.g >= 0 for all g and l.x < 0.
  std::optional<RatVec> functional;
};

MembershipResult cone_contains(const ConeQ& c, const RatVec& x);

/// Re-checks either branch of a membership result by direct arithmetic.
bool verify_membership(const ConeQ& c, const RatVec& x, const MembershipResult& result);

/// Topological interior. A cone that is not full-dimensional has empty interior.
bool cone_interior_contains(const ConeQ& c, const RatVec& x);

constexpr std::size_t kDualConeMaxDim = 12;

/// Generators of {y : y.g >= 0 for all g}: a basis of the lineality space in
/// both signs, then the extreme rays of the pointed part, all primitive and
/// sorted. Throws CapacityError above kDualConeMaxDim.
ConeQ dual_cone(const ConeQ& c);

bool subspace_meets_interior(const std::vector<RatVec>& span, const ConeQ& c);

/// Extremal rays of c in (u, v) coordinates, primitive and in counterclockwise
/// order. For a pointed cone the first ray has every other ray counterclockwise
/// of it; cones containing a line list their deduplicated generators by angle
/// from the positive first axis.
std::vector<RatVec> slice2d(const ConeQ& c, const RatVec& u, const RatVec& v);

}  // namespace tensamp
