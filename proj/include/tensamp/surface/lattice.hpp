#pragma once

#include <string>
#include <vector>

#include "tensamp/exact/linear.hpp"

namespace tensamp {

/// Numerical classes are plain coefficient vectors in the lattice basis.
using DivisorClass = RatVec;

struct IntersectionLattice {
  std::size_t rank = 0;
  RatMat gram;
  std::vector<std::string> basis_names;

  /// Shape and symmetry checks; with `hodge_index` also requires signature (1, rank-1).
  void validate(bool hodge_index) const;
  bool has_hodge_signature() const;
  std::size_t index_of(const std::string& basis_name) const;  // rank() if absent
};

/// D^t * gram * E.
Rat pair(const IntersectionLattice& lat, const DivisorClass& d, const DivisorClass& e);

inline Rat self_intersection(const IntersectionLattice& lat, const DivisorClass& d) { return pair(lat, d, d); }

}  // namespace tensamp
