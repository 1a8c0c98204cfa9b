#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensamp/cone/cone.hpp"
#include "tensamp/surface/lattice.hpp"

namespace tensamp {

/// A catalog entry is taken to be the class of an integral curve.
struct CurveEntry {
  std::string name;
  DivisorClass cls;
};

struct SurfaceModel {
  IntersectionLattice lattice;
  DivisorClass canonical;
  std::vector<CurveEntry> curves;

  /// Every integral curve with negative self-intersection is in the catalog.
  bool neg_curves_complete = false;
  /// The catalog classes generate the closed cone of curves.
  bool curve_cone_generated = false;
  bool proper_positive_dim = true;
  /// Request the signature (1, rank-1) check on validation.
  bool hodge_index = false;

  std::optional<DivisorClass> ample_witness;
  /// Generators of the pseudo-effective cone, taken as exact cone data.
  std::optional<std::vector<DivisorClass>> pseff_gens;
  /// Known nef classes (informational; not consulted by the classifiers).
  std::optional<std::vector<DivisorClass>> nef_gens;

  std::size_t rank() const { return lattice.rank; }
  Rat pair(const DivisorClass& d, const DivisorClass& e) const { return tensamp::pair(lattice, d, e); }
  const CurveEntry* find_curve(const std::string& name) const;
  /// Catalog indices with C^2 < 0, in catalog order.
  std::vector<std::size_t> negative_curves() const;
  ConeQ pseff_cone() const;   // requires pseff_gens
  ConeQ catalog_cone() const;

  /// Structural checks: sizes, nonzero distinct-named curves, catalog inside
  /// the pseudo-effective cone, and the numerical part of the ample witness
  /// checks (A^2 > 0, positive on every catalog curve and pseff generator).
  /// The classifier-level witness check lives in validate_ample_witness.
  void validate() const;
};

}  // namespace tensamp
