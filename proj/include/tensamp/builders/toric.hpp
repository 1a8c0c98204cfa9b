#pragma once

// Smooth complete toric surfaces from the cyclic list a_i = D_i^2 of
// boundary self-intersections. Rays: v0 = (1,0), v1 = (0,1),
// v_{i+1} = -v_{i-1} - a_i v_i (indices mod k).

#include <array>
#include <vector>

#include "tensamp/surface/model.hpp"
#include "tensamp/surface/verdict.hpp"

namespace tensamp {

struct ToricCycle {
  std::vector<long> a;
};

struct ToricSurface {
  /// Basis D2..D{k-1}; curves D0..D{k-1}; PsEff generated by the boundary.
  SurfaceModel model;
  std::vector<std::array<long, 2>> rays;
  /// Anti-bigness of K, certified by -K = sum of the boundary classes.
  Verdict canonical_anti_big;
};

/// Throws InvariantError unless the recurrence closes with unimodular
/// consecutive pairs and sum a_i = 12 - 3k.
std::vector<std::array<long, 2>> toric_rays(const ToricCycle& tc);

ToricSurface build_toric(const ToricCycle& tc);

}  // namespace tensamp
