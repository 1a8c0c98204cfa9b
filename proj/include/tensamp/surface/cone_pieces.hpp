#pragma once

#include <string>
#include <vector>

#include "tensamp/surface/model.hpp"

namespace tensamp {

struct ConePiece {
  /// "Amp" when positive on every negative curve, else "Big_{C,-}" naming
  /// the curves with negative pairing.
  std::string label;
  /// +1 / -1 per negative curve, in catalog order.
  std::vector<int> signs;
  /// A class in the open piece.
  DivisorClass witness;
};

struct TensorAmpleCone {
  ConeQ pseff;
  std::vector<std::string> negative_curve_names;
  /// Normal of C-perp for each negative curve: gram * C.
  std::vector<RatVec> hyperplane_normals;
  std::vector<ConePiece> pieces;
};

constexpr std::size_t kMaxPieceCurves = 16;

/// The big cone (interior of PsEff) cut by the hyperplanes C-perp of the
/// negative catalog curves; only sign patterns realized by some class are
/// returned. Requires pseff_gens and neg_curves_complete (CapacityError
/// otherwise, or above kMaxPieceCurves negative curves).
TensorAmpleCone tensor_ample_cone_pieces(const SurfaceModel& m);

}  // namespace tensamp
