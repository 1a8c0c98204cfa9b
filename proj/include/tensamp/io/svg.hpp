#pragma once

// Two-dimensional slices of the tensor-ample cone pieces. The CSV carries the
// exact rays; the SVG is a picture of the same data.

#include <string>
#include <vector>

#include "tensamp/surface/model.hpp"

namespace tensamp {

struct SlicePiece {
  std::string label;
  /// Closure of the piece in plane coordinates, counterclockwise.
  std::vector<RatVec> rays;
};

struct SliceRay {
  std::string label;
  RatVec coords;
};

struct ConeSlice {
  std::vector<SlicePiece> pieces;
  /// Catalog curves, C-perp lines and -K, when they lie in the plane.
  std::vector<SliceRay> labeled_rays;
};

/// Slice by the plane spanned by u and v. Pieces whose open part misses the
/// plane are dropped.
ConeSlice cone_slice(const SurfaceModel& m, const RatVec& u, const RatVec& v);

/// Header piece_id,ray_index,coord_1,coord_2; one row per ray.
std::string slice_csv(const ConeSlice& s);
std::string slice_svg(const ConeSlice& s);

}  // namespace tensamp
