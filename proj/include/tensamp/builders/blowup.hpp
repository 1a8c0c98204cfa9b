#pragma once

// Blow-ups of the projective plane at r points, basis (H, E1..Er),
// gram diag(1, -1, ..., -1), K = -3H + sum E.

#include <optional>
#include <string>

#include "tensamp/surface/model.hpp"

namespace tensamp {

enum class PointConfig { General, OnLine, OnConic };

std::string to_string(PointConfig c);
PointConfig point_config_from_string(const std::string& s);  // general | line | conic

struct BlowupP2Config {
  long r = 1;
  PointConfig config = PointConfig::General;
  /// Sets neg_curves_complete; the default is false.
  std::optional<bool> neg_complete_override;
  /// Sets curve_cone_generated; the default is false.
  std::optional<bool> curve_cone_override;
};

/// Curves E1..Er, plus l_tilde = H - sum E (OnLine) or C_tilde = 2H - sum E
/// (OnConic). Ample witness (r+1)H - sum E when it passes the model checks.
SurfaceModel build_blowup_p2(const BlowupP2Config& cfg);

}  // namespace tensamp
