#pragma once

// Geometrically ruled surfaces over a genus-g curve, in the basis (f, xi):
// f^2 = 0, f.xi = 1, xi^2 = e.

#include <string>

#include "tensamp/surface/model.hpp"

namespace tensamp {

enum class Stability { Unstable, Semistable };

struct RuledData {
  long g = 0;
  long e = 0;
  Stability stability = Stability::Unstable;
  /// Degree of the destabilizing quotient; only read when Unstable (2d < e).
  long d = 0;

  void validate() const;
};

/// Unstable: curves {f, C0 = xi + (d-e) f}, PsEff = <C0, f>, Nef = <xi - d f, f>.
/// Semistable: curves {f}, PsEff = Nef = <2 xi - e f, f>.
SurfaceModel build_ruled(const RuledData& rd);

enum class AnticanonicalLabel {
  Ample,
  TensorAmpleNotAmple,
  BigNotTensorAmple,
  PseffNotBig,
  NotPseff,
  Undetermined,
};

std::string to_string(AnticanonicalLabel l);

/// Label of -K obtained by running the classifiers on build_ruled(rd).
AnticanonicalLabel ruled_anticanonical_class(const RuledData& rd);

/// The same label from the closed-form case table.
AnticanonicalLabel ruled_anticanonical_closed_form(const RuledData& rd);

}  // namespace tensamp
