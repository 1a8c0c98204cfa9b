#pragma once

// Positivity classifiers on surface models. No verdicts only use data that is
// sound without completeness (a single bad catalog curve, a pseudo-effective
// class, the declared ample witness); Yes verdicts name the flags they use.

#include <string>
#include <vector>

#include "tensamp/surface/model.hpp"
#include "tensamp/surface/verdict.hpp"

namespace tensamp {

/// (K.C + C^2)/2 + 1.
Rat arithmetic_genus(const SurfaceModel& m, const DivisorClass& c);

/// C^2 = -2 and K.C = 0.
bool is_minus_two_curve(const SurfaceModel& m, const DivisorClass& c);

Verdict is_nef(const SurfaceModel& m, const DivisorClass& d);

/// Routes, first conclusive wins:
///  1. interior of the pseudo-effective cone (pseff_gens, or the catalog when
///     it generates the curve cone);
///  2. D = N + F with F >= 0 over the catalog (ΣF minimal), N.C >= 0 on the
///     catalog and N^2 > 0, gated by curve_cone_generated or N.A > 0;
///  3. with an ample witness A: D^2 > 0 and D.A > 0 gives Yes, D.A <= 0 gives No;
///  4. Zariski decomposition with P^2 > 0 (Yes) or P^2 <= 0 (No, needs both flags).
/// The zero class is not big on a proper positive-dimensional model.
Verdict is_big(const SurfaceModel& m, const DivisorClass& d);
Verdict is_anti_big(const SurfaceModel& m, const DivisorClass& d);
Verdict is_ample(const SurfaceModel& m, const DivisorClass& d);
Verdict is_tensor_ample(const SurfaceModel& m, const DivisorClass& d);

Verdict classify(const SurfaceModel& m, const DivisorClass& d, Property p);

struct CanonicalReport {
  Verdict big;
  Verdict anti_big;
  std::vector<std::string> minus_two_curves;
  Verdict tensor_ample;
  /// A Yes on tensor_ample coexisting with a (-2)-curve would be a contradiction.
  bool cross_check_passed = true;
};

CanonicalReport canonical_report(const SurfaceModel& m);

/// Whether the subgroup generated by `gens` has, for every integral
/// subvariety, an element whose restriction is big.
Verdict group_tensor_ample(const SurfaceModel& m, const std::vector<DivisorClass>& gens);

/// Throws InvariantError if the declared ample witness classifies as not ample.
void validate_ample_witness(const SurfaceModel& m);

}  // namespace tensamp
