#pragma once

// Pure re-checkers for verdict evidence. They recompute every pairing from
// the model and never call the classifiers.

#include <vector>

#include "tensamp/surface/model.hpp"
#include "tensamp/surface/verdict.hpp"

namespace tensamp {

bool verify(const SurfaceModel& m, const DivisorClass& d, Property p, const Verdict& v);

bool verify_group(const SurfaceModel& m, const std::vector<DivisorClass>& gens, const Verdict& v);

}  // namespace tensamp
