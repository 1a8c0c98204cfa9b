#pragma once

#include <string>
#include <vector>

#include "tensamp/surface/verdict.hpp"

namespace tensamp {

struct CurveComponent {
  std::string name;
  long degree = 0;
};

/// A proper curve as its irreducible components, each with the degree of the
/// line bundle under study.
struct CurveModel {
  std::vector<CurveComponent> components;

  void validate() const;  // nonempty, distinct nonempty names
  std::vector<long> degrees() const;
};

CurveModel build_curve(std::vector<CurveComponent> components);

/// Yes iff every component degree is nonzero; otherwise No naming the first
/// degree-zero component. Never Unknown.
Verdict curve_tensor_ample(const CurveModel& c, const std::vector<long>& degrees);
Verdict curve_tensor_ample(const CurveModel& c);

bool verify_curve(const CurveModel& c, const std::vector<long>& degrees, const Verdict& v);

}  // namespace tensamp
