#pragma once

// Verdicts for schemes assembled from irreducible components, and validation
// of stratification certificates whose open pieces are asserted quasi-affine.

#include <string>
#include <variant>
#include <vector>

#include "tensamp/builders/curve.hpp"
#include "tensamp/surface/model.hpp"
#include "tensamp/surface/verdict.hpp"

namespace tensamp {

struct PointComponent {
  std::string name;
};

struct CurveSchemeComponent {
  std::string name;
  CurveModel curve;
  std::vector<long> degrees;
};

struct SurfaceSchemeComponent {
  std::string name;
  SurfaceModel model;
  DivisorClass cls;
};

using SchemeComponent = std::variant<PointComponent, CurveSchemeComponent, SurfaceSchemeComponent>;

struct SchemeModel {
  std::vector<SchemeComponent> components;
};

const std::string& component_name(const SchemeComponent& c);

/// Per-component verdict: points are Yes, curves and surfaces use their own
/// classifiers.
Verdict component_tensor_ample(const SchemeComponent& c);

/// No if any component is No (witness: smallest index), else Unknown if any
/// is Unknown, else Yes. Component verdicts are attached as sub-verdicts.
Verdict scheme_tensor_ample(const SchemeModel& s);

struct SectionAssertion {
  std::string section;
  long power = 1;
  /// User assertion: the complement of the section's zero locus is quasi-affine.
  bool quasi_affine = false;
  std::string note;
};

struct Stratum {
  std::string name;
  std::vector<SectionAssertion> sections;
};

struct StratTerminal {
  /// The chain ends with the empty scheme.
  bool empty = true;
  /// Otherwise, the verdict on the last closed stratum.
  Status status = Status::Unknown;
  std::string note;
};

struct StratCertificate {
  std::string name;
  std::vector<Stratum> strata;
  StratTerminal terminal;
};

/// Throws UsageError on a malformed chain (no strata, a stratum without
/// sections, unnamed entries). Yes iff every section asserts a quasi-affine
/// complement and the terminal is empty or Yes; No iff the terminal is No.
/// The assertions are echoed as assumptions.
Verdict validate_strat_certificate(const StratCertificate& c);

}  // namespace tensamp
