#pragma once

// Three-valued verdicts and the evidence they carry. Every evidence kind is
// plain data that verify.hpp re-checks against the model.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tensamp/exact/linear.hpp"

namespace tensamp {

enum class Status { Yes, No, Unknown };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

enum class Property { Nef, Ample, Big, AntiBig, TensorAmple };

std::string to_string(Property p);
Property property_from_string(const std::string& s);

/// A catalog curve (or curve component) and the class's pairing with it.
struct CurveWitness {
  std::string curve;
  Rat pairing;
};

/// A pseudo-effective generator and the class's pairing with it.
struct PseffWitness {
  std::size_t index = 0;
  Rat pairing;
};

/// Pairings against a named list ("catalog", "negative_curves", "pseff", "degrees").
struct PairingTable {
  std::string against;
  std::vector<std::string> names;
  std::vector<Rat> values;
};

/// class = sum coefficients[i] * generators[i] with every coefficient > 0,
/// generators spanning the whole space. source is "pseff" or "catalog".
struct InteriorCertificate {
  std::string source;
  RatVec coefficients;
};

/// Nonzero l with l.g >= 0 on every generator of `source` and l.class <= 0
/// (or l.g = 0 for all group generators, for the group criterion).
struct SeparatingFunctional {
  std::string source;
  RatVec functional;
};

/// class = nef_part + sum curve_coeffs[j] * C_j, curve_coeffs >= 0,
/// nef_part.C_j >= 0 on the catalog and nef_part^2 > 0. The gate is
/// "curve_cone_generated" (nef_part is nef) or "ample_witness"
/// (nef_part.A > 0, so nef_part is big by the signature test).
struct DecompositionCertificate {
  RatVec nef_part;
  RatVec curve_coeffs;
  std::string gate;
};

/// Recorded class^2 and class.A for the declared ample witness A.
struct SignatureCertificate {
  Rat self_intersection;
  Rat witness_pairing;
};

/// class = positive + sum negative_coeffs[j] * C_j is a Zariski decomposition
/// with positive^2 <= 0; conclusive only when both completeness flags hold.
struct ZariskiCertificate {
  RatVec positive;
  RatVec negative_coeffs;
};

struct ZeroClass {};

/// The conclusion is carried by the named sub-verdicts.
struct Composite {};

/// Group criterion: either generator `ample_generator` is a positive multiple
/// of the ample witness, or sum combination[i] * gens[i] is big (sub-verdict
/// "element") and partners[j] is a generator pairing nonzero with the j-th
/// negative catalog curve.
struct GroupCertificate {
  std::optional<std::size_t> ample_generator;
  RatVec combination;
  std::vector<std::size_t> partners;
};

/// The first failing component of a composed scheme verdict.
struct ComponentWitness {
  std::size_t index = 0;
  std::string name;
};

struct Reason {
  std::string text;
};

using Evidence = std::variant<CurveWitness, PseffWitness, PairingTable, InteriorCertificate,
                              SeparatingFunctional, DecompositionCertificate, SignatureCertificate,
                              ZariskiCertificate, ZeroClass, Composite, GroupCertificate, ComponentWitness,
                              Reason>;

struct NamedVerdict;

struct Verdict {
  Status status = Status::Unknown;
  Evidence evidence = Reason{};
  /// Model flags and data the conclusion relies on.
  std::vector<std::string> assumptions;
  std::vector<NamedVerdict> sub;

  static Verdict unknown(std::string why) { return Verdict{Status::Unknown, Reason{std::move(why)}, {}, {}}; }
  bool yes() const { return status == Status::Yes; }
  bool no() const { return status == Status::No; }
};

struct NamedVerdict {
  std::string name;
  Verdict verdict;
};

bool operator==(const CurveWitness& a, const CurveWitness& b);
bool operator==(const PseffWitness& a, const PseffWitness& b);
bool operator==(const PairingTable& a, const PairingTable& b);
bool operator==(const InteriorCertificate& a, const InteriorCertificate& b);
bool operator==(const SeparatingFunctional& a, const SeparatingFunctional& b);
bool operator==(const DecompositionCertificate& a, const DecompositionCertificate& b);
bool operator==(const SignatureCertificate& a, const SignatureCertificate& b);
bool operator==(const ZariskiCertificate& a, const ZariskiCertificate& b);
bool operator==(const ZeroClass& a, const ZeroClass& b);
bool operator==(const Composite& a, const Composite& b);
bool operator==(const GroupCertificate& a, const GroupCertificate& b);
bool operator==(const ComponentWitness& a, const ComponentWitness& b);
bool operator==(const Reason& a, const Reason& b);
bool operator==(const Verdict& a, const Verdict& b);
bool operator==(const NamedVerdict& a, const NamedVerdict& b);

/// Sub-verdict by name, or nullptr.
const Verdict* find_sub(const Verdict& v, const std::string& name);

}  // namespace tensamp
