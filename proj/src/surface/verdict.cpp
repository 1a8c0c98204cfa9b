#include "tensamp/surface/verdict.hpp"

namespace tensamp {

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes: return "Yes";
    case Status::No: return "No";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

Status status_from_string(const std::string& s) {
  if (s == "Yes") return Status::Yes;
  if (s == "No") return Status::No;
  if (s == "Unknown") return Status::Unknown;
  throw ParseError("unknown status '" + s + "'");
}

std::string to_string(Property p) {
  switch (p) {
    case Property::Nef: return "nef";
    case Property::Ample: return "ample";
    case Property::Big: return "big";
    case Property::AntiBig: return "antibig";
    case Property::TensorAmple: return "tensample";
  }
  return "nef";
}

Property property_from_string(const std::string& s) {
  if (s == "nef") return Property::Nef;
  if (s == "ample") return Property::Ample;
  if (s == "big") return Property::Big;
  if (s == "antibig") return Property::AntiBig;
  if (s == "tensample") return Property::TensorAmple;
  throw ParseError("unknown property '" + s + "' (expected nef, ample, big, antibig or tensample)");
}

bool operator==(const CurveWitness& a, const CurveWitness& b) { return a.curve == b.curve && a.pairing == b.pairing; }
bool operator==(const PseffWitness& a, const PseffWitness& b) { return a.index == b.index && a.pairing == b.pairing; }
bool operator==(const PairingTable& a, const PairingTable& b) {
  return a.against == b.against && a.names == b.names && a.values == b.values;
}
bool operator==(const InteriorCertificate& a, const InteriorCertificate& b) {
  return a.source == b.source && a.coefficients == b.coefficients;
}
bool operator==(const SeparatingFunctional& a, const SeparatingFunctional& b) {
  return a.source == b.source && a.functional == b.functional;
}
bool operator==(const DecompositionCertificate& a, const DecompositionCertificate& b) {
  return a.nef_part == b.nef_part && a.curve_coeffs == b.curve_coeffs && a.gate == b.gate;
}
bool operator==(const SignatureCertificate& a, const SignatureCertificate& b) {
  return a.self_intersection == b.self_intersection && a.witness_pairing == b.witness_pairing;
}
bool operator==(const ZariskiCertificate& a, const ZariskiCertificate& b) {
  return a.positive == b.positive && a.negative_coeffs == b.negative_coeffs;
}
bool operator==(const ZeroClass&, const ZeroClass&) { return true; }
bool operator==(const Composite&, const Composite&) { return true; }
bool operator==(const GroupCertificate& a, const GroupCertificate& b) {
  return a.ample_generator == b.ample_generator && a.combination == b.combination && a.partners == b.partners;
}
bool operator==(const ComponentWitness& a, const ComponentWitness& b) {
  return a.index == b.index && a.name == b.name;
}
bool operator==(const Reason& a, const Reason& b) { return a.text == b.text; }

bool operator==(const Verdict& a, const Verdict& b) {
  return a.status == b.status && a.evidence == b.evidence && a.assumptions == b.assumptions && a.sub == b.sub;
}

bool operator==(const NamedVerdict& a, const NamedVerdict& b) { return a.name == b.name && a.verdict == b.verdict; }

const Verdict* find_sub(const Verdict& v, const std::string& name) {
  for (const auto& s : v.sub) {
    if (s.name == name) return &s.verdict;
  }
  return nullptr;
}

}  // namespace tensamp
