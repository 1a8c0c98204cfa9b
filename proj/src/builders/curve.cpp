#include "tensamp/builders/curve.hpp"

namespace tensamp {

void CurveModel::validate() const {
  if (components.empty()) throw InvariantError("curve model needs at least one component");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].name.empty()) throw InvariantError("curve component with empty name");
    for (std::size_t j = 0; j < i; ++j) {
      if (components[j].name == components[i].name) {
        throw InvariantError("duplicate curve component " + components[i].name);
      }
    }
  }
}

std::vector<long> CurveModel::degrees() const {
  std::vector<long> out;
  for (const auto& c : components) out.push_back(c.degree);
  return out;
}

CurveModel build_curve(std::vector<CurveComponent> components) {
  CurveModel c{std::move(components)};
  c.validate();
  return c;
}

Verdict curve_tensor_ample(const CurveModel& c, const std::vector<long>& degrees) {
  if (degrees.size() != c.components.size()) {
    throw UsageError("curve has " + std::to_string(c.components.size()) + " components but " +
                     std::to_string(degrees.size()) + " degrees were given");
  }
  PairingTable table{"degrees", {}, {}};
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] == 0) {
      return Verdict{Status::No, CurveWitness{c.components[i].name, Rat(0)}, {}, {}};
    }
    table.names.push_back(c.components[i].name);
    table.values.push_back(Rat(degrees[i]));
  }
  return Verdict{Status::Yes, std::move(table), {}, {}};
}

Verdict curve_tensor_ample(const CurveModel& c) { return curve_tensor_ample(c, c.degrees()); }

bool verify_curve(const CurveModel& c, const std::vector<long>& degrees, const Verdict& v) {
  if (degrees.size() != c.components.size()) return false;
  if (v.no()) {
    const auto* w = std::get_if<CurveWitness>(&v.evidence);
    if (!w || !w->pairing.is_zero()) return false;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (c.components[i].name == w->curve) return degrees[i] == 0;
    }
    return false;
  }
  if (v.yes()) {
    const auto* t = std::get_if<PairingTable>(&v.evidence);
    if (!t || t->values.size() != degrees.size()) return false;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (degrees[i] == 0 || t->values[i] != Rat(degrees[i]) || t->names[i] != c.components[i].name) return false;
    }
    return true;
  }
  return false;
}

}  // namespace tensamp
