#include "tensamp/surface/model.hpp"

namespace tensamp {

const CurveEntry* SurfaceModel::find_curve(const std::string& name) const {
  for (const auto& c : curves) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::size_t> SurfaceModel::negative_curves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (pair(curves[i].cls, curves[i].cls).sign() < 0) out.push_back(i);
  }
  return out;
}

ConeQ SurfaceModel::pseff_cone() const {
  if (!pseff_gens) throw UsageError("model has no pseudo-effective cone data");
  return ConeQ{rank(), *pseff_gens};
}

ConeQ SurfaceModel::catalog_cone() const {
  ConeQ c{rank(), {}};
  for (const auto& curve : curves) c.generators.push_back(curve.cls);
  return c;
}

void SurfaceModel::validate() const {
  lattice.validate(hodge_index);
  const std::size_t n = rank();
  if (canonical.dim() != n) throw InvariantError("canonical class has wrong dimension");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    if (c.name.empty()) throw InvariantError("curve with empty name");
    if (c.cls.dim() != n) throw InvariantError("curve " + c.name + " has wrong dimension");
    if (c.cls.is_zero()) throw InvariantError("curve " + c.name + " has zero class");
    for (std::size_t j = 0; j < i; ++j) {
      if (curves[j].name == c.name) throw InvariantError("duplicate curve name " + c.name);
    }
  }
  auto check_list = [n](const std::optional<std::vector<DivisorClass>>& list, const char* what) {
    if (!list) return;
    for (const auto& g : *list) {
      if (g.dim() != n) throw InvariantError(std::string(what) + " generator has wrong dimension");
      if (g.is_zero()) throw InvariantError(std::string(what) + " generator is zero");
    }
  };
  check_list(pseff_gens, "pseff");
  check_list(nef_gens, "nef");
  if (pseff_gens) {
    const ConeQ ps = pseff_cone();
    for (const auto& c : curves) {
      if (!cone_contains(ps, c.cls).member) {
        throw InvariantError("curve " + c.name + " lies outside the pseudo-effective cone");
      }
    }
  }
  if (ample_witness) {
    const auto& a = *ample_witness;
    if (a.dim() != n) throw InvariantError("ample witness has wrong dimension");
    if (pair(a, a).sign() <= 0) throw InvariantError("ample witness has nonpositive self-intersection");
    for (const auto& c : curves) {
      if (pair(a, c.cls).sign() <= 0) throw InvariantError("ample witness is not positive on " + c.name);
    }
    if (pseff_gens) {
      for (const auto& g : *pseff_gens) {
        if (pair(a, g).sign() <= 0) throw InvariantError("ample witness is not positive on a pseff generator");
      }
    }
  }
}

}  // namespace tensamp
