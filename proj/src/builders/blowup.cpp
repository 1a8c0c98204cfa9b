#include "tensamp/builders/blowup.hpp"

#include "tensamp/surface/classify.hpp"

namespace tensamp {

std::string to_string(PointConfig c) {
  switch (c) {
    case PointConfig::General: return "general";
    case PointConfig::OnLine: return "line";
    case PointConfig::OnConic: return "conic";
  }
  return "general";
}

PointConfig point_config_from_string(const std::string& s) {
  if (s == "general") return PointConfig::General;
  if (s == "line") return PointConfig::OnLine;
  if (s == "conic") return PointConfig::OnConic;
  throw ParseError("unknown point configuration '" + s + "' (expected general, line or conic)");
}

SurfaceModel build_blowup_p2(const BlowupP2Config& cfg) {
  if (cfg.r < 1) throw InvariantError("blow-up needs r >= 1 points, got " + std::to_string(cfg.r));
  const auto r = static_cast<std::size_t>(cfg.r);
  const std::size_t n = r + 1;
  SurfaceModel m;
  m.lattice.rank = n;
  m.lattice.gram = RatMat(n, n);
  m.lattice.gram(0, 0) = 1;
  m.lattice.basis_names.push_back("H");
  for (std::size_t i = 1; i <= r; ++i) {
    m.lattice.gram(i, i) = -1;
    m.lattice.basis_names.push_back("E" + std::to_string(i));
  }
  m.canonical = RatVec(n);
  m.canonical[0] = -3;
  for (std::size_t i = 1; i <= r; ++i) m.canonical[i] = 1;

  for (std::size_t i = 1; i <= r; ++i) m.curves.push_back({"E" + std::to_string(i), RatVec::unit(n, i)});
  auto through_all = [&](long degree) {
    RatVec c(n);
    c[0] = degree;
    for (std::size_t i = 1; i <= r; ++i) c[i] = -1;
    return c;
  };
  if (cfg.config == PointConfig::OnLine) m.curves.push_back({"l_tilde", through_all(1)});
  if (cfg.config == PointConfig::OnConic) m.curves.push_back({"C_tilde", through_all(2)});

  m.neg_curves_complete = cfg.neg_complete_override.value_or(false);
  m.curve_cone_generated = cfg.curve_cone_override.value_or(false);
  m.hodge_index = true;
  m.validate();

  m.ample_witness = through_all(cfg.r + 1);
  try {
    m.validate();
    validate_ample_witness(m);
  } catch (const InvariantError&) {
    m.ample_witness.reset();
  }
  return m;
}

}  // namespace tensamp
