#include "tensamp/builders/ruled.hpp"

#include "tensamp/surface/classify.hpp"

namespace tensamp {

void RuledData::validate() const {
  if (g < 0) throw InvariantError("ruled surface genus must be nonnegative");
  if (stability == Stability::Unstable && 2 * d >= e) {
    throw InvariantError("unstable ruled data needs 2d < e (got d=" + std::to_string(d) + ", e=" + std::to_string(e) +
                         ")");
  }
}

SurfaceModel build_ruled(const RuledData& rd) {
  rd.validate();
  SurfaceModel m;
  m.lattice.rank = 2;
  m.lattice.basis_names = {"f", "xi"};
  m.lattice.gram = RatMat(2, 2);
  m.lattice.gram(0, 1) = 1;
  m.lattice.gram(1, 0) = 1;
  m.lattice.gram(1, 1) = rd.e;
  m.canonical = RatVec{Rat(2 * rd.g - 2 + rd.e), Rat(-2)};
  m.hodge_index = true;
  m.neg_curves_complete = true;
  m.curve_cone_generated = true;
  const RatVec f{1, 0};
  if (rd.stability == Stability::Unstable) {
    const RatVec c0{Rat(rd.d - rd.e), Rat(1)};
    m.curves = {{"f", f}, {"C0", c0}};
    m.pseff_gens = std::vector<DivisorClass>{c0, f};
    m.nef_gens = std::vector<DivisorClass>{RatVec{Rat(-rd.d), Rat(1)}, f};
    m.ample_witness = RatVec{Rat(1 - rd.d), Rat(1)};
  } else {
    const RatVec boundary{Rat(-rd.e), Rat(2)};
    m.curves = {{"f", f}};
    m.pseff_gens = std::vector<DivisorClass>{boundary, f};
    m.nef_gens = std::vector<DivisorClass>{boundary, f};
    m.ample_witness = RatVec{Rat(1 - rd.e), Rat(2)};
  }
  m.validate();
  validate_ample_witness(m);
  return m;
}

std::string to_string(AnticanonicalLabel l) {
  switch (l) {
    case AnticanonicalLabel::Ample: return "ample";
    case AnticanonicalLabel::TensorAmpleNotAmple: return "tensor-ample, not ample";
    case AnticanonicalLabel::BigNotTensorAmple: return "big, not tensor-ample";
    case AnticanonicalLabel::PseffNotBig: return "pseudo-effective, not big";
    case AnticanonicalLabel::NotPseff: return "not pseudo-effective";
    case AnticanonicalLabel::Undetermined: return "undetermined";
  }
  return "undetermined";
}

AnticanonicalLabel ruled_anticanonical_class(const RuledData& rd) {
  const SurfaceModel m = build_ruled(rd);
  const DivisorClass minus_k = -m.canonical;
  if (is_ample(m, minus_k).yes()) return AnticanonicalLabel::Ample;
  if (is_tensor_ample(m, minus_k).yes()) return AnticanonicalLabel::TensorAmpleNotAmple;
  const Verdict big = is_big(m, minus_k);
  if (big.yes()) return AnticanonicalLabel::BigNotTensorAmple;
  if (big.no()) {
    return cone_contains(m.pseff_cone(), minus_k).member ? AnticanonicalLabel::PseffNotBig
                                                         : AnticanonicalLabel::NotPseff;
  }
  return AnticanonicalLabel::Undetermined;
}

AnticanonicalLabel ruled_anticanonical_closed_form(const RuledData& rd) {
  rd.validate();
  if (rd.stability == Stability::Semistable) {
    // -K = (2 xi - e f) + (2 - 2g) f
    if (rd.g == 0) return AnticanonicalLabel::Ample;
    return rd.g == 1 ? AnticanonicalLabel::PseffNotBig : AnticanonicalLabel::NotPseff;
  }
  // -K = 2 C0 + c f and -K.C0 = p.
  const long c = rd.e - 2 * rd.d + 2 - 2 * rd.g;
  const long p = 2 * rd.d - rd.e + 2 - 2 * rd.g;
  if (c < 0) return AnticanonicalLabel::NotPseff;
  if (c == 0) return AnticanonicalLabel::PseffNotBig;
  if (p > 0) return AnticanonicalLabel::Ample;
  if (p == 0) return AnticanonicalLabel::BigNotTensorAmple;
  return AnticanonicalLabel::TensorAmpleNotAmple;
}

}  // namespace tensamp
