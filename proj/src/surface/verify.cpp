#include "tensamp/surface/verify.hpp"

#include "tensamp/surface/zariski.hpp"

namespace tensamp {

namespace {

bool curve_witness_ok(const SurfaceModel& m, const DivisorClass& d, const CurveWitness& w) {
  const CurveEntry* c = m.find_curve(w.curve);
  return c && m.pair(d, c->cls) == w.pairing;
}

bool pseff_witness_ok(const SurfaceModel& m, const DivisorClass& d, const PseffWitness& w) {
  return m.pseff_gens && w.index < m.pseff_gens->size() && m.pair(d, (*m.pseff_gens)[w.index]) == w.pairing;
}

const std::vector<DivisorClass>* source_generators(const SurfaceModel& m, const std::string& source,
                                                   std::vector<DivisorClass>& scratch) {
  if (source == "pseff") return m.pseff_gens ? &*m.pseff_gens : nullptr;
  if (source == "catalog" && m.curve_cone_generated) {
    scratch.clear();
    for (const auto& c : m.curves) scratch.push_back(c.cls);
    return &scratch;
  }
  return nullptr;
}

bool verify_big(const SurfaceModel& m, const DivisorClass& x, const Verdict& v) {
  const std::size_t n = m.rank();
  std::vector<DivisorClass> scratch;
  if (v.status == Status::Unknown) return std::holds_alternative<Reason>(v.evidence);

  if (const auto* ic = std::get_if<InteriorCertificate>(&v.evidence)) {
    if (!v.yes()) return false;
    const auto* gens = source_generators(m, ic->source, scratch);
    if (!gens || ic->coefficients.dim() != gens->size()) return false;
    if (rank(*gens, n) != n) return false;
    RatVec sum(n);
    for (std::size_t i = 0; i < gens->size(); ++i) {
      if (ic->coefficients[i].sign() <= 0) return false;
      sum += (*gens)[i] * ic->coefficients[i];
    }
    return sum == x;
  }
  if (const auto* sf = std::get_if<SeparatingFunctional>(&v.evidence)) {
    if (!v.no()) return false;
    const auto* gens = source_generators(m, sf->source, scratch);
    if (!gens || sf->functional.dim() != n || sf->functional.is_zero()) return false;
    for (const auto& g : *gens) {
      if (sf->functional.dot(g).sign() < 0) return false;
    }
    return sf->functional.dot(x).sign() <= 0;
  }
  if (const auto* dc = std::get_if<DecompositionCertificate>(&v.evidence)) {
    if (!v.yes() || dc->nef_part.dim() != n || dc->curve_coeffs.dim() != m.curves.size()) return false;
    RatVec sum = dc->nef_part;
    for (std::size_t j = 0; j < m.curves.size(); ++j) {
      if (dc->curve_coeffs[j].sign() < 0) return false;
      if (m.pair(dc->nef_part, m.curves[j].cls).sign() < 0) return false;
      sum += m.curves[j].cls * dc->curve_coeffs[j];
    }
    if (sum != x || m.pair(dc->nef_part, dc->nef_part).sign() <= 0) return false;
    if (dc->gate == "curve_cone_generated") return m.curve_cone_generated;
    if (dc->gate == "ample_witness") {
      return m.ample_witness && m.pair(dc->nef_part, *m.ample_witness).sign() > 0;
    }
    return false;
  }
  if (const auto* sc = std::get_if<SignatureCertificate>(&v.evidence)) {
    if (!m.ample_witness) return false;
    const Rat sq = m.pair(x, x);
    const Rat da = m.pair(x, *m.ample_witness);
    if (sq != sc->self_intersection || da != sc->witness_pairing) return false;
    if (v.yes()) return sq.sign() > 0 && da.sign() > 0;
    return da.sign() <= 0;
  }
  if (const auto* zc = std::get_if<ZariskiCertificate>(&v.evidence)) {
    if (!v.no() || !m.neg_curves_complete || !m.curve_cone_generated) return false;
    if (zc->positive.dim() != n || zc->negative_coeffs.dim() != m.curves.size()) return false;
    RatVec sum = zc->positive;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < m.curves.size(); ++j) {
      const Rat pc = m.pair(zc->positive, m.curves[j].cls);
      if (zc->negative_coeffs[j].sign() < 0 || pc.sign() < 0) return false;
      if (zc->negative_coeffs[j].sign() > 0) {
        if (!pc.is_zero()) return false;
        support.push_back(j);
      }
      sum += m.curves[j].cls * zc->negative_coeffs[j];
    }
    if (sum != x) return false;
    if (!support.empty() && !negative_definite(support_gram(m, support))) return false;
    return m.pair(zc->positive, zc->positive).sign() <= 0;
  }
  if (std::holds_alternative<ZeroClass>(v.evidence)) {
    return v.no() && x.is_zero() && m.proper_positive_dim;
  }
  return false;
}

// Pairings with the negative curves, each satisfying `ok`.
template <class Pred>
bool negative_table_ok(const SurfaceModel& m, const DivisorClass& d, const PairingTable& t, Pred ok) {
  if (t.against != "negative_curves" || !m.neg_curves_complete) return false;
  const auto negative = m.negative_curves();
  if (t.names.size() != negative.size() || t.values.size() != negative.size()) return false;
  for (std::size_t i = 0; i < negative.size(); ++i) {
    const auto& c = m.curves[negative[i]];
    const Rat p = m.pair(d, c.cls);
    if (t.names[i] != c.name || t.values[i] != p || !ok(p)) return false;
  }
  return true;
}

bool verify_nef(const SurfaceModel& m, const DivisorClass& d, const Verdict& v) {
  if (v.status == Status::Unknown) return std::holds_alternative<Reason>(v.evidence);
  if (v.no()) {
    if (const auto* w = std::get_if<CurveWitness>(&v.evidence)) return curve_witness_ok(m, d, *w) && w->pairing.sign() < 0;
    if (const auto* w = std::get_if<PseffWitness>(&v.evidence)) return pseff_witness_ok(m, d, *w) && w->pairing.sign() < 0;
    return false;
  }
  const auto* t = std::get_if<PairingTable>(&v.evidence);
  if (!t) return false;
  if (t->against == "negative_curves") {
    const Verdict* big = find_sub(v, "big");
    return big && big->yes() && verify_big(m, d, *big) &&
           negative_table_ok(m, d, *t, [](const Rat& p) { return p.sign() >= 0; });
  }
  std::vector<DivisorClass> scratch;
  const auto* gens = source_generators(m, t->against, scratch);
  if (!gens || t->values.size() != gens->size()) return false;
  for (std::size_t i = 0; i < gens->size(); ++i) {
    const Rat p = m.pair(d, (*gens)[i]);
    if (p != t->values[i] || p.sign() < 0) return false;
  }
  return true;
}


bool verify_ample(const SurfaceModel& m, const DivisorClass& d, const Verdict& v) {
  if (v.status == Status::Unknown) return std::holds_alternative<Reason>(v.evidence);
  if (v.no()) {
    if (const auto* w = std::get_if<CurveWitness>(&v.evidence)) return curve_witness_ok(m, d, *w) && w->pairing.sign() <= 0;
    if (const auto* w = std::get_if<PseffWitness>(&v.evidence)) return pseff_witness_ok(m, d, *w) && w->pairing.sign() <= 0;
    const Verdict* big = find_sub(v, "big");
    return std::holds_alternative<Composite>(v.evidence) && big && big->no() && verify_big(m, d, *big);
  }
  const auto* t = std::get_if<PairingTable>(&v.evidence);
  const Verdict* big = find_sub(v, "big");
  return t && big && big->yes() && verify_big(m, d, *big) &&
         negative_table_ok(m, d, *t, [](const Rat& p) { return p.sign() > 0; });
}

bool verify_tensor_ample(const SurfaceModel& m, const DivisorClass& d, const Verdict& v) {
  if (v.status == Status::Unknown) return std::holds_alternative<Reason>(v.evidence);
  if (v.no()) {
    if (const auto* w = std::get_if<CurveWitness>(&v.evidence)) return curve_witness_ok(m, d, *w) && w->pairing.is_zero();
    const Verdict* big = find_sub(v, "big");
    const Verdict* anti = find_sub(v, "antibig");
    return std::holds_alternative<Composite>(v.evidence) && big && anti && big->no() && anti->no() &&
           verify_big(m, d, *big) && verify_big(m, -d, *anti);
  }
  const auto* t = std::get_if<PairingTable>(&v.evidence);
  if (!t || !negative_table_ok(m, d, *t, [](const Rat& p) { return !p.is_zero(); })) return false;
  if (const Verdict* big = find_sub(v, "big")) return big->yes() && verify_big(m, d, *big);
  if (const Verdict* anti = find_sub(v, "antibig")) return anti->yes() && verify_big(m, -d, *anti);
  return false;
}

}  // namespace

bool verify(const SurfaceModel& m, const DivisorClass& d, Property p, const Verdict& v) {
  if (d.dim() != m.rank()) return false;
  switch (p) {
    case Property::Nef: return verify_nef(m, d, v);
    case Property::Big: return verify_big(m, d, v);
    case Property::AntiBig: return verify_big(m, -d, v);
    case Property::Ample: return verify_ample(m, d, v);
    case Property::TensorAmple: return verify_tensor_ample(m, d, v);
  }
  return false;
}

bool verify_group(const SurfaceModel& m, const std::vector<DivisorClass>& gens, const Verdict& v) {
  const std::size_t n = m.rank();
  for (const auto& g : gens) {
    if (g.dim() != n) return false;
  }
  if (v.status == Status::Unknown) return std::holds_alternative<Reason>(v.evidence);
  if (v.no()) {
    if (const auto* w = std::get_if<CurveWitness>(&v.evidence)) {
      const CurveEntry* c = m.find_curve(w->curve);
      if (!c || !w->pairing.is_zero()) return false;
      for (const auto& g : gens) {
        if (!m.pair(g, c->cls).is_zero()) return false;
      }
      return true;
    }
    const auto* sf = std::get_if<SeparatingFunctional>(&v.evidence);
    if (!sf || !m.pseff_gens || sf->functional.dim() != n || sf->functional.is_zero()) return false;
    if (sf->source == "pseff_rank_deficient") {
      for (const auto& g : *m.pseff_gens) {
        if (!sf->functional.dot(g).is_zero()) return false;
      }
      return true;
    }
    if (sf->source != "group") return false;
    for (const auto& g : *m.pseff_gens) {
      if (sf->functional.dot(g).sign() < 0) return false;
    }
    for (const auto& g : gens) {
      if (!sf->functional.dot(g).is_zero()) return false;
    }
    return true;
  }
  const auto* gc = std::get_if<GroupCertificate>(&v.evidence);
  if (!gc) return false;
  if (gc->ample_generator) {
    if (!m.ample_witness || *gc->ample_generator >= gens.size()) return false;
    const auto& g = gens[*gc->ample_generator];
    const auto& a = *m.ample_witness;
    for (std::size_t t = 0; t < n; ++t) {
      if (a[t].is_zero()) continue;
      const Rat c = g[t] / a[t];
      return c.sign() > 0 && g == a * c;
    }
    return false;
  }
  if (!m.neg_curves_complete || gc->combination.dim() != gens.size()) return false;
  RatVec e(n);
  for (std::size_t i = 0; i < gens.size(); ++i) e += gens[i] * gc->combination[i];
  const Verdict* element = find_sub(v, "element");
  if (!element || !element->yes() || !verify_big(m, e, *element)) return false;
  const auto negative = m.negative_curves();
  if (gc->partners.size() != negative.size()) return false;
  for (std::size_t j = 0; j < negative.size(); ++j) {
    if (gc->partners[j] >= gens.size()) return false;
    if (m.pair(gens[gc->partners[j]], m.curves[negative[j]].cls).is_zero()) return false;
  }
  return true;
}

}  // namespace tensamp
