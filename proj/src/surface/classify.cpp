#include "tensamp/surface/classify.hpp"

#include <stdexcept>

#include "tensamp/exact/lp.hpp"
#include "tensamp/surface/zariski.hpp"

namespace tensamp {

namespace {

void require_class(const SurfaceModel& m, const DivisorClass& d, const char* what) {
  if (d.dim() != m.rank()) {
    throw UsageError(std::string(what) + ": class has " + std::to_string(d.dim()) + " coefficients, model rank is " +
                     std::to_string(m.rank()));
  }
}

Verdict make(Status s, Evidence e, std::vector<std::string> assumptions = {}) {
  return Verdict{s, std::move(e), std::move(assumptions), {}};
}

// Strictly positive coefficients over a spanning generator list, if any.
std::optional<RatVec> interior_coefficients(const ConeQ& c, const RatVec& x) {
  if (rank(c.generators, c.ambient_dim) != c.ambient_dim) return std::nullopt;
  const std::size_t k = c.generators.size();
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < k; ++i) cons.push_back({RatVec::unit(k, i), Relation::Greater, Rat(0)});
  for (std::size_t j = 0; j < c.ambient_dim; ++j) {
    RatVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = c.generators[i][j];
    cons.push_back({std::move(row), Relation::Equal, x[j]});
  }
  auto res = lp_feasible(k, cons);
  if (!res.feasible()) return std::nullopt;
  return *res.point;
}

// Nonzero l in the dual of c with l.x <= 0, for x outside the interior.
RatVec boundary_functional(const ConeQ& c, const RatVec& x) {
  const std::size_t n = c.ambient_dim;
  const RatMat g = RatMat::from_rows(c.generators, n);
  const auto kernel = null_space(g);
  if (!kernel.empty()) {
    RatVec l = kernel.front().primitive();
    return l.dot(x).sign() > 0 ? -l : l;
  }
  std::vector<LinearConstraint> cons;
  RatVec total(n);
  for (const auto& gen : c.generators) {
    cons.push_back({gen, Relation::GreaterEqual, Rat(0)});
    total += gen;
  }
  cons.push_back({-x, Relation::GreaterEqual, Rat(0)});
  cons.push_back({total, Relation::Equal, Rat(1)});
  auto res = lp_feasible(n, cons);
  if (!res.feasible()) throw std::logic_error("no supporting functional for a non-interior class");
  return res.point->primitive();
}

Verdict interior_verdict(const ConeQ& cone, const RatVec& x, const std::string& source,
                         const std::string& assumption) {
  if (auto coeffs = interior_coefficients(cone, x)) {
    return make(Status::Yes, InteriorCertificate{source, *coeffs}, {assumption});
  }
  return make(Status::No, SeparatingFunctional{source, boundary_functional(cone, x)}, {assumption});
}

struct Decomposition {
  RatVec nef_part;
  RatVec curve_coeffs;
};

// Minimizes the total curve coefficient F subject to D = N + sum F_j C_j,
// F >= 0 and N.C_j >= 0. Columns: N+ (n), N- (n), F (k), slack (k).
std::optional<Decomposition> minimal_decomposition(const SurfaceModel& m, const DivisorClass& d) {
  const std::size_t n = m.rank();
  const std::size_t k = m.curves.size();
  const std::size_t cols = 2 * n + 2 * k;
  RatMat a(n + k, cols);
  RatVec b(n + k);
  for (std::size_t t = 0; t < n; ++t) {
    a(t, t) = 1;
    a(t, n + t) = -1;
    for (std::size_t j = 0; j < k; ++j) a(t, 2 * n + j) = m.curves[j].cls[t];
    b[t] = d[t];
  }
  for (std::size_t j = 0; j < k; ++j) {
    const RatVec gc = m.lattice.gram * m.curves[j].cls;
    for (std::size_t t = 0; t < n; ++t) {
      a(n + j, t) = gc[t];
      a(n + j, n + t) = -gc[t];
    }
    a(n + j, 2 * n + k + j) = -1;
  }
  RatVec c(cols);
  for (std::size_t j = 0; j < k; ++j) c[2 * n + j] = -1;
  const LpSolution sol = simplex_maximize(a, b, c);
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  Decomposition out{RatVec(n), RatVec(k)};
  for (std::size_t t = 0; t < n; ++t) out.nef_part[t] = sol.z[t] - sol.z[n + t];
  for (std::size_t j = 0; j < k; ++j) out.curve_coeffs[j] = sol.z[2 * n + j];
  return out;
}

// Gate under which N with N.C >= 0 on the catalog and N^2 > 0 is big.
std::optional<std::string> decomposition_gate(const SurfaceModel& m, const RatVec& nef_part) {
  if (m.pair(nef_part, nef_part).sign() <= 0) return std::nullopt;
  if (m.curve_cone_generated) return std::string("curve_cone_generated");
  if (m.ample_witness && m.pair(nef_part, *m.ample_witness).sign() > 0) return std::string("ample_witness");
  return std::nullopt;
}

Verdict decomposition_verdict(const RatVec& nef_part, const RatVec& coeffs, const std::string& gate) {
  return make(Status::Yes, DecompositionCertificate{nef_part, coeffs, gate}, {"catalog_curves_effective", gate});
}

std::vector<Rat> catalog_pairings(const SurfaceModel& m, const DivisorClass& d) {
  std::vector<Rat> out;
  for (const auto& c : m.curves) out.push_back(m.pair(d, c.cls));
  return out;
}

PairingTable negative_table(const SurfaceModel& m, const std::vector<Rat>& pairings) {
  PairingTable t{"negative_curves", {}, {}};
  for (auto i : m.negative_curves()) {
    t.names.push_back(m.curves[i].name);
    t.values.push_back(pairings[i]);
  }
  return t;
}

}  // namespace

Rat arithmetic_genus(const SurfaceModel& m, const DivisorClass& c) {
  require_class(m, c, "arithmetic_genus");
  return (m.pair(m.canonical, c) + m.pair(c, c)) / Rat(2) + Rat(1);
}

bool is_minus_two_curve(const SurfaceModel& m, const DivisorClass& c) {
  require_class(m, c, "is_minus_two_curve");
  return m.pair(c, c) == Rat(-2) && m.pair(m.canonical, c).is_zero();
}

Verdict is_nef(const SurfaceModel& m, const DivisorClass& d) {
  require_class(m, d, "is_nef");
  const auto pairings = catalog_pairings(m, d);
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    if (pairings[i].sign() < 0) {
      return make(Status::No, CurveWitness{m.curves[i].name, pairings[i]}, {"catalog_curves_integral"});
    }
  }
  if (m.pseff_gens) {
    PairingTable t{"pseff", {}, {}};
    for (std::size_t i = 0; i < m.pseff_gens->size(); ++i) {
      const Rat p = m.pair(d, (*m.pseff_gens)[i]);
      if (p.sign() < 0) return make(Status::No, PseffWitness{i, p}, {"pseff_gens"});
      t.names.push_back("g" + std::to_string(i));
      t.values.push_back(p);
    }
    return make(Status::Yes, std::move(t), {"pseff_gens"});
  }
  if (m.curve_cone_generated) {
    PairingTable t{"catalog", {}, pairings};
    for (const auto& c : m.curves) t.names.push_back(c.name);
    return make(Status::Yes, std::move(t), {"curve_cone_generated"});
  }
  // A big class that is nonnegative on every negative curve has no negative
  // part in its Zariski decomposition.
  if (m.neg_curves_complete) {
    Verdict big = is_big(m, d);
    if (big.yes()) {
      Verdict v = make(Status::Yes, negative_table(m, pairings), {"neg_curves_complete"});
      v.sub.push_back({"big", std::move(big)});
      return v;
    }
  }
  return Verdict::unknown("all catalog pairings are nonnegative but the catalog is not known to generate the curve cone");
}

Verdict is_big(const SurfaceModel& m, const DivisorClass& d) {
  require_class(m, d, "is_big");
  if (d.is_zero()) {
    if (m.proper_positive_dim) return make(Status::No, ZeroClass{}, {"proper_positive_dim"});
    return Verdict::unknown("zero class on a model not declared proper of positive dimension");
  }
  if (m.pseff_gens) return interior_verdict(m.pseff_cone(), d, "pseff", "pseff_gens");
  if (m.curve_cone_generated && !m.curves.empty()) {
    return interior_verdict(m.catalog_cone(), d, "catalog", "curve_cone_generated");
  }

  if (auto dec = minimal_decomposition(m, d)) {
    if (auto gate = decomposition_gate(m, dec->nef_part)) {
      return decomposition_verdict(dec->nef_part, dec->curve_coeffs, *gate);
    }
  }

  if (m.ample_witness) {
    const Rat sq = m.pair(d, d);
    const Rat da = m.pair(d, *m.ample_witness);
    if (sq.sign() > 0 && da.sign() > 0) {
      return make(Status::Yes, SignatureCertificate{sq, da}, {"ample_witness"});
    }
    if (da.sign() <= 0) return make(Status::No, SignatureCertificate{sq, da}, {"ample_witness"});
  }

  if (auto z = zariski_decompose(m, d)) {
    const Rat p2 = m.pair(z->positive, z->positive);
    if (p2.sign() > 0) {
      if (auto gate = decomposition_gate(m, z->positive)) {
        return decomposition_verdict(z->positive, z->negative_coeffs, *gate);
      }
    } else if (m.curve_cone_generated) {
      return make(Status::No, ZariskiCertificate{z->positive, z->negative_coeffs},
                  {"neg_curves_complete", "curve_cone_generated"});
    }
  }
  return Verdict::unknown("no pseudo-effective cone data, decomposition certificate, or ample witness decides bigness");
}

Verdict is_anti_big(const SurfaceModel& m, const DivisorClass& d) {
  require_class(m, d, "is_anti_big");
  return is_big(m, -d);
}

Verdict is_ample(const SurfaceModel& m, const DivisorClass& d) {
  require_class(m, d, "is_ample");
  const auto pairings = catalog_pairings(m, d);
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    if (pairings[i].sign() <= 0) {
      return make(Status::No, CurveWitness{m.curves[i].name, pairings[i]}, {"catalog_curves_integral"});
    }
  }
  if (m.pseff_gens) {
    for (std::size_t i = 0; i < m.pseff_gens->size(); ++i) {
      const Rat p = m.pair(d, (*m.pseff_gens)[i]);
      if (p.sign() <= 0) return make(Status::No, PseffWitness{i, p}, {"pseff_gens"});
    }
  }
  Verdict big = is_big(m, d);
  if (big.no()) {
    Verdict v = make(Status::No, Composite{});
    v.sub.push_back({"big", std::move(big)});
    return v;
  }
  if (big.yes() && m.neg_curves_complete) {
    Verdict v = make(Status::Yes, negative_table(m, pairings), {"neg_curves_complete"});
    v.sub.push_back({"big", std::move(big)});
    return v;
  }
  return Verdict::unknown(big.yes() ? "negative curve list not known to be complete"
                                    : "bigness undecided");
}

Verdict is_tensor_ample(const SurfaceModel& m, const DivisorClass& d) {
  require_class(m, d, "is_tensor_ample");
  const auto pairings = catalog_pairings(m, d);
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    if (pairings[i].is_zero()) {
      return make(Status::No, CurveWitness{m.curves[i].name, pairings[i]}, {"catalog_curves_integral"});
    }
  }
  Verdict big = is_big(m, d);
  Verdict anti = is_anti_big(m, d);
  if (big.no() && anti.no()) {
    Verdict v = make(Status::No, Composite{});
    v.sub.push_back({"big", std::move(big)});
    v.sub.push_back({"antibig", std::move(anti)});
    return v;
  }
  if ((big.yes() || anti.yes()) && m.neg_curves_complete) {
    Verdict v = make(Status::Yes, negative_table(m, pairings), {"neg_curves_complete"});
    if (big.yes()) {
      v.sub.push_back({"big", std::move(big)});
    } else {
      v.sub.push_back({"antibig", std::move(anti)});
    }
    return v;
  }
  if (big.yes() || anti.yes()) return Verdict::unknown("negative curve list not known to be complete");
  return Verdict::unknown("neither bigness nor anti-bigness could be decided");
}

Verdict classify(const SurfaceModel& m, const DivisorClass& d, Property p) {
  switch (p) {
    case Property::Nef: return is_nef(m, d);
    case Property::Ample: return is_ample(m, d);
    case Property::Big: return is_big(m, d);
    case Property::AntiBig: return is_anti_big(m, d);
    case Property::TensorAmple: return is_tensor_ample(m, d);
  }
  throw UsageError("unknown property");
}

CanonicalReport canonical_report(const SurfaceModel& m) {
  CanonicalReport r;
  r.big = is_big(m, m.canonical);
  r.anti_big = is_anti_big(m, m.canonical);
  for (const auto& c : m.curves) {
    if (is_minus_two_curve(m, c.cls)) r.minus_two_curves.push_back(c.name);
  }
  r.tensor_ample = is_tensor_ample(m, m.canonical);
  r.cross_check_passed = !(r.tensor_ample.yes() && !r.minus_two_curves.empty());
  if (!r.cross_check_passed) {
    throw InvariantError("canonical class classified tensor-ample despite a (-2)-curve in the catalog");
  }
  return r;
}

namespace {

bool positive_multiple(const RatVec& g, const RatVec& a) {
  for (std::size_t t = 0; t < a.dim(); ++t) {
    if (a[t].is_zero()) continue;
    const Rat c = g[t] / a[t];
    return c.sign() > 0 && g == a * c;
  }
  return false;
}

}  // namespace

Verdict group_tensor_ample(const SurfaceModel& m, const std::vector<DivisorClass>& gens) {
  for (const auto& g : gens) require_class(m, g, "group_tensor_ample");
  const std::size_t n = m.rank();

  if (m.ample_witness) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (positive_multiple(gens[i], *m.ample_witness)) {
        return make(Status::Yes, GroupCertificate{i, RatVec(gens.size()), {}}, {"ample_witness"});
      }
    }
  }

  for (const auto& c : m.curves) {
    bool all_zero = true;
    for (const auto& g : gens) {
      if (!m.pair(g, c.cls).is_zero()) all_zero = false;
    }
    if (all_zero) return make(Status::No, CurveWitness{c.name, Rat(0)}, {"catalog_curves_integral"});
  }

  RatVec combination(gens.size());
  Verdict element;
  bool found = false;
  if (m.pseff_gens) {
    const ConeQ ps = m.pseff_cone();
    const std::size_t k = ps.generators.size();
    const std::size_t p = gens.size();
    std::optional<RatVec> point;
    if (rank(ps.generators, n) == n) {
      std::vector<LinearConstraint> cons;
      for (std::size_t i = 0; i < k; ++i) cons.push_back({RatVec::unit(k + p, i), Relation::Greater, Rat(0)});
      for (std::size_t t = 0; t < n; ++t) {
        RatVec row(k + p);
        for (std::size_t i = 0; i < k; ++i) row[i] = ps.generators[i][t];
        for (std::size_t i = 0; i < p; ++i) row[k + i] = -gens[i][t];
        cons.push_back({std::move(row), Relation::Equal, Rat(0)});
      }
      auto res = lp_feasible(k + p, cons);
      if (res.feasible()) point = *res.point;
    }
    if (!point) {
      // Span misses the open cone: a dual functional vanishing on the span.
      const RatMat g = RatMat::from_rows(ps.generators, n);
      const auto kernel = null_space(g);
      if (!kernel.empty()) {
        return make(Status::No, SeparatingFunctional{"pseff_rank_deficient", kernel.front().primitive()},
                    {"pseff_gens"});
      }
      std::vector<LinearConstraint> cons;
      RatVec total(n);
      for (const auto& gen : ps.generators) {
        cons.push_back({gen, Relation::GreaterEqual, Rat(0)});
        total += gen;
      }
      for (const auto& g2 : gens) cons.push_back({g2, Relation::Equal, Rat(0)});
      cons.push_back({total, Relation::Equal, Rat(1)});
      auto res = lp_feasible(n, cons);
      if (!res.feasible()) throw std::logic_error("group criterion: no separating functional found");
      return make(Status::No, SeparatingFunctional{"group", res.point->primitive()}, {"pseff_gens"});
    }
    for (std::size_t i = 0; i < p; ++i) combination[i] = (*point)[k + i];
    RatVec e(n);
    for (std::size_t i = 0; i < p; ++i) e += gens[i] * combination[i];
    element = is_big(m, e);
    found = element.yes();
  } else {
    for (std::size_t i = 0; i < gens.size() && !found; ++i) {
      for (int sign : {1, -1}) {
        Verdict v = is_big(m, gens[i] * Rat(sign));
        if (v.yes()) {
          combination = RatVec(gens.size());
          combination[i] = sign;
          element = std::move(v);
          found = true;
          break;
        }
      }
    }
  }
  if (!found) return Verdict::unknown("no element of the group could be certified big");
  if (!m.neg_curves_complete) return Verdict::unknown("negative curve list not known to be complete");

  std::vector<std::size_t> partners;
  for (auto j : m.negative_curves()) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!m.pair(gens[i], m.curves[j].cls).is_zero()) {
        partners.push_back(i);
        break;
      }
    }
  }
  Verdict v = make(Status::Yes, GroupCertificate{std::nullopt, combination, partners}, {"neg_curves_complete"});
  v.sub.push_back({"element", std::move(element)});
  return v;
}

void validate_ample_witness(const SurfaceModel& m) {
  if (!m.ample_witness) return;
  const Verdict v = is_ample(m, *m.ample_witness);
  if (v.no()) throw InvariantError("declared ample witness classifies as not ample");
}

}  // namespace tensamp
