#include <gtest/gtest.h>

#include <map>
#include <random>

#include "support/oracles.hpp"
#include "tensamp/builders/blowup.hpp"
#include "tensamp/builders/ruled.hpp"
#include "tensamp/builders/toric.hpp"
#include "tensamp/surface/classify.hpp"
#include "tensamp/surface/cone_pieces.hpp"
#include "tensamp/surface/verify.hpp"
#include "tensamp/surface/zariski.hpp"

using namespace tensamp;

namespace {

SurfaceModel hirzebruch(long n) { return build_ruled({0, -n, Stability::Unstable, -n}); }

SurfaceModel plane() {
  SurfaceModel m;
  m.lattice = {1, RatMat::identity(1), {"H"}};
  m.canonical = RatVec{-3};
  m.curves = {{"line", RatVec{1}}};
  m.neg_curves_complete = true;
  m.curve_cone_generated = true;
  m.hodge_index = true;
  m.pseff_gens = std::vector<DivisorClass>{RatVec{1}};
  m.ample_witness = RatVec{1};
  m.validate();
  return m;
}

SurfaceModel blowup(long r, PointConfig c = PointConfig::General) {
  BlowupP2Config cfg;
  cfg.r = r;
  cfg.config = c;
  return build_blowup_p2(cfg);
}

const std::vector<Property> kAll{Property::Nef, Property::Ample, Property::Big, Property::AntiBig,
                                 Property::TensorAmple};

// Basis vectors, +-K, catalog curves, a few sums and fixed-seed random classes.
std::vector<DivisorClass> probe_classes(const SurfaceModel& m, std::mt19937& rng, int random_count) {
  const std::size_t n = m.rank();
  std::vector<DivisorClass> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(RatVec::unit(n, i));
  out.push_back(m.canonical);
  out.push_back(-m.canonical);
  for (const auto& c : m.curves) {
    out.push_back(c.cls);
    out.push_back(c.cls - m.canonical);
  }
  if (m.ample_witness) out.push_back(*m.ample_witness);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int k = 0; k < random_count; ++k) {
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rat(coef(rng));
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<std::string, SurfaceModel>> corpus() { return oracle::corpus_surfaces(TENSAMP_TEST_MODELS_DIR); }

}  // namespace

TEST(Lattice, PairingExamples) {
  IntersectionLattice bl{2, RatMat::from_rows({{1, 0}, {0, -1}}, 2), {"H", "E1"}};
  EXPECT_EQ(pair(bl, RatVec{1, 1}, RatVec{1, 1}), Rat(0));
  const SurfaceModel f2 = hirzebruch(2);
  EXPECT_EQ(f2.pair(RatVec{0, 1}, RatVec{0, 1}), Rat(-2));
  EXPECT_EQ(f2.pair(RatVec{0, 0}, RatVec{3, 4}), Rat(0));
  EXPECT_THROW(pair(bl, RatVec{1}, RatVec{1, 0}), UsageError);
}

TEST(Lattice, HodgeSignatureCheck) {
  IntersectionLattice ok{2, RatMat::from_rows({{0, 1}, {1, -2}}, 2), {"f", "xi"}};
  EXPECT_TRUE(ok.has_hodge_signature());
  IntersectionLattice bad{2, RatMat::from_rows({{1, 0}, {0, 1}}, 2), {"a", "b"}};
  EXPECT_FALSE(bad.has_hodge_signature());
  EXPECT_THROW(bad.validate(true), InvariantError);
  IntersectionLattice asym{2, RatMat::from_rows({{1, 2}, {0, 1}}, 2), {"a", "b"}};
  EXPECT_THROW(asym.validate(false), InvariantError);
}

TEST(Genus, Examples) {
  const SurfaceModel b1 = blowup(1);
  EXPECT_EQ(arithmetic_genus(b1, RatVec{0, 1}), Rat(0));
  EXPECT_FALSE(is_minus_two_curve(b1, RatVec{0, 1}));
  const SurfaceModel f2 = hirzebruch(2);
  EXPECT_EQ(arithmetic_genus(f2, RatVec{0, 1}), Rat(0));
  EXPECT_TRUE(is_minus_two_curve(f2, RatVec{0, 1}));
  const SurfaceModel p2 = plane();
  EXPECT_EQ(arithmetic_genus(p2, RatVec{1}), Rat(0));
  EXPECT_FALSE(is_minus_two_curve(p2, RatVec{1}));
}

TEST(Nef, Examples) {
  EXPECT_TRUE(is_nef(hirzebruch(1), -hirzebruch(1).canonical).yes());
  const Verdict v = is_nef(hirzebruch(3), -hirzebruch(3).canonical);
  ASSERT_TRUE(v.no());
  EXPECT_EQ(std::get<CurveWitness>(v.evidence), (CurveWitness{"C0", Rat(-1)}));
  // Blow-up at one point without flags: E1 and H pair nonnegatively with 2H - E1.
  EXPECT_EQ(is_nef(blowup(1), RatVec{2, -1}).status, Status::Unknown);
}

TEST(Big, Examples) {
  const SurfaceModel f3 = hirzebruch(3);
  const Verdict v = is_big(f3, -f3.canonical);
  ASSERT_TRUE(v.yes());
  // -K = 2 C0 + 5 f over the generators (C0, f).
  EXPECT_EQ(std::get<InteriorCertificate>(v.evidence).coefficients, (RatVec{2, 5}));

  const SurfaceModel b1 = blowup(1);
  const Verdict w = is_big(b1, RatVec{1, 1});
  ASSERT_TRUE(w.yes());
  const auto& dec = std::get<DecompositionCertificate>(w.evidence);
  EXPECT_EQ(dec.nef_part, (RatVec{1, 0}));
  EXPECT_EQ(dec.curve_coeffs, (RatVec{1}));
  EXPECT_TRUE(verify(b1, RatVec{1, 1}, Property::Big, w));

  EXPECT_TRUE(is_big(f3, RatVec{0, 0}).no());
  EXPECT_TRUE(std::holds_alternative<ZeroClass>(is_big(f3, RatVec{0, 0}).evidence));
}

TEST(AntiBig, Examples) {
  const ToricSurface p2 = build_toric({{1, 1, 1}});
  EXPECT_TRUE(is_anti_big(p2.model, p2.model.canonical).yes());
  EXPECT_TRUE(verify(p2.model, p2.model.canonical, Property::AntiBig, p2.canonical_anti_big));
  EXPECT_TRUE(is_anti_big(blowup(1), RatVec{1, 1}).no());
  EXPECT_TRUE(is_anti_big(hirzebruch(2), RatVec{0, 0}).no());
}

TEST(Ample, Examples) {
  EXPECT_TRUE(is_ample(hirzebruch(1), -hirzebruch(1).canonical).yes());
  const Verdict v = is_ample(hirzebruch(2), -hirzebruch(2).canonical);
  ASSERT_TRUE(v.no());
  EXPECT_EQ(std::get<CurveWitness>(v.evidence), (CurveWitness{"C0", Rat(0)}));
  // Bigness of 2H - E1 is known, but the negative curve list is not complete.
  EXPECT_EQ(is_ample(blowup(1), RatVec{2, -1}).status, Status::Unknown);
}

TEST(TensorAmple, Examples) {
  EXPECT_TRUE(is_tensor_ample(hirzebruch(3), -hirzebruch(3).canonical).yes());
  const Verdict f2 = is_tensor_ample(hirzebruch(2), -hirzebruch(2).canonical);
  ASSERT_TRUE(f2.no());
  EXPECT_EQ(std::get<CurveWitness>(f2.evidence).curve, "C0");
  EXPECT_TRUE(is_tensor_ample(hirzebruch(1), -hirzebruch(1).canonical).yes());

  BlowupP2Config cfg{1, PointConfig::General, true, std::nullopt};
  const SurfaceModel b1 = build_blowup_p2(cfg);
  EXPECT_TRUE(is_tensor_ample(b1, RatVec{1, 1}).yes());
  EXPECT_TRUE(is_ample(b1, RatVec{1, 1}).no());

  const SurfaceModel g1 = build_ruled({1, -1, Stability::Unstable, -1});
  EXPECT_TRUE(is_tensor_ample(g1, -g1.canonical).yes());
  EXPECT_TRUE(is_ample(g1, -g1.canonical).no());
  EXPECT_EQ(g1.pair(-g1.canonical, g1.find_curve("C0")->cls), Rat(-1));
}

TEST(CanonicalReport, Examples) {
  const CanonicalReport p2 = canonical_report(build_toric({{1, 1, 1}}).model);
  EXPECT_TRUE(p2.anti_big.yes());
  EXPECT_TRUE(p2.minus_two_curves.empty());
  EXPECT_TRUE(p2.tensor_ample.yes());

  const CanonicalReport f2 = canonical_report(build_toric({{0, -2, 0, 2}}).model);
  EXPECT_EQ(f2.minus_two_curves, (std::vector<std::string>{"D1"}));
  EXPECT_TRUE(f2.tensor_ample.no());

  const CanonicalReport line3 = canonical_report(blowup(3, PointConfig::OnLine));
  EXPECT_TRUE(line3.tensor_ample.no());
  EXPECT_EQ(std::get<CurveWitness>(line3.tensor_ample.evidence).curve, "l_tilde");
}

TEST(Zariski, HandComputedDecompositions) {
  BlowupP2Config cfg{1, PointConfig::General, true, std::nullopt};
  const SurfaceModel b1 = build_blowup_p2(cfg);
  const auto z = zariski_decompose(b1, RatVec{1, 2});
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->positive, (RatVec{1, 0}));
  EXPECT_EQ(z->negative_coeffs, (RatVec{2}));

  const SurfaceModel f2 = hirzebruch(2);
  // C0 + f = xi + f in the basis (f, xi).
  const auto w = zariski_decompose(f2, RatVec{1, 1});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->positive, (RatVec{1, Rat(1, 2)}));
  EXPECT_EQ(w->negative_coeffs, (RatVec{0, Rat(1, 2)}));
  EXPECT_EQ(f2.pair(w->positive, w->positive), Rat(1, 2));

  const auto nef = zariski_decompose(f2, RatVec{2, 1});
  ASSERT_TRUE(nef.has_value());
  EXPECT_EQ(nef->positive, (RatVec{2, 1}));
  EXPECT_TRUE(nef->negative_coeffs.is_zero());
}

TEST(Zariski, NegativeDefiniteByMinors) {
  EXPECT_TRUE(negative_definite(RatMat::from_rows({{-2, 1}, {1, -2}}, 2)));
  EXPECT_FALSE(negative_definite(RatMat::from_rows({{-1, 1}, {1, -1}}, 2)));
  EXPECT_FALSE(negative_definite(RatMat::from_rows({{1}}, 1)));
}

TEST(ConePieces, Examples) {
  const TensorAmpleCone unstable = tensor_ample_cone_pieces(hirzebruch(3));
  ASSERT_EQ(unstable.pieces.size(), 2u);
  EXPECT_EQ(unstable.pieces[0].label, "Amp");
  EXPECT_EQ(unstable.pieces[1].label, "Big_{C0,-}");

  const TensorAmpleCone semi = tensor_ample_cone_pieces(build_ruled({1, 0, Stability::Semistable, 0}));
  ASSERT_EQ(semi.pieces.size(), 1u);
  EXPECT_EQ(semi.pieces[0].label, "Amp");

  EXPECT_EQ(tensor_ample_cone_pieces(plane()).pieces.size(), 1u);
  EXPECT_THROW(tensor_ample_cone_pieces(blowup(2)), CapacityError);
}

TEST(Group, Examples) {
  const SurfaceModel f2 = hirzebruch(2);
  const Verdict a = group_tensor_ample(f2, {-f2.canonical});
  ASSERT_TRUE(a.no());
  EXPECT_EQ(std::get<CurveWitness>(a.evidence).curve, "C0");
  EXPECT_TRUE(verify_group(f2, {-f2.canonical}, a));
  const Verdict b = group_tensor_ample(f2, {-f2.canonical, RatVec{1, 0}});
  EXPECT_TRUE(b.yes());
  EXPECT_TRUE(verify_group(f2, {-f2.canonical, RatVec{1, 0}}, b));
}

TEST(Verify, RejectsTamperedEvidence) {
  const SurfaceModel f2 = hirzebruch(2);
  const DivisorClass d = -f2.canonical;
  Verdict v = is_tensor_ample(f2, d);
  ASSERT_TRUE(verify(f2, d, Property::TensorAmple, v));
  std::get<CurveWitness>(v.evidence).curve = "f";
  EXPECT_FALSE(verify(f2, d, Property::TensorAmple, v));

  Verdict big = is_big(f2, d);
  ASSERT_TRUE(verify(f2, d, Property::Big, big));
  std::get<InteriorCertificate>(big.evidence).coefficients[0] += Rat(1);
  EXPECT_FALSE(verify(f2, d, Property::Big, big));

  Verdict flipped = is_big(f2, d);
  flipped.status = Status::No;
  EXPECT_FALSE(verify(f2, d, Property::Big, flipped));
}

TEST(Validation, RejectsInconsistentModels) {
  SurfaceModel m = hirzebruch(2);
  m.curves.push_back({"C0", RatVec{1, 1}});
  EXPECT_THROW(m.validate(), InvariantError);
  m = hirzebruch(2);
  m.curves.push_back({"bad", RatVec{1, -1}});  // outside <C0, f>
  EXPECT_THROW(m.validate(), InvariantError);
  m = hirzebruch(2);
  m.ample_witness = RatVec{1, 1};  // (f + xi)^2 = 0
  EXPECT_THROW(m.validate(), InvariantError);
}

// Every verdict on every corpus model re-verifies, and the global invariants hold.
TEST(Properties, CorpusInvariants) {
  std::mt19937 rng(211);
  int checked = 0;
  for (const auto& [name, m] : corpus()) {
    for (const auto& d : probe_classes(m, rng, 8)) {
      std::map<Property, Verdict> vs;
      for (Property p : kAll) {
        vs[p] = classify(m, d, p);
        EXPECT_TRUE(verify(m, d, p, vs[p])) << name << " " << d.str() << " " << to_string(p);
        ++checked;
      }
      for (long n : {-3L, -2L, -1L, 2L, 3L}) {
        EXPECT_EQ(is_tensor_ample(m, Rat(n) * d).status, vs[Property::TensorAmple].status) << name << " " << d.str();
      }
      if (vs[Property::Nef].yes() && vs[Property::TensorAmple].yes()) {
        EXPECT_TRUE(vs[Property::Ample].yes()) << name << " " << d.str();
      }
      if (vs[Property::Ample].yes()) EXPECT_TRUE(vs[Property::Big].yes());
      if (vs[Property::Big].yes()) {
        for (const auto& c : m.curves) {
          if (m.pair(c.cls, c.cls).sign() >= 0) EXPECT_GT(m.pair(d, c.cls), Rat(0)) << name << " " << c.name;
        }
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Properties, FlagRelaxationOnlyLosesInformation) {
  std::mt19937 rng(223);
  for (const auto& [name, m] : corpus()) {
    for (int mask = 1; mask < 4; ++mask) {
      SurfaceModel relaxed = m;
      if (mask & 1) relaxed.neg_curves_complete = false;
      if (mask & 2) relaxed.curve_cone_generated = false;
      for (const auto& d : probe_classes(m, rng, 4)) {
        for (Property p : kAll) {
          const Status before = classify(m, d, p).status;
          const Status after = classify(relaxed, d, p).status;
          if (after != Status::Unknown) EXPECT_EQ(after, before) << name << " " << d.str() << " " << to_string(p);
        }
      }
    }
  }
}

TEST(Properties, ZariskiAgreesWithBigness) {
  std::mt19937 rng(227);
  std::uniform_int_distribution<long> coef(0, 3);
  int decomposed = 0;
  for (const auto& [name, m] : corpus()) {
    if (!m.neg_curves_complete || !m.pseff_gens) continue;
    for (int t = 0; t < 30; ++t) {
      DivisorClass d(m.rank());
      for (const auto& g : *m.pseff_gens) d += Rat(coef(rng)) * g;
      if (d.is_zero()) continue;
      const auto z = zariski_decompose(m, d);
      if (!z) continue;
      ++decomposed;
      DivisorClass sum = z->positive;
      for (std::size_t j = 0; j < m.curves.size(); ++j) {
        EXPECT_GE(z->negative_coeffs[j], Rat(0));
        sum += z->negative_coeffs[j] * m.curves[j].cls;
        EXPECT_GE(m.pair(z->positive, m.curves[j].cls), Rat(0));
      }
      EXPECT_EQ(sum, d);
      for (std::size_t j : z->support) EXPECT_EQ(m.pair(z->positive, m.curves[j].cls), Rat(0));
      if (!z->support.empty()) EXPECT_TRUE(negative_definite(support_gram(m, z->support)));
      const Status big = is_big(m, d).status;
      if (big != Status::Unknown) EXPECT_EQ(big == Status::Yes, m.pair(z->positive, z->positive).sign() > 0) << name;
    }
  }
  EXPECT_GT(decomposed, 50);
}

TEST(Properties, PieceWitnessesAreTensorAmple) {
  for (const auto& [name, m] : corpus()) {
    if (!m.pseff_gens || !m.neg_curves_complete) continue;
    const TensorAmpleCone tc = tensor_ample_cone_pieces(m);
    for (const auto& piece : tc.pieces) {
      EXPECT_TRUE(cone_interior_contains(tc.pseff, piece.witness)) << name;
      for (std::size_t j = 0; j < piece.signs.size(); ++j) {
        EXPECT_EQ(tc.hyperplane_normals[j].dot(piece.witness).sign(), piece.signs[j]) << name;
      }
      EXPECT_TRUE(is_tensor_ample(m, piece.witness).yes()) << name << " " << piece.label;
    }
  }
}

TEST(Properties, AmpleWitnessGeneratesTensorAmpleGroup) {
  for (const auto& [name, m] : corpus()) {
    if (!m.ample_witness) continue;
    const Verdict v = group_tensor_ample(m, {*m.ample_witness});
    EXPECT_TRUE(v.yes()) << name;
    EXPECT_TRUE(verify_group(m, {*m.ample_witness}, v)) << name;
  }
}
