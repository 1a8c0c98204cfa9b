#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tensamp/builders/ruled.hpp"
#include "tensamp/scheme/scheme.hpp"
#include "tensamp/surface/classify.hpp"

using namespace tensamp;

namespace {

SchemeComponent curve_comp(const std::string& name, std::vector<long> degrees) {
  std::vector<CurveComponent> comps;
  for (std::size_t i = 0; i < degrees.size(); ++i) comps.push_back({name + std::to_string(i), degrees[i]});
  CurveModel c = build_curve(comps);
  return CurveSchemeComponent{name, c, degrees};
}

SchemeComponent f3_component() {
  SurfaceModel f3 = build_ruled({0, -3, Stability::Unstable, -3});
  DivisorClass k = -f3.canonical;
  return SurfaceSchemeComponent{"F3", std::move(f3), std::move(k)};
}

}  // namespace

TEST(Compose, Examples) {
  EXPECT_TRUE(scheme_tensor_ample({{curve_comp("conic", {1, -1})}}).yes());

  const Verdict v = scheme_tensor_ample({{PointComponent{"p"}, curve_comp("L", {0}), curve_comp("M", {2})}});
  ASSERT_TRUE(v.no());
  EXPECT_EQ(std::get<ComponentWitness>(v.evidence), (ComponentWitness{1, "L"}));
  EXPECT_EQ(v.sub.size(), 3u);

  EXPECT_TRUE(scheme_tensor_ample({{f3_component(), curve_comp("B", {2})}}).yes());
  EXPECT_THROW(scheme_tensor_ample({}), UsageError);
}

TEST(Compose, UnknownPropagates) {
  SurfaceModel f3 = build_ruled({0, -3, Stability::Unstable, -3});
  f3.neg_curves_complete = false;
  f3.curve_cone_generated = false;
  DivisorClass k = -f3.canonical;
  const SchemeModel s{{SurfaceSchemeComponent{"X", f3, k}, curve_comp("B", {1})}};
  EXPECT_EQ(scheme_tensor_ample(s).status, Status::Unknown);
  const SchemeModel t{{SurfaceSchemeComponent{"X", f3, k}, curve_comp("B", {0})}};
  EXPECT_TRUE(scheme_tensor_ample(t).no());
}

TEST(Compose, SingleSurfaceMatchesSurfaceVerdict) {
  for (long n = 1; n <= 5; ++n) {
    SurfaceModel f = build_ruled({0, -n, Stability::Unstable, -n});
    const DivisorClass k = -f.canonical;
    const Verdict direct = is_tensor_ample(f, k);
    const Verdict composed = scheme_tensor_ample({{SurfaceSchemeComponent{"X", f, k}}});
    EXPECT_EQ(composed.status, direct.status);
    ASSERT_EQ(composed.sub.size(), 1u);
    EXPECT_EQ(composed.sub[0].verdict, direct);
  }
}

TEST(Compose, OrderAndScalingInvariance) {
  std::mt19937 rng(401);
  std::uniform_int_distribution<long> deg(-2, 2), scale(1, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<SchemeComponent> comps{PointComponent{"p"}};
    std::vector<std::vector<long>> degs;
    for (int c = 0; c < 3; ++c) {
      std::vector<long> d{deg(rng), deg(rng)};
      degs.push_back(d);
      comps.push_back(curve_comp("C" + std::to_string(c), d));
    }
    const Status base = scheme_tensor_ample({comps}).status;
    std::shuffle(comps.begin(), comps.end(), rng);
    EXPECT_EQ(scheme_tensor_ample({comps}).status, base);
    const long s = scale(rng);
    std::vector<SchemeComponent> scaled{PointComponent{"p"}};
    for (std::size_t c = 0; c < degs.size(); ++c) {
      std::vector<long> d = degs[c];
      for (auto& x : d) x *= s;
      scaled.push_back(curve_comp("C" + std::to_string(c), d));
    }
    EXPECT_EQ(scheme_tensor_ample({scaled}).status, base);
  }
}

TEST(Certify, Examples) {
  StratCertificate dejong{"blowup", {{"X", {{"x", 1, true, "affine chart"}, {"y", 1, true, "affine chart"}}}}, {false, Status::Yes, "affine line"}};
  const Verdict v = validate_strat_certificate(dejong);
  EXPECT_TRUE(v.yes());
  EXPECT_EQ(v.assumptions.size(), 3u);

  StratCertificate doubled{"doubled", {{"X", {{"x1", 1, true, ""}, {"x2", 1, true, ""}}}}, {false, Status::Yes, ""}};
  EXPECT_TRUE(validate_strat_certificate(doubled).yes());

  StratCertificate unknown{"u", {{"X", {{"s", 2, true, ""}}}}, {false, Status::Unknown, ""}};
  EXPECT_EQ(validate_strat_certificate(unknown).status, Status::Unknown);

  StratCertificate unasserted{"u", {{"X", {{"s", 1, false, ""}}}}, {true, Status::Unknown, ""}};
  EXPECT_EQ(validate_strat_certificate(unasserted).status, Status::Unknown);

  StratCertificate no{"n", {{"X", {{"s", 1, true, ""}}}}, {false, Status::No, ""}};
  EXPECT_TRUE(validate_strat_certificate(no).no());
}

TEST(Certify, MalformedChains) {
  EXPECT_THROW(validate_strat_certificate({"e", {}, {}}), UsageError);
  EXPECT_THROW(validate_strat_certificate({"e", {{"X", {}}}, {}}), UsageError);
  EXPECT_THROW(validate_strat_certificate({"e", {{"", {{"s", 1, true, ""}}}}, {}}), UsageError);
  EXPECT_THROW(validate_strat_certificate({"e", {{"X", {{"", 1, true, ""}}}}, {}}), UsageError);
}
