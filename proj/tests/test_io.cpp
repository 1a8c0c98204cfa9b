#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "tensamp/builders/blowup.hpp"
#include "tensamp/builders/ruled.hpp"
#include "tensamp/cli/commands.hpp"
#include "tensamp/io/expression.hpp"
#include "tensamp/io/model_json.hpp"
#include "tensamp/io/report_json.hpp"
#include "tensamp/io/svg.hpp"

using namespace tensamp;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const std::string& name) { return (fs::path(TENSAMP_TEST_MODELS_DIR) / name).string(); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tensamp_io_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Expression, ParsesListsAndTerms) {
  const SurfaceModel f2 = build_ruled({0, -2, Stability::Unstable, -2});
  EXPECT_EQ(parse_class_spec(f2, "1, -2/4"), (RatVec{1, Rat(-1, 2)}));
  EXPECT_EQ(parse_class_spec(f2, "-K"), (RatVec{4, 2}));
  EXPECT_EQ(parse_class_spec(f2, "\xE2\x88\x92K"), (RatVec{4, 2}));
  EXPECT_EQ(parse_class_spec(f2, "2*xi - 3/2 f"), (RatVec{Rat(-3, 2), 2}));
  EXPECT_EQ(parse_class_spec(f2, "C0 + f"), (RatVec{1, 1}));
  EXPECT_THROW(parse_class_spec(f2, "1,2,3"), UsageError);
  EXPECT_THROW(parse_class_spec(f2, "7"), UsageError);
  EXPECT_THROW(parse_class_spec(f2, "Q"), ParseError);
  EXPECT_THROW(parse_class_spec(f2, "2 f f"), ParseError);
  EXPECT_THROW(parse_class_spec(f2, "1,x"), ParseError);
  EXPECT_THROW(parse_class_spec(f2, ""), ParseError);
  EXPECT_EQ(parse_integer_list("1,-1, 3"), (std::vector<long>{1, -1, 3}));
  EXPECT_THROW(parse_integer_list("1,a"), ParseError);
}

TEST(ModelJson, RoundTripIsIdentity) {
  std::vector<SurfaceModel> models{build_ruled({0, -3, Stability::Unstable, -3}),
                                   build_ruled({2, 1, Stability::Semistable, 0}),
                                   build_blowup_p2({4, PointConfig::OnLine, true, std::nullopt})};
  for (const auto& m : models) {
    const std::string text = canonical_dump(surface_to_json(m, "x"));
    const SurfaceModel back = surface_from_json(Json::parse(text));
    EXPECT_EQ(canonical_dump(surface_to_json(back, "x")), text);
  }
  for (const auto& [name, m] : oracle::corpus_surfaces(TENSAMP_TEST_MODELS_DIR)) {
    std::ifstream in(model(name + ".json"));
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string stored = Json::parse(buf.str()).value("name", "");
    EXPECT_EQ(canonical_dump(surface_to_json(m, stored)), buf.str()) << name;
  }
}

TEST(ModelJson, CanonicalizesAndRejects) {
  Json j = surface_to_json(build_ruled({0, -2, Stability::Unstable, -2}));
  j["gram"][1][1] = "-4/2";
  EXPECT_EQ(surface_from_json(j).lattice.gram(1, 1), Rat(-2));

  Json extra = j;
  extra["colour"] = "red";
  EXPECT_THROW(surface_from_json(extra), ParseError);
  Json short_row = j;
  short_row["gram"][0] = Json::array({"0"});
  EXPECT_THROW(surface_from_json(short_row), ParseError);
  Json bad_rat = j;
  bad_rat["canonical"][0] = "1/0";
  EXPECT_THROW(surface_from_json(bad_rat), ParseError);
  Json no_flags = j;
  no_flags.erase("flags");
  EXPECT_THROW(surface_from_json(no_flags), ParseError);
  Json asym = j;
  asym["gram"][0][1] = "2";
  EXPECT_THROW(surface_from_json(asym), InvariantError);
  EXPECT_THROW(load_model_file("/nonexistent/model.json"), IoError);
}

TEST(ModelJson, CurveSchemeAndCertificate) {
  const CurveModel c = build_curve({{"A", 1}, {"B", -1}});
  EXPECT_EQ(curve_from_json(curve_to_json(c)).degrees(), c.degrees());

  const ModelFile s = load_model_file(model("scheme_f3_and_curve.json"));
  ASSERT_EQ(s.kind, "scheme");
  EXPECT_EQ(std::get<SchemeModel>(s.model).components.size(), 2u);

  const ModelFile cert = load_model_file(model("cert_doubled_origin.json"));
  const StratCertificate& sc = std::get<StratCertificate>(cert.model);
  EXPECT_EQ(certificate_from_json(certificate_to_json(sc)).strata.size(), sc.strata.size());
  EXPECT_EQ(certificate_to_json(certificate_from_json(certificate_to_json(sc))), certificate_to_json(sc));
}

TEST(ReportJson, VerdictsRoundTrip) {
  std::mt19937 rng(503);
  int count = 0;
  for (const auto& [name, m] : oracle::corpus_surfaces(TENSAMP_TEST_MODELS_DIR)) {
    std::vector<DivisorClass> classes{m.canonical, -m.canonical};
    for (const auto& c : m.curves) classes.push_back(c.cls);
    for (const auto& d : classes) {
      for (Property p : {Property::Nef, Property::Ample, Property::Big, Property::AntiBig, Property::TensorAmple}) {
        const Verdict v = classify(m, d, p);
        const VerdictReport r{Json{{"model", name}, {"class", vec_to_json(d)}}, v};
        const Json j = report_to_json(r);
        const VerdictReport back = report_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.verdict, v);
        EXPECT_EQ(back.query, r.query);
        EXPECT_EQ(report_to_json(back).dump(), j.dump());
        ++count;
      }
    }
  }
  const Verdict g{Status::Yes, GroupCertificate{std::size_t{1}, RatVec{1, 2}, {0, 1}}, {"a"}, {}};
  EXPECT_EQ(verdict_from_json(verdict_to_json(g)), g);
  const Verdict cw{Status::No, ComponentWitness{2, "L"}, {}, {{"x", Verdict::unknown("why")}}};
  EXPECT_EQ(verdict_from_json(verdict_to_json(cw)), cw);
  EXPECT_GT(count, 100);
}

TEST(ConeSlice, UnstableRuledPicture) {
  const SurfaceModel f3 = build_ruled({0, -3, Stability::Unstable, -3});
  const ConeSlice s = cone_slice(f3, RatVec{1, 0}, RatVec{0, 1});
  ASSERT_EQ(s.pieces.size(), 2u);
  EXPECT_EQ(s.pieces[0].label, "Amp");
  EXPECT_EQ(s.pieces[0].rays, (std::vector<RatVec>{{1, 0}, {3, 1}}));
  EXPECT_EQ(s.pieces[1].label, "Big_{C0,-}");
  EXPECT_EQ(s.pieces[1].rays, (std::vector<RatVec>{{3, 1}, {0, 1}}));
  EXPECT_EQ(s.labeled_rays.size(), 4u);
  EXPECT_EQ(slice_csv(s), "piece_id,ray_index,coord_1,coord_2\n0,0,1,0\n0,1,3,1\n1,0,3,1\n1,1,0,1\n");
  const std::string svg = slice_svg(s);
  auto occurrences = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(occurrences("<polygon"), 2u);
  EXPECT_EQ(occurrences("<line"), 4u);
  EXPECT_NE(svg.find(">Amp<"), std::string::npos);
  EXPECT_NE(svg.find(">Big_{C0,-}<"), std::string::npos);
}

TEST(Cli, ClassifyExitCodes) {
  CliRun r = cli({"classify", model("hirzebruch_f3.json"), "-K", "tensample"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["status"], "Yes");
  r = cli({"classify", model("hirzebruch_f2.json"), "-K", "tensample"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["evidence"]["curve"], "C0");
  r = cli({"classify", model("blowup_p2_r10_line.json"), "-K", "tensample"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(cli({"classify", model("hirzebruch_f2.json"), "1,2,3", "big"}).code, 65);
  EXPECT_EQ(cli({"classify", model("hirzebruch_f2.json"), "Q", "big"}).code, 64);
  EXPECT_EQ(cli({"classify", model("hirzebruch_f2.json"), "-K", "pretty"}).code, 64);
  EXPECT_EQ(cli({"classify", "/nonexistent.json", "-K", "big"}).code, 66);
  EXPECT_EQ(cli({"frobnicate"}).code, 64);

  const fs::path bad = scratch("bad.json");
  write(bad, "{ not json");
  EXPECT_EQ(cli({"classify", bad.string(), "-K", "big"}).code, 64);
}

TEST(Cli, ModelSearchPath) {
  EXPECT_EQ(resolve_model_path("hirzebruch_f2.json"), fs::path(TENSAMP_DEFAULT_MODELS_DIR) / "hirzebruch_f2.json");
  EXPECT_EQ(cli({"classify", "hirzebruch_f2.json", "-K", "tensample"}).code, 1);
}

TEST(Cli, BuildRoundTripsAndMatchesCorpus) {
  CliRun r = cli({"build", "ruled", "--g", "0", "--e", "-2", "--d", "-2"});
  ASSERT_EQ(r.code, 0);
  const ModelFile mf = parse_model_file(Json::parse(r.out), ".");
  EXPECT_EQ(canonical_dump(surface_to_json(std::get<SurfaceModel>(mf.model), mf.name)), r.out);
  std::ifstream in(model("hirzebruch_f2.json"));
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(r.out, buf.str());

  r = cli({"build", "toric", "--cycle", "1,1,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["rank"], 1);
  r = cli({"build", "blowup-p2", "--r", "3", "--config", "line"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("l_tilde"), std::string::npos);
  EXPECT_EQ(cli({"build", "ruled", "--g", "0", "--e", "-2", "--d", "-1"}).code, 65);
  EXPECT_EQ(cli({"build", "toric", "--cycle", "0,0,0"}).code, 65);
}

TEST(Cli, OtherCommands) {
  CliRun r = cli({"group", model("hirzebruch_f2.json"), "-K", "f"});
  EXPECT_EQ(r.code, 0);
  r = cli({"group", model("hirzebruch_f2.json"), "-K"});
  EXPECT_EQ(r.code, 1);
  r = cli({"nagata", "--r", "9", "--d", "3", "--m", "1,1,1,1,1,1,1,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["excluded"], true);
  r = cli({"edge3fold", "--hypersurface", "7", "--b", "1"});
  EXPECT_EQ(Json::parse(r.out)["result"], true);
  r = cli({"edge3fold", "--deg", "1", "--semistable"});
  EXPECT_EQ(Json::parse(r.out)["result"], false);
  r = cli({"canonical-report", model("blowup_p2_r3_line.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["report"]["tensor_ample"]["evidence"]["curve"], "l_tilde");
  EXPECT_EQ(cli({"compose", model("scheme_point_and_degree_zero.json")}).code, 1);
  EXPECT_EQ(cli({"certify", model("cert_unknown_terminal.json")}).code, 2);
  EXPECT_EQ(cli({"certify", model("hirzebruch_f2.json")}).code, 65);

  const fs::path svg = scratch("f3.svg"), csv = scratch("f3.csv");
  r = cli({"cones", model("hirzebruch_f3.json"), "--svg", svg.string(), "--csv", csv.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(svg));
  EXPECT_EQ(cli({"cones", model("blowup_p2_r2_line_complete.json")}).code, 65);
}
