#include "tensamp/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "tensamp/builders/arithmetic.hpp"
#include "tensamp/builders/blowup.hpp"
#include "tensamp/builders/ruled.hpp"
#include "tensamp/builders/toric.hpp"
#include "tensamp/io/expression.hpp"
#include "tensamp/io/report_json.hpp"
#include "tensamp/io/svg.hpp"

#ifndef TENSAMP_DEFAULT_MODELS_DIR
#define TENSAMP_DEFAULT_MODELS_DIR "models"
#endif

namespace tensamp {

namespace fs = std::filesystem;

namespace {

int exit_for(Status s) {
  switch (s) {
    case Status::Yes: return kExitYes;
    case Status::No: return kExitNo;
    case Status::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b);
}

struct Loaded {
  ModelFile file;
  std::string name;
};

Loaded load(const std::string& path) {
  const fs::path p = resolve_model_path(path);
  Loaded l{load_model_file(p), ""};
  l.name = l.file.name.empty() ? p.stem().string() : l.file.name;
  return l;
}

const SurfaceModel& surface_of(const Loaded& l) {
  const auto* m = std::get_if<SurfaceModel>(&l.file.model);
  if (!m) throw UsageError("'" + l.name + "' is a " + l.file.kind + " model; this command needs a surface");
  return *m;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
}

std::string witness_of(const Json& verdict) {
  const Json& e = verdict.at("evidence");
  const std::string kind = e.at("kind").get<std::string>();
  if (kind == "curve_witness") return e.at("curve").get<std::string>();
  if (kind == "component_witness") return e.at("name").get<std::string>();
  if (kind == "pseff_witness") return "pseff[" + std::to_string(e.at("index").get<std::size_t>()) + "]";
  return "";
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  int code = 0;
};

void cmd_classify(Context& ctx, const std::string& model, const std::string& spec, const std::string& property) {
  const Loaded l = load(model);
  Json query{{"command", "classify"}, {"model", l.name}, {"class_spec", trimmed(spec)}, {"property", property}};
  Verdict v;
  if (const auto* c = std::get_if<CurveModel>(&l.file.model)) {
    if (property_from_string(property) != Property::TensorAmple) {
      throw UsageError("curve models only support the tensample property");
    }
    const std::vector<long> degrees = parse_integer_list(spec);
    if (degrees.size() != c->components.size()) {
      throw UsageError("curve has " + std::to_string(c->components.size()) + " components, got " +
                       std::to_string(degrees.size()) + " degrees");
    }
    query["degrees"] = degrees;
    v = curve_tensor_ample(*c, degrees);
  } else {
    const SurfaceModel& m = surface_of(l);
    const DivisorClass d = parse_class_spec(m, spec);
    query["class"] = vec_to_json(d);
    v = classify(m, d, property_from_string(property));
  }
  ctx.out << canonical_dump(report_to_json({query, v}));
  ctx.code = exit_for(v.status);
}

void cmd_canonical_report(Context& ctx, const std::string& model) {
  const Loaded l = load(model);
  const CanonicalReport r = canonical_report(surface_of(l));
  Json j{{"query", {{"command", "canonical-report"}, {"model", l.name}}}, {"report", canonical_report_to_json(r)}};
  ctx.out << canonical_dump(j);
  ctx.code = exit_for(r.tensor_ample.status);
}

void cmd_cones(Context& ctx, const std::string& model, const std::string& slice, const std::string& svg_path,
               const std::string& csv_path) {
  const Loaded l = load(model);
  const SurfaceModel& m = surface_of(l);
  RatVec u, v;
  if (slice.empty()) {
    if (m.rank() != 2) throw UsageError("models of rank " + std::to_string(m.rank()) + " need --slice \"u;v\"");
    u = RatVec::unit(2, 0);
    v = RatVec::unit(2, 1);
  } else {
    const auto semi = slice.find(';');
    if (semi == std::string::npos) throw ParseError("--slice expects two classes separated by ';'");
    u = parse_class_spec(m, slice.substr(0, semi));
    v = parse_class_spec(m, slice.substr(semi + 1));
  }
  const ConeSlice s = cone_slice(m, u, v);
  const std::string csv = slice_csv(s);
  if (!svg_path.empty()) write_file(svg_path, slice_svg(s));
  if (csv_path.empty()) {
    ctx.out << csv;
  } else {
    write_file(csv_path, csv);
  }
  ctx.code = kExitYes;
}

void cmd_group(Context& ctx, const std::string& model, const std::vector<std::string>& specs) {
  const Loaded l = load(model);
  const SurfaceModel& m = surface_of(l);
  std::vector<DivisorClass> gens;
  Json echo = Json::array();
  Json spec_echo = Json::array();
  for (const auto& s : specs) {
    gens.push_back(parse_class_spec(m, s));
    echo.push_back(vec_to_json(gens.back()));
    spec_echo.push_back(trimmed(s));
  }
  const Verdict v = group_tensor_ample(m, gens);
  Json query{{"command", "group"}, {"model", l.name}, {"generators", echo}, {"generator_specs", spec_echo}};
  ctx.out << canonical_dump(report_to_json({query, v}));
  ctx.code = exit_for(v.status);
}

void cmd_nagata(Context& ctx, long r, long d, const std::string& m_text) {
  const std::vector<long> m = parse_integer_list(m_text);
  const bool excluded = nagata_excluded(r, d, m);
  Json j{{"query", {{"command", "nagata"}, {"r", r}, {"d", d}, {"m", m}}}, {"excluded", excluded}};
  ctx.out << canonical_dump(j);
  ctx.code = excluded ? kExitYes : kExitNo;
}

void cmd_edge3fold(Context& ctx, std::optional<long> deg, std::optional<long> e, std::optional<long> d,
                   bool semistable, std::optional<long> hyper_r, std::optional<long> hyper_b) {
  Json query{{"command", "edge3fold"}};
  long deg_value = 0;
  Conormal conormal;
  if (hyper_r) {
    if (!hyper_b) throw UsageError("--hypersurface needs --b");
    if (deg || e || d || semistable) throw UsageError("--hypersurface excludes --deg, --e, --d and --semistable");
    const LineParams p = hypersurface_line_params(*hyper_r, *hyper_b);
    query["hypersurface"] = *hyper_r;
    query["b"] = *hyper_b;
    deg_value = p.deg_l_c;
    conormal = Conormal::Unstable(p.e, p.d);
  } else {
    if (!deg) throw UsageError("edge3fold needs --deg (or --hypersurface)");
    deg_value = *deg;
    if (semistable) {
      if (e || d) throw UsageError("--semistable excludes --e and --d");
      conormal = Conormal::Semistable();
      query["semistable"] = true;
    } else {
      if (!e || !d) throw UsageError("edge3fold needs --e and --d unless --semistable");
      conormal = Conormal::Unstable(*e, *d);
      query["e"] = *e;
      query["d"] = *d;
    }
  }
  query["deg"] = deg_value;
  const bool result = threefold_edge_check(deg_value, conormal);
  ctx.out << canonical_dump(Json{{"query", query}, {"result", result}});
  ctx.code = result ? kExitYes : kExitNo;
}

void cmd_compose(Context& ctx, const std::string& model) {
  const Loaded l = load(model);
  const auto* s = std::get_if<SchemeModel>(&l.file.model);
  if (!s) throw UsageError("'" + l.name + "' is a " + l.file.kind + " model; compose needs a scheme");
  const Verdict v = scheme_tensor_ample(*s);
  ctx.out << canonical_dump(report_to_json({Json{{"command", "compose"}, {"model", l.name}}, v}));
  ctx.code = exit_for(v.status);
}

void cmd_certify(Context& ctx, const std::string& model) {
  const Loaded l = load(model);
  const auto* c = std::get_if<StratCertificate>(&l.file.model);
  if (!c) throw UsageError("'" + l.name + "' is a " + l.file.kind + " model; certify needs a certificate");
  const Verdict v = validate_strat_certificate(*c);
  ctx.out << canonical_dump(report_to_json({Json{{"command", "certify"}, {"model", l.name}}, v}));
  ctx.code = exit_for(v.status);
}

void cmd_build_ruled(Context& ctx, long g, long e, std::optional<long> d, bool semistable) {
  RuledData rd;
  rd.g = g;
  rd.e = e;
  std::string name = "ruled_g" + std::to_string(g) + "_e" + std::to_string(e);
  if (semistable) {
    if (d) throw UsageError("--semistable excludes --d");
    rd.stability = Stability::Semistable;
    name += "_semistable";
  } else {
    if (!d) throw UsageError("build ruled needs --d unless --semistable");
    rd.d = *d;
    name += "_d" + std::to_string(*d);
  }
  ctx.out << canonical_dump(surface_to_json(build_ruled(rd), name));
}

void cmd_build_toric(Context& ctx, const std::string& cycle) {
  ToricCycle tc{parse_integer_list(cycle)};
  std::string name = "toric";
  for (long a : tc.a) name += "_" + std::to_string(a);
  ctx.out << canonical_dump(surface_to_json(build_toric(tc).model, name));
}

std::optional<bool> parse_bool_option(const std::string& text, const std::string& option) {
  if (text.empty()) return std::nullopt;
  if (text == "true") return true;
  if (text == "false") return false;
  throw ParseError(option + " expects true or false, got '" + text + "'");
}

void cmd_build_blowup(Context& ctx, long r, const std::string& config, const std::string& neg_complete,
                      const std::string& curve_cone) {
  BlowupP2Config cfg;
  cfg.r = r;
  cfg.config = point_config_from_string(config);
  cfg.neg_complete_override = parse_bool_option(neg_complete, "--neg-complete");
  cfg.curve_cone_override = parse_bool_option(curve_cone, "--curve-cone");
  std::string name = "blowup_p2_r" + std::to_string(r) + "_" + config;
  if (cfg.neg_complete_override && *cfg.neg_complete_override) name += "_complete";
  ctx.out << canonical_dump(surface_to_json(build_blowup_p2(cfg), name));
}

// Runs every sidecar check twice in-process and compares the bytes.
void cmd_corpus(Context& ctx, const std::string& dir_arg) {
  const fs::path dir = dir_arg.empty() ? resolve_model_path(".") : fs::path(dir_arg);
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> sidecars;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string fname = entry.path().filename().string();
    if (fname.size() > 14 && fname.ends_with(".expected.json")) sidecars.push_back(entry.path());
  }
  std::sort(sidecars.begin(), sidecars.end());
  std::size_t passed = 0, total = 0;
  for (const auto& sc : sidecars) {
    const Json sidecar = read_json_file(sc);
    const std::string model = (dir / sidecar.at("model").get<std::string>()).string();
    const Json& checks = sidecar.at("checks");
    for (std::size_t i = 0; i < checks.size(); ++i) {
      ++total;
      std::vector<std::string> args = checks[i].at("args").get<std::vector<std::string>>();
      if (args.empty()) throw ParseError(sc.string() + ": empty args");
      args.insert(args.begin() + 1, model);
      std::ostringstream out1, err1, out2, err2;
      const int code1 = run_cli(args, out1, err1);
      const int code2 = run_cli(args, out2, err2);
      std::string problem;
      if (out1.str() != out2.str() || code1 != code2) problem = "output differs between runs";
      const Json& expect = checks[i].at("expect");
      if (problem.empty() && expect.contains("status")) {
        const Json report = Json::parse(out1.str());
        const Json& verdict = report.contains("report") ? report.at("report").at("tensor_ample") : report;
        const std::string status = verdict.at("status").get<std::string>();
        if (status != expect.at("status").get<std::string>()) problem = "status " + status;
        if (problem.empty() && code1 != exit_for(status_from_string(status))) problem = "exit code mismatch";
        if (problem.empty() && expect.contains("witness") &&
            witness_of(verdict) != expect.at("witness").get<std::string>()) {
          problem = "witness '" + witness_of(verdict) + "'";
        }
      }
      if (problem.empty() && expect.contains("exit") && code1 != expect.at("exit").get<int>()) {
        problem = "exit code " + std::to_string(code1);
      }
      const std::string label = sc.filename().string() + "#" + std::to_string(i);
      if (problem.empty()) {
        ++passed;
        ctx.out << "PASS " << label << '\n';
      } else {
        ctx.out << "FAIL " << label << ": " << problem << '\n';
      }
    }
  }
  ctx.out << passed << "/" << total << " corpus checks passed\n";
  ctx.code = passed == total ? kExitYes : kExitNo;
}

// A leading space keeps class expressions such as "-K" from being read as
// options; the expression parser ignores whitespace.
std::vector<std::string> protect_expressions(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.size() >= 2 && a[0] == '-' && a[1] != '-' && a != "-h" && !std::isdigit(static_cast<unsigned char>(a[1]))) {
      a.insert(a.begin(), ' ');
    }
  }
  return args;
}

}  // namespace

fs::path resolve_model_path(const std::string& path) {
  const fs::path p(path);
  if (fs::exists(p)) return p;
  if (p.is_relative()) {
    if (const char* env = std::getenv("TENSAMP_MODELS"); env && *env) {
      const fs::path q = fs::path(env) / p;
      if (fs::exists(q)) return q;
    }
    const fs::path q = fs::path(TENSAMP_DEFAULT_MODELS_DIR) / p;
    if (fs::exists(q)) return q;
  }
  throw IoError("cannot find model file '" + path + "'");
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Exact positivity and tensor-ampleness checks for divisor classes", "tensamp"};
  app.require_subcommand(1);
  std::function<void()> action;

  std::string model, spec, property, slice, svg_path, csv_path, m_text, cycle, config, neg_complete, curve_cone,
      dir;
  std::vector<std::string> gens;
  long r = 0, d_val = 0, g = 0, e_val = 0;
  std::optional<long> opt_deg, opt_e, opt_d, opt_hyper, opt_b;
  bool semistable = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a divisor class (or curve degrees)");
  classify_cmd->add_option("model", model, "Model file")->required();
  classify_cmd->add_option("class", spec, "Coefficients \"a,b,...\" or an expression such as \"-K\"")->required();
  classify_cmd->add_option("property", property, "nef | ample | big | antibig | tensample")->required();
  classify_cmd->callback([&] { action = [&] { cmd_classify(ctx, model, spec, property); }; });

  auto* build_cmd = app.add_subcommand("build", "Emit a model file from a builder");
  build_cmd->require_subcommand(1);
  auto* ruled_cmd = build_cmd->add_subcommand("ruled", "Geometrically ruled surface");
  ruled_cmd->add_option("--g", g, "Genus of the base curve")->required();
  ruled_cmd->add_option("--e", e_val, "xi^2")->required();
  ruled_cmd->add_option("--d", opt_d, "Degree of the destabilizing quotient");
  ruled_cmd->add_flag("--semistable", semistable, "Semistable bundle");
  ruled_cmd->callback([&] { action = [&] { cmd_build_ruled(ctx, g, e_val, opt_d, semistable); }; });
  auto* toric_cmd = build_cmd->add_subcommand("toric", "Smooth complete toric surface");
  toric_cmd->add_option("--cycle", cycle, "Boundary self-intersections, e.g. 1,1,1")->required();
  toric_cmd->callback([&] { action = [&] { cmd_build_toric(ctx, cycle); }; });
  auto* blowup_cmd = build_cmd->add_subcommand("blowup-p2", "Blow-up of the plane at r points");
  blowup_cmd->add_option("--r", r, "Number of points")->required();
  config = "general";
  blowup_cmd->add_option("--config", config, "general | line | conic");
  blowup_cmd->add_option("--neg-complete", neg_complete, "Override neg_curves_complete (true|false)");
  blowup_cmd->add_option("--curve-cone", curve_cone, "Override curve_cone_generated (true|false)");
  blowup_cmd->callback([&] { action = [&] { cmd_build_blowup(ctx, r, config, neg_complete, curve_cone); }; });

  auto* report_cmd = app.add_subcommand("canonical-report", "Bigness, (-2)-curves and tensor-ampleness of K");
  report_cmd->add_option("model", model, "Surface model file")->required();
  report_cmd->callback([&] { action = [&] { cmd_canonical_report(ctx, model); }; });

  auto* cones_cmd = app.add_subcommand("cones", "CSV (and SVG) of a plane slice of the cone pieces");
  cones_cmd->add_option("model", model, "Surface model file")->required();
  cones_cmd->add_option("--slice", slice, "Plane \"u;v\" as two classes");
  cones_cmd->add_option("--svg", svg_path, "Write the SVG picture here");
  cones_cmd->add_option("--csv", csv_path, "Write the CSV here instead of standard output");
  cones_cmd->callback([&] { action = [&] { cmd_cones(ctx, model, slice, svg_path, csv_path); }; });

  auto* group_cmd = app.add_subcommand("group", "Tensor-ampleness of the subgroup spanned by classes");
  group_cmd->add_option("model", model, "Surface model file")->required();
  group_cmd->add_option("generators", gens, "Generator classes")->required();
  group_cmd->callback([&] { action = [&] { cmd_group(ctx, model, gens); }; });

  auto* nagata_cmd = app.add_subcommand("nagata", "Integer test r d^2 <= (sum m)^2");
  nagata_cmd->add_option("--r", r)->required();
  nagata_cmd->add_option("--d", d_val)->required();
  nagata_cmd->add_option("--m", m_text, "Multiplicities, comma-separated")->required();
  nagata_cmd->callback([&] { action = [&] { cmd_nagata(ctx, r, d_val, m_text); }; });

  auto* edge_cmd = app.add_subcommand("edge3fold", "Threefold blow-up edge check");
  edge_cmd->add_option("--deg", opt_deg, "Degree of the bundle on the curve");
  edge_cmd->add_option("--e", opt_e, "Degree of the conormal bundle");
  edge_cmd->add_option("--d", opt_d, "Degree of the destabilizing quotient");
  edge_cmd->add_flag("--semistable", semistable, "Semistable conormal bundle");
  edge_cmd->add_option("--hypersurface", opt_hyper, "Line on a hypersurface of this degree");
  edge_cmd->add_option("--b", opt_b, "Normal bundle twist b in {0,1}");
  edge_cmd->callback(
      [&] { action = [&] { cmd_edge3fold(ctx, opt_deg, opt_e, opt_d, semistable, opt_hyper, opt_b); }; });

  auto* compose_cmd = app.add_subcommand("compose", "Tensor-ampleness over the components of a scheme");
  compose_cmd->add_option("model", model, "Scheme model file")->required();
  compose_cmd->callback([&] { action = [&] { cmd_compose(ctx, model); }; });

  auto* certify_cmd = app.add_subcommand("certify", "Validate a stratification certificate");
  certify_cmd->add_option("model", model, "Certificate file")->required();
  certify_cmd->callback([&] { action = [&] { cmd_certify(ctx, model); }; });

  auto* corpus_cmd = app.add_subcommand("corpus", "Run every expected-verdict sidecar in a directory");
  corpus_cmd->add_option("dir", dir, "Corpus directory (default: the model search path)");
  corpus_cmd->callback([&] { action = [&] { cmd_corpus(ctx, dir); }; });

  try {
    std::vector<std::string> args = protect_expressions(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (action) action();
    return ctx.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace tensamp
