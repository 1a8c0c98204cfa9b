#include "tensamp/io/model_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "tensamp/io/expression.hpp"

namespace tensamp {

namespace {

void check_fields(const Json& j, const std::set<std::string>& allowed, const std::set<std::string>& required,
                  const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ParseError(where + ": unknown field '" + key + "'");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  }
}

std::string get_string(const Json& j, const std::string& key, const std::string& where) {
  if (!j.at(key).is_string()) throw ParseError(where + "." + key + ": expected a string");
  return j.at(key).get<std::string>();
}

bool get_bool(const Json& j, const std::string& key, const std::string& where) {
  if (!j.at(key).is_boolean()) throw ParseError(where + "." + key + ": expected true or false");
  return j.at(key).get<bool>();
}

long get_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<long>();
}

std::vector<DivisorClass> vec_list_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<DivisorClass> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vec_from_json(j[i], dim, where + "[" + std::to_string(i) + "]"));
  return out;
}

Json vec_list_to_json(const std::vector<DivisorClass>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(vec_to_json(x));
  return out;
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError(where + ": expected a rational string such as \"3/2\"");
}

Json vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_to_json(x));
  return out;
}

RatVec vec_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rationals");
  if (j.size() != dim) {
    throw ParseError(where + ": expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  }
  RatVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rat_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Json surface_to_json(const SurfaceModel& m, const std::string& name) {
  Json j;
  j["kind"] = "surface";
  if (!name.empty()) j["name"] = name;
  j["rank"] = m.rank();
  j["basis"] = m.lattice.basis_names;
  Json gram = Json::array();
  for (std::size_t r = 0; r < m.rank(); ++r) gram.push_back(vec_to_json(m.lattice.gram.row(r)));
  j["gram"] = gram;
  j["canonical"] = vec_to_json(m.canonical);
  Json curves = Json::array();
  for (const auto& c : m.curves) curves.push_back({{"name", c.name}, {"class", vec_to_json(c.cls)}});
  j["curves"] = curves;
  j["flags"] = {{"neg_curves_complete", m.neg_curves_complete},
                {"curve_cone_generated", m.curve_cone_generated},
                {"proper_positive_dim", m.proper_positive_dim},
                {"hodge_index", m.hodge_index}};
  if (m.ample_witness) j["ample_witness"] = vec_to_json(*m.ample_witness);
  if (m.pseff_gens) j["pseff_gens"] = vec_list_to_json(*m.pseff_gens);
  if (m.nef_gens) j["nef_gens"] = vec_list_to_json(*m.nef_gens);
  return j;
}

SurfaceModel surface_from_json(const Json& j) {
  const std::string w = "surface model";
  check_fields(j,
               {"kind", "name", "rank", "basis", "gram", "canonical", "curves", "flags", "ample_witness", "pseff_gens",
                "nef_gens"},
               {"kind", "rank", "basis", "gram", "canonical", "curves", "flags"}, w);
  if (get_string(j, "kind", w) != "surface") throw ParseError(w + ": kind must be \"surface\"");
  const long rank_value = get_integer(j.at("rank"), w + ".rank");
  if (rank_value < 1) throw ParseError(w + ".rank: must be positive");
  const auto n = static_cast<std::size_t>(rank_value);

  SurfaceModel m;
  m.lattice.rank = n;
  const Json& basis = j.at("basis");
  if (!basis.is_array() || basis.size() != n) throw ParseError(w + ".basis: expected " + std::to_string(n) + " names");
  for (const auto& b : basis) {
    if (!b.is_string()) throw ParseError(w + ".basis: names must be strings");
    m.lattice.basis_names.push_back(b.get<std::string>());
  }
  const Json& gram = j.at("gram");
  if (!gram.is_array() || gram.size() != n) throw ParseError(w + ".gram: expected " + std::to_string(n) + " rows");
  m.lattice.gram = RatMat(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const RatVec row = vec_from_json(gram[r], n, w + ".gram[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < n; ++c) m.lattice.gram(r, c) = row[c];
  }
  m.canonical = vec_from_json(j.at("canonical"), n, w + ".canonical");
  const Json& curves = j.at("curves");
  if (!curves.is_array()) throw ParseError(w + ".curves: expected an array");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string cw = w + ".curves[" + std::to_string(i) + "]";
    check_fields(curves[i], {"name", "class"}, {"name", "class"}, cw);
    m.curves.push_back({get_string(curves[i], "name", cw), vec_from_json(curves[i].at("class"), n, cw + ".class")});
  }
  const Json& flags = j.at("flags");
  const std::string fw = w + ".flags";
  check_fields(flags, {"neg_curves_complete", "curve_cone_generated", "proper_positive_dim", "hodge_index"},
               {"neg_curves_complete", "curve_cone_generated", "proper_positive_dim"}, fw);
  m.neg_curves_complete = get_bool(flags, "neg_curves_complete", fw);
  m.curve_cone_generated = get_bool(flags, "curve_cone_generated", fw);
  m.proper_positive_dim = get_bool(flags, "proper_positive_dim", fw);
  if (flags.contains("hodge_index")) m.hodge_index = get_bool(flags, "hodge_index", fw);
  if (j.contains("ample_witness")) m.ample_witness = vec_from_json(j.at("ample_witness"), n, w + ".ample_witness");
  if (j.contains("pseff_gens")) m.pseff_gens = vec_list_from_json(j.at("pseff_gens"), n, w + ".pseff_gens");
  if (j.contains("nef_gens")) m.nef_gens = vec_list_from_json(j.at("nef_gens"), n, w + ".nef_gens");
  m.validate();
  return m;
}

Json curve_to_json(const CurveModel& c, const std::string& name) {
  Json j;
  j["kind"] = "curve";
  if (!name.empty()) j["name"] = name;
  Json comps = Json::array();
  for (const auto& comp : c.components) comps.push_back({{"name", comp.name}, {"degree", comp.degree}});
  j["components"] = comps;
  return j;
}

CurveModel curve_from_json(const Json& j) {
  const std::string w = "curve model";
  check_fields(j, {"kind", "name", "components"}, {"kind", "components"}, w);
  if (get_string(j, "kind", w) != "curve") throw ParseError(w + ": kind must be \"curve\"");
  const Json& comps = j.at("components");
  if (!comps.is_array()) throw ParseError(w + ".components: expected an array");
  std::vector<CurveComponent> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string cw = w + ".components[" + std::to_string(i) + "]";
    check_fields(comps[i], {"name", "degree"}, {"name", "degree"}, cw);
    out.push_back({get_string(comps[i], "name", cw), get_integer(comps[i].at("degree"), cw + ".degree")});
  }
  return build_curve(std::move(out));
}

namespace {

Json resolve_nested(const Json& ref, const std::filesystem::path& base_dir, const std::string& where) {
  if (ref.is_object()) return ref;
  if (ref.is_string()) return read_json_file(base_dir / ref.get<std::string>());
  throw ParseError(where + ": expected an inline model object or a relative path");
}

std::vector<long> degrees_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

SchemeModel scheme_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const std::string w = "scheme model";
  check_fields(j, {"kind", "name", "components"}, {"kind", "components"}, w);
  if (get_string(j, "kind", w) != "scheme") throw ParseError(w + ": kind must be \"scheme\"");
  const Json& comps = j.at("components");
  if (!comps.is_array() || comps.empty()) throw ParseError(w + ".components: expected a nonempty array");
  SchemeModel s;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string cw = w + ".components[" + std::to_string(i) + "]";
    const Json& c = comps[i];
    if (!c.is_object() || !c.contains("type")) throw ParseError(cw + ": missing field 'type'");
    const std::string type = get_string(c, "type", cw);
    if (type == "point") {
      check_fields(c, {"name", "type"}, {"name", "type"}, cw);
      s.components.push_back(PointComponent{get_string(c, "name", cw)});
    } else if (type == "curve") {
      check_fields(c, {"name", "type", "model", "degrees"}, {"name", "type", "model"}, cw);
      CurveModel curve = curve_from_json(resolve_nested(c.at("model"), base_dir, cw + ".model"));
      std::vector<long> degrees =
          c.contains("degrees") ? degrees_from_json(c.at("degrees"), cw + ".degrees") : curve.degrees();
      s.components.push_back(CurveSchemeComponent{get_string(c, "name", cw), std::move(curve), std::move(degrees)});
    } else if (type == "surface") {
      check_fields(c, {"name", "type", "model", "class"}, {"name", "type", "model", "class"}, cw);
      SurfaceModel m = surface_from_json(resolve_nested(c.at("model"), base_dir, cw + ".model"));
      const Json& cls = c.at("class");
      DivisorClass d = cls.is_string() ? parse_class_spec(m, cls.get<std::string>())
                                       : vec_from_json(cls, m.rank(), cw + ".class");
      s.components.push_back(SurfaceSchemeComponent{get_string(c, "name", cw), std::move(m), std::move(d)});
    } else {
      throw ParseError(cw + ".type: expected point, curve or surface");
    }
  }
  return s;
}

Json certificate_to_json(const StratCertificate& c) {
  Json j;
  j["kind"] = "certificate";
  if (!c.name.empty()) j["name"] = c.name;
  Json strata = Json::array();
  for (const auto& st : c.strata) {
    Json secs = Json::array();
    for (const auto& s : st.sections) {
      Json sj{{"section", s.section}, {"power", s.power}, {"quasi_affine", s.quasi_affine}};
      if (!s.note.empty()) sj["note"] = s.note;
      secs.push_back(sj);
    }
    strata.push_back({{"name", st.name}, {"sections", secs}});
  }
  j["strata"] = strata;
  if (c.terminal.empty) {
    j["terminal"] = {{"empty", true}};
  } else {
    Json t{{"status", to_string(c.terminal.status)}};
    if (!c.terminal.note.empty()) t["note"] = c.terminal.note;
    j["terminal"] = t;
  }
  return j;
}

StratCertificate certificate_from_json(const Json& j) {
  const std::string w = "certificate";
  check_fields(j, {"kind", "name", "strata", "terminal"}, {"kind", "strata", "terminal"}, w);
  if (get_string(j, "kind", w) != "certificate") throw ParseError(w + ": kind must be \"certificate\"");
  StratCertificate c;
  if (j.contains("name")) c.name = get_string(j, "name", w);
  const Json& strata = j.at("strata");
  if (!strata.is_array()) throw ParseError(w + ".strata: expected an array");
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string sw = w + ".strata[" + std::to_string(i) + "]";
    check_fields(strata[i], {"name", "sections"}, {"name", "sections"}, sw);
    Stratum st{get_string(strata[i], "name", sw), {}};
    const Json& secs = strata[i].at("sections");
    if (!secs.is_array()) throw ParseError(sw + ".sections: expected an array");
    for (std::size_t k = 0; k < secs.size(); ++k) {
      const std::string kw = sw + ".sections[" + std::to_string(k) + "]";
      check_fields(secs[k], {"section", "power", "quasi_affine", "note"}, {"section", "power", "quasi_affine"}, kw);
      SectionAssertion a;
      a.section = get_string(secs[k], "section", kw);
      a.power = get_integer(secs[k].at("power"), kw + ".power");
      a.quasi_affine = get_bool(secs[k], "quasi_affine", kw);
      if (secs[k].contains("note")) a.note = get_string(secs[k], "note", kw);
      st.sections.push_back(std::move(a));
    }
    c.strata.push_back(std::move(st));
  }
  const Json& t = j.at("terminal");
  const std::string tw = w + ".terminal";
  check_fields(t, {"empty", "status", "note"}, {}, tw);
  if (t.contains("empty") == t.contains("status")) {
    throw ParseError(tw + ": give exactly one of \"empty\": true or \"status\"");
  }
  if (t.contains("empty")) {
    if (!get_bool(t, "empty", tw)) throw ParseError(tw + ".empty: must be true when present");
    c.terminal.empty = true;
  } else {
    c.terminal.empty = false;
    c.terminal.status = status_from_string(get_string(t, "status", tw));
  }
  if (t.contains("note")) c.terminal.note = get_string(t, "note", tw);
  return c;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ModelFile parse_model_file(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("model file: missing string field 'kind'");
  }
  ModelFile f;
  f.kind = j.at("kind").get<std::string>();
  if (j.contains("name") && j.at("name").is_string()) f.name = j.at("name").get<std::string>();
  if (f.kind == "surface") {
    f.model = surface_from_json(j);
  } else if (f.kind == "curve") {
    f.model = curve_from_json(j);
  } else if (f.kind == "scheme") {
    f.model = scheme_from_json(j, base_dir);
  } else if (f.kind == "certificate") {
    f.model = certificate_from_json(j);
  } else {
    throw ParseError("model file: unknown kind '" + f.kind + "'");
  }
  return f;
}

ModelFile load_model_file(const std::filesystem::path& path) {
  return parse_model_file(read_json_file(path), path.parent_path());
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tensamp
