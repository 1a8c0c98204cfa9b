#include "tensamp/io/report_json.hpp"

namespace tensamp {

namespace {

RatVec any_vec(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return vec_from_json(j, j.size(), where);
}

Json rats_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_to_json(x));
  return out;
}

std::vector<Rat> rats_from_json(const Json& j, const std::string& where) {
  const RatVec v = any_vec(j, where);
  return {v.begin(), v.end()};
}

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError("evidence: missing field '" + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const std::string& key) {
  const Json& f = field(j, key);
  if (!f.is_string()) throw ParseError("evidence." + key + ": expected a string");
  return f.get<std::string>();
}

std::size_t index_field(const Json& j, const std::string& key) {
  const Json& f = field(j, key);
  if (!f.is_number_unsigned()) throw ParseError("evidence." + key + ": expected a nonnegative integer");
  return f.get<std::size_t>();
}

}  // namespace

Json evidence_to_json(const Evidence& e) {
  struct Visitor {
    Json operator()(const CurveWitness& w) const {
      return {{"kind", "curve_witness"}, {"curve", w.curve}, {"pairing", rat_to_json(w.pairing)}};
    }
    Json operator()(const PseffWitness& w) const {
      return {{"kind", "pseff_witness"}, {"index", w.index}, {"pairing", rat_to_json(w.pairing)}};
    }
    Json operator()(const PairingTable& t) const {
      return {{"kind", "pairing_table"}, {"against", t.against}, {"names", t.names}, {"values", rats_to_json(t.values)}};
    }
    Json operator()(const InteriorCertificate& c) const {
      return {{"kind", "interior"}, {"source", c.source}, {"coefficients", vec_to_json(c.coefficients)}};
    }
    Json operator()(const SeparatingFunctional& f) const {
      return {{"kind", "separating_functional"}, {"source", f.source}, {"functional", vec_to_json(f.functional)}};
    }
    Json operator()(const DecompositionCertificate& d) const {
      return {{"kind", "decomposition"},
              {"nef_part", vec_to_json(d.nef_part)},
              {"curve_coeffs", vec_to_json(d.curve_coeffs)},
              {"gate", d.gate}};
    }
    Json operator()(const SignatureCertificate& s) const {
      return {{"kind", "signature"},
              {"self_intersection", rat_to_json(s.self_intersection)},
              {"witness_pairing", rat_to_json(s.witness_pairing)}};
    }
    Json operator()(const ZariskiCertificate& z) const {
      return {{"kind", "zariski"},
              {"positive", vec_to_json(z.positive)},
              {"negative_coeffs", vec_to_json(z.negative_coeffs)}};
    }
    Json operator()(const ZeroClass&) const { return {{"kind", "zero_class"}}; }
    Json operator()(const Composite&) const { return {{"kind", "composite"}}; }
    Json operator()(const GroupCertificate& g) const {
      Json j{{"kind", "group"}, {"combination", vec_to_json(g.combination)}, {"partners", g.partners}};
      if (g.ample_generator) j["ample_generator"] = *g.ample_generator;
      return j;
    }
    Json operator()(const ComponentWitness& c) const {
      return {{"kind", "component_witness"}, {"index", c.index}, {"name", c.name}};
    }
    Json operator()(const Reason& r) const { return {{"kind", "reason"}, {"text", r.text}}; }
  };
  return std::visit(Visitor{}, e);
}

Evidence evidence_from_json(const Json& j) {
  const std::string kind = str_field(j, "kind");
  if (kind == "curve_witness") {
    return CurveWitness{str_field(j, "curve"), rat_from_json(field(j, "pairing"), "evidence.pairing")};
  }
  if (kind == "pseff_witness") {
    return PseffWitness{index_field(j, "index"), rat_from_json(field(j, "pairing"), "evidence.pairing")};
  }
  if (kind == "pairing_table") {
    PairingTable t;
    t.against = str_field(j, "against");
    const Json& names = field(j, "names");
    if (!names.is_array()) throw ParseError("evidence.names: expected an array");
    for (const auto& n : names) {
      if (!n.is_string()) throw ParseError("evidence.names: expected strings");
      t.names.push_back(n.get<std::string>());
    }
    t.values = rats_from_json(field(j, "values"), "evidence.values");
    return t;
  }
  if (kind == "interior") {
    return InteriorCertificate{str_field(j, "source"), any_vec(field(j, "coefficients"), "evidence.coefficients")};
  }
  if (kind == "separating_functional") {
    return SeparatingFunctional{str_field(j, "source"), any_vec(field(j, "functional"), "evidence.functional")};
  }
  if (kind == "decomposition") {
    return DecompositionCertificate{any_vec(field(j, "nef_part"), "evidence.nef_part"),
                                    any_vec(field(j, "curve_coeffs"), "evidence.curve_coeffs"),
                                    str_field(j, "gate")};
  }
  if (kind == "signature") {
    return SignatureCertificate{rat_from_json(field(j, "self_intersection"), "evidence.self_intersection"),
                                rat_from_json(field(j, "witness_pairing"), "evidence.witness_pairing")};
  }
  if (kind == "zariski") {
    return ZariskiCertificate{any_vec(field(j, "positive"), "evidence.positive"),
                              any_vec(field(j, "negative_coeffs"), "evidence.negative_coeffs")};
  }
  if (kind == "zero_class") return ZeroClass{};
  if (kind == "composite") return Composite{};
  if (kind == "group") {
    GroupCertificate g;
    g.combination = any_vec(field(j, "combination"), "evidence.combination");
    const Json& partners = field(j, "partners");
    if (!partners.is_array()) throw ParseError("evidence.partners: expected an array");
    for (const auto& p : partners) {
      if (!p.is_number_unsigned()) throw ParseError("evidence.partners: expected indices");
      g.partners.push_back(p.get<std::size_t>());
    }
    if (j.contains("ample_generator")) g.ample_generator = index_field(j, "ample_generator");
    return g;
  }
  if (kind == "component_witness") return ComponentWitness{index_field(j, "index"), str_field(j, "name")};
  if (kind == "reason") return Reason{str_field(j, "text")};
  throw ParseError("evidence: unknown kind '" + kind + "'");
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["evidence"] = evidence_to_json(v.evidence);
  j["assumptions"] = v.assumptions;
  Json sub = Json::array();
  for (const auto& s : v.sub) sub.push_back({{"name", s.name}, {"verdict", verdict_to_json(s.verdict)}});
  j["sub"] = sub;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("verdict: expected an object");
  Verdict v;
  const Json& status = field(j, "status");
  if (!status.is_string()) throw ParseError("verdict.status: expected a string");
  v.status = status_from_string(status.get<std::string>());
  v.evidence = evidence_from_json(field(j, "evidence"));
  if (j.contains("assumptions")) {
    for (const auto& a : j.at("assumptions")) {
      if (!a.is_string()) throw ParseError("verdict.assumptions: expected strings");
      v.assumptions.push_back(a.get<std::string>());
    }
  }
  if (j.contains("sub")) {
    for (const auto& s : j.at("sub")) {
      v.sub.push_back({str_field(s, "name"), verdict_from_json(field(s, "verdict"))});
    }
  }
  return v;
}

Json report_to_json(const VerdictReport& r) {
  Json j = verdict_to_json(r.verdict);
  j["query"] = r.query;
  return j;
}

VerdictReport report_from_json(const Json& j) {
  VerdictReport r;
  r.query = j.contains("query") ? j.at("query") : Json::object();
  r.verdict = verdict_from_json(j);
  return r;
}

Json canonical_report_to_json(const CanonicalReport& r) {
  return {{"big", verdict_to_json(r.big)},
          {"anti_big", verdict_to_json(r.anti_big)},
          {"minus_two_curves", r.minus_two_curves},
          {"tensor_ample", verdict_to_json(r.tensor_ample)},
          {"cross_check_passed", r.cross_check_passed}};
}

}  // namespace tensamp
