#include "tensamp/scheme/scheme.hpp"

#include "tensamp/surface/classify.hpp"

namespace tensamp {

const std::string& component_name(const SchemeComponent& c) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, c);
}

Verdict component_tensor_ample(const SchemeComponent& c) {
  if (std::holds_alternative<PointComponent>(c)) {
    return Verdict{Status::Yes, Reason{"every line bundle on a point is big"}, {}, {}};
  }
  if (const auto* cc = std::get_if<CurveSchemeComponent>(&c)) return curve_tensor_ample(cc->curve, cc->degrees);
  const auto& sc = std::get<SurfaceSchemeComponent>(c);
  return is_tensor_ample(sc.model, sc.cls);
}

Verdict scheme_tensor_ample(const SchemeModel& s) {
  if (s.components.empty()) throw UsageError("scheme model needs at least one component");
  std::vector<NamedVerdict> parts;
  std::optional<std::size_t> first_no;
  bool any_unknown = false;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    Verdict v = component_tensor_ample(s.components[i]);
    if (v.no() && !first_no) first_no = i;
    if (v.status == Status::Unknown) any_unknown = true;
    parts.push_back({component_name(s.components[i]), std::move(v)});
  }
  Verdict out;
  if (first_no) {
    out = Verdict{Status::No, ComponentWitness{*first_no, component_name(s.components[*first_no])}, {}, {}};
  } else if (any_unknown) {
    out = Verdict::unknown("some component is undecided");
  } else {
    out = Verdict{Status::Yes, Composite{}, {}, {}};
  }
  out.sub = std::move(parts);
  return out;
}

Verdict validate_strat_certificate(const StratCertificate& c) {
  if (c.strata.empty()) throw UsageError("stratification certificate has no strata");
  std::vector<std::string> assumptions;
  bool all_asserted = true;
  for (std::size_t i = 0; i < c.strata.size(); ++i) {
    const auto& st = c.strata[i];
    if (st.name.empty()) throw UsageError("stratum " + std::to_string(i) + " has no name");
    if (st.sections.empty()) throw UsageError("stratum " + st.name + " lists no sections");
    for (const auto& sec : st.sections) {
      if (sec.section.empty()) throw UsageError("stratum " + st.name + " has an unnamed section");
      std::string a = st.name + ": complement of " + sec.section + "^" + std::to_string(sec.power) + " is quasi-affine";
      if (!sec.note.empty()) a += " (" + sec.note + ")";
      if (sec.quasi_affine) {
        assumptions.push_back(std::move(a));
      } else {
        all_asserted = false;
      }
    }
  }
  const auto& t = c.terminal;
  std::string terminal_text = t.empty ? "empty" : to_string(t.status);
  if (!t.empty && !t.note.empty()) assumptions.push_back("terminal: " + t.note);

  const std::string summary = std::to_string(c.strata.size()) + " strata, terminal " + terminal_text;
  if (!t.empty && t.status == Status::No) return Verdict{Status::No, Reason{summary}, assumptions, {}};
  if (all_asserted && (t.empty || t.status == Status::Yes)) {
    return Verdict{Status::Yes, Reason{summary}, assumptions, {}};
  }
  return Verdict{Status::Unknown,
                 Reason{all_asserted ? summary : summary + "; some section lacks a quasi-affine assertion"},
                 assumptions, {}};
}

}  // namespace tensamp
