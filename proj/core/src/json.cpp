#include "superchar/json.hpp"

namespace superchar {

namespace {

Json display_row(const std::vector<Cyclotomic>& row) {
  Json out = Json::array();
  for (const auto& c : row) out.push_back(c.to_string());
  return out;
}

Json optional_class(const std::optional<std::size_t>& c) { return c ? Json(*c) : Json(nullptr); }

// Names of the distinguished subgroups that equal `h`.
Json names_for(Analysis& a, const Subgroup& h) {
  Json names = Json::array();
  if (h.is_trivial()) names.push_back("1");
  if (h.is_whole()) names.push_back("G");
  if (h == a.center()) names.push_back("Z(S)");
  if (h == a.commutator()) names.push_back("[G,S]");
  if (h == a.v_theory()) names.push_back("V(S)");
  if (h == a.u_theory()) names.push_back("U(S)");
  return names;
}

Json named(Analysis& a, const Subgroup& h) {
  Json out;
  out["elements"] = to_json(h);
  out["order"] = h.order();
  out["names"] = names_for(a, h);
  return out;
}

}  // namespace

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
  Json out;
  out["order"] = c.order();
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const ElementSet& s) { return Json(s.to_vector()); }

Json to_json(const Subgroup& h) { return to_json(h.members()); }

Json to_json(const CharacterTable& t) {
  Json out;
  out["group"] = t.group().label();
  out["order"] = t.group().order();
  out["exponent"] = t.exponent();
  Json classes = Json::array();
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    Json cls;
    cls["index"] = c;
    cls["size"] = t.class_size(c);
    cls["rep"] = t.rep(c);
    cls["elements"] = t.classes().block(c);
    classes.push_back(std::move(cls));
  }
  out["classes"] = std::move(classes);
  Json chars = Json::array();
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    Json row;
    row["index"] = chi;
    row["degree"] = t.degree(chi);
    row["values"] = display_row(t.values()[chi]);
    Json exact = Json::array();
    for (const auto& v : t.values()[chi]) exact.push_back(to_json(v));
    row["exact"] = std::move(exact);
    chars.push_back(std::move(row));
  }
  out["characters"] = std::move(chars);
  return out;
}

Json to_json(const SuperTheory& s) {
  Json out;
  out["group"] = s.group().label();
  out["order"] = s.group().order();
  out["size"] = s.size();
  Json parts = Json::array();
  for (std::size_t p = 0; p < s.size(); ++p) {
    Json part;
    part["index"] = p;
    part["characters"] = s.xparts()[p];
    part["degree"] = s.degree(p).get_str();
    part["values"] = display_row(s.sigma_table()[p]);
    parts.push_back(std::move(part));
  }
  Json classes = Json::array();
  for (std::size_t b = 0; b < s.yparts().size(); ++b) {
    Json cls;
    cls["index"] = b;
    cls["elements"] = s.yparts().block(b);
    classes.push_back(std::move(cls));
  }
  out["classes"] = std::move(classes);
  out["parts"] = std::move(parts);
  return out;
}

Json to_json(const SeriesResult& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back(to_json(t));
  Json out;
  out["kind"] = to_string(r.kind);
  out["terms"] = std::move(terms);
  out["stabilized"] = r.stabilized;
  out["class"] = optional_class(r.class_index);
  return out;
}

Json to_json(const CaminaVerdict& v) {
  Json conds = Json::array();
  for (const auto& c : v.conditions) {
    Json j;
    j["name"] = c.name;
    j["value"] = c.value;
    if (c.informational) j["informational"] = true;
    if (!c.detail.empty()) j["detail"] = c.detail;
    conds.push_back(std::move(j));
  }
  Json out;
  out["subject"] = v.subject;
  out["holds"] = v.holds;
  out["vacuous"] = v.vacuous;
  out["agree"] = v.agree();
  out["conditions"] = std::move(conds);
  return out;
}

Json to_json(const TheoremReport& r) {
  Json out;
  out["theorem_id"] = r.theorem_id;
  out["scope"] = r.scope;
  out["status"] = to_string(r.status);
  out["witness"] = r.witness;
  return out;
}

Json to_json(const CorpusSummary& s) {
  Json out;
  out["pass"] = s.pass;
  out["fail"] = s.fail;
  out["vacuous"] = s.vacuous;
  out["na"] = s.na;
  return out;
}

Json to_json(const CorpusReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json gj;
    gj["label"] = g.label;
    gj["order"] = g.order;
    gj["theory_count"] = g.theory_count;
    if (!g.notice.empty()) gj["notice"] = g.notice;
    Json theories = Json::array();
    for (const auto& t : g.theories) {
      Json tj;
      tj["index"] = t.index;
      tj["xparts"] = t.xparts;
      tj["yparts"] = t.yparts;
      Json reports = Json::array();
      for (const auto& rep : t.reports) reports.push_back(to_json(rep));
      tj["reports"] = std::move(reports);
      theories.push_back(std::move(tj));
    }
    gj["theories"] = std::move(theories);
    groups.push_back(std::move(gj));
  }
  Json out;
  out["groups"] = std::move(groups);
  out["summary"] = to_json(r.summary);
  return out;
}

Json analysis_json(Analysis& a) {
  const auto& s = a.theory();
  Json out;
  out["theory"] = to_json(s);
  out["s_abelian"] = a.s_abelian();
  out["center"] = named(a, a.center());
  out["commutator"] = named(a, a.commutator());
  out["v_theory"] = named(a, a.v_theory());
  out["u_theory"] = named(a, a.u_theory());
  out["nilpotence_class"] = optional_class(a.nilpotence_class());
  out["lower_series"] = to_json(a.lower());
  out["upper_series"] = to_json(a.upper());
  out["v_series"] = to_json(a.v_series());

  Json normals = Json::array();
  for (const auto& n : a.s_normal()) {
    Json nj = named(a, n);
    nj["v_rel"] = to_json(a.v_rel(n));
    nj["u_rel"] = to_json(a.u_rel(n));
    nj["u_chain"] = to_json(a.u_chain(n));
    nj["gcp"] = to_json(a.s_gcp(n));
    nj["camina_pair"] = to_json(a.camina_pair(n));
    normals.push_back(std::move(nj));
  }
  out["s_normal"] = std::move(normals);

  Json camina = Json::array();
  for (Element g = 0; g < s.group().order(); ++g)
    if (a.camina_element(g).holds) camina.push_back(g);
  out["camina_elements"] = std::move(camina);
  out["vz"] = to_json(a.vz());

  Json degrees = Json::array();
  for (std::size_t p = 0; p < s.size(); ++p) degrees.push_back(s.degree(p).get_str());
  out["degrees"] = std::move(degrees);
  Json closed = Json::array();
  for (std::size_t p = 0; p < s.size(); ++p) closed.push_back(a.nonvanishing(p) == a.vanish_off(p).members());
  out["nonvanishing_is_subgroup"] = std::move(closed);
  return out;
}

}  // namespace superchar
