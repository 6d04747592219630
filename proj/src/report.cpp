#include "gda/report.hpp"

#include "gda/factors.hpp"

namespace gda {

Json schema_tag(const std::string& kind) { return "gda." + kind + "/" + std::to_string(kSchemaVersion); }

Json to_json(const DTuple& d) { return Json::array({d.k, d.l, d.mu, d.nu}); }

Json to_json(const CanonicalForm& cf) {
  Json j;
  j["tag"] = tag_name(cf.tag);
  Json chi = Json::array();
  for (const auto& d : cf.chi) chi.push_back(to_json(d));
  j["chi"] = chi;
  j["m"] = cf.m;
  j["k"] = cf.k;
  j["rho"] = cf.rho;
  j["group"] = cf.group;
  if (cf.tag == CanonicalTag::Pauli) j["beta"] = cf.beta;
  return j;
}

Json to_json(const Presentation& p, const UnitMonomial& m) {
  Json j;
  j["coeff"] = m.coeff;
  j["root_order"] = p.root_order;
  if (p.kind == IdentityKind::Quaternion) j["quat"] = m.quat;
  j["exps"] = m.exps;
  j["text"] = monomial_to_string(p, m);
  return j;
}

Json to_json(const WeakIsomorphism& w, const Presentation& target) {
  const Presentation host = with_root_order(target, w.root_order);
  Json j;
  j["group_map"] = w.group_map;
  Json imgs = Json::array();
  for (const auto& m : w.gen_images) imgs.push_back(to_json(host, m));
  j["gen_images"] = imgs;
  j["j_image"] = w.j_sign;
  j["quaternion_fixed"] = w.quaternion_fixed;
  return j;
}

Json to_json(const Certificate& c) {
  return Json{{"invariant", c.invariant}, {"value1", c.value1}, {"value2", c.value2}};
}

Json to_json(const LemmaReport& r) {
  Json j;
  j["rule"] = r.rule;
  j["shipped"] = r.shipped;
  j["instances"] = r.instances;
  j["passed"] = r.passed;
  j["status"] = r.passed == r.instances ? "pass" : "fail";
  j["failures"] = r.failures;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const RewriteStep& s) {
  const Presentation host = presentation_of(s.before);
  Json j;
  j["rule"] = rule_name(s.rule);
  j["before"] = factors_to_string(s.before);
  j["after"] = factors_to_string(s.after);
  Json imgs = Json::array();
  for (const auto& m : s.images) imgs.push_back(monomial_to_string(host, m));
  j["images"] = imgs;
  return j;
}

Json normalize_document(const FactorList& fs, const NormalizeResult& r) {
  Json j;
  j["schema"] = schema_tag("normalize");
  j["input"] = factors_to_string(fs);
  j["label"] = canonical_label(r.form);
  j["form"] = to_json(r.form);
  j["reduced"] = factors_to_string(r.reduced);
  if (!r.trace.empty()) {
    Json t = Json::array();
    for (const auto& s : r.trace) t.push_back(to_json(s));
    j["trace"] = t;
  }
  return j;
}

Json verdict_document(const Verdict& v, const Presentation& target) {
  Json j;
  j["schema"] = schema_tag("verdict");
  j["verdict"] = verdict_name(v.kind);
  if (!v.label1.empty()) j["label1"] = v.label1;
  if (!v.label2.empty()) j["label2"] = v.label2;
  if (v.witness) j["witness"] = to_json(*v.witness, target);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json invariant_document(const FactorList& fs, int max_k) {
  Json j;
  j["schema"] = schema_tag("invariants");
  j["input"] = factors_to_string(fs);
  j["characteristic"] = characteristic_to_string(characteristic(fs));
  Json probes = Json::array();
  for (const auto& p : invariant_probes(fs, max_k)) probes.push_back(Json{{"name", p.name}, {"value", p.value}});
  j["probes"] = probes;
  return j;
}

Json lemma_document(const std::vector<LemmaReport>& reports) {
  Json j;
  j["schema"] = schema_tag("lemmas");
  Json rs = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    rs.push_back(to_json(r));
    if (r.shipped && r.passed != r.instances) ok = false;
  }
  j["rules"] = rs;
  j["shipped_pass"] = ok;
  return j;
}

}  // namespace gda
