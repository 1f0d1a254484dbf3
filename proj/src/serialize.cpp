#include "ideallab/serialize.hpp"

#include <json.hpp>

namespace ideallab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json verdict_json(const RingHandle& ring, const Verdict& v) {
  ordered_json j;
  j["status"] = status_str(v.status);
  ordered_json w = ordered_json::array();
  for (const auto& e : v.witness) w.push_back(element_str(ring, e));
  j["witness"] = w;
  j["method"] = method_str(v.method);
  j["bound"] = v.bound ? ordered_json(*v.bound) : ordered_json(nullptr);
  return j;
}

std::string verdict_text(const RingHandle& ring, const Verdict& v) {
  std::string s = status_str(v.status);
  if (!v.witness.empty()) {
    s += "(";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) s += ",";
      s += element_str(ring, v.witness[i]);
    }
    s += ")";
  }
  if (v.bound) s += "[" + *v.bound + "]";
  return s;
}

}  // namespace

std::string classification_json(const ClassificationReport& rep) {
  ordered_json j;
  j["ring"] = rep.ring.str();
  j["ideal"] = rep.ideal.str();
  j["radical"] = rep.radical_ideal.str();
  ordered_json props;
  props["prime"] = verdict_json(rep.ring, rep.prime);
  props["maximal"] = verdict_json(rep.ring, rep.maximal);
  props["primary"] = verdict_json(rep.ring, rep.primary);
  props["one_absorbing_primary"] = verdict_json(rep.ring, rep.one_absorbing_primary);
  props["two_absorbing_primary"] = verdict_json(rep.ring, rep.two_absorbing_primary);
  props["two_absorbing"] = verdict_json(rep.ring, rep.two_absorbing);
  j["properties"] = props;
  j["agreement"] = rep.agreement;
  return j.dump(2) + "\n";
}

std::string classification_text(const ClassificationReport& rep) {
  std::string s = "ring=" + rep.ring.str() + " ideal=" + rep.ideal.str() +
                  " radical=" + rep.radical_ideal.str();
  s += " prime=" + verdict_text(rep.ring, rep.prime);
  s += " maximal=" + verdict_text(rep.ring, rep.maximal);
  s += " primary=" + verdict_text(rep.ring, rep.primary);
  s += " one_absorbing_primary=" + verdict_text(rep.ring, rep.one_absorbing_primary);
  s += " two_absorbing_primary=" + verdict_text(rep.ring, rep.two_absorbing_primary);
  s += " two_absorbing=" + verdict_text(rep.ring, rep.two_absorbing);
  s += std::string(" agreement=") + (rep.agreement ? "true" : "false");
  return s + "\n";
}

namespace {

// kxy ideal literals contain commas, so such cells are quoted
std::string csv_cell(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

}  // namespace

std::string scan_csv_header() {
  return "ring,ideal,radical,prime,maximal,primary,one_abs,two_abs_primary,two_abs,method\n";
}

std::string classification_csv_row(const ClassificationReport& rep) {
  return rep.ring.str() + "," + csv_cell(rep.ideal.str()) + "," +
         csv_cell(rep.radical_ideal.str()) + "," + status_str(rep.prime.status) + "," +
         status_str(rep.maximal.status) + "," + status_str(rep.primary.status) + "," +
         status_str(rep.one_absorbing_primary.status) + "," +
         status_str(rep.two_absorbing_primary.status) + "," +
         status_str(rep.two_absorbing.status) + "," +
         method_str(rep.one_absorbing_primary.method) + "\n";
}

std::string whole_ring_csv_row(const RingHandle& ring, const Ideal& I) {
  return ring.str() + "," + csv_cell(I.str()) + "," + csv_cell(radical(I).str()) +
         ",-,-,-,-,-,-,-\n";
}

std::string reports_json(const std::vector<VerificationReport>& reps) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reps) {
    ordered_json j;
    j["theorem"] = theorem_name(r.id);
    j["claim"] = theorem_claim(r.id);
    j["scope"] = r.scope;
    j["instances_checked"] = r.instances;
    ordered_json vs = ordered_json::array();
    for (const auto& v : r.violations) {
      ordered_json jv;
      jv["instance"] = v.instance;
      jv["witness"] = v.witness;
      vs.push_back(jv);
    }
    j["violations"] = vs;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string reports_text(const std::vector<VerificationReport>& reps) {
  std::string out;
  for (const auto& r : reps) {
    out += theorem_name(r.id) + ": instances=" + std::to_string(r.instances) +
           " violations=" + std::to_string(r.violations.size()) + "\n";
    for (const auto& v : r.violations) {
      out += "  violation: " + v.instance;
      if (!v.witness.empty()) {
        out += " witness=(";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          if (i) out += ",";
          out += v.witness[i];
        }
        out += ")";
      }
      out += "\n";
    }
  }
  return out;
}

std::string construction_json(const RingHandle& ring, const Construction& c) {
  ordered_json j;
  j["ring"] = ring.str();
  j["ideal"] = c.ideal.str();
  j["one_absorbing_primary"] = verdict_json(ring, c.one_abs);
  if (c.primary_witness) {
    j["primary_refutation_witness"] =
        ordered_json::array({element_str(ring, c.primary_witness->first),
                             element_str(ring, c.primary_witness->second)});
  } else {
    j["primary_refutation_witness"] = ordered_json(nullptr);
  }
  j["note"] = c.note;
  return j.dump(2) + "\n";
}

std::string construction_text(const RingHandle& ring, const Construction& c) {
  std::string s = "ideal=" + c.ideal.str() +
                  " one_absorbing_primary=" + verdict_text(ring, c.one_abs);
  if (c.primary_witness)
    s += " primary_witness=(" + element_str(ring, c.primary_witness->first) + "," +
         element_str(ring, c.primary_witness->second) + ")";
  s += " note=" + c.note;
  return s + "\n";
}

}  // namespace ideallab
