#include "planeval/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace planeval {

namespace {

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw parse_error(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw parse_error(where + "." + key + ": missing field");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw parse_error(where + ": expected an integer");
  return j.get<std::int64_t>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw parse_error(where + ": expected [num, den]");
  auto den = as_int(j[1], where + "[1]");
  if (den == 0) throw parse_error(where + ": zero denominator");
  return make_rational(as_int(j[0], where + "[0]"), den);
}

Json rational_json(const Rational& q) {
  return Json::array({to_int64(q.get_num()), to_int64(q.get_den())});
}

ValuationKind as_kind(const Json& j, const std::string& where) {
  if (j == "curve") return ValuationKind::curve;
  if (j == "divisorial") return ValuationKind::divisorial;
  throw parse_error(where + ": expected \"curve\" or \"divisorial\"");
}

std::vector<std::int64_t> int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

std::vector<PuiseuxDatum> valuations_from_json(const Json& doc) {
  const Json& vals = field(doc, "valuations", "model");
  if (!vals.is_array() || vals.empty()) throw parse_error("model.valuations: expected a nonempty array");
  std::vector<PuiseuxDatum> out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const std::string at = "valuations[" + std::to_string(i) + "]";
    const Json& v = vals[i];
    PuiseuxDatum d;
    d.kind = as_kind(field(v, "kind", at), at + ".kind");
    d.n = static_cast<int>(as_int(field(v, "n", at), at + ".n"));
    const Json& terms = field(v, "terms", at);
    if (!terms.is_array()) throw parse_error(at + ".terms: expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string tw = at + ".terms[" + std::to_string(k) + "]";
      const Json& t = terms[k];
      if (!t.is_array() || t.size() != 3) throw parse_error(tw + ": expected [k, num, den]");
      PuiseuxTerm term;
      term.exponent = static_cast<int>(as_int(t[0], tw + "[0]"));
      term.coefficient = as_rational(Json::array({t[1], t[2]}), tw);
      d.terms.push_back(term);
    }
    if (v.contains("trunc")) d.truncation = as_rational(v["trunc"], at + ".trunc");
    if (v.contains("swap")) {
      if (!v["swap"].is_boolean()) throw parse_error(at + ".swap: expected a boolean");
      d.swap = v["swap"].get<bool>();
    }
    try {
      d.validate();
    } catch (const Error& e) {
      throw Error(e.kind(), at + ": " + e.what());
    }
    out.push_back(std::move(d));
  }
  return out;
}

Json valuations_to_json(const std::vector<PuiseuxDatum>& specs) {
  Json vals = Json::array();
  for (const auto& d : specs) {
    Json v;
    v["kind"] = to_string(d.kind);
    v["n"] = d.n;
    Json terms = Json::array();
    for (const auto& t : d.terms)
      terms.push_back(Json::array({t.exponent, to_int64(t.coefficient.get_num()),
                                   to_int64(t.coefficient.get_den())}));
    v["terms"] = terms;
    if (d.truncation) v["trunc"] = rational_json(*d.truncation);
    if (d.swap) v["swap"] = true;
    vals.push_back(v);
  }
  return Json{{"valuations", vals}};
}

CollectionModel model_from_json(const Json& doc) {
  if (!doc.is_object()) throw parse_error("model: expected an object");
  if (!doc.contains("tree")) return build_model(valuations_from_json(doc));
  const Json& t = doc["tree"];
  auto parents = int_array(field(t, "parents", "tree"), "tree.parents");
  auto sats = int_array(field(t, "satellite", "tree"), "tree.satellite");
  if (parents.empty() || parents.size() != sats.size() || parents[0] != -1)
    throw parse_error("tree: parents/satellite must have equal length with root parent -1");
  ProximityTree tree;
  for (std::size_t id = 1; id < parents.size(); ++id) {
    if (parents[id] < 0 || parents[id] >= static_cast<std::int64_t>(id))
      throw parse_error("tree.parents[" + std::to_string(id) + "]: parent must precede the vertex");
    tree.add_child(static_cast<int>(parents[id]), static_cast<int>(sats[id]));
  }
  const Json& vals = field(doc, "valuations", "model");
  if (!vals.is_array() || vals.empty()) throw parse_error("model.valuations: expected a nonempty array");
  std::vector<ValuationData> data;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const std::string at = "valuations[" + std::to_string(i) + "]";
    ValuationData v;
    v.kind = as_kind(field(vals[i], "kind", at), at + ".kind");
    for (auto p : int_array(field(vals[i], "path", at), at + ".path")) {
      if (p < 0 || p >= tree.size()) throw parse_error(at + ".path: unknown vertex");
      v.path.push_back(static_cast<int>(p));
    }
    v.weights = int_array(field(vals[i], "weights", at), at + ".weights");
    if (vals[i].contains("resolved")) v.resolved = static_cast<int>(as_int(vals[i]["resolved"], at + ".resolved"));
    data.push_back(std::move(v));
  }
  CollectionModel model(std::move(tree), std::move(data));
  model.check_invariants();
  return model;
}

Json model_to_tree_json(const CollectionModel& model) {
  Json parents = Json::array(), sats = Json::array();
  for (int id = 0; id < model.tree().size(); ++id) {
    parents.push_back(model.tree().vertex(id).parent);
    sats.push_back(model.tree().vertex(id).satellite_of);
  }
  Json vals = Json::array();
  for (const auto& v : model.valuations()) {
    Json j;
    j["kind"] = to_string(v.kind);
    j["path"] = v.path;
    j["weights"] = v.weights;
    if (v.kind == ValuationKind::curve) j["resolved"] = v.resolved;
    vals.push_back(j);
  }
  return Json{{"tree", {{"parents", parents}, {"satellite", sats}}}, {"valuations", vals}};
}

Json model_to_json(const CollectionModel& model) {
  std::vector<PuiseuxDatum> specs;
  for (const auto& v : model.valuations()) {
    if (!v.source) return model_to_tree_json(model);
    specs.push_back(*v.source);
  }
  return valuations_to_json(specs);
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(what + ": malformed JSON (" + e.what() + ")");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw invariant_error(tmp + ": cannot write");
    out << text;
    if (!out.flush()) throw invariant_error(tmp + ": write failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw invariant_error(path + ": rename failed");
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace planeval
