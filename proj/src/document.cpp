#include "singspec/document.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "singspec/oracles.hpp"

namespace singspec {

using nlohmann::json;

namespace {

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& item : obj.items()) {
    if (!ok.contains(item.key())) throw InputError(where + ": unexpected field '" + item.key() + "'");
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

std::size_t as_index(const json& v, const std::string& where) {
  const auto i = as_int(v, where);
  if (i < 0) throw InputError(where + ": expected a nonnegative index");
  return static_cast<std::size_t>(i);
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  return v;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string");
  return v.get<std::string>();
}

NcDocument parse_nc(const json& j) {
  only_keys(j, "nc", {"multiplicities"});
  NcDocument doc;
  for (const auto& v : as_array(field(j, "multiplicities", "nc"), "nc.multiplicities")) {
    doc.multiplicities.push_back(as_int(v, "nc.multiplicities"));
  }
  return doc;
}

CurveDocument parse_curve(const json& j) {
  only_keys(j, "curve", {"components", "edges"});
  CurveDocument doc;
  for (const auto& c : as_array(field(j, "components", "curve"), "curve.components")) {
    only_keys(c, "curve.components[]", {"id", "kind", "m", "a", "self"});
    ComponentSpec spec;
    spec.id = as_string(field(c, "id", "component"), "component.id");
    const std::string where = "component " + spec.id;
    const auto kind = as_string(field(c, "kind", where), where + ".kind");
    if (kind == "exceptional") {
      spec.kind = ComponentKind::exceptional;
    } else if (kind == "non_exceptional") {
      spec.kind = ComponentKind::non_exceptional;
    } else {
      throw InputError(where + ": kind must be 'exceptional' or 'non_exceptional'");
    }
    spec.m = as_int(field(c, "m", where), where + ".m");
    if (c.contains("a")) spec.a = as_int(c["a"], where + ".a");
    if (c.contains("self")) spec.self_int = as_int(c["self"], where + ".self");
    doc.components.push_back(std::move(spec));
  }
  if (j.contains("edges")) {
    for (const auto& e : as_array(j["edges"], "curve.edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("curve.edges: each edge is a pair of ids");
      doc.edges.emplace_back(as_string(e[0], "curve.edges"), as_string(e[1], "curve.edges"));
    }
  }
  return doc;
}

ProximityInput parse_proximity(const json& j) {
  only_keys(j, "proximity", {"mults", "prox", "branches"});
  ProximityInput in;
  for (const auto& v : as_array(field(j, "mults", "proximity"), "proximity.mults")) {
    in.mults.push_back(as_int(v, "proximity.mults"));
  }
  if (j.contains("prox")) {
    for (const auto& p : as_array(j["prox"], "proximity.prox")) {
      if (!p.is_array() || p.size() != 2) throw InputError("proximity.prox: each entry is a pair [i, j]");
      in.prox.emplace_back(as_index(p[0], "proximity.prox"), as_index(p[1], "proximity.prox"));
    }
  }
  if (j.contains("branches")) {
    for (const auto& b : as_array(j["branches"], "proximity.branches")) {
      only_keys(b, "proximity.branches[]", {"on", "id", "m"});
      BranchAttachment br;
      br.on = as_index(field(b, "on", "branch"), "branch.on");
      if (b.contains("id")) br.id = as_string(b["id"], "branch.id");
      if (b.contains("m")) br.m = as_int(b["m"], "branch.m");
      in.branches.push_back(std::move(br));
    }
  }
  return in;
}

NewtonDocument parse_newton(const json& j) {
  only_keys(j, "newton", {"support", "nondegenerate"});
  NewtonDocument doc;
  for (const auto& p : as_array(field(j, "support", "newton"), "newton.support")) {
    if (!p.is_array() || p.size() != 2) throw InputError("newton.support: each point is a pair [i, j]");
    doc.support.push_back({as_int(p[0], "newton.support"), as_int(p[1], "newton.support")});
  }
  if (j.contains("nondegenerate")) {
    if (!j["nondegenerate"].is_boolean()) throw InputError("newton.nondegenerate: expected a boolean");
    doc.nondegenerate = j["nondegenerate"].get<bool>();
  }
  return doc;
}

QhDocument parse_qh(const json& j) {
  only_keys(j, "qh", {"a", "b"});
  QhDocument doc{as_int(field(j, "a", "qh"), "qh.a"), as_int(field(j, "b", "qh"), "qh.b")};
  if (doc.a < 2 || doc.b < 2) throw InputError("qh: a and b must be at least 2");
  return doc;
}

}  // namespace

InputDocument parse_document(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw InputError("input document must have exactly one of: nc, curve, proximity, newton, qh");
  }
  const auto it = j.begin();
  const std::string& key = it.key();
  const json& body = it.value();
  if (key == "nc") return parse_nc(body);
  if (key == "curve") return parse_curve(body);
  if (key == "proximity") return parse_proximity(body);
  if (key == "newton") return parse_newton(body);
  if (key == "qh") return parse_qh(body);
  throw InputError("unknown document variant '" + key + "'");
}

InputDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

InputDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document_text(buf.str());
}

const char* variant_name(const InputDocument& doc) {
  static constexpr const char* names[] = {"nc", "curve", "proximity", "newton", "qh"};
  return names[doc.index()];
}

namespace {

std::optional<std::pair<std::int64_t, std::int64_t>> binomial_exponents(std::vector<LatticePoint> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.size() != 2) return std::nullopt;
  const auto& p = support[0];
  const auto& q = support[1];
  // Sorted: (0, b) comes before (a, 0).
  if (p[0] == 0 && q[1] == 0 && q[0] >= 2 && p[1] >= 2) return std::pair{q[0], p[1]};
  return std::nullopt;
}

}  // namespace

Germ build_germ(const InputDocument& doc) {
  Germ g;
  if (std::holds_alternative<NcDocument>(doc)) {
    throw InputError("this command needs a curve germ (curve, proximity, newton or qh), got an nc document");
  }
  if (const auto* c = std::get_if<CurveDocument>(&doc)) {
    g.resolution = from_explicit(c->components, c->edges);
  } else if (const auto* p = std::get_if<ProximityInput>(&doc)) {
    auto build = from_proximity(*p);
    g.resolution = build.resolution;
    g.delta = build.delta;
    g.branches = build.branches;
    g.proximity = std::move(build);
  } else {
    std::vector<LatticePoint> support;
    bool nondegenerate = true;
    if (const auto* n = std::get_if<NewtonDocument>(&doc)) {
      support = n->support;
      nondegenerate = n->nondegenerate;
    } else {
      const auto& q = std::get<QhDocument>(doc);
      support = {{q.a, 0}, {0, q.b}};
    }
    g.resolution = from_newton(support, nondegenerate);
    g.toric = true;
    g.qh = binomial_exponents(support);
    if (g.qh) {
      const auto md = milnor_delta(g.qh->first, g.qh->second);
      g.delta = md.delta;
      g.branches = md.branches;
    }
  }
  return g;
}

}  // namespace singspec
