#include "hdrr/io.hpp"

namespace hdrr::io {

json to_json(const ElementId& e) {
  switch (e.kind()) {
    case ElementKind::Atom: return json{{"a", {e.tag(), e.index()}}};
    case ElementKind::Const: return json{{"k", {e.index(), e.tag()}}};
    case ElementKind::Gadget: return json{{"g", {to_json(e.source()), e.index()}}};
    case ElementKind::Removal: return json{{"r", {to_json(e.source()), e.index()}}};
    case ElementKind::Tuple: {
      json parts = json::array();
      for (const auto& p : e.parts()) parts.push_back(to_json(p));
      return json{{"t", parts}};
    }
    case ElementKind::Set: {
      json parts = json::array();
      for (const auto& p : e.parts()) parts.push_back(to_json(p));
      return json{{"s", parts}};
    }
  }
  throw ParseError("bad element kind");
}

ElementId element_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("bad element encoding");
  const auto it = j.begin();
  const std::string& key = it.key();
  const json& v = it.value();
  if (key == "a") return ElementId::atom(v.at(0).get<std::string>(), v.at(1).get<std::int64_t>());
  if (key == "k") return ElementId::constant(v.at(0).get<std::int64_t>(), v.at(1).get<std::string>());
  if (key == "g") return ElementId::gadget(element_from_json(v.at(0)), v.at(1).get<std::int64_t>());
  if (key == "r") return ElementId::removal(element_from_json(v.at(0)), v.at(1).get<std::int64_t>());
  if (key == "t" || key == "s") {
    std::vector<ElementId> parts;
    for (const auto& p : v) parts.push_back(element_from_json(p));
    return key == "t" ? ElementId::tuple(std::move(parts)) : ElementId::set(std::move(parts));
  }
  throw ParseError("unknown element kind: " + key);
}

namespace {

json elements_to_json(const ElementSet& s) {
  json out = json::array();
  for (const auto& e : s) out.push_back(to_json(e));
  return out;
}

json elements_to_json(const ElementVec& s) {
  json out = json::array();
  for (const auto& e : s) out.push_back(to_json(e));
  return out;
}

ElementSet element_set_from_json(const json& j) {
  ElementSet out;
  for (const auto& e : j) out.insert(element_from_json(e));
  return out;
}

ElementVec element_vec_from_json(const json& j) {
  ElementVec out;
  for (const auto& e : j) out.push_back(element_from_json(e));
  return out;
}

json param_to_json(const Param& p) {
  if (const auto* i = std::get_if<std::int64_t>(&p)) return json{{"int", *i}};
  if (const auto* b = std::get_if<BigNat>(&p)) return json{{"big", b->str()}};
  if (const auto* e = std::get_if<ElementId>(&p)) return json{{"elem", to_json(*e)}};
  if (const auto* v = std::get_if<ElementVec>(&p)) return json{{"elems", elements_to_json(*v)}};
  const auto& vm = std::get<ValueMap>(p);
  json entries = json::array();
  for (const auto& [e, val] : vm) entries.push_back(json::array({to_json(e), val.str()}));
  return json{{"values", entries}};
}

Param param_from_json(const json& j) {
  if (j.contains("int")) return j.at("int").get<std::int64_t>();
  if (j.contains("big")) return BigNat::parse(j.at("big").get<std::string>());
  if (j.contains("elem")) return element_from_json(j.at("elem"));
  if (j.contains("elems")) return element_vec_from_json(j.at("elems"));
  if (j.contains("values")) {
    ValueMap vm;
    for (const auto& entry : j.at("values"))
      vm[element_from_json(entry.at(0))] = BigNat::parse(entry.at(1).get<std::string>());
    return vm;
  }
  throw ParseError("unknown param encoding");
}

}  // namespace

json to_json(const Instance& inst) {
  json rel = json::object();
  for (const auto& [label, els] : inst.relations) rel[label] = elements_to_json(els);
  json params = json::object();
  for (const auto& [key, p] : inst.params) params[key] = param_to_json(p);
  return json{{"problem", problem_name(inst.problem)},
              {"universe", elements_to_json(inst.universe)},
              {"relations", rel},
              {"params", params}};
}

Instance instance_from_json(const json& j) {
  Instance inst;
  auto p = problem_from_name(j.at("problem").get<std::string>());
  if (!p) throw ParseError("unknown problem tag");
  inst.problem = *p;
  inst.universe = element_set_from_json(j.at("universe"));
  for (const auto& [label, els] : j.at("relations").items())
    inst.relations[label] = element_set_from_json(els);
  if (j.contains("params"))
    for (const auto& [key, pj] : j.at("params").items())
      inst.params[key] = param_from_json(pj);
  return inst;
}

json to_json(const ScenarioSet& s) {
  if (const auto* e = std::get_if<ExplicitScenarios>(&s)) {
    json sets = json::array();
    for (const auto& a : e->active_sets) sets.push_back(elements_to_json(a));
    return json{{"explicit", sets}};
  }
  if (const auto* x = std::get_if<XorDependencies>(&s)) {
    json pairs = json::array();
    for (const auto& [a, b] : x->pairs)
      pairs.push_back(json::array({elements_to_json(a), elements_to_json(b)}));
    return json{{"xor", {{"fixed", elements_to_json(x->fixed)}, {"pairs", pairs}}}};
  }
  const auto& g = std::get<GammaSets>(s);
  json groups = json::array();
  for (const auto& grp : g.groups) groups.push_back(elements_to_json(grp));
  return json{{"gamma", {{"fixed", elements_to_json(g.fixed)},
                         {"groups", groups},
                         {"limit", g.gamma}}}};
}

ScenarioSet scenario_set_from_json(const json& j) {
  if (j.contains("explicit")) {
    ExplicitScenarios e;
    for (const auto& a : j.at("explicit")) e.active_sets.push_back(element_set_from_json(a));
    return e;
  }
  if (j.contains("xor")) {
    XorDependencies x;
    x.fixed = element_set_from_json(j.at("xor").at("fixed"));
    for (const auto& p : j.at("xor").at("pairs"))
      x.pairs.push_back({element_set_from_json(p.at(0)), element_set_from_json(p.at(1))});
    return x;
  }
  if (j.contains("gamma")) {
    GammaSets g;
    g.fixed = element_set_from_json(j.at("gamma").at("fixed"));
    for (const auto& grp : j.at("gamma").at("groups"))
      g.groups.push_back(element_set_from_json(grp));
    g.gamma = j.at("gamma").at("limit").get<std::int64_t>();
    return g;
  }
  throw ParseError("unknown scenario encoding");
}

json to_json(const RobustInstance& ri) {
  json stages = json::array();
  for (const auto& st : ri.stages)
    stages.push_back(json{{"scenarios", to_json(st.scenarios)},
                          {"kappa", st.kappa},
                          {"measure", measure_name(st.measure)}});
  return json{{"base", to_json(ri.base)},
              {"pool", elements_to_json(ri.pool)},
              {"base_active", elements_to_json(ri.base_active)},
              {"ground", ground_kind_name(ri.ground)},
              {"stages", stages}};
}

RobustInstance robust_from_json(const json& j) {
  RobustInstance ri;
  ri.base = instance_from_json(j.at("base"));
  ri.pool = element_set_from_json(j.at("pool"));
  ri.base_active = element_set_from_json(j.at("base_active"));
  std::string g = j.at("ground").get<std::string>();
  bool found = false;
  for (auto kind : {GroundKind::Vertices, GroundKind::Edges, GroundKind::Arcs,
                    GroundKind::Numbers, GroundKind::Objects, GroundKind::Jobs,
                    GroundKind::GroundSet, GroundKind::Literals})
    if (ground_kind_name(kind) == g) {
      ri.ground = kind;
      found = true;
    }
  if (!found) throw ParseError("unknown ground kind: " + g);
  for (const auto& st : j.at("stages")) {
    Stage stage;
    stage.scenarios = scenario_set_from_json(st.at("scenarios"));
    stage.kappa = st.at("kappa").get<std::int64_t>();
    auto msr = measure_from_name(st.at("measure").get<std::string>());
    if (!msr) throw ParseError("unknown measure");
    stage.measure = *msr;
    ri.stages.push_back(std::move(stage));
  }
  return ri;
}

json to_json(const Solution& s) {
  json out{{"elements", elements_to_json(s.elements)}};
  if (s.order) out["order"] = elements_to_json(*s.order);
  if (s.parts) {
    json parts = json::array();
    for (const auto& p : *s.parts) parts.push_back(elements_to_json(p));
    out["parts"] = parts;
  }
  return out;
}

Solution solution_from_json(const json& j) {
  Solution s;
  s.elements = element_set_from_json(j.at("elements"));
  if (j.contains("order")) s.order = element_vec_from_json(j.at("order"));
  if (j.contains("parts")) {
    std::vector<ElementSet> parts;
    for (const auto& p : j.at("parts")) parts.push_back(element_set_from_json(p));
    s.parts = std::move(parts);
  }
  return s;
}

namespace {

json witness_node_to_json(const WitnessNode& n) {
  json kids = json::array();
  for (const auto& k : n.children) kids.push_back(witness_node_to_json(k));
  return json{{"solution", to_json(n.solution)}, {"children", kids}};
}

WitnessNode witness_node_from_json(const json& j) {
  WitnessNode n;
  n.solution = solution_from_json(j.at("solution"));
  for (const auto& k : j.at("children")) n.children.push_back(witness_node_from_json(k));
  return n;
}

}  // namespace

json to_json(const Witness& w) {
  json kids = json::array();
  for (const auto& k : w.children) kids.push_back(witness_node_to_json(k));
  return json{{"base_solution", to_json(w.base_solution)}, {"children", kids}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.base_solution = solution_from_json(j.at("base_solution"));
  for (const auto& k : j.at("children")) w.children.push_back(witness_node_from_json(k));
  return w;
}

json to_json(const GadgetTable& t) {
  json gadgets = json::array();
  for (const auto& [src, img] : t.gadgets)
    gadgets.push_back(json::array({to_json(src), elements_to_json(img)}));
  json removals = json::array();
  for (const auto& [src, img] : t.removals)
    removals.push_back(json::array({to_json(src), elements_to_json(img)}));
  return json{{"constant", elements_to_json(t.constant)},
              {"gadgets", gadgets},
              {"removals", removals}};
}

GadgetTable table_from_json(const json& j) {
  GadgetTable t;
  t.constant = element_set_from_json(j.at("constant"));
  for (const auto& g : j.at("gadgets"))
    t.gadgets[element_from_json(g.at(0))] = element_set_from_json(g.at(1));
  for (const auto& g : j.at("removals"))
    t.removals[element_from_json(g.at(0))] = element_set_from_json(g.at(1));
  return t;
}

json to_json(const QaeFormula& f) {
  return json{{"blocks", f.blocks}, {"clauses", f.clauses}};
}

QaeFormula qae_from_json(const json& j) {
  QaeFormula f;
  f.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  for (const auto& c : j.at("clauses"))
    f.clauses.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
  return f;
}

json document(const std::string& type, json payload) {
  return json{{"schema", kSchemaVersion}, {"type", type}, {"payload", std::move(payload)}};
}

std::pair<std::string, json> open_document(const json& doc) {
  if (!doc.contains("schema") || doc.at("schema").get<int>() != kSchemaVersion)
    throw ParseError("unknown schema version");
  return {doc.at("type").get<std::string>(), doc.at("payload")};
}

}  // namespace hdrr::io
