#include <algorithm>

#include "problems_detail.hpp"

namespace hdrr {
namespace sat {

namespace {
constexpr const char* kLitTag = "x";
}

ElementId lit(std::int64_t var, bool negated) {
  return ElementId::atom(kLitTag, var * 2 + (negated ? 1 : 0));
}

bool is_lit(const ElementId& e) {
  return e.kind() == ElementKind::Atom && e.tag() == kLitTag;
}

std::int64_t var_of(const ElementId& l) { return l.index() / 2; }
bool is_negated(const ElementId& l) { return l.index() % 2 != 0; }

ElementId negate(const ElementId& l) {
  return ElementId::atom(kLitTag, l.index() ^ 1);
}

ElementId positive(const ElementId& l) { return is_negated(l) ? negate(l) : l; }

ElementId neg_element(const ElementId& pos_lit) {
  return ElementId::tuple({pos_lit, negate(pos_lit)});
}

ElementId clause_element(const std::array<ElementId, 3>& lits) {
  return ElementId::tuple({lits[0], lits[1], lits[2]});
}

ElementId incidence_element(const ElementId& l, const ElementId& clause) {
  return ElementId::tuple({l, clause});
}

Instance make_from_elements(const ElementVec& positive_lits,
                            const std::vector<std::array<ElementId, 3>>& clause_lits) {
  Instance inst;
  inst.problem = Problem::ThreeSat;
  ElementVec vars = positive_lits;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (const auto& v : vars) {
    inst.universe.insert(v);
    inst.universe.insert(negate(v));
    inst.relations["neg"].insert(neg_element(v));
  }
  ElementVec clause_ids;
  for (const auto& c : clause_lits) {
    for (const auto& l : c)
      if (!inst.universe.count(l))
        throw UnknownElement("clause literal outside universe: " + l.str());
    ElementId ce = clause_element(c);
    if (inst.relations["clause"].insert(ce).second) clause_ids.push_back(ce);
    for (const auto& l : c) inst.relations["lit-clause"].insert(incidence_element(l, ce));
  }
  std::sort(clause_ids.begin(), clause_ids.end());
  inst.params["origin-vars"] = vars;
  inst.params["origin-clauses"] = clause_ids;
  return inst;
}

Instance make(const std::vector<std::array<int, 3>>& clauses,
              std::optional<std::int64_t> explicit_vars) {
  ElementVec vars;
  if (explicit_vars) {
    for (std::int64_t v = 1; v <= *explicit_vars; ++v) vars.push_back(lit(v, false));
  } else {
    std::set<std::int64_t> seen;
    for (const auto& c : clauses)
      for (int l : c) {
        if (l == 0) throw std::invalid_argument("zero literal in clause");
        seen.insert(std::abs(l));
      }
    for (auto v : seen) vars.push_back(lit(v, false));
  }
  std::vector<std::array<ElementId, 3>> cls;
  for (const auto& c : clauses) {
    std::array<ElementId, 3> lits{lit(std::abs(c[0]), c[0] < 0),
                                  lit(std::abs(c[1]), c[1] < 0),
                                  lit(std::abs(c[2]), c[2] < 0)};
    cls.push_back(lits);
  }
  return make_from_elements(vars, cls);
}

ElementVec variables(const Instance& inst) {
  ElementVec vars;
  for (const auto& e : inst.universe)
    if (is_lit(e) && !is_negated(e)) vars.push_back(e);
  return vars;
}

ElementVec clauses(const Instance& inst) {
  const auto& rel = inst.relation("clause");
  return ElementVec(rel.begin(), rel.end());
}

ElementVec origin_variables(const Instance& inst) {
  if (inst.has_param("origin-vars"))
    return std::get<ElementVec>(inst.params.at("origin-vars"));
  return variables(inst);
}

ElementVec origin_clauses(const Instance& inst) {
  if (inst.has_param("origin-clauses"))
    return std::get<ElementVec>(inst.params.at("origin-clauses"));
  return clauses(inst);
}

std::array<ElementId, 3> clause_lits(const ElementId& clause) {
  const auto& p = clause.parts();
  return {p[0], p[1], p[2]};
}

bool clause_satisfied(const ElementId& clause, const ElementSet& chosen) {
  for (const auto& l : clause.parts())
    if (chosen.count(l)) return true;
  return false;
}

}  // namespace sat

namespace detail {

bool verify_sat(const Instance& inst, const Solution& cand) {
  for (const auto& e : cand.elements)
    if (!inst.universe.count(e))
      throw MalformedCandidate("candidate element outside universe: " + e.str());
  // Total assignment: exactly one of each literal pair.
  for (const auto& v : sat::variables(inst)) {
    int picked = static_cast<int>(cand.elements.count(v)) +
                 static_cast<int>(cand.elements.count(sat::negate(v)));
    if (picked != 1) return false;
  }
  for (const auto& c : inst.relation("clause"))
    if (!sat::clause_satisfied(c, cand.elements)) return false;
  return true;
}

void enumerate_sat(const Instance& inst, const SolutionSink& sink, Gauge& gauge) {
  ElementVec vars = sat::variables(inst);
  std::vector<ElementId> clause_ids(inst.relation("clause").begin(),
                                    inst.relation("clause").end());
  // Map literal -> clauses it appears in; track per-clause count of
  // still-assignable satisfying literals for pruning.
  std::map<ElementId, std::vector<std::size_t>> occurs;
  for (const auto& v : vars) {
    occurs[v];
    occurs[sat::negate(v)];
  }
  std::vector<int> open(clause_ids.size(), 0);  // unassigned distinct literals
  for (std::size_t ci = 0; ci < clause_ids.size(); ++ci) {
    ElementVec distinct = clause_ids[ci].parts();
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& l : distinct) {
      occurs[l].push_back(ci);
      open[ci]++;
    }
  }

  ElementSet chosen;
  std::vector<int> sat_count(clause_ids.size(), 0);

  std::function<bool(std::size_t)> rec = [&](std::size_t vi) -> bool {
    gauge.tick();
    if (vi == vars.size()) {
      Solution s;
      s.elements = chosen;
      return sink(s);
    }
    for (bool neg : {false, true}) {
      ElementId pick = neg ? sat::negate(vars[vi]) : vars[vi];
      ElementId drop = sat::negate(pick);
      bool dead = false;
      for (auto ci : occurs[pick]) sat_count[ci]++;
      for (auto ci : occurs[pick]) open[ci]--;
      for (auto ci : occurs[drop]) {
        open[ci]--;
        if (open[ci] == 0 && sat_count[ci] == 0) dead = true;
      }
      bool keep_going = true;
      if (!dead) {
        chosen.insert(pick);
        keep_going = rec(vi + 1);
        chosen.erase(pick);
      }
      for (auto ci : occurs[pick]) sat_count[ci]--;
      for (auto ci : occurs[pick]) open[ci]++;
      for (auto ci : occurs[drop]) open[ci]++;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace detail
}  // namespace hdrr
