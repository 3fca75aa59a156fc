#include "hdrr/reduction.hpp"

#include <algorithm>

namespace hdrr {

std::int64_t eval_expr(const SizeExpr& e, const SizeStats& s) {
  return e.c0 + e.cL * s.lits + e.cC * s.clauses + e.cLp * s.origin_lits +
         e.cCp * s.origin_clauses;
}

std::int64_t evaluate_size(const SizeFunction& f, const SizeStats& s) {
  if (s.lits % 2 != 0 || s.origin_lits % 2 != 0 || s.lits > s.origin_lits ||
      s.clauses > s.origin_clauses || s.lits < 0 || s.clauses < 0)
    throw std::invalid_argument("inconsistent size stats");
  std::int64_t vars = s.lits / 2;
  std::int64_t removed_vars = (s.origin_lits - s.lits) / 2;
  std::int64_t removed_clauses = s.origin_clauses - s.clauses;
  return eval_expr(f.constant, s) + vars * eval_expr(f.per_variable, s) +
         s.clauses * eval_expr(f.per_clause, s) +
         removed_vars * eval_expr(f.per_removed_variable, s) +
         removed_clauses * eval_expr(f.per_removed_clause, s);
}

SizeStats stats_of(const Instance& sat) {
  if (sat.problem != Problem::ThreeSat)
    throw FamilyMismatch("stats_of expects a 3SAT instance");
  SizeStats s;
  s.lits = static_cast<std::int64_t>(sat::variables(sat).size()) * 2;
  s.clauses = static_cast<std::int64_t>(sat::clauses(sat).size());
  s.origin_lits = static_cast<std::int64_t>(sat::origin_variables(sat).size()) * 2;
  s.origin_clauses = static_cast<std::int64_t>(sat::origin_clauses(sat).size());
  return s;
}

Reduced apply_reduction(const CatalogEntry& entry, const Instance& src) {
  if (src.problem != entry.source)
    throw FamilyMismatch("entry " + entry.name + " expects " +
                         problem_name(entry.source) + ", got " +
                         problem_name(src.problem));
  return entry.build(src);
}

std::int64_t evaluate_size(const CatalogEntry& entry, const SizeStats& s) {
  if (!entry.size)
    throw std::invalid_argument("entry " + entry.name + " has no size function");
  return evaluate_size(*entry.size, s);
}

ElementSet all_elements(const Instance& inst) {
  ElementSet all = inst.universe;
  for (const auto& [label, rel] : inst.relations) all.insert(rel.begin(), rel.end());
  return all;
}

bool check_preimage_uniqueness(const GadgetTable& table, const Instance& target) {
  ElementSet seen;
  auto add_all = [&](const ElementSet& s) {
    for (const auto& e : s)
      if (!seen.insert(e).second) return false;
    return true;
  };
  if (!add_all(table.constant)) return false;
  for (const auto& [src, img] : table.gadgets)
    if (!add_all(img)) return false;
  for (const auto& [src, img] : table.removals)
    if (!add_all(img)) return false;
  return seen == all_elements(target);
}

bool check_modularity(const CatalogEntry& entry, const Instance& src,
                      const ElementId& r) {
  if (!is_removable(src, r)) throw NotRemovable("element not removable: " + r.str());
  Reduced full = apply_reduction(entry, src);
  Instance smaller = remove_element(src, r);
  Reduced reduced_small = apply_reduction(entry, smaller);

  ElementSet dead;
  {
    ElementSet before = all_elements(src);
    ElementSet after = all_elements(smaller);
    for (const auto& e : before)
      if (!after.count(e)) dead.insert(e);
  }

  ElementSet expect = all_elements(full.target);
  for (const auto& e : dead) {
    auto it = full.table.gadgets.find(e);
    if (it == full.table.gadgets.end()) continue;
    for (const auto& t : it->second) expect.erase(t);
  }
  for (const auto& e : dead) {
    auto it = reduced_small.table.removals.find(e);
    if (it == reduced_small.table.removals.end()) continue;
    expect.insert(it->second.begin(), it->second.end());
  }
  return expect == all_elements(reduced_small.target);
}

namespace {

ElementSet image_of(const GadgetTable& g_table, const ElementSet& elems) {
  ElementSet out;
  for (const auto& b : elems) {
    auto it = g_table.gadgets.find(b);
    if (it != g_table.gadgets.end()) out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

}  // namespace

CatalogEntry compose(const CatalogEntry& f, const CatalogEntry& g) {
  if (f.target != g.source)
    throw FamilyMismatch("compose: " + f.name + " target does not feed " + g.name);
  CatalogEntry out;
  out.name = f.name + "+" + g.name;
  out.source = f.source;
  out.target = g.target;
  out.strength = (f.strength == Strength::Strong && g.strength == Strength::Strong)
                     ? Strength::Strong
                     : Strength::Weak;
  out.ground = g.ground;
  out.size = f.size;  // sizes are 3SAT-based and carried through 1-1 chains
  out.build = [f, g](const Instance& src) {
    Reduced rf = f.build(src);
    Reduced rg = g.build(rf.target);
    Reduced out_r;
    out_r.target = rg.target;
    out_r.table.constant = rg.table.constant;
    for (const auto& t : image_of(rg.table, rf.table.constant))
      out_r.table.constant.insert(t);
    for (const auto& [x, img] : rf.table.gadgets)
      out_r.table.gadgets[x] = image_of(rg.table, img);
    for (const auto& [x, img] : rf.table.removals)
      out_r.table.removals[x] = image_of(rg.table, img);
    return out_r;
  };
  return out;
}

namespace {

struct ScenarioShape {
  std::vector<ElementSet> live;  // element liveness per expanded scenario
};

ElementSet live_elements(const RobustInstance& src, const ElementSet& active) {
  return all_elements(apply_scenario(src.base, src.pool, active));
}

// Per-gadget switching weight between a frozen core and one scenario.
std::int64_t kappa_for(const CatalogEntry& entry, const Instance& base_full,
                       const ElementSet& live, const ElementSet& frozen) {
  const SizeFunction& f = *entry.size;
  SizeStats origin = stats_of(base_full);
  SizeStats os;
  os.lits = os.origin_lits = origin.origin_lits;
  os.clauses = os.origin_clauses = origin.origin_clauses;

  std::int64_t k = 0;
  for (const auto& v : sat::origin_variables(base_full)) {
    bool alive = live.count(v) != 0;
    bool frozen_v = alive && frozen.count(v) != 0;
    if (frozen_v) continue;
    k += alive ? eval_expr(f.per_variable, os) : eval_expr(f.per_removed_variable, os);
  }
  for (const auto& c : sat::origin_clauses(base_full)) {
    bool alive = live.count(c) != 0;
    bool frozen_c = alive && frozen.count(c) != 0;
    if (frozen_c) continue;
    k += alive ? eval_expr(f.per_clause, os) : eval_expr(f.per_removed_clause, os);
  }
  return k;
}

}  // namespace

RobustInstance lift_to_robust(const CatalogEntry& entry, const RobustInstance& src,
                              std::uint64_t scenario_cap) {
  if (src.base.problem != Problem::ThreeSat || entry.source != Problem::ThreeSat)
    throw FamilyMismatch("lift_to_robust needs a 3SAT-source entry and instance");
  if (!entry.size)
    throw std::invalid_argument("entry " + entry.name + " has no size function");
  for (const auto& p : src.pool)
    if (!(sat::is_lit(p) && !sat::is_negated(p)) && !src.base.relation("clause").count(p))
      throw PoolNotGadgetAligned("pool element is not a whole variable or clause: " +
                                 p.str());

  Reduced full = apply_reduction(entry, src.base);
  const ElementSet base_all = all_elements(src.base);

  // Target activation of one source scenario: gadgets of its live elements
  // plus the removal gadgets its reduction emits.
  struct MappedScenario {
    ElementSet live;
    ElementSet active;
    ElementSet removal_elems;
    ValueMap removal_values;
  };
  auto map_scenario = [&](const ElementSet& source_active) {
    MappedScenario m;
    Instance inst = apply_scenario(src.base, src.pool, source_active);
    m.live = all_elements(inst);
    Reduced r = apply_reduction(entry, inst);
    for (const auto& e : m.live) {
      auto it = full.table.gadgets.find(e);
      if (it != full.table.gadgets.end())
        m.active.insert(it->second.begin(), it->second.end());
    }
    for (const auto& [e, img] : r.table.removals) {
      m.active.insert(img.begin(), img.end());
      m.removal_elems.insert(img.begin(), img.end());
    }
    if (!m.removal_elems.empty() && r.target.has_param("values")) {
      for (const auto& e : m.removal_elems) {
        auto it = r.target.values().find(e);
        if (it != r.target.values().end()) m.removal_values[e] = it->second;
      }
    }
    return m;
  };

  MappedScenario base_mapped = map_scenario(src.base_active);

  RobustInstance out;
  out.ground = entry.ground;
  out.base = full.target;

  std::vector<std::vector<MappedScenario>> mapped_stages;
  std::vector<std::vector<ElementSet>> expanded_stages;
  for (const auto& stage : src.stages) {
    std::vector<MappedScenario> mapped;
    std::vector<ElementSet> expanded = expand(stage.scenarios, scenario_cap);
    for (const auto& a : expanded) mapped.push_back(map_scenario(a));
    mapped_stages.push_back(std::move(mapped));
    expanded_stages.push_back(std::move(expanded));
  }

  // The robust base carries every element any scenario can activate,
  // including removal-gadget elements absent from the plain reduction.
  ElementSet extra;
  ValueMap extra_values;
  const ElementSet plain = all_elements(out.base);
  auto note_extra = [&](const MappedScenario& m) {
    for (const auto& e : m.removal_elems)
      if (!plain.count(e)) extra.insert(e);
    for (const auto& [e, v] : m.removal_values) extra_values[e] = v;
  };
  note_extra(base_mapped);
  for (const auto& ms : mapped_stages)
    for (const auto& m : ms) note_extra(m);
  if (!extra_values.empty() && out.base.has_param("values")) {
    auto vm = out.base.values();
    for (const auto& [e, v] : extra_values) vm[e] = v;
    out.base.params["values"] = std::move(vm);
  }
  for (const auto& e : extra) {
    if (e.kind() == ElementKind::Tuple || e.kind() == ElementKind::Set) {
      // Relation element; attach to the target's primary link relation.
      std::string label;
      switch (out.base.problem) {
        case Problem::DirectedHamPath:
        case Problem::DirectedHamCycle:
        case Problem::FeedbackVertexSet:
        case Problem::KDisjointDirectedPath:
          label = "arc";
          break;
        case Problem::Clique:
        case Problem::CliqueCover:
          label = "nonedge";
          break;
        case Problem::HittingSet:
          label = "subset";
          break;
        default:
          label = "edge";
          break;
      }
      out.base.relations[label].insert(e);
    } else {
      out.base.universe.insert(e);
    }
  }

  // Pool: every target element inactive somewhere across the base and the
  // recovery scenarios. Constant-gadget elements stay outside by design.
  ElementSet target_all = all_elements(out.base);
  out.pool.clear();
  for (const auto& e : target_all) {
    if (full.table.constant.count(e)) continue;
    bool everywhere = base_mapped.active.count(e) != 0;
    for (const auto& ms : mapped_stages)
      for (const auto& m : ms)
        if (!m.active.count(e)) everywhere = false;
    if (!everywhere) out.pool.insert(e);
  }
  out.base_active.clear();
  for (const auto& e : base_mapped.active)
    if (out.pool.count(e)) out.base_active.insert(e);

  // Frozen core per stage: elements alive in the predecessor level and every
  // scenario of this stage.
  ElementSet prev_live = base_mapped.live;
  for (std::size_t si = 0; si < src.stages.size(); ++si) {
    ElementSet frozen = prev_live;
    ElementSet next_prev;
    bool first = true;
    for (const auto& m : mapped_stages[si]) {
      for (auto it = frozen.begin(); it != frozen.end();) {
        if (!m.live.count(*it))
          it = frozen.erase(it);
        else
          ++it;
      }
      if (first) {
        next_prev = m.live;
        first = false;
      } else {
        for (auto it = next_prev.begin(); it != next_prev.end();) {
          if (!m.live.count(*it))
            it = next_prev.erase(it);
          else
            ++it;
        }
      }
    }
    std::int64_t kappa_add = 0;
    for (const auto& m : mapped_stages[si])
      kappa_add = std::max(kappa_add, kappa_for(entry, src.base, m.live, frozen));

    Stage stage;
    stage.measure = src.stages[si].measure;
    stage.kappa =
        stage.measure == Measure::AdditionsOnly ? kappa_add : 2 * kappa_add;

    // Re-encode the scenario set branch-by-branch over target activations.
    const ScenarioSet& src_set = src.stages[si].scenarios;
    const auto& mapped = mapped_stages[si];
    if (std::holds_alternative<ExplicitScenarios>(src_set)) {
      ExplicitScenarios ex;
      for (const auto& m : mapped) {
        ElementSet a;
        for (const auto& e : m.active)
          if (out.pool.count(e)) a.insert(e);
        ex.active_sets.push_back(std::move(a));
      }
      stage.scenarios = std::move(ex);
    } else {
      // Factorize per-element liveness across the expanded scenarios.
      std::size_t count = mapped.size();
      ElementSet varying;
      ElementSet core;
      for (const auto& e : out.pool) {
        std::size_t on = 0;
        for (const auto& m : mapped) on += m.active.count(e);
        if (on == count) core.insert(e);
        else if (on != 0) varying.insert(e);
      }
      auto profile_of = [&](const ElementId& e) {
        std::vector<bool> prof(count);
        for (std::size_t i = 0; i < count; ++i) prof[i] = mapped[i].active.count(e);
        return prof;
      };
      if (const auto* x = std::get_if<XorDependencies>(&src_set)) {
        XorDependencies tx;
        tx.fixed = core;
        std::size_t n = x->pairs.size();
        tx.pairs.resize(n);
        for (const auto& e : varying) {
          auto prof = profile_of(e);
          bool placed = false;
          for (std::size_t i = 0; i < n && !placed; ++i) {
            bool matches_first = true, matches_second = true;
            for (std::size_t s = 0; s < count; ++s) {
              bool second = (s >> i) & 1;
              if (prof[s] != !second) matches_first = false;
              if (prof[s] != second) matches_second = false;
            }
            if (matches_first) {
              tx.pairs[i].first.insert(e);
              placed = true;
            } else if (matches_second) {
              tx.pairs[i].second.insert(e);
              placed = true;
            }
          }
          if (!placed)
            throw PoolNotGadgetAligned("target element not expressible per pair: " +
                                       e.str());
        }
        stage.scenarios = std::move(tx);
      } else {
        const auto& g = std::get<GammaSets>(src_set);
        // Scenario order mirrors group-subset enumeration; recover each
        // element's "alive iff group j selected" profile.
        std::vector<std::vector<std::size_t>> selections;
        {
          std::size_t n = g.groups.size();
          std::vector<std::size_t> pick;
          std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from,
                                                                   std::int64_t left) {
            if (left == 0) {
              selections.push_back(pick);
              return;
            }
            for (std::size_t i = from; i < n; ++i) {
              pick.push_back(i);
              rec(i + 1, left - 1);
              pick.pop_back();
            }
          };
          for (std::int64_t k = 0; k <= g.gamma; ++k) rec(0, k);
        }
        GammaSets tg;
        tg.fixed = core;
        tg.gamma = g.gamma;
        tg.groups.resize(g.groups.size());
        for (const auto& e : varying) {
          auto prof = profile_of(e);
          bool placed = false;
          for (std::size_t j = 0; j < g.groups.size() && !placed; ++j) {
            bool matches = true;
            for (std::size_t s = 0; s < count; ++s) {
              bool sel = std::find(selections[s].begin(), selections[s].end(), j) !=
                         selections[s].end();
              if (prof[s] != sel) matches = false;
            }
            if (matches) {
              tg.groups[j].insert(e);
              placed = true;
            }
          }
          if (!placed)
            throw PoolNotGadgetAligned("target element not expressible per group: " +
                                       e.str());
        }
        for (const auto& grp : tg.groups)
          if (grp.empty())
            throw PoolNotGadgetAligned("source group maps to an empty gadget set");
        stage.scenarios = std::move(tg);
      }
    }
    out.stages.push_back(std::move(stage));
    if (!mapped_stages[si].empty()) prev_live = next_prev;
  }
  return out;
}

}  // namespace hdrr
