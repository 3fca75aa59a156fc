#include "hdrr/qae.hpp"

#include <algorithm>
#include <map>

namespace hdrr {

namespace {

bool clauses_satisfied(const std::vector<std::array<int, 3>>& clauses,
                       const std::map<int, bool>& assign) {
  for (const auto& c : clauses) {
    bool sat = false;
    for (int l : c) {
      bool v = assign.at(std::abs(l));
      if ((l > 0 && v) || (l < 0 && !v)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool eval_block(const QaeFormula& f, std::size_t block, std::size_t pos,
                std::map<int, bool>& assign) {
  if (block == f.blocks.size()) return clauses_satisfied(f.clauses, assign);
  const auto& vars = f.blocks[block];
  if (pos == vars.size()) return eval_block(f, block + 1, 0, assign);
  bool existential = block % 2 == 0;
  for (bool value : {false, true}) {
    assign[vars[pos]] = value;
    bool sub = eval_block(f, block, pos + 1, assign);
    assign.erase(vars[pos]);
    if (existential && sub) return true;
    if (!existential && !sub) return false;
  }
  return !existential;
}

}  // namespace

bool eval_qbf(const QaeFormula& f, std::size_t var_cap) {
  std::size_t total = 0;
  std::set<int> seen;
  for (const auto& b : f.blocks)
    for (int v : b) {
      if (v <= 0) throw std::invalid_argument("block variables are positive numbers");
      if (!seen.insert(v).second)
        throw std::invalid_argument("variable in two blocks: " + std::to_string(v));
      ++total;
    }
  for (const auto& c : f.clauses)
    for (int l : c)
      if (!seen.count(std::abs(l)))
        throw std::invalid_argument("clause literal outside blocks: " +
                                    std::to_string(l));
  if (total > var_cap) throw BudgetExceeded("qbf evaluation above variable cap");
  std::map<int, bool> assign;
  return eval_block(f, 0, 0, assign);
}

namespace {

// Flattened multi-stage construction. Every variable carries an activation
// window [first, last] over levels: level 0 is the base scenario, level i the
// i-th recovery stage. Pair variables are windowed to their own stage and
// toggled by the scenario encoding; everything else in a window is part of
// the stage's fixed set.
struct Build {
  std::int64_t next_var = 0;
  std::vector<std::array<ElementId, 3>> clauses;
  std::map<ElementId, std::pair<std::size_t, std::size_t>> window;

  ElementId fresh(std::size_t first, std::size_t last) {
    ElementId v = sat::lit(++next_var, false);
    window[v] = {first, last};
    return v;
  }

  void add_clause(ElementVec lits) {
    while (lits.size() < 3) lits.push_back(lits.back());
    if (lits.size() != 3) throw std::logic_error("unsplit wide clause");
    clauses.push_back({lits[0], lits[1], lits[2]});
  }

  void add_wide_clause(const ElementVec& lits, std::size_t first, std::size_t last) {
    if (lits.size() <= 3) {
      add_clause(lits);
      return;
    }
    // Karp chain split; fresh chain variables live in the given window.
    ElementId carry;
    std::size_t i = 0;
    ElementVec cur;
    while (lits.size() - i > 2) {
      cur.clear();
      if (carry.valid()) cur.push_back(sat::negate(carry));
      cur.push_back(lits[i++]);
      if (!carry.valid()) cur.push_back(lits[i++]);
      carry = fresh(first, last);
      cur.push_back(carry);
      add_clause(cur);
    }
    cur.clear();
    cur.push_back(sat::negate(carry));
    while (i < lits.size()) cur.push_back(lits[i++]);
    add_clause(cur);
  }
};

struct PairVars {
  ElementId yt, yf, yt0, yt1, yf0, yf1;
  ElementId s_flag;  // gamma only
};

RobustInstance build_qae(const QaeFormula& f, std::size_t m, QaeEncoding enc,
                         Measure measure) {
  if (f.blocks.size() != 2 * m + 1)
    throw std::invalid_argument("formula needs 2m+1 blocks, got " +
                                std::to_string(f.blocks.size()));

  Build bld;
  const std::size_t last = m;

  std::map<int, ElementId> existential_var;
  std::map<int, std::size_t> universal_of;  // source y -> stage (1-based)
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    for (int v : f.blocks[b]) {
      if (b % 2 == 0)
        existential_var[v] = bld.fresh(b / 2, last);
      else
        universal_of[v] = b / 2 + 1;
    }
  }

  std::map<int, PairVars> pairs;
  std::vector<ElementId> stage_s(m + 1);
  std::vector<std::vector<int>> stage_ys(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<int> ys(f.blocks[2 * i - 1]);
    std::sort(ys.begin(), ys.end());
    stage_ys[i] = ys;
    for (int y : ys) {
      PairVars pv;
      pv.yt = bld.fresh(i, i);
      pv.yf = bld.fresh(i, i);
      pv.yt0 = bld.fresh(i, last);
      pv.yt1 = bld.fresh(i, last);
      pv.yf0 = bld.fresh(i, last);
      pv.yf1 = bld.fresh(i, last);
      if (enc == QaeEncoding::Gamma) pv.s_flag = bld.fresh(i, last);
      pairs[y] = pv;
    }
    if (enc == QaeEncoding::Gamma) stage_s[i] = bld.fresh(i, last);
  }

  for (const auto& [y, pv] : pairs) {
    bld.add_clause({pv.yt});
    bld.add_clause({sat::negate(pv.yf)});
    bld.add_clause({sat::negate(pv.yt), pv.yt1});
    bld.add_clause({pv.yt, sat::negate(pv.yt1)});
    bld.add_clause({sat::negate(pv.yt), sat::negate(pv.yt0)});
    bld.add_clause({pv.yt, pv.yt0});
    bld.add_clause({sat::negate(pv.yf), pv.yf0});
    bld.add_clause({pv.yf, sat::negate(pv.yf0)});
    bld.add_clause({sat::negate(pv.yf), sat::negate(pv.yf1)});
    bld.add_clause({pv.yf, pv.yf1});
    if (enc == QaeEncoding::Gamma) {
      // An active pair side forces its stage flag to one; a pair that is
      // missing from the scenario leaves the flag free.
      bld.add_clause({sat::negate(pv.yt), pv.s_flag});
      bld.add_clause({pv.yf, pv.s_flag});
    }
  }
  if (enc == QaeEncoding::Gamma) {
    for (std::size_t i = 1; i <= m; ++i) {
      ElementVec esc{stage_s[i]};
      for (int y : stage_ys[i]) esc.push_back(sat::negate(pairs[y].s_flag));
      bld.add_wide_clause(esc, i, last);
    }
  }

  // Original clauses: substitute universal literals, then guard with the
  // stage escape flags (gamma) and split to width three.
  std::vector<std::vector<int>> pending;
  for (const auto& c : f.clauses) pending.push_back({c[0], c[1], c[2]});
  while (!pending.empty()) {
    std::vector<int> cl = std::move(pending.back());
    pending.pop_back();
    int upos = -1;
    for (std::size_t i = 0; i < cl.size(); ++i)
      if (universal_of.count(std::abs(cl[i]))) {
        upos = static_cast<int>(i);
        break;
      }
    if (upos >= 0) {
      int lit = cl[static_cast<std::size_t>(upos)];
      for (int variant = 0; variant < 2; ++variant) {
        std::vector<int> copy = cl;
        // Mark substituted literal by a sentinel outside the source range.
        copy[static_cast<std::size_t>(upos)] =
            (lit > 0 ? 1 : -1) * (1000000 + 4 * std::abs(lit) + variant * 2);
        pending.push_back(copy);
      }
      continue;
    }
    ElementVec lits;
    for (int l : cl) {
      int v = std::abs(l);
      if (v >= 1000000) {
        int y = (v - 1000000) / 4;
        int variant = ((v - 1000000) % 4) / 2;
        const PairVars& pv = pairs.at(y);
        // Positive source literal: (.., yt1) and (.., yf0); negative source
        // literal: (.., yt0) and (.., yf1). Replacements are positive lits.
        ElementId aux = l > 0 ? (variant == 0 ? pv.yt1 : pv.yf0)
                              : (variant == 0 ? pv.yt0 : pv.yf1);
        lits.push_back(aux);
      } else {
        auto it = existential_var.find(v);
        if (it == existential_var.end())
          throw std::logic_error("unmapped clause literal");
        lits.push_back(l > 0 ? it->second : sat::negate(it->second));
      }
    }
    if (enc == QaeEncoding::Gamma)
      for (std::size_t i = 1; i <= m; ++i) lits.push_back(sat::negate(stage_s[i]));
    bld.add_wide_clause(lits, last, last);
  }

  // Per-stage budgets and dummy padding, computed backward. Stage additions
  // are the fresh assignments: newly windowed variables plus the selected
  // pair side per universal variable, plus stage dummies.
  std::vector<std::int64_t> base_add(m + 2, 0);
  for (const auto& [v, w] : bld.window) {
    bool is_pair = false;
    for (const auto& [y, pv] : pairs)
      if (v == pv.yt || v == pv.yf) is_pair = true;
    if (!is_pair && w.first >= 1) base_add[w.first] += 1;
  }
  std::vector<std::int64_t> kappa(m + 2, 0), dummies(m + 1, 0);
  for (std::size_t i = m; i >= 1; --i) {
    std::int64_t y_count = static_cast<std::int64_t>(stage_ys[i].size());
    std::int64_t d_i =
        i == m ? 0
               : std::max<std::int64_t>(
                     0, kappa[i + 1] - static_cast<std::int64_t>(stage_ys[i].size()));
    dummies[i] = d_i;
    kappa[i] = base_add[i] + y_count + d_i;
  }
  std::vector<std::vector<ElementId>> dummy_vars(m + 1);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::int64_t j = 0; j < dummies[i]; ++j)
      dummy_vars[i].push_back(bld.fresh(i, i));
  // Base dummies X': exactly kappa_1 variables active only in the base.
  std::vector<ElementId> base_dummies;
  for (std::int64_t j = 0; j < kappa[1]; ++j) base_dummies.push_back(bld.fresh(0, 0));

  // Assemble the full 3SAT instance.
  ElementVec all_vars;
  for (const auto& [v, w] : bld.window) all_vars.push_back(v);
  Instance full = sat::make_from_elements(all_vars, bld.clauses);

  RobustInstance out;
  out.ground = GroundKind::Literals;
  out.base = std::move(full);

  auto active_at = [&](std::size_t level, const ElementId& v) {
    auto w = bld.window.at(v);
    return w.first <= level && level <= w.second;
  };

  for (const auto& [v, w] : bld.window) {
    if (w.first == 0 && w.second == last) continue;  // X1: active everywhere
    out.pool.insert(v);
  }
  for (const auto& v : out.pool)
    if (active_at(0, v)) out.base_active.insert(v);

  for (std::size_t i = 1; i <= m; ++i) {
    Stage stage;
    stage.measure = measure;
    stage.kappa = measure == Measure::AdditionsOnly ? kappa[i] : 2 * kappa[i];
    ElementSet fixed;
    ElementSet stage_pairs;
    for (int y : stage_ys[i]) {
      stage_pairs.insert(pairs[y].yt);
      stage_pairs.insert(pairs[y].yf);
    }
    for (const auto& v : out.pool)
      if (active_at(i, v) && !stage_pairs.count(v)) fixed.insert(v);
    if (enc == QaeEncoding::Xor) {
      XorDependencies x;
      x.fixed = std::move(fixed);
      for (int y : stage_ys[i])
        x.pairs.push_back({ElementSet{pairs[y].yt}, ElementSet{pairs[y].yf}});
      stage.scenarios = std::move(x);
    } else {
      GammaSets g;
      g.fixed = std::move(fixed);
      for (int y : stage_ys[i]) {
        g.groups.push_back(ElementSet{pairs[y].yt});
        g.groups.push_back(ElementSet{pairs[y].yf});
      }
      g.gamma = static_cast<std::int64_t>(stage_ys[i].size());
      stage.scenarios = std::move(g);
    }
    out.stages.push_back(std::move(stage));
  }
  return out;
}

}  // namespace

RobustInstance reduce_qae_xor(const QaeFormula& f, Measure measure) {
  return build_qae(f, 1, QaeEncoding::Xor, measure);
}

RobustInstance reduce_qae_gamma(const QaeFormula& f, Measure measure) {
  return build_qae(f, 1, QaeEncoding::Gamma, measure);
}

RobustInstance reduce_qae_multistage(const QaeFormula& f, std::size_t m,
                                     QaeEncoding encoding, Measure measure) {
  return build_qae(f, m, encoding, measure);
}

}  // namespace hdrr
