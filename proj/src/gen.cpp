#include <algorithm>
#include <random>

#include "hdrr/io.hpp"

namespace hdrr::gen {

namespace {

std::array<int, 3> random_clause(std::mt19937_64& rng, const std::vector<int>& vars) {
  // Uniform over distinct literal triples.
  std::vector<int> lits;
  for (int v : vars) {
    lits.push_back(v);
    lits.push_back(-v);
  }
  std::array<int, 3> c{};
  std::vector<int> picked;
  while (picked.size() < 3) {
    int l = lits[std::uniform_int_distribution<std::size_t>(0, lits.size() - 1)(rng)];
    bool dup = false;
    for (int q : picked)
      if (q == l) dup = true;
    if (!dup || lits.size() < 3) picked.push_back(l);
  }
  for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = picked[static_cast<std::size_t>(i)];
  return c;
}

}  // namespace

Instance random_3sat(std::uint64_t seed, int nvars, int nclauses) {
  std::mt19937_64 rng(seed);
  std::vector<int> vars;
  for (int v = 1; v <= nvars; ++v) vars.push_back(v);
  std::vector<std::array<int, 3>> clauses;
  for (int i = 0; i < nclauses; ++i) clauses.push_back(random_clause(rng, vars));
  return sat::make(clauses, nvars);
}

QaeFormula random_qae(std::uint64_t seed, const std::vector<int>& block_sizes,
                      int nclauses) {
  std::mt19937_64 rng(seed);
  QaeFormula f;
  int next = 1;
  std::vector<int> all;
  for (int size : block_sizes) {
    std::vector<int> block;
    for (int i = 0; i < size; ++i) {
      block.push_back(next);
      all.push_back(next);
      ++next;
    }
    f.blocks.push_back(block);
  }
  if (all.empty()) throw std::invalid_argument("formula needs at least one variable");
  for (int i = 0; i < nclauses; ++i) f.clauses.push_back(random_clause(rng, all));
  std::sort(f.clauses.begin(), f.clauses.end());
  f.clauses.erase(std::unique(f.clauses.begin(), f.clauses.end()), f.clauses.end());
  return f;
}

Instance random_graph(std::uint64_t seed, Problem family, int n, int edge_percent) {
  std::mt19937_64 rng(seed);
  ElementVec verts;
  for (int i = 1; i <= n; ++i) verts.push_back(graph::vertex(i));
  std::vector<std::pair<ElementId, ElementId>> links;
  std::uniform_int_distribution<int> percent(0, 99);
  const bool directed = family == Problem::DirectedHamPath ||
                        family == Problem::DirectedHamCycle ||
                        family == Problem::FeedbackVertexSet ||
                        family == Problem::KDisjointDirectedPath;
  for (int i = 0; i < n; ++i)
    for (int j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      if (percent(rng) < edge_percent)
        links.push_back({verts[static_cast<std::size_t>(i)],
                         verts[static_cast<std::size_t>(j)]});
    }
  return graph::make(family, verts, links);
}

RobustInstance random_hdrr_3sat(std::uint64_t seed, int shared_vars, int recovery_vars,
                                int scenarios, int clauses, Measure measure) {
  std::mt19937_64 rng(seed);
  int total = shared_vars + recovery_vars;
  std::vector<int> vars;
  for (int v = 1; v <= total; ++v) vars.push_back(v);

  // Every scenario switches the same number of variables, matching the shape
  // of the hardness constructions; the budget is then tight under both
  // measures.
  int kappa_add =
      recovery_vars == 0
          ? 0
          : std::uniform_int_distribution<int>(recovery_vars > 1 ? 1 : 0,
                                               recovery_vars)(rng);
  std::vector<ElementSet> actives;
  for (int s = 0; s < scenarios; ++s) {
    std::vector<int> rec_vars;
    for (int v = shared_vars + 1; v <= total; ++v) rec_vars.push_back(v);
    std::shuffle(rec_vars.begin(), rec_vars.end(), rng);
    ElementSet active;
    for (int i = 0; i < kappa_add; ++i)
      active.insert(sat::lit(rec_vars[static_cast<std::size_t>(i)], false));
    actives.push_back(std::move(active));
  }

  // Base-only dummies sized to the budget keep the symmetric reading exact.
  std::vector<int> dummies;
  for (int d = 0; d < kappa_add; ++d) dummies.push_back(total + 1 + d);

  std::vector<std::array<int, 3>> cls;
  for (int i = 0; i < clauses; ++i) cls.push_back(random_clause(rng, vars));
  Instance base = sat::make(cls, total + kappa_add);

  RobustInstance ri;
  ri.base = std::move(base);
  ri.ground = GroundKind::Literals;
  for (int v = shared_vars + 1; v <= total + kappa_add; ++v)
    ri.pool.insert(sat::lit(v, false));
  for (int d : dummies) ri.base_active.insert(sat::lit(d, false));

  ExplicitScenarios ex;
  for (auto& a : actives) ex.active_sets.push_back(std::move(a));
  Stage stage;
  stage.scenarios = std::move(ex);
  stage.measure = measure;
  stage.kappa = measure == Measure::AdditionsOnly ? kappa_add : 2 * kappa_add;
  ri.stages.push_back(std::move(stage));
  return ri;
}

std::vector<Instance> all_3sat_formulas(int nvars, int max_clauses) {
  // Ordered literal triples over the declared variables; formulas are clause
  // subsets in which every declared variable occurs.
  std::vector<std::array<int, 3>> pool;
  std::vector<int> lits;
  for (int v = 1; v <= nvars; ++v) {
    lits.push_back(v);
    lits.push_back(-v);
  }
  for (int a : lits)
    for (int b : lits)
      for (int c : lits) pool.push_back({a, b, c});

  std::vector<Instance> out;
  std::vector<std::size_t> pick;
  auto all_vars_occur = [&]() {
    std::set<int> seen;
    for (auto i : pick)
      for (int l : pool[i]) seen.insert(std::abs(l));
    return static_cast<int>(seen.size()) == nvars;
  };
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      if (all_vars_occur()) {
        std::vector<std::array<int, 3>> cls;
        for (auto i : pick) cls.push_back(pool[i]);
        out.push_back(sat::make(cls, nvars));
      }
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(i);
      rec(i + 1, left - 1);
      pick.pop_back();
    }
  };
  for (int k = nvars > 0 ? 1 : 0; k <= max_clauses; ++k) rec(0, k);
  if (nvars == 0) out.push_back(sat::make({}, 0));
  return out;
}

std::vector<std::vector<std::pair<int, int>>> all_edge_sets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.push_back({i, j});
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if ((mask >> b) & 1) edges.push_back(slots[b]);
    out.push_back(std::move(edges));
  }
  return out;
}

}  // namespace hdrr::gen
