#include "hdrr/scenario.hpp"

#include <algorithm>

namespace hdrr {

namespace {

void check_disjoint(const std::vector<const ElementSet*>& sets) {
  ElementSet seen;
  for (const auto* s : sets)
    for (const auto& e : *s)
      if (!seen.insert(e).second)
        throw std::invalid_argument("scenario component sets must be pairwise disjoint: " +
                                    e.str());
}

}  // namespace

void validate(const ScenarioSet& s) {
  if (const auto* x = std::get_if<XorDependencies>(&s)) {
    std::vector<const ElementSet*> sets{&x->fixed};
    for (const auto& [a, b] : x->pairs) {
      if (a.empty() && b.empty())
        throw std::invalid_argument("xor pair with two empty branches");
      sets.push_back(&a);
      sets.push_back(&b);
    }
    check_disjoint(sets);
  } else if (const auto* g = std::get_if<GammaSets>(&s)) {
    if (g->gamma < 0 || g->gamma > static_cast<std::int64_t>(g->groups.size()))
      throw std::invalid_argument("gamma out of range");
    std::vector<const ElementSet*> sets{&g->fixed};
    for (const auto& grp : g->groups) {
      if (grp.empty()) throw std::invalid_argument("empty gamma group");
      sets.push_back(&grp);
    }
    check_disjoint(sets);
  }
}

BigNat count_scenarios(const ScenarioSet& s) {
  validate(s);
  if (const auto* e = std::get_if<ExplicitScenarios>(&s))
    return BigNat(e->active_sets.size());
  if (const auto* x = std::get_if<XorDependencies>(&s)) {
    BigNat n(1);
    for (std::size_t i = 0; i < x->pairs.size(); ++i) n += n;
    return n;
  }
  const auto& g = std::get<GammaSets>(s);
  // sum over k <= gamma of binom(n, k), via a Pascal row
  std::size_t n = g.groups.size();
  std::vector<BigNat> row(n + 1, BigNat(0));
  row[0] = BigNat(1);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j > 0; --j) row[j] += row[j - 1];
  BigNat total(0);
  for (std::int64_t k = 0; k <= g.gamma; ++k)
    total += row[static_cast<std::size_t>(k)];
  return total;
}

void for_each_scenario(const ScenarioSet& s, const ScenarioSink& sink,
                       std::uint64_t cap) {
  validate(s);
  BigNat count = count_scenarios(s);
  if (count > BigNat(cap)) throw BudgetExceeded("scenario expansion above cap");

  if (const auto* e = std::get_if<ExplicitScenarios>(&s)) {
    for (const auto& a : e->active_sets)
      if (!sink(a)) return;
    return;
  }
  if (const auto* x = std::get_if<XorDependencies>(&s)) {
    std::size_t n = x->pairs.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      ElementSet active = x->fixed;
      for (std::size_t i = 0; i < n; ++i) {
        const ElementSet& branch = (mask >> i) & 1 ? x->pairs[i].second : x->pairs[i].first;
        active.insert(branch.begin(), branch.end());
      }
      if (!sink(active)) return;
    }
    return;
  }
  const auto& g = std::get<GammaSets>(s);
  std::size_t n = g.groups.size();
  // Subsets by size, lexicographic within a size.
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t from,
                                                           std::int64_t left) -> bool {
    if (left == 0) {
      ElementSet active = g.fixed;
      for (auto i : pick) active.insert(g.groups[i].begin(), g.groups[i].end());
      return sink(active);
    }
    for (std::size_t i = from; i + left <= n + 0u; ++i) {
      if (i >= n) break;
      pick.push_back(i);
      bool cont = rec(i + 1, left - 1);
      pick.pop_back();
      if (!cont) return false;
    }
    return true;
  };
  for (std::int64_t k = 0; k <= g.gamma; ++k)
    if (!rec(0, k)) return;
}

std::vector<ElementSet> expand(const ScenarioSet& s, std::uint64_t cap) {
  std::vector<ElementSet> out;
  for_each_scenario(
      s,
      [&](const ElementSet& a) {
        out.push_back(a);
        return true;
      },
      cap);
  return out;
}

Instance apply_scenario(const Instance& base, const ElementSet& pool,
                        const ElementSet& active) {
  for (const auto& e : active)
    if (!pool.count(e))
      throw UnknownElement("active element outside the uncertain pool: " + e.str());
  Instance cur = base;
  for (const auto& e : pool) {
    if (active.count(e)) continue;
    bool present = cur.universe.count(e) != 0;
    if (!present) {
      for (const auto& [label, rel] : cur.relations)
        if (rel.count(e)) {
          present = true;
          break;
        }
    }
    if (present) cur = remove_element(cur, e);
  }
  return cur;
}

ScenarioSet gamma_element_scenarios(const Instance& base, const ElementSet& pool,
                                    std::int64_t gamma, std::uint64_t cap) {
  for (const auto& e : pool) {
    bool present = base.universe.count(e) != 0;
    for (const auto& [label, rel] : base.relations)
      if (!present && rel.count(e)) present = true;
    if (!present) throw UnknownElement("pool element outside instance: " + e.str());
  }
  ElementVec items(pool.begin(), pool.end());
  std::size_t n = items.size();
  ExplicitScenarios out;
  std::vector<std::size_t> drop;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from,
                                                           std::int64_t left) {
    if (left == 0) {
      ElementSet active(pool.begin(), pool.end());
      for (auto i : drop) active.erase(items[i]);
      out.active_sets.push_back(std::move(active));
      if (out.active_sets.size() > cap) throw BudgetExceeded("gamma scenario cap");
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      drop.push_back(i);
      rec(i + 1, left - 1);
      drop.pop_back();
    }
  };
  std::int64_t limit = std::min<std::int64_t>(gamma, static_cast<std::int64_t>(n));
  for (std::int64_t k = 0; k <= limit; ++k) rec(0, k);
  return out;
}

}  // namespace hdrr
