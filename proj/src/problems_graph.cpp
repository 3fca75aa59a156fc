#include <algorithm>
#include <map>

#include "problems_detail.hpp"

namespace hdrr {
namespace graph {

ElementId vertex(std::int64_t i) { return ElementId::atom("v", i); }

ElementId edge(const ElementId& u, const ElementId& v) {
  return ElementId::set({u, v});
}

ElementId arc(const ElementId& u, const ElementId& v) {
  return ElementId::tuple({u, v});
}

ElementId mark(const ElementId& v) { return ElementId::tuple({v}); }

Instance make(Problem p, const ElementVec& vertices,
              const std::vector<std::pair<ElementId, ElementId>>& links) {
  Instance inst;
  inst.problem = p;
  for (const auto& v : vertices) inst.universe.insert(v);
  const bool directed = p == Problem::FeedbackVertexSet ||
                        p == Problem::DirectedHamPath ||
                        p == Problem::DirectedHamCycle ||
                        p == Problem::KDisjointDirectedPath;
  const bool complemented = p == Problem::Clique || p == Problem::CliqueCover;
  std::string label = directed ? "arc" : (complemented ? "nonedge" : "edge");
  for (const auto& [u, v] : links) {
    if (!inst.universe.count(u) || !inst.universe.count(v))
      throw UnknownElement("link endpoint outside universe");
    inst.relations[label].insert(directed ? arc(u, v) : edge(u, v));
  }
  return inst;
}

std::map<ElementId, ElementVec> adjacency(const Instance& g, const std::string& label,
                                          bool directed) {
  std::map<ElementId, ElementVec> adj;
  for (const auto& v : g.universe) adj[v];
  for (const auto& e : g.relation(label)) {
    const auto& p = e.parts();
    if (p.size() == 1) {
      continue;  // self-link in set form; ignored for adjacency
    }
    adj[p[0]].push_back(p[1]);
    if (!directed) adj[p[1]].push_back(p[0]);
  }
  for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
  return adj;
}

std::optional<ElementId> marked_vertex(const Instance& g, const std::string& label) {
  const auto& rel = g.relation(label);
  if (rel.empty()) return std::nullopt;
  return rel.begin()->parts().front();
}

}  // namespace graph

namespace detail {

namespace {

ElementVec sorted_universe(const Instance& inst) {
  return ElementVec(inst.universe.begin(), inst.universe.end());
}

// Walks the footprint edge set from s; true iff it is a simple s-t path
// using every footprint edge.
bool edge_set_is_path(const Instance& inst, const ElementSet& edges,
                      const ElementId& s, const ElementId& t) {
  if (s == t) return edges.empty();
  std::map<ElementId, ElementVec> adj;
  for (const auto& e : edges) {
    const auto& p = e.parts();
    if (p.size() != 2) return false;
    adj[p[0]].push_back(p[1]);
    adj[p[1]].push_back(p[0]);
  }
  for (auto& [v, ns] : adj) {
    std::sort(ns.begin(), ns.end());
    if (ns.size() > 2) return false;
  }
  if (adj[s].size() != 1 || adj[t].size() != 1) return false;
  ElementSet visited{s};
  ElementId prev = s;
  ElementId cur = adj[s][0];
  std::size_t used = 1;
  while (cur != t) {
    if (visited.count(cur)) return false;
    visited.insert(cur);
    const auto& ns = adj[cur];
    if (ns.size() != 2) return false;
    ElementId next = ns[0] == prev ? ns[1] : ns[0];
    prev = cur;
    cur = next;
    ++used;
  }
  return used == edges.size();
}

}  // namespace

bool verify_ustcon(const Instance& inst, const Solution& cand) {
  for (const auto& e : cand.elements)
    if (!inst.relation("edge").count(e))
      throw MalformedCandidate("footprint edge not in instance: " + e.str());
  auto s = graph::marked_vertex(inst, "s");
  auto t = graph::marked_vertex(inst, "t");
  if (!s || !t) throw MalformedCandidate("ustcon instance lacks s/t marks");
  return edge_set_is_path(inst, cand.elements, *s, *t);
}

void enumerate_ustcon(const Instance& inst, const SolutionSink& sink, Gauge& gauge) {
  auto s = graph::marked_vertex(inst, "s");
  auto t = graph::marked_vertex(inst, "t");
  if (!s || !t) throw MalformedCandidate("ustcon instance lacks s/t marks");
  if (*s == *t) {
    Solution sol;
    sol.order = ElementVec{*s};
    sink(sol);
    return;
  }
  auto adj = graph::adjacency(inst, "edge", false);
  ElementVec path{*s};
  ElementSet on_path{*s};
  ElementSet edges;
  std::function<bool(const ElementId&)> rec = [&](const ElementId& v) -> bool {
    gauge.tick();
    if (v == *t) {
      Solution sol;
      sol.elements = edges;
      sol.order = path;
      return sink(sol);
    }
    for (const auto& w : adj[v]) {
      if (on_path.count(w)) continue;
      ElementId e = graph::edge(v, w);
      path.push_back(w);
      on_path.insert(w);
      edges.insert(e);
      bool cont = rec(w);
      edges.erase(e);
      on_path.erase(w);
      path.pop_back();
      if (!cont) return false;
    }
    return true;
  };
  rec(*s);
}

namespace {

bool subset_feasible(const Instance& inst, const ElementSet& chosen) {
  switch (inst.problem) {
    case Problem::VertexCover: {
      if (static_cast<std::int64_t>(chosen.size()) > inst.int_param("k")) return false;
      for (const auto& e : inst.relation("edge")) {
        const auto& p = e.parts();
        if (!chosen.count(p[0]) && !(p.size() > 1 && chosen.count(p[1]))) return false;
      }
      return true;
    }
    case Problem::DominatingSet: {
      if (static_cast<std::int64_t>(chosen.size()) > inst.int_param("k")) return false;
      ElementSet dominated = chosen;
      for (const auto& e : inst.relation("edge")) {
        const auto& p = e.parts();
        if (p.size() < 2) continue;
        if (chosen.count(p[0])) dominated.insert(p[1]);
        if (chosen.count(p[1])) dominated.insert(p[0]);
      }
      for (const auto& v : inst.universe)
        if (!dominated.count(v)) return false;
      return true;
    }
    case Problem::HittingSet: {
      if (static_cast<std::int64_t>(chosen.size()) > inst.int_param("k")) return false;
      for (const auto& sub : inst.relation("subset")) {
        bool hit = false;
        for (const auto& m : sub.parts())
          if (chosen.count(m)) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
      return true;
    }
    case Problem::FeedbackVertexSet: {
      if (static_cast<std::int64_t>(chosen.size()) > inst.int_param("k")) return false;
      // Remaining digraph must be acyclic.
      std::map<ElementId, ElementVec> out;
      for (const auto& a : inst.relation("arc")) {
        const auto& p = a.parts();
        if (chosen.count(p[0]) || chosen.count(p[1])) continue;
        out[p[0]].push_back(p[1]);
      }
      std::map<ElementId, int> state;
      std::function<bool(const ElementId&)> has_cycle = [&](const ElementId& v) {
        state[v] = 1;
        for (const auto& w : out[v]) {
          if (state[w] == 1) return true;
          if (state[w] == 0 && has_cycle(w)) return true;
        }
        state[v] = 2;
        return false;
      };
      for (const auto& v : inst.universe)
        if (!chosen.count(v) && state[v] == 0 && has_cycle(v)) return false;
      return true;
    }
    case Problem::IndependentSet: {
      if (static_cast<std::int64_t>(chosen.size()) != inst.int_param("k")) return false;
      for (const auto& e : inst.relation("edge")) {
        const auto& p = e.parts();
        if (p.size() > 1 && chosen.count(p[0]) && chosen.count(p[1])) return false;
      }
      return true;
    }
    case Problem::Clique: {
      if (static_cast<std::int64_t>(chosen.size()) != inst.int_param("k")) return false;
      for (const auto& e : inst.relation("nonedge")) {
        const auto& p = e.parts();
        if (p.size() > 1 && chosen.count(p[0]) && chosen.count(p[1])) return false;
        if (p.size() == 1 && chosen.count(p[0])) return false;  // self non-edge
      }
      return true;
    }
    default:
      throw UnsupportedFamily("subset_feasible: " + problem_name(inst.problem));
  }
}

}  // namespace

bool verify_subset_family(const Instance& inst, const Solution& cand) {
  for (const auto& e : cand.elements)
    if (!inst.universe.count(e))
      throw MalformedCandidate("candidate element outside universe: " + e.str());
  return subset_feasible(inst, cand.elements);
}

void enumerate_subset_family(const Instance& inst, const SolutionSink& sink,
                             Gauge& gauge) {
  ElementVec items = sorted_universe(inst);
  const std::int64_t k = inst.int_param("k");
  const bool exact = inst.problem == Problem::IndependentSet ||
                     inst.problem == Problem::Clique;
  ElementSet chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    gauge.tick();
    std::int64_t size = static_cast<std::int64_t>(chosen.size());
    if (size > k) return true;
    if (exact && size + static_cast<std::int64_t>(items.size() - i) < k) return true;
    if (i == items.size()) {
      if (subset_feasible(inst, chosen)) {
        Solution s;
        s.elements = chosen;
        return sink(s);
      }
      return true;
    }
    if (!rec(i + 1)) return false;
    chosen.insert(items[i]);
    bool cont = rec(i + 1);
    chosen.erase(items[i]);
    return cont;
  };
  rec(0);
}

bool verify_coloring(const Instance& inst, const Solution& cand) {
  if (!cand.parts) throw MalformedCandidate("coloring candidate needs classes");
  const std::int64_t k = inst.int_param("k");
  if (static_cast<std::int64_t>(cand.parts->size()) > k) return false;
  ElementSet seen;
  for (const auto& cls : *cand.parts) {
    for (const auto& v : cls) {
      if (!inst.universe.count(v))
        throw MalformedCandidate("class member outside universe: " + v.str());
      if (!seen.insert(v).second) return false;
    }
  }
  if (seen != inst.universe) return false;
  const std::string label =
      inst.problem == Problem::CliqueCover ? "nonedge" : "edge";
  for (const auto& e : inst.relation(label)) {
    const auto& p = e.parts();
    if (p.size() < 2) continue;
    for (const auto& cls : *cand.parts)
      if (cls.count(p[0]) && cls.count(p[1])) return false;
  }
  return cand.elements == inst.universe;
}

void enumerate_coloring(const Instance& inst, const SolutionSink& sink, Gauge& gauge) {
  ElementVec verts = sorted_universe(inst);
  const std::int64_t k = inst.int_param("k");
  const std::string label =
      inst.problem == Problem::CliqueCover ? "nonedge" : "edge";
  const auto& conflicts = inst.relation(label);
  std::vector<int> color(verts.size(), -1);
  std::map<ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;
  // Precompute earlier-indexed neighbors.
  std::vector<std::vector<std::size_t>> before(verts.size());
  for (const auto& e : conflicts) {
    const auto& p = e.parts();
    if (p.size() < 2) continue;
    auto a = pos.find(p[0]);
    auto b = pos.find(p[1]);
    if (a == pos.end() || b == pos.end()) continue;
    std::size_t i = a->second, j = b->second;
    before[std::max(i, j)].push_back(std::min(i, j));
  }

  std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) -> bool {
    gauge.tick();
    if (i == verts.size()) {
      std::vector<ElementSet> classes(used);
      for (std::size_t j = 0; j < verts.size(); ++j) classes[color[j]].insert(verts[j]);
      Solution s;
      s.elements = inst.universe;
      s.parts = std::move(classes);
      return sink(s);
    }
    // Colors appear in first-use order, which canonicalizes partitions.
    int limit = std::min<std::int64_t>(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (auto j : before[i])
        if (color[j] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[i] = c;
      bool cont = rec(i + 1, std::max(used, c + 1));
      color[i] = -1;
      if (!cont) return false;
    }
    return true;
  };
  rec(0, 0);
}

namespace {

struct HamShape {
  bool directed;
  bool cycle;
  std::string label;
};

HamShape ham_shape(Problem p) {
  switch (p) {
    case Problem::DirectedHamPath: return {true, false, "arc"};
    case Problem::DirectedHamCycle: return {true, true, "arc"};
    case Problem::UndirectedHamPath: return {false, false, "edge"};
    case Problem::UndirectedHamCycle: return {false, true, "edge"};
    case Problem::TravelingSalesman: return {false, true, "edge"};
    default: throw UnsupportedFamily("ham_shape");
  }
}

ElementId link_of(const HamShape& sh, const ElementId& u, const ElementId& v) {
  return sh.directed ? graph::arc(u, v) : graph::edge(u, v);
}

bool tour_weight_ok(const Instance& inst, const ElementSet& edges) {
  if (inst.problem != Problem::TravelingSalesman) return true;
  BigNat total;
  const auto& weights = inst.values("weights");
  for (const auto& e : edges) {
    auto it = weights.find(e);
    total += (it == weights.end() ? BigNat(1) : it->second);
  }
  return total <= inst.big_param("budget");
}

}  // namespace

bool verify_ham(const Instance& inst, const Solution& cand) {
  HamShape sh = ham_shape(inst.problem);
  const auto& rel = inst.relation(sh.label);
  for (const auto& e : cand.elements)
    if (!rel.count(e))
      throw MalformedCandidate("footprint link not in instance: " + e.str());
  std::size_t n = inst.universe.size();
  if (n == 0) return false;
  if (sh.cycle && n < (sh.directed ? 2u : 3u)) return false;
  if (cand.elements.size() != (sh.cycle ? n : n - 1)) return false;

  std::map<ElementId, ElementVec> out;
  std::map<ElementId, int> indeg;
  for (const auto& e : cand.elements) {
    const auto& p = e.parts();
    if (p.size() != 2) return false;
    out[p[0]].push_back(p[1]);
    indeg[p[1]]++;
    if (!sh.directed) {
      out[p[1]].push_back(p[0]);
      indeg[p[0]]++;
    }
  }
  const std::size_t deg_limit = sh.directed ? 1 : 2;
  for (const auto& [v, ns] : out)
    if (ns.size() > deg_limit) return false;

  auto s = graph::marked_vertex(inst, "s");
  auto t = graph::marked_vertex(inst, "t");

  ElementId start;
  if (sh.cycle) {
    start = *inst.universe.begin();
  } else if (s) {
    start = *s;
  } else if (sh.directed) {
    std::optional<ElementId> found;
    for (const auto& v : inst.universe)
      if (indeg.find(v) == indeg.end() || indeg[v] == 0) {
        if (found) return false;
        found = v;
      }
    if (!found) return false;
    start = *found;
  } else {
    std::optional<ElementId> found;
    for (const auto& v : inst.universe)
      if (out[v].size() == 1) {
        found = v;
        break;
      }
    if (!found) return n == 1;  // single vertex, empty footprint
    start = *found;
  }

  // Walk the footprint; every vertex must be visited exactly once.
  ElementSet visited{start};
  ElementId prev = start;
  ElementId cur = start;
  std::size_t steps = sh.cycle ? n : n - 1;
  for (std::size_t step = 0; step < steps; ++step) {
    std::optional<ElementId> next;
    if (!sh.directed && sh.cycle && step == 0) {
      if (out[cur].empty()) return false;
      next = out[cur][0];
    } else {
      for (const auto& w : out[cur]) {
        if (!sh.directed && w == prev) continue;
        if (next) return false;
        next = w;
      }
    }
    if (!next) return false;
    prev = cur;
    cur = *next;
    bool last = step + 1 == steps;
    if (sh.cycle && last) {
      if (!(cur == start)) return false;
    } else if (!visited.insert(cur).second) {
      return false;
    }
  }
  if (visited.size() != n) return false;
  if (!sh.cycle && t && !(cur == *t)) return false;
  if (!sh.cycle && s && n == 1 && !(start == *s)) return false;
  return tour_weight_ok(inst, cand.elements);
}

void enumerate_ham(const Instance& inst, const SolutionSink& sink, Gauge& gauge) {
  HamShape sh = ham_shape(inst.problem);
  ElementVec verts = sorted_universe(inst);
  std::size_t n = verts.size();
  if (n == 0) return;
  auto adj = graph::adjacency(inst, sh.label, sh.directed);
  auto s = graph::marked_vertex(inst, "s");
  auto t = graph::marked_vertex(inst, "t");

  ElementVec path;
  ElementSet on_path;
  ElementSet links;

  std::function<bool()> emit = [&]() {
    Solution sol;
    sol.elements = links;
    sol.order = path;
    if (inst.problem == Problem::TravelingSalesman && !tour_weight_ok(inst, links))
      return true;
    return sink(sol);
  };

  std::function<bool(const ElementId&)> rec = [&](const ElementId& cur) -> bool {
    gauge.tick();
    if (path.size() == n) {
      if (!sh.cycle) {
        if (t && !(cur == *t)) return true;
        if (!sh.directed && !s && n > 1 && path.front() > path.back())
          return true;  // canonical direction
        return emit();
      }
      if (!sh.directed && n < 3) return true;
      ElementId closing = link_of(sh, cur, path.front());
      if (!inst.relation(sh.label).count(closing)) return true;
      if (!sh.directed && path[1] > path.back()) return true;  // reflection canonical
      links.insert(closing);
      bool cont = emit();
      links.erase(closing);
      return cont;
    }
    for (const auto& w : adj[cur]) {
      if (on_path.count(w)) continue;
      ElementId link = link_of(sh, cur, w);
      path.push_back(w);
      on_path.insert(w);
      links.insert(link);
      bool cont = rec(w);
      links.erase(link);
      on_path.erase(w);
      path.pop_back();
      if (!cont) return false;
    }
    return true;
  };

  auto run_from = [&](const ElementId& v) -> bool {
    path = {v};
    on_path = {v};
    links.clear();
    return rec(v);
  };

  if (sh.cycle) {
    run_from(verts.front());  // cycles canonicalized by minimal start
    return;
  }
  if (s) {
    run_from(*s);
    return;
  }
  for (const auto& v : verts)
    if (!run_from(v)) return;
}

bool verify_kddp(const Instance& inst, const Solution& cand) {
  const auto& arcs = inst.relation("arc");
  for (const auto& e : cand.elements)
    if (!arcs.count(e))
      throw MalformedCandidate("footprint arc not in instance: " + e.str());
  std::int64_t k = inst.int_param("k");
  // Terminal pairs in index order.
  std::map<std::int64_t, ElementId> srcs, dsts;
  for (const auto& m : inst.relation("src"))
    srcs[m.parts()[0].index()] = m.parts()[1];
  for (const auto& m : inst.relation("dst"))
    dsts[m.parts()[0].index()] = m.parts()[1];
  if (static_cast<std::int64_t>(srcs.size()) != k ||
      static_cast<std::int64_t>(dsts.size()) != k)
    throw MalformedCandidate("kddp instance lacks terminal marks");

  std::map<ElementId, ElementId> next;
  for (const auto& a : cand.elements) {
    const auto& p = a.parts();
    if (next.count(p[0])) return false;  // out-degree above 1
    next[p[0]] = p[1];
  }
  ElementSet visited;
  std::size_t used = 0;
  for (std::int64_t i = 0; i < k; ++i) {
    ElementId cur = srcs[i];
    ElementId goal = dsts[i];
    if (visited.count(cur)) return false;
    visited.insert(cur);
    while (!(cur == goal)) {
      auto it = next.find(cur);
      if (it == next.end()) return false;
      cur = it->second;
      ++used;
      if (visited.count(cur)) return false;
      visited.insert(cur);
    }
  }
  return used == cand.elements.size();
}

void enumerate_kddp(const Instance& inst, const SolutionSink& sink, Gauge& gauge) {
  std::int64_t k = inst.int_param("k");
  std::map<std::int64_t, ElementId> srcs, dsts;
  for (const auto& m : inst.relation("src"))
    srcs[m.parts()[0].index()] = m.parts()[1];
  for (const auto& m : inst.relation("dst"))
    dsts[m.parts()[0].index()] = m.parts()[1];
  if (static_cast<std::int64_t>(srcs.size()) != k ||
      static_cast<std::int64_t>(dsts.size()) != k)
    throw MalformedCandidate("kddp instance lacks terminal marks");
  auto adj = graph::adjacency(inst, "arc", true);

  ElementSet used_vertices;
  ElementSet arcs_used;
  std::vector<ElementSet> per_path(k);

  std::function<bool(std::int64_t)> start_path;
  std::function<bool(std::int64_t, const ElementId&)> walk =
      [&](std::int64_t i, const ElementId& cur) -> bool {
    gauge.tick();
    if (cur == dsts[i]) return start_path(i + 1);
    for (const auto& w : adj[cur]) {
      if (used_vertices.count(w)) continue;
      ElementId a = graph::arc(cur, w);
      used_vertices.insert(w);
      arcs_used.insert(a);
      per_path[i].insert(a);
      bool cont = walk(i, w);
      per_path[i].erase(a);
      arcs_used.erase(a);
      used_vertices.erase(w);
      if (!cont) return false;
    }
    return true;
  };
  start_path = [&](std::int64_t i) -> bool {
    if (i == k) {
      Solution s;
      s.elements = arcs_used;
      s.parts = per_path;
      return sink(s);
    }
    const ElementId& src = srcs[i];
    if (used_vertices.count(src)) return true;
    used_vertices.insert(src);
    bool cont = walk(i, src);
    used_vertices.erase(src);
    return cont;
  };
  // Terminals of distinct pairs must not collide.
  ElementSet terms;
  for (std::int64_t i = 0; i < k; ++i) {
    if (!terms.insert(srcs[i]).second) return;
    if (!terms.insert(dsts[i]).second) return;
  }
  start_path(0);
}

}  // namespace detail
}  // namespace hdrr
