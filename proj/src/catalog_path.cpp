#include <algorithm>

#include "catalog_detail.hpp"

namespace hdrr::catalog_detail {

namespace {

void add_arc(Instance& g, ElementSet& owner, const ElementId& u, const ElementId& v) {
  ElementId a = graph::arc(u, v);
  g.relations["arc"].insert(a);
  owner.insert(a);
}

void add_edge(Instance& g, ElementSet& owner, const ElementId& u, const ElementId& v) {
  ElementId e = graph::edge(u, v);
  g.relations["edge"].insert(e);
  owner.insert(e);
}

}  // namespace

CatalogEntry make_3sat_dhp() {
  CatalogEntry e;
  e.name = "3sat-dhp";
  e.source = Problem::ThreeSat;
  e.target = Problem::DirectedHamPath;
  e.strength = Strength::Weak;
  e.ground = GroundKind::Arcs;
  // Witness arcs are vertex count minus one: s, t, an endpoint pair per
  // originating variable, 4|C'| chain nodes per live variable and one vertex
  // per live clause.
  SizeFunction f;
  f.constant = {1, 0, 0, 1, 0};
  f.per_variable = {0, 0, 0, 0, 4};
  f.per_clause = {1, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    SatView view = sat_view(src);
    std::int64_t chain_len = 4 * static_cast<std::int64_t>(view.origin_clauses.size());
    Reduced out;
    Instance& g = out.target;
    g.problem = Problem::DirectedHamPath;

    ElementId s = ElementId::constant(0, "s");
    ElementId t = ElementId::constant(1, "t");
    g.universe.insert(s);
    g.universe.insert(t);
    out.table.constant.insert(s);
    out.table.constant.insert(t);
    ElementId st_mark = graph::mark(s);
    ElementId tt_mark = graph::mark(t);
    g.relations["s"].insert(st_mark);
    g.relations["t"].insert(tt_mark);
    out.table.constant.insert(st_mark);
    out.table.constant.insert(tt_mark);
    add_arc(g, out.table.constant, s, t);

    auto pair_a = [](const ElementId& v) { return ElementId::gadget(v, 0); };
    auto pair_b = [](const ElementId& v) { return ElementId::gadget(v, 1); };
    auto interior = [](const ElementId& v, std::int64_t j) {
      return ElementId::gadget(v, 2 + j);
    };

    // Skeleton: endpoint pairs survive removals; wiring between consecutive
    // originating pairs is constant.
    for (std::size_t i = 0; i < view.origin_vars.size(); ++i) {
      const ElementId& v = view.origin_vars[i];
      g.universe.insert(pair_a(v));
      g.universe.insert(pair_b(v));
      ElementVec prev;
      if (i == 0) {
        prev = {s};
      } else {
        const ElementId& u = view.origin_vars[i - 1];
        prev = {pair_a(u), pair_b(u)};
      }
      for (const auto& p : prev) {
        add_arc(g, out.table.constant, p, pair_a(v));
        add_arc(g, out.table.constant, p, pair_b(v));
      }
      if (i + 1 == view.origin_vars.size()) {
        add_arc(g, out.table.constant, pair_a(v), t);
        add_arc(g, out.table.constant, pair_b(v), t);
      }
    }

    for (const auto& v : view.origin_vars) {
      if (view.var_live(v)) {
        ElementSet& owner = out.table.gadgets[v];
        owner.insert(pair_a(v));
        owner.insert(pair_b(v));
        ElementVec chain{pair_a(v)};
        for (std::int64_t j = 0; j < chain_len; ++j) {
          ElementId n = interior(v, j);
          g.universe.insert(n);
          owner.insert(n);
          chain.push_back(n);
        }
        chain.push_back(pair_b(v));
        for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
          add_arc(g, owner, chain[j], chain[j + 1]);
          add_arc(g, owner, chain[j + 1], chain[j]);
        }
        out.table.gadgets[sat::negate(v)];
        out.table.gadgets[sat::neg_element(v)];
      } else {
        ElementSet& owner = out.table.removals[v];
        owner.insert(pair_a(v));
        owner.insert(pair_b(v));
        add_arc(g, owner, pair_a(v), pair_b(v));
        add_arc(g, owner, pair_b(v), pair_a(v));
      }
    }

    for (const auto& c : view.live_clauses) {
      ElementId w = ElementId::gadget(c, 0);
      g.universe.insert(w);
      out.table.gadgets[c] = {w};
    }
    for (const auto& inc : src.relation("lit-clause")) {
      const auto& p = inc.parts();
      const ElementId& lit = p[0];
      const ElementId& c = p[1];
      ElementId var = sat::positive(lit);
      std::int64_t j = static_cast<std::int64_t>(view.clause_ordinal(c));
      ElementId w = ElementId::gadget(c, 0);
      ElementId n1 = interior(var, 4 * j + 1);
      ElementId n2 = interior(var, 4 * j + 2);
      ElementSet& owner = out.table.gadgets[inc];
      if (!sat::is_negated(lit)) {
        add_arc(g, owner, n1, w);
        add_arc(g, owner, w, n2);
      } else {
        add_arc(g, owner, n2, w);
        add_arc(g, owner, w, n1);
      }
    }
    return out;
  };
  return e;
}

CatalogEntry make_dhp_dhc() {
  CatalogEntry e;
  e.name = "dhp-dhc";
  e.source = Problem::DirectedHamPath;
  e.target = Problem::DirectedHamCycle;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Arcs;
  SizeFunction f;
  f.constant = {2, 0, 0, 1, 0};
  f.per_variable = {0, 0, 0, 0, 4};
  f.per_clause = {1, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    auto s = graph::marked_vertex(src, "s");
    auto t = graph::marked_vertex(src, "t");
    if (!s || !t) throw FamilyMismatch("dhp-dhc expects s/t marks");
    Reduced out;
    Instance& g = out.target;
    g.problem = Problem::DirectedHamCycle;
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      g.universe.insert(v2);
      out.table.gadgets[v] = {v2};
    }
    for (const auto& a : src.relation("arc")) {
      const auto& p = a.parts();
      ElementId a2 = graph::arc(img.at(p[0]), img.at(p[1]));
      g.relations["arc"].insert(a2);
      out.table.gadgets[a] = {a2};
    }
    // The closing arc rides on the t mark, which is never removable.
    ElementId closing = graph::arc(img.at(*t), img.at(*s));
    g.relations["arc"].insert(closing);
    out.table.gadgets[graph::mark(*t)] = {closing};
    out.table.gadgets[graph::mark(*s)];
    return out;
  };
  return e;
}

namespace {

Reduced triple_vertices(const Instance& src, Problem target, bool keep_marks) {
  Reduced out;
  Instance& g = out.target;
  g.problem = target;
  auto v_in = [](const ElementId& v) { return ElementId::gadget(v, 0); };
  auto v_mid = [](const ElementId& v) { return ElementId::gadget(v, 1); };
  auto v_out = [](const ElementId& v) { return ElementId::gadget(v, 2); };
  for (const auto& v : src.universe) {
    ElementSet& owner = out.table.gadgets[v];
    for (const auto& x : {v_in(v), v_mid(v), v_out(v)}) {
      g.universe.insert(x);
      owner.insert(x);
    }
    add_edge(g, owner, v_in(v), v_mid(v));
    add_edge(g, owner, v_mid(v), v_out(v));
  }
  for (const auto& a : src.relation("arc")) {
    const auto& p = a.parts();
    ElementSet& owner = out.table.gadgets[a];
    add_edge(g, owner, v_out(p[0]), v_in(p[1]));
  }
  if (keep_marks) {
    auto s = graph::marked_vertex(src, "s");
    auto t = graph::marked_vertex(src, "t");
    if (!s || !t) throw FamilyMismatch("tripling expects s/t marks");
    ElementId sm = graph::mark(v_in(*s));
    ElementId tm = graph::mark(v_out(*t));
    g.relations["s"].insert(sm);
    g.relations["t"].insert(tm);
    out.table.gadgets[graph::mark(*s)] = {sm};
    out.table.gadgets[graph::mark(*t)] = {tm};
  }
  return out;
}

}  // namespace

CatalogEntry make_dhp_uhp() {
  CatalogEntry e;
  e.name = "dhp-uhp";
  e.source = Problem::DirectedHamPath;
  e.target = Problem::UndirectedHamPath;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Edges;
  SizeFunction f;
  f.constant = {5, 0, 0, 3, 0};
  f.per_variable = {0, 0, 0, 0, 12};
  f.per_clause = {3, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    return triple_vertices(src, Problem::UndirectedHamPath, true);
  };
  return e;
}

CatalogEntry make_dhc_uhc() {
  CatalogEntry e;
  e.name = "dhc-uhc";
  e.source = Problem::DirectedHamCycle;
  e.target = Problem::UndirectedHamCycle;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Edges;
  SizeFunction f;
  f.constant = {6, 0, 0, 3, 0};
  f.per_variable = {0, 0, 0, 0, 12};
  f.per_clause = {3, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    return triple_vertices(src, Problem::UndirectedHamCycle, false);
  };
  return e;
}

CatalogEntry make_uhc_tsp() {
  CatalogEntry e;
  e.name = "uhc-tsp";
  e.source = Problem::UndirectedHamCycle;
  e.target = Problem::TravelingSalesman;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Edges;
  SizeFunction f;
  f.constant = {6, 0, 0, 3, 0};
  f.per_variable = {0, 0, 0, 0, 12};
  f.per_clause = {3, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    Instance& g = out.target;
    g.problem = Problem::TravelingSalesman;
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      g.universe.insert(v2);
      out.table.gadgets[v] = {v2};
    }
    ValueMap weights;
    for (const auto& edge : src.relation("edge")) {
      const auto& p = edge.parts();
      if (p.size() < 2) continue;
      ElementId e2 = graph::edge(img.at(p[0]), img.at(p[1]));
      g.relations["edge"].insert(e2);
      weights[e2] = BigNat(1);
      out.table.gadgets[edge] = {e2};
    }
    g.params["weights"] = std::move(weights);
    g.params["budget"] = BigNat(src.universe.size());
    return out;
  };
  return e;
}

CatalogEntry make_3sat_2ddp() {
  CatalogEntry e;
  e.name = "3sat-2ddp";
  e.source = Problem::ThreeSat;
  e.target = Problem::KDisjointDirectedPath;
  e.strength = Strength::Weak;
  e.ground = GroundKind::Arcs;
  SizeFunction f;
  f.constant = {2, 0, 0, 0, 0};
  f.per_variable = {1, 0, 0, 0, 4};
  f.per_clause = {4, 0, 0, 0, 0};
  f.per_removed_variable = {1, 0, 0, 0, 0};
  f.per_removed_clause = {2, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    SatView view = sat_view(src);
    std::int64_t chain_len = 4 * static_cast<std::int64_t>(view.origin_clauses.size());
    Reduced out;
    Instance& g = out.target;
    g.problem = Problem::KDisjointDirectedPath;
    g.params["k"] = std::int64_t{2};

    ElementId s1 = ElementId::constant(0, "s1");
    ElementId s2 = ElementId::constant(1, "s2");
    ElementId t2 = ElementId::constant(2, "t2");
    ElementId j0 = ElementId::constant(3, "j0");
    for (const auto& v : {s1, s2, t2, j0}) {
      g.universe.insert(v);
      out.table.constant.insert(v);
    }
    add_arc(g, out.table.constant, s1, j0);

    auto junction = [&](std::size_t i) {
      // Junction after the i-th originating variable; j0 sits before all.
      return i == 0 ? ElementId::constant(3, "j0")
                    : ElementId::gadget(view.origin_vars[i - 1], 0);
    };
    auto branch_node = [](const ElementId& v, bool upper, std::int64_t j) {
      return ElementId::gadget(v, 2 + 2 * j + (upper ? 0 : 1));
    };
    auto c_in = [](const ElementId& c) { return ElementId::gadget(c, 0); };
    auto c_out = [](const ElementId& c) { return ElementId::gadget(c, 1); };

    for (std::size_t i = 0; i < view.origin_vars.size(); ++i) {
      const ElementId& v = view.origin_vars[i];
      ElementId prev = junction(i);
      ElementId next = junction(i + 1);
      g.universe.insert(next);
      if (view.var_live(v)) {
        ElementSet& owner = out.table.gadgets[v];
        owner.insert(next);
        for (bool upper : {true, false}) {
          ElementVec chain{prev};
          for (std::int64_t j = 0; j < chain_len; ++j) {
            ElementId n = branch_node(v, upper, j);
            g.universe.insert(n);
            owner.insert(n);
            chain.push_back(n);
          }
          chain.push_back(next);
          for (std::size_t j = 0; j + 1 < chain.size(); ++j)
            add_arc(g, owner, chain[j], chain[j + 1]);
        }
        out.table.gadgets[sat::negate(v)];
        out.table.gadgets[sat::neg_element(v)];
      } else {
        ElementSet& owner = out.table.removals[v];
        owner.insert(next);
        add_arc(g, owner, prev, next);
      }
    }

    for (std::size_t i = 0; i < view.origin_clauses.size(); ++i) {
      const ElementId& c = view.origin_clauses[i];
      ElementId in = c_in(c);
      ElementId outv = c_out(c);
      g.universe.insert(in);
      g.universe.insert(outv);
      if (i == 0) add_arc(g, out.table.constant, s2, in);
      ElementId exit_to =
          i + 1 == view.origin_clauses.size() ? t2 : c_in(view.origin_clauses[i + 1]);
      bool live = view.clause_live(c);
      ElementSet& owner = live ? out.table.gadgets[c] : out.table.removals[c];
      owner.insert(in);
      owner.insert(outv);
      add_arc(g, owner, outv, exit_to);
      if (!live) add_arc(g, owner, in, outv);  // bypass for the clause path
    }
    if (view.origin_clauses.empty()) add_arc(g, out.table.constant, s2, t2);

    for (const auto& inc : src.relation("lit-clause")) {
      const auto& p = inc.parts();
      const ElementId& lit = p[0];
      const ElementId& c = p[1];
      ElementId var = sat::positive(lit);
      bool upper = !sat::is_negated(lit);
      std::int64_t j = static_cast<std::int64_t>(view.clause_ordinal(c));
      ElementSet& owner = out.table.gadgets[inc];
      add_arc(g, owner, c_in(c), branch_node(var, upper, 4 * j + 1));
      add_arc(g, owner, branch_node(var, upper, 4 * j + 2), c_out(c));
    }

    ElementId t1 = junction(view.origin_vars.size());
    ElementId zero = ElementId::constant(0);
    ElementId one = ElementId::constant(1);
    for (const auto& m :
         {ElementId::tuple({zero, s1}), ElementId::tuple({one, s2})})
      g.relations["src"].insert(m);
    for (const auto& m :
         {ElementId::tuple({zero, t1}), ElementId::tuple({one, t2})})
      g.relations["dst"].insert(m);
    for (const auto& m : g.relations["src"]) out.table.constant.insert(m);
    for (const auto& m : g.relations["dst"]) out.table.constant.insert(m);
    return out;
  };
  return e;
}

CatalogEntry make_2ddp_kddp() {
  CatalogEntry e;
  e.name = "2ddp-kddp";
  e.source = Problem::KDisjointDirectedPath;
  e.target = Problem::KDisjointDirectedPath;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Arcs;
  SizeFunction f;
  f.constant = {3, 0, 0, 0, 0};
  f.per_variable = {1, 0, 0, 0, 4};
  f.per_clause = {4, 0, 0, 0, 0};
  f.per_removed_variable = {1, 0, 0, 0, 0};
  f.per_removed_clause = {2, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    Instance& g = out.target;
    g.problem = Problem::KDisjointDirectedPath;
    std::int64_t k = src.int_param("k");
    g.params["k"] = k + 1;
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      g.universe.insert(v2);
      out.table.gadgets[v] = {v2};
    }
    for (const auto& a : src.relation("arc")) {
      const auto& p = a.parts();
      ElementId a2 = graph::arc(img.at(p[0]), img.at(p[1]));
      g.relations["arc"].insert(a2);
      out.table.gadgets[a] = {a2};
    }
    for (const char* label : {"src", "dst"}) {
      for (const auto& m : src.relation(label)) {
        ElementId m2 = ElementId::tuple({m.parts()[0], img.at(m.parts()[1])});
        g.relations[label].insert(m2);
        out.table.gadgets[m] = {m2};
      }
    }
    ElementId sk = ElementId::constant(10, "s-extra");
    ElementId tk = ElementId::constant(11, "t-extra");
    g.universe.insert(sk);
    g.universe.insert(tk);
    out.table.constant = {sk, tk};
    add_arc(g, out.table.constant, sk, tk);
    ElementId idx = ElementId::constant(k);
    ElementId ms = ElementId::tuple({idx, sk});
    ElementId mt = ElementId::tuple({idx, tk});
    g.relations["src"].insert(ms);
    g.relations["dst"].insert(mt);
    out.table.constant.insert(ms);
    out.table.constant.insert(mt);
    return out;
  };
  return e;
}

}  // namespace hdrr::catalog_detail
