#include <algorithm>

#include "catalog_detail.hpp"

namespace hdrr::catalog_detail {

SatView sat_view(const Instance& src) {
  SatView v;
  v.origin_vars = sat::origin_variables(src);
  v.origin_clauses = sat::origin_clauses(src);
  v.live_vars = sat::variables(src);
  v.live_clauses = sat::clauses(src);
  v.live_var_set.insert(v.live_vars.begin(), v.live_vars.end());
  v.live_clause_set.insert(v.live_clauses.begin(), v.live_clauses.end());
  return v;
}

std::size_t SatView::clause_ordinal(const ElementId& c) const {
  auto it = std::lower_bound(origin_clauses.begin(), origin_clauses.end(), c);
  if (it == origin_clauses.end() || !(*it == c))
    throw UnknownElement("clause outside originating set: " + c.str());
  return static_cast<std::size_t>(it - origin_clauses.begin());
}

bool SatView::clause_mentions_var(const ElementId& c, const ElementId& v) {
  ElementId neg = sat::negate(v);
  for (const auto& l : c.parts())
    if (l == v || l == neg) return true;
  return false;
}

namespace {

// Clause-gadget vertex for one clause position.
ElementId clause_vertex(const ElementId& c, std::int64_t pos) {
  return ElementId::gadget(c, pos);
}

ElementId lit_vertex(const ElementId& l) { return ElementId::gadget(l, 0); }

// Shared builder for the two Garey–Johnson style entries: clause triangles
// wired to the literal vertices (vertex cover) or to the negated literal
// vertices (independent set).
Reduced build_sat_triangle_graph(const Instance& src, Problem target, bool negate_links,
                                 std::int64_t per_clause_size) {
  SatView view = sat_view(src);
  Reduced out;
  out.target.problem = target;

  for (const auto& v : view.live_vars) {
    ElementId lp = v;
    ElementId ln = sat::negate(v);
    ElementId vp = lit_vertex(lp);
    ElementId vn = lit_vertex(ln);
    out.target.universe.insert(vp);
    out.target.universe.insert(vn);
    out.table.gadgets[lp] = {vp};
    out.table.gadgets[ln] = {vn};
    ElementId e = graph::edge(vp, vn);
    out.target.relations["edge"].insert(e);
    out.table.gadgets[sat::neg_element(v)] = {e};
  }
  for (const auto& c : view.live_clauses) {
    auto lits = sat::clause_lits(c);
    ElementSet cg;
    std::array<ElementId, 3> w{clause_vertex(c, 0), clause_vertex(c, 1),
                               clause_vertex(c, 2)};
    for (const auto& x : w) {
      out.target.universe.insert(x);
      cg.insert(x);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        ElementId e = graph::edge(w[i], w[j]);
        out.target.relations["edge"].insert(e);
        cg.insert(e);
      }
    out.table.gadgets[c] = cg;
    // Connector edges belong to the literal-clause incidences.
    for (int p = 0; p < 3; ++p) {
      ElementId inc = sat::incidence_element(lits[p], c);
      ElementId anchor = lit_vertex(negate_links ? sat::negate(lits[p]) : lits[p]);
      ElementId e = graph::edge(anchor, w[p]);
      out.target.relations["edge"].insert(e);
      out.table.gadgets[inc].insert(e);
    }
  }
  std::int64_t k = static_cast<std::int64_t>(view.live_vars.size()) +
                   per_clause_size * static_cast<std::int64_t>(view.live_clauses.size());
  out.target.params["k"] = k;
  return out;
}

}  // namespace

CatalogEntry make_3sat_vc() {
  CatalogEntry e;
  e.name = "3sat-vc";
  e.source = Problem::ThreeSat;
  e.target = Problem::VertexCover;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Vertices;
  e.lift_capable = true;
  SizeFunction f;
  f.per_variable = {1, 0, 0, 0, 0};
  f.per_clause = {2, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    return build_sat_triangle_graph(src, Problem::VertexCover, false, 2);
  };
  return e;
}

CatalogEntry make_3sat_is() {
  CatalogEntry e;
  e.name = "3sat-is";
  e.source = Problem::ThreeSat;
  e.target = Problem::IndependentSet;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Vertices;
  e.lift_capable = true;
  SizeFunction f;
  f.per_variable = {1, 0, 0, 0, 0};
  f.per_clause = {1, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    return build_sat_triangle_graph(src, Problem::IndependentSet, true, 1);
  };
  return e;
}

CatalogEntry make_vc_ds() {
  CatalogEntry e;
  e.name = "vc-ds";
  e.source = Problem::VertexCover;
  e.target = Problem::DominatingSet;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Vertices;
  SizeFunction f;
  f.per_variable = {1, 0, 0, 0, 0};
  f.per_clause = {2, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::DominatingSet;
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      out.target.universe.insert(v2);
      out.table.gadgets[v] = {v2};
    }
    std::int64_t isolated = static_cast<std::int64_t>(src.universe.size());
    ElementSet touched;
    for (const auto& edge : src.relation("edge")) {
      const auto& p = edge.parts();
      ElementId u2 = img.at(p[0]);
      ElementId v2 = img.at(p.size() > 1 ? p[1] : p[0]);
      ElementId mid = ElementId::gadget(edge, 0);
      out.target.universe.insert(mid);
      ElementSet g{mid};
      for (const ElementId& link :
           {graph::edge(u2, v2), graph::edge(u2, mid), graph::edge(mid, v2)}) {
        out.target.relations["edge"].insert(link);
        g.insert(link);
      }
      out.table.gadgets[edge] = g;
      touched.insert(p[0]);
      if (p.size() > 1) touched.insert(p[1]);
    }
    isolated -= static_cast<std::int64_t>(touched.size());
    // Isolated vertices dominate only themselves, so they join any dominating
    // set; the threshold absorbs them.
    out.target.params["k"] = src.int_param("k") + isolated;
    return out;
  };
  return e;
}

CatalogEntry make_vc_hs() {
  CatalogEntry e;
  e.name = "vc-hs";
  e.source = Problem::VertexCover;
  e.target = Problem::HittingSet;
  e.strength = Strength::Strong;
  e.ground = GroundKind::GroundSet;
  SizeFunction f;
  f.per_variable = {1, 0, 0, 0, 0};
  f.per_clause = {2, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::HittingSet;
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      out.target.universe.insert(v2);
      out.table.gadgets[v] = {v2};
    }
    for (const auto& edge : src.relation("edge")) {
      const auto& p = edge.parts();
      ElementId sub = p.size() > 1 ? ElementId::set({img.at(p[0]), img.at(p[1])})
                                   : ElementId::set({img.at(p[0])});
      out.target.relations["subset"].insert(sub);
      out.table.gadgets[edge] = {sub};
    }
    out.target.params["k"] = src.int_param("k");
    return out;
  };
  return e;
}

CatalogEntry make_vc_fvs() {
  CatalogEntry e;
  e.name = "vc-fvs";
  e.source = Problem::VertexCover;
  e.target = Problem::FeedbackVertexSet;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Vertices;
  SizeFunction f;
  f.per_variable = {1, 0, 0, 0, 0};
  f.per_clause = {2, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::FeedbackVertexSet;
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      out.target.universe.insert(v2);
      out.table.gadgets[v] = {v2};
    }
    for (const auto& edge : src.relation("edge")) {
      const auto& p = edge.parts();
      if (p.size() < 2) continue;
      ElementId a1 = graph::arc(img.at(p[0]), img.at(p[1]));
      ElementId a2 = graph::arc(img.at(p[1]), img.at(p[0]));
      out.target.relations["arc"].insert(a1);
      out.target.relations["arc"].insert(a2);
      out.table.gadgets[edge] = {a1, a2};
    }
    out.target.params["k"] = src.int_param("k");
    return out;
  };
  return e;
}

CatalogEntry make_is_clique() {
  CatalogEntry e;
  e.name = "is-clique";
  e.source = Problem::IndependentSet;
  e.target = Problem::Clique;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Vertices;
  SizeFunction f;
  f.per_variable = {1, 0, 0, 0, 0};
  f.per_clause = {1, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::Clique;
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      out.target.universe.insert(v2);
      out.table.gadgets[v] = {v2};
    }
    for (const auto& edge : src.relation("edge")) {
      const auto& p = edge.parts();
      if (p.size() < 2) continue;
      ElementId ne = ElementId::set({img.at(p[0]), img.at(p[1])});
      out.target.relations["nonedge"].insert(ne);
      out.table.gadgets[edge] = {ne};
    }
    out.target.params["k"] = src.int_param("k");
    return out;
  };
  return e;
}

CatalogEntry make_3sat_3col() {
  CatalogEntry e;
  e.name = "3sat-3col";
  e.source = Problem::ThreeSat;
  e.target = Problem::KColoring;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Vertices;
  SizeFunction f;
  f.constant = {3, 0, 0, 0, 0};
  f.per_variable = {2, 0, 0, 0, 0};
  f.per_clause = {6, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    SatView view = sat_view(src);
    Reduced out;
    out.target.problem = Problem::KColoring;
    ElementId B = ElementId::constant(0, "B");
    ElementId F = ElementId::constant(1, "F");
    ElementId T = ElementId::constant(2, "T");
    out.table.constant = {B, F, T, graph::edge(B, F), graph::edge(B, T),
                          graph::edge(F, T)};
    for (const auto& v : ElementVec{B, F, T}) out.target.universe.insert(v);
    for (const auto& el : out.table.constant)
      if (el.kind() == ElementKind::Set) out.target.relations["edge"].insert(el);

    for (const auto& v : view.live_vars) {
      for (const auto& l : {v, sat::negate(v)}) {
        ElementId lv = lit_vertex(l);
        out.target.universe.insert(lv);
        ElementId eb = graph::edge(lv, B);
        out.target.relations["edge"].insert(eb);
        out.table.gadgets[l] = {lv, eb};
      }
      ElementId pair_edge = graph::edge(lit_vertex(v), lit_vertex(sat::negate(v)));
      out.target.relations["edge"].insert(pair_edge);
      out.table.gadgets[sat::neg_element(v)] = {pair_edge};
    }
    for (const auto& c : view.live_clauses) {
      auto lits = sat::clause_lits(c);
      std::array<ElementId, 6> w;
      ElementSet cg;
      for (int i = 0; i < 6; ++i) {
        w[i] = clause_vertex(c, i);
        out.target.universe.insert(w[i]);
        cg.insert(w[i]);
      }
      // Two stacked or-triangles; w[5] is the output wired to B and F.
      const std::vector<std::pair<int, int>> wires{{0, 1}, {0, 2}, {1, 2}, {2, 4},
                                                   {3, 4}, {3, 5}, {4, 5}};
      for (auto [i, j] : wires) {
        ElementId edge = graph::edge(w[i], w[j]);
        out.target.relations["edge"].insert(edge);
        cg.insert(edge);
      }
      for (const auto& anchor : {F, B}) {
        ElementId edge = graph::edge(w[5], anchor);
        out.target.relations["edge"].insert(edge);
        cg.insert(edge);
      }
      out.table.gadgets[c] = cg;
      const std::array<int, 3> inputs{0, 1, 3};
      for (int p = 0; p < 3; ++p) {
        ElementId inc = sat::incidence_element(lits[p], c);
        ElementId edge = graph::edge(lit_vertex(lits[p]), w[inputs[p]]);
        out.target.relations["edge"].insert(edge);
        out.table.gadgets[inc].insert(edge);
      }
    }
    out.target.params["k"] = std::int64_t{3};
    return out;
  };
  return e;
}

CatalogEntry make_3col_kcol() {
  CatalogEntry e;
  e.name = "3col-kcol";
  e.source = Problem::KColoring;
  e.target = Problem::KColoring;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Vertices;
  SizeFunction f;
  f.constant = {4, 0, 0, 0, 0};
  f.per_variable = {2, 0, 0, 0, 0};
  f.per_clause = {6, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::KColoring;
    ElementId fresh = ElementId::constant(0, "vnew");
    out.table.constant = {fresh};
    out.target.universe.insert(fresh);
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      out.target.universe.insert(v2);
      ElementId attach = graph::edge(v2, fresh);
      out.target.relations["edge"].insert(attach);
      out.table.gadgets[v] = {v2, attach};
    }
    for (const auto& edge : src.relation("edge")) {
      const auto& p = edge.parts();
      if (p.size() < 2) continue;
      ElementId e2 = graph::edge(img.at(p[0]), img.at(p[1]));
      out.target.relations["edge"].insert(e2);
      out.table.gadgets[edge] = {e2};
    }
    out.target.params["k"] = src.int_param("k") + 1;
    return out;
  };
  return e;
}

CatalogEntry make_kcol_cliquecover() {
  CatalogEntry e;
  e.name = "kcol-cliquecover";
  e.source = Problem::KColoring;
  e.target = Problem::CliqueCover;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Vertices;
  SizeFunction f;
  f.constant = {4, 0, 0, 0, 0};
  f.per_variable = {2, 0, 0, 0, 0};
  f.per_clause = {6, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::CliqueCover;
    std::map<ElementId, ElementId> img;
    for (const auto& v : src.universe) {
      ElementId v2 = ElementId::gadget(v, 0);
      img[v] = v2;
      out.target.universe.insert(v2);
      out.table.gadgets[v] = {v2};
    }
    // A coloring is a partition into independent sets, i.e. a clique cover of
    // the complement; the complement is carried as the non-edge relation.
    for (const auto& edge : src.relation("edge")) {
      const auto& p = edge.parts();
      if (p.size() < 2) continue;
      ElementId ne = ElementId::set({img.at(p[0]), img.at(p[1])});
      out.target.relations["nonedge"].insert(ne);
      out.table.gadgets[edge] = {ne};
    }
    out.target.params["k"] = src.int_param("k");
    return out;
  };
  return e;
}

}  // namespace hdrr::catalog_detail
