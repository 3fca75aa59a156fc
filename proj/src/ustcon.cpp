#include "hdrr/ustcon.hpp"

namespace hdrr {

RobustInstance reduce_uhc_to_robust_ustcon(const Instance& g, Measure measure) {
  if (g.problem != Problem::UndirectedHamCycle)
    throw FamilyMismatch("construction expects an undirected hamiltonian cycle instance");
  ElementVec verts(g.universe.begin(), g.universe.end());
  std::int64_t n = static_cast<std::int64_t>(verts.size());
  if (n < 3) throw std::invalid_argument("graph too small: need at least 3 vertices");

  RobustInstance out;
  out.ground = GroundKind::Edges;
  Instance& gg = out.base;
  gg.problem = Problem::UstCon;

  auto dup = [&](const ElementId& v, std::int64_t k) { return ElementId::gadget(v, k); };
  const std::int64_t copies = n + 3;  // path of n+2 edges per original vertex

  // Vertex paths; the first vertex's path is opened in the middle at s/t.
  const std::int64_t cut = (n + 2) / 2;
  for (std::int64_t i = 0; i < n; ++i) {
    const ElementId& v = verts[static_cast<std::size_t>(i)];
    for (std::int64_t k = 0; k < copies; ++k) gg.universe.insert(dup(v, k));
    for (std::int64_t k = 0; k + 1 < copies; ++k) {
      if (i == 0 && k == cut) continue;
      gg.relations["edge"].insert(graph::edge(dup(v, k), dup(v, k + 1)));
    }
  }
  ElementId s = dup(verts[0], cut);
  ElementId t = dup(verts[0], cut + 1);
  gg.relations["s"].insert(graph::mark(s));
  gg.relations["t"].insert(graph::mark(t));

  // Base scenario: the inter-path edges close the paths into one cycle.
  ElementSet inter;
  for (std::int64_t i = 0; i < n; ++i) {
    const ElementId& a = verts[static_cast<std::size_t>(i)];
    const ElementId& b = verts[static_cast<std::size_t>((i + 1) % n)];
    ElementId e = graph::edge(dup(a, copies - 1), dup(b, 0));
    gg.relations["edge"].insert(e);
    inter.insert(e);
  }

  // Recovery scenario: each original edge is quadruplicated between the
  // endpoints of the two vertex paths.
  ElementSet quads;
  for (const auto& e : g.relation("edge")) {
    const auto& p = e.parts();
    if (p.size() < 2) continue;
    for (const auto& end_u : {dup(p[0], 0), dup(p[0], copies - 1)})
      for (const auto& end_w : {dup(p[1], 0), dup(p[1], copies - 1)}) {
        ElementId q = graph::edge(end_u, end_w);
        gg.relations["edge"].insert(q);
        quads.insert(q);
      }
  }

  out.pool = inter;
  out.pool.insert(quads.begin(), quads.end());
  out.base_active = inter;

  Stage stage;
  stage.measure = measure;
  stage.kappa = measure == Measure::AdditionsOnly ? n : 2 * n;
  stage.scenarios = ExplicitScenarios{{quads}};
  out.stages.push_back(std::move(stage));
  return out;
}

}  // namespace hdrr
