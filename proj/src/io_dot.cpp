#include <sstream>

#include "hdrr/io.hpp"

namespace hdrr::io {

namespace {

bool graph_family(Problem p) {
  switch (p) {
    case Problem::UstCon:
    case Problem::VertexCover:
    case Problem::DominatingSet:
    case Problem::FeedbackVertexSet:
    case Problem::IndependentSet:
    case Problem::Clique:
    case Problem::DirectedHamPath:
    case Problem::DirectedHamCycle:
    case Problem::UndirectedHamPath:
    case Problem::UndirectedHamCycle:
    case Problem::TravelingSalesman:
    case Problem::KDisjointDirectedPath:
    case Problem::KColoring:
    case Problem::CliqueCover:
      return true;
    default:
      return false;
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const Instance& inst, const GadgetTable* table) {
  if (!graph_family(inst.problem))
    throw FamilyMismatch("dot export needs a graph family instance");
  const bool directed = inst.relations.count("arc") != 0;
  const std::string label = directed ? "arc" : (inst.relations.count("nonedge") ? "nonedge" : "edge");
  const char* connector = directed ? " -> " : " -- ";

  std::map<ElementId, std::string> node_name;
  std::size_t next = 0;
  for (const auto& v : inst.universe) node_name[v] = "n" + std::to_string(next++);

  std::ostringstream os;
  os << (directed ? "digraph" : "graph") << " g {\n";

  auto emit_node = [&](std::ostream& o, const ElementId& v, const std::string& indent) {
    o << indent << node_name.at(v) << " [label=" << quote(v.str()) << "];\n";
  };
  auto emit_link = [&](std::ostream& o, const ElementId& e, const std::string& indent) {
    const auto& p = e.parts();
    if (p.size() < 2) return;
    o << indent << node_name.at(p[0]) << connector << node_name.at(p[1]) << ";\n";
  };

  if (!table) {
    for (const auto& v : inst.universe) emit_node(os, v, "  ");
    for (const auto& e : inst.relation(label)) emit_link(os, e, "  ");
    os << "}\n";
    return os.str();
  }

  std::size_t cluster = 0;
  auto emit_group = [&](const std::string& name, const ElementSet& members) {
    bool any = false;
    for (const auto& m : members)
      if (node_name.count(m) || (m.parts().size() >= 2 && inst.relation(label).count(m)))
        any = true;
    if (!any) return;
    os << "  subgraph cluster_" << cluster++ << " {\n";
    os << "    label=" << quote(name) << ";\n";
    for (const auto& m : members)
      if (node_name.count(m)) emit_node(os, m, "    ");
    for (const auto& m : members)
      if (inst.relation(label).count(m)) emit_link(os, m, "    ");
    os << "  }\n";
  };

  emit_group("const", table->constant);
  for (const auto& [src, img] : table->gadgets) emit_group(src.str(), img);
  for (const auto& [src, img] : table->removals) emit_group("rem " + src.str(), img);

  // Anything outside the table still renders, unclustered.
  ElementSet covered = table->constant;
  for (const auto& [src, img] : table->gadgets) covered.insert(img.begin(), img.end());
  for (const auto& [src, img] : table->removals) covered.insert(img.begin(), img.end());
  for (const auto& v : inst.universe)
    if (!covered.count(v)) emit_node(os, v, "  ");
  for (const auto& e : inst.relation(label))
    if (!covered.count(e)) emit_link(os, e, "  ");
  os << "}\n";
  return os.str();
}

}  // namespace hdrr::io
