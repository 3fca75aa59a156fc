#include "hdrr/instance.hpp"

#include <array>

namespace hdrr {

namespace {
struct NameEntry {
  Problem p;
  const char* name;
};
constexpr std::array<NameEntry, 21> kNames{{
    {Problem::ThreeSat, "3sat"},
    {Problem::UstCon, "ustcon"},
    {Problem::VertexCover, "vertex-cover"},
    {Problem::DominatingSet, "dominating-set"},
    {Problem::HittingSet, "hitting-set"},
    {Problem::FeedbackVertexSet, "feedback-vertex-set"},
    {Problem::IndependentSet, "independent-set"},
    {Problem::Clique, "clique"},
    {Problem::SubsetSum, "subset-sum"},
    {Problem::Knapsack, "knapsack"},
    {Problem::Partition, "partition"},
    {Problem::TwoMachineScheduling, "two-machine-scheduling"},
    {Problem::DirectedHamPath, "directed-ham-path"},
    {Problem::DirectedHamCycle, "directed-ham-cycle"},
    {Problem::UndirectedHamPath, "undirected-ham-path"},
    {Problem::UndirectedHamCycle, "undirected-ham-cycle"},
    {Problem::TravelingSalesman, "traveling-salesman"},
    {Problem::KDisjointDirectedPath, "k-disjoint-directed-path"},
    {Problem::KColoring, "k-coloring"},
    {Problem::CliqueCover, "clique-cover"},
    {Problem::QaeThreeSat, "qae-3sat"},
}};
}  // namespace

std::string problem_name(Problem p) {
  for (const auto& e : kNames)
    if (e.p == p) return e.name;
  return "unknown";
}

std::optional<Problem> problem_from_name(const std::string& name) {
  for (const auto& e : kNames)
    if (name == e.name) return e.p;
  return std::nullopt;
}

std::string ground_kind_name(GroundKind g) {
  switch (g) {
    case GroundKind::Vertices: return "vertices";
    case GroundKind::Edges: return "edges";
    case GroundKind::Arcs: return "arcs";
    case GroundKind::Numbers: return "numbers";
    case GroundKind::Objects: return "objects";
    case GroundKind::Jobs: return "jobs";
    case GroundKind::GroundSet: return "ground-set";
    case GroundKind::Literals: return "literals";
  }
  return "unknown";
}

const ElementSet& Instance::relation(const std::string& label) const {
  static const ElementSet empty;
  auto it = relations.find(label);
  return it == relations.end() ? empty : it->second;
}

std::int64_t Instance::int_param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw std::out_of_range("missing param: " + key);
  return std::get<std::int64_t>(it->second);
}

const BigNat& Instance::big_param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw std::out_of_range("missing param: " + key);
  return std::get<BigNat>(it->second);
}

const ValueMap& Instance::values(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw std::out_of_range("missing param: " + key);
  return std::get<ValueMap>(it->second);
}

bool Instance::operator==(const Instance& o) const {
  return problem == o.problem && universe == o.universe && relations == o.relations &&
         params == o.params;
}

bool Instance::same_elements(const Instance& o) const {
  return problem == o.problem && universe == o.universe && relations == o.relations;
}

bool Solution::operator<(const Solution& s) const {
  if (elements != s.elements) return elements < s.elements;
  if (order != s.order) return order < s.order;
  return parts < s.parts;
}

}  // namespace hdrr
