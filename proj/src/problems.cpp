#include <algorithm>

#include "problems_detail.hpp"

namespace hdrr {

namespace {

bool is_subset_family(Problem p) {
  return p == Problem::VertexCover || p == Problem::DominatingSet ||
         p == Problem::HittingSet || p == Problem::FeedbackVertexSet ||
         p == Problem::IndependentSet || p == Problem::Clique;
}

bool is_ham_family(Problem p) {
  return p == Problem::DirectedHamPath || p == Problem::DirectedHamCycle ||
         p == Problem::UndirectedHamPath || p == Problem::UndirectedHamCycle ||
         p == Problem::TravelingSalesman;
}

bool is_number_family(Problem p) {
  return p == Problem::SubsetSum || p == Problem::Knapsack ||
         p == Problem::Partition || p == Problem::TwoMachineScheduling;
}

bool is_coloring_family(Problem p) {
  return p == Problem::KColoring || p == Problem::CliqueCover;
}

}  // namespace

bool verify(const Instance& inst, const Solution& cand) {
  Problem p = inst.problem;
  if (p == Problem::ThreeSat) return detail::verify_sat(inst, cand);
  if (p == Problem::UstCon) return detail::verify_ustcon(inst, cand);
  if (is_subset_family(p)) return detail::verify_subset_family(inst, cand);
  if (is_coloring_family(p)) return detail::verify_coloring(inst, cand);
  if (is_ham_family(p)) return detail::verify_ham(inst, cand);
  if (p == Problem::KDisjointDirectedPath) return detail::verify_kddp(inst, cand);
  if (is_number_family(p)) return detail::verify_number(inst, cand);
  throw UnsupportedFamily("verify: " + problem_name(p));
}

void for_each_solution(const Instance& inst, const SolutionSink& sink, Budget budget) {
  detail::Gauge gauge(budget);
  Problem p = inst.problem;
  if (p == Problem::ThreeSat) return detail::enumerate_sat(inst, sink, gauge);
  if (p == Problem::UstCon) return detail::enumerate_ustcon(inst, sink, gauge);
  if (is_subset_family(p)) return detail::enumerate_subset_family(inst, sink, gauge);
  if (is_coloring_family(p)) return detail::enumerate_coloring(inst, sink, gauge);
  if (is_ham_family(p)) return detail::enumerate_ham(inst, sink, gauge);
  if (p == Problem::KDisjointDirectedPath) return detail::enumerate_kddp(inst, sink, gauge);
  if (is_number_family(p)) return detail::enumerate_number(inst, sink, gauge);
  throw UnsupportedFamily("enumerate: " + problem_name(p));
}

std::vector<Solution> enumerate_solutions(const Instance& inst,
                                          std::optional<std::size_t> cap,
                                          Budget budget) {
  std::vector<Solution> out;
  for_each_solution(
      inst,
      [&](const Solution& s) {
        out.push_back(s);
        return !cap || out.size() < *cap;
      },
      budget);
  return out;
}

std::optional<Solution> brute_solve(const Instance& inst, Budget budget) {
  std::optional<Solution> first;
  for_each_solution(
      inst,
      [&](const Solution& s) {
        first = s;
        return false;
      },
      budget);
  return first;
}

GroundKind distance_ground_kind(Problem p) {
  switch (p) {
    case Problem::ThreeSat:
    case Problem::QaeThreeSat:
      return GroundKind::Literals;
    case Problem::UstCon:
    case Problem::UndirectedHamPath:
    case Problem::UndirectedHamCycle:
    case Problem::TravelingSalesman:
      return GroundKind::Edges;
    case Problem::VertexCover:
    case Problem::DominatingSet:
    case Problem::FeedbackVertexSet:
    case Problem::IndependentSet:
    case Problem::Clique:
    case Problem::KColoring:
    case Problem::CliqueCover:
      return GroundKind::Vertices;
    case Problem::HittingSet:
      return GroundKind::GroundSet;
    case Problem::SubsetSum:
    case Problem::Partition:
      return GroundKind::Numbers;
    case Problem::Knapsack:
      return GroundKind::Objects;
    case Problem::TwoMachineScheduling:
      return GroundKind::Jobs;
    case Problem::DirectedHamPath:
    case Problem::DirectedHamCycle:
    case Problem::KDisjointDirectedPath:
      return GroundKind::Arcs;
  }
  throw UnsupportedFamily("distance_ground_kind");
}

namespace {

// Universe elements that the schema pins: terminal marks and marked vertices.
bool schema_mandatory(const Instance& inst, const ElementId& r) {
  for (const char* label : {"s", "t", "src", "dst"}) {
    for (const auto& m : inst.relation(label)) {
      if (m == r) return true;
      if (m.contains(r)) return true;
    }
  }
  return false;
}

}  // namespace

bool is_removable(const Instance& inst, const ElementId& r) {
  if (schema_mandatory(inst, r)) return false;
  if (inst.universe.count(r)) return true;
  for (const auto& [label, rel] : inst.relations)
    if (rel.count(r)) return true;
  return false;
}

Instance remove_element(const Instance& inst, const ElementId& r) {
  bool known = inst.universe.count(r) != 0;
  for (const auto& [label, rel] : inst.relations)
    if (!known && rel.count(r)) known = true;
  if (!known) throw UnknownElement("remove_element: " + r.str());
  if (schema_mandatory(inst, r))
    throw NotRemovable("schema-mandatory element: " + r.str());

  ElementSet removed{r};
  if (inst.problem == Problem::ThreeSat && sat::is_lit(r))
    removed.insert(sat::negate(r));  // variables leave as whole literal pairs

  Instance out = inst;
  for (const auto& e : removed) out.universe.erase(e);
  for (auto& [label, rel] : out.relations) {
    for (auto it = rel.begin(); it != rel.end();) {
      bool dead = false;
      for (const auto& dead_el : removed)
        if (it->contains(dead_el)) {
          dead = true;
          break;
        }
      it = dead ? rel.erase(it) : ++it;
    }
  }
  // Drop value entries of removed ids.
  for (auto& [key, param] : out.params) {
    if (auto* vm = std::get_if<ValueMap>(&param)) {
      for (const auto& e : removed) vm->erase(e);
    }
  }
  return out;
}

}  // namespace hdrr
