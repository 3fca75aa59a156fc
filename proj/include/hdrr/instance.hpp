#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hdrr/bignat.hpp"
#include "hdrr/element.hpp"

namespace hdrr {

enum class Problem : std::uint8_t {
  ThreeSat,
  UstCon,
  VertexCover,
  DominatingSet,
  HittingSet,
  FeedbackVertexSet,
  IndependentSet,
  Clique,
  SubsetSum,
  Knapsack,
  Partition,
  TwoMachineScheduling,
  DirectedHamPath,
  DirectedHamCycle,
  UndirectedHamPath,
  UndirectedHamCycle,
  TravelingSalesman,
  KDisjointDirectedPath,
  KColoring,
  CliqueCover,
  QaeThreeSat,
};

std::string problem_name(Problem p);
std::optional<Problem> problem_from_name(const std::string& name);

// Element kind over which solution footprints and Hamming distances live.
enum class GroundKind : std::uint8_t {
  Vertices,
  Edges,
  Arcs,
  Numbers,
  Objects,
  Jobs,
  GroundSet,
  Literals,
};

std::string ground_kind_name(GroundKind g);

using ValueMap = std::map<ElementId, BigNat>;
using Param = std::variant<std::int64_t, BigNat, ElementId, ElementVec, ValueMap>;

// A combinatorial decision problem instance: a universe of elements plus
// labeled relations over them. Immutable by convention after construction.
struct Instance {
  Problem problem = Problem::ThreeSat;
  ElementSet universe;
  std::map<std::string, ElementSet> relations;
  std::map<std::string, Param> params;

  const ElementSet& relation(const std::string& label) const;
  bool has_param(const std::string& key) const { return params.count(key) != 0; }
  std::int64_t int_param(const std::string& key) const;
  const BigNat& big_param(const std::string& key) const;
  const ValueMap& values(const std::string& key = "values") const;

  bool operator==(const Instance& o) const;
  // True if universes and relation element sets coincide (params ignored).
  bool same_elements(const Instance& o) const;
};

// Solution footprint over the problem's distance ground set, plus optional
// problem-specific structure (vertex order for paths, classes for colorings
// and machine assignments).
struct Solution {
  ElementSet elements;
  std::optional<ElementVec> order;
  std::optional<std::vector<ElementSet>> parts;

  bool operator==(const Solution& o) const {
    return elements == o.elements && order == o.order && parts == o.parts;
  }
  bool operator<(const Solution& s) const;
};

struct MalformedCandidate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRemovable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TimeoutExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FamilyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hdrr
