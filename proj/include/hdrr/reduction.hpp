#pragma once

#include "hdrr/solver.hpp"

namespace hdrr {

// Per-instance gadget map of a universe gadget reduction: the constant
// gadget, one target-element set per source element, and removal gadgets for
// source elements absent relative to the originating instance.
struct GadgetTable {
  ElementSet constant;
  std::map<ElementId, ElementSet> gadgets;
  std::map<ElementId, ElementSet> removals;
};

struct Reduced {
  Instance target;
  GadgetTable table;
};

// Linear count expression over 3SAT statistics:
// c0 + cL*|L| + cC*|C| + cLp*|L'| + cCp*|C'|.
struct SizeExpr {
  std::int64_t c0 = 0, cL = 0, cC = 0, cLp = 0, cCp = 0;
};

struct SizeStats {
  std::int64_t lits = 0;            // |L|, literal count (2 per variable)
  std::int64_t clauses = 0;         // |C|
  std::int64_t origin_lits = 0;     // |L'|
  std::int64_t origin_clauses = 0;  // |C'|
};

// Fixed per-gadget solution contributions; the target solution size of a
// YES-instance is the sum over present and removed gadgets.
struct SizeFunction {
  SizeExpr constant;
  SizeExpr per_variable;
  SizeExpr per_clause;
  SizeExpr per_removed_variable;
  SizeExpr per_removed_clause;
};

std::int64_t eval_expr(const SizeExpr& e, const SizeStats& s);
std::int64_t evaluate_size(const SizeFunction& f, const SizeStats& s);

SizeStats stats_of(const Instance& sat_instance);

enum class Strength : std::uint8_t { Strong, Weak };

struct CatalogEntry {
  std::string name;
  Problem source = Problem::ThreeSat;
  Problem target = Problem::ThreeSat;
  Strength strength = Strength::Strong;
  GroundKind ground = GroundKind::Vertices;
  std::optional<SizeFunction> size;
  bool lift_capable = false;
  std::function<Reduced(const Instance&)> build;
};

Reduced apply_reduction(const CatalogEntry& entry, const Instance& src);
std::int64_t evaluate_size(const CatalogEntry& entry, const SizeStats& s);

// Universe and every relation element of the instance.
ElementSet all_elements(const Instance& inst);

// True iff constant, gadget images and removal images exactly partition the
// target's elements.
bool check_preimage_uniqueness(const GadgetTable& table, const Instance& target);

// True iff reducing the shrunk source equals editing the reduced target:
// remove r's gadget and the gadgets of every relation element containing r,
// then add the removal gadgets. Exact element-set equality.
bool check_modularity(const CatalogEntry& entry, const Instance& src,
                      const ElementId& r);

// Gadget-wise composition; valid when f.target == g.source.
CatalogEntry compose(const CatalogEntry& f, const CatalogEntry& g);

struct PoolNotGadgetAligned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lifts an HDRR-3SAT instance through a catalog reduction: base instance is
// the reduction of the source base, scenario sets are mapped branch-by-branch
// onto gadget images (plus removal gadgets on the opposite branch), and
// per-stage budgets follow the solution size function.
RobustInstance lift_to_robust(const CatalogEntry& entry, const RobustInstance& src,
                              std::uint64_t scenario_cap = 1ull << 16);

}  // namespace hdrr
