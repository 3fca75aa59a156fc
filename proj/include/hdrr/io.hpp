#pragma once

#include <json.hpp>

#include "hdrr/qae.hpp"
#include "hdrr/reduction.hpp"

namespace hdrr::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const ElementId& e);
ElementId element_from_json(const json& j);

json to_json(const Instance& inst);
Instance instance_from_json(const json& j);

json to_json(const ScenarioSet& s);
ScenarioSet scenario_set_from_json(const json& j);

json to_json(const RobustInstance& ri);
RobustInstance robust_from_json(const json& j);

json to_json(const Solution& s);
Solution solution_from_json(const json& j);

json to_json(const Witness& w);
Witness witness_from_json(const json& j);

json to_json(const GadgetTable& t);
GadgetTable table_from_json(const json& j);

json to_json(const QaeFormula& f);
QaeFormula qae_from_json(const json& j);

// Self-describing document wrapper; unknown schema versions are rejected.
inline constexpr int kSchemaVersion = 1;
json document(const std::string& type, json payload);
std::pair<std::string, json> open_document(const json& doc);

// DIMACS CNF with clause width at most three (narrower clauses are padded by
// literal repetition).
Instance parse_dimacs_cnf(const std::string& text);

// QDIMACS with one quantifier line per nonempty block and deterministic
// variable numbering in block order.
std::string emit_qdimacs(const QaeFormula& f);

// Deterministic DOT rendering of graph-family instances; when a gadget table
// is given, nodes and edges group into one cluster per gadget.
std::string emit_dot(const Instance& inst, const GadgetTable* table = nullptr);

}  // namespace hdrr::io

namespace hdrr::gen {

Instance random_3sat(std::uint64_t seed, int nvars, int nclauses);
QaeFormula random_qae(std::uint64_t seed, const std::vector<int>& block_sizes,
                      int nclauses);
Instance random_graph(std::uint64_t seed, Problem family, int n, int edge_percent);

// Paper-shaped HDRR-3SAT instance: shared variables active everywhere,
// fluctuating variables per explicit scenario, base-only dummies, and the
// stage budget set to the largest per-scenario switch.
RobustInstance random_hdrr_3sat(std::uint64_t seed, int shared_vars, int recovery_vars,
                                int scenarios, int clauses, Measure measure);

// Exhaustive corpora for the acceptance sweeps.
std::vector<Instance> all_3sat_formulas(int nvars, int max_clauses);
std::vector<std::vector<std::pair<int, int>>> all_edge_sets(int n);

}  // namespace hdrr::gen
