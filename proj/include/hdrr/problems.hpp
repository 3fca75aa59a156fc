#pragma once

#include <array>
#include <functional>
#include <optional>

#include "hdrr/instance.hpp"

namespace hdrr {

struct Budget {
  std::uint64_t max_steps = 1ull << 22;
};

// Return false from the sink to stop the stream early.
using SolutionSink = std::function<bool(const Solution&)>;

// Feasibility predicate of the instance's problem family. Pure. Throws
// MalformedCandidate when the candidate references ids absent from the
// instance or misses required structure.
bool verify(const Instance& instance, const Solution& candidate);

// Yields every feasible solution exactly once, in a deterministic order
// derived from ElementId ordering. Throws BudgetExceeded when the search
// space outgrows the budget.
void for_each_solution(const Instance& instance, const SolutionSink& sink,
                       Budget budget = {});

std::vector<Solution> enumerate_solutions(const Instance& instance,
                                          std::optional<std::size_t> cap = {},
                                          Budget budget = {});

std::optional<Solution> brute_solve(const Instance& instance, Budget budget = {});

// Element removal with relation closure: deletes r (both literals when r is
// one side of a 3SAT variable) and every relation element containing a
// deleted element, transitively.
Instance remove_element(const Instance& instance, const ElementId& r);

bool is_removable(const Instance& instance, const ElementId& r);

GroundKind distance_ground_kind(Problem p);

// 3SAT instances: universe of literal atoms paired by variable, clause
// tuples, derived literal-clause incidences, and originating (L', C') lists
// threaded through removals for the weakly modular reductions.
namespace sat {

ElementId lit(std::int64_t var, bool negated);
bool is_lit(const ElementId& e);
std::int64_t var_of(const ElementId& l);
bool is_negated(const ElementId& l);
ElementId negate(const ElementId& l);
ElementId positive(const ElementId& l);

ElementId neg_element(const ElementId& pos_lit);
ElementId clause_element(const std::array<ElementId, 3>& lits);
ElementId incidence_element(const ElementId& l, const ElementId& clause);

// Clauses use DIMACS conventions: literal v > 0 is variable v, -v its
// negation (variables 1-based). Universe is exactly the occurring variables
// unless explicit_vars is given.
Instance make(const std::vector<std::array<int, 3>>& clauses,
              std::optional<std::int64_t> explicit_vars = {});
Instance make_from_elements(const ElementVec& positive_lits,
                            const std::vector<std::array<ElementId, 3>>& clauses);

// Positive literal of every variable, sorted.
ElementVec variables(const Instance& sat_instance);
ElementVec clauses(const Instance& sat_instance);
// Originating structure (defaults to the instance itself on fresh builds).
ElementVec origin_variables(const Instance& sat_instance);
ElementVec origin_clauses(const Instance& sat_instance);
std::array<ElementId, 3> clause_lits(const ElementId& clause);
bool clause_satisfied(const ElementId& clause, const ElementSet& chosen);

}  // namespace sat

namespace graph {

ElementId vertex(std::int64_t i);
ElementId edge(const ElementId& u, const ElementId& v);
ElementId arc(const ElementId& u, const ElementId& v);
ElementId mark(const ElementId& v);  // unary relation element

Instance make(Problem p, const ElementVec& vertices,
              const std::vector<std::pair<ElementId, ElementId>>& links);

// Sorted adjacency over the given binary relation label.
std::map<ElementId, ElementVec> adjacency(const Instance& g, const std::string& label,
                                          bool directed);
std::optional<ElementId> marked_vertex(const Instance& g, const std::string& label);

}  // namespace graph

}  // namespace hdrr
