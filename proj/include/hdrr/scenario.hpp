#pragma once

#include <variant>

#include "hdrr/problems.hpp"

namespace hdrr {

// Explicit list of active-element sets.
struct ExplicitScenarios {
  std::vector<ElementSet> active_sets;
};

// Fixed set E' plus n pairs; every scenario takes exactly one branch per pair.
struct XorDependencies {
  ElementSet fixed;
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
};

// Fixed set E' plus n groups; every scenario activates at most gamma whole
// groups.
struct GammaSets {
  ElementSet fixed;
  std::vector<ElementSet> groups;
  std::int64_t gamma = 0;
};

using ScenarioSet = std::variant<ExplicitScenarios, XorDependencies, GammaSets>;

// Checks the encoding invariants (pairwise disjointness, nonempty branches,
// gamma bounds). Throws std::invalid_argument on violation.
void validate(const ScenarioSet& s);

BigNat count_scenarios(const ScenarioSet& s);

using ScenarioSink = std::function<bool(const ElementSet&)>;

// Deterministic stream of exactly count_scenarios(s) distinct active sets.
// xor: binary counter over pairs (pair 0 least significant, branch order
// first/second). Gamma: group subsets by size, then lexicographic.
void for_each_scenario(const ScenarioSet& s, const ScenarioSink& sink,
                       std::uint64_t cap = 1ull << 16);

std::vector<ElementSet> expand(const ScenarioSet& s, std::uint64_t cap = 1ull << 16);

// Instance with every pool element outside `active` removed (with closure);
// elements outside the pool are untouched.
Instance apply_scenario(const Instance& base, const ElementSet& pool,
                        const ElementSet& active);

// All activations deviating from the fully active pool in at most gamma
// elements, pre-expanded to an explicit encoding.
ScenarioSet gamma_element_scenarios(const Instance& base, const ElementSet& pool,
                                    std::int64_t gamma, std::uint64_t cap = 1ull << 16);

}  // namespace hdrr
