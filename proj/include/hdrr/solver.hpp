#pragma once

#include <chrono>

#include "hdrr/scenario.hpp"

namespace hdrr {

enum class Measure : std::uint8_t { SymmetricDifference, AdditionsOnly };

std::string measure_name(Measure m);
std::optional<Measure> measure_from_name(const std::string& name);

// Hamming distance per measure: symmetric |A ^ B|, additions-only |B \ A|.
std::int64_t hamming(const ElementSet& a, const ElementSet& b, Measure m);

struct Stage {
  ScenarioSet scenarios;
  std::int64_t kappa = 0;
  Measure measure = Measure::SymmetricDifference;
};

// base holds the full element pool; the base scenario activates base_active
// within the pool. Stage scenario sets reference pool elements only.
struct RobustInstance {
  Instance base;
  ElementSet pool;
  ElementSet base_active;
  std::vector<Stage> stages;
  GroundKind ground = GroundKind::Vertices;
};

struct WitnessNode {
  Solution solution;
  std::vector<WitnessNode> children;  // indexed by next stage's scenario order
};

struct Witness {
  Solution base_solution;
  std::vector<WitnessNode> children;
};

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RobustOptions {
  Budget budget = {};
  std::uint64_t scenario_cap = 1ull << 16;
  std::optional<std::chrono::milliseconds> timeout;
};

struct RobustResult {
  bool decision = false;
  std::optional<Witness> witness;
};

// The base-scenario instance sigma_0.
Instance base_instance(const RobustInstance& ri);
// The instance of one recovery scenario (an active subset of the pool).
Instance scenario_instance(const RobustInstance& ri, const ElementSet& active);

// Exact decision by quantifier expansion: exists base solution, for all
// stage-1 scenarios exists a recovery within kappa of its predecessor,
// recursing through later stages. Deterministic; returns a witness tree on
// YES.
RobustResult solve_robust(const RobustInstance& ri, const RobustOptions& opts = {});

// Independent witness re-check: verifies every node on its scenario instance
// and every consecutive distance bound. Throws ShapeMismatch when the tree
// shape does not match the instance.
bool verify_witness(const RobustInstance& ri, const Witness& w);

}  // namespace hdrr
