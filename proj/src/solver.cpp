#include "hdrr/solver.hpp"

#include <algorithm>

namespace hdrr {

std::string measure_name(Measure m) {
  return m == Measure::SymmetricDifference ? "symmetric" : "additions";
}

std::optional<Measure> measure_from_name(const std::string& name) {
  if (name == "symmetric") return Measure::SymmetricDifference;
  if (name == "additions") return Measure::AdditionsOnly;
  return std::nullopt;
}

std::int64_t hamming(const ElementSet& a, const ElementSet& b, Measure m) {
  std::int64_t common = 0;
  const ElementSet& small = a.size() <= b.size() ? a : b;
  const ElementSet& large = a.size() <= b.size() ? b : a;
  for (const auto& e : small)
    if (large.count(e)) ++common;
  std::int64_t additions = static_cast<std::int64_t>(b.size()) - common;
  if (m == Measure::AdditionsOnly) return additions;
  return static_cast<std::int64_t>(a.size()) + static_cast<std::int64_t>(b.size()) -
         2 * common;
}

Instance base_instance(const RobustInstance& ri) {
  return apply_scenario(ri.base, ri.pool, ri.base_active);
}

Instance scenario_instance(const RobustInstance& ri, const ElementSet& active) {
  return apply_scenario(ri.base, ri.pool, active);
}

namespace {

struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;
  void check() const {
    if (at && std::chrono::steady_clock::now() > *at)
      throw TimeoutExceeded("solve_robust timeout");
  }
};

struct StageData {
  std::vector<ElementSet> actives;
  std::vector<Instance> instances;
};

struct Searcher {
  const RobustInstance& ri;
  const RobustOptions& opts;
  Deadline deadline;
  std::vector<StageData> stages;
  // (stage, scenario, prev-footprint projected to the scenario instance,
  // |prev|) -> subtree or infeasible
  std::map<std::tuple<std::size_t, std::size_t, ElementVec, std::int64_t>,
           std::optional<WitnessNode>>
      memo;

  explicit Searcher(const RobustInstance& r, const RobustOptions& o) : ri(r), opts(o) {
    if (o.timeout)
      deadline.at = std::chrono::steady_clock::now() + *o.timeout;
    stages.resize(ri.stages.size());
    for (std::size_t i = 0; i < ri.stages.size(); ++i) {
      for_each_scenario(
          ri.stages[i].scenarios,
          [&](const ElementSet& a) {
            stages[i].actives.push_back(a);
            stages[i].instances.push_back(scenario_instance(ri, a));
            return true;
          },
          opts.scenario_cap);
    }
  }

  ElementVec project(const ElementSet& prev, const Instance& inst) const {
    ElementVec key;
    for (const auto& e : prev) {
      bool present = inst.universe.count(e) != 0;
      if (!present)
        for (const auto& [label, rel] : inst.relations)
          if (rel.count(e)) {
            present = true;
            break;
          }
      if (present) key.push_back(e);
    }
    return key;
  }

  std::optional<std::vector<WitnessNode>> try_stages(std::size_t si,
                                                     const ElementSet& prev) {
    deadline.check();
    if (si == ri.stages.size()) return std::vector<WitnessNode>{};
    const Stage& stage = ri.stages[si];
    std::vector<WitnessNode> nodes;
    for (std::size_t idx = 0; idx < stages[si].instances.size(); ++idx) {
      const Instance& inst = stages[si].instances[idx];
      auto key = std::make_tuple(si, idx, project(prev, inst),
                                 static_cast<std::int64_t>(prev.size()));
      auto hit = memo.find(key);
      std::optional<WitnessNode> node;
      if (hit != memo.end()) {
        node = hit->second;
      } else {
        for_each_solution(
            inst,
            [&](const Solution& s) {
              deadline.check();
              if (hamming(prev, s.elements, stage.measure) > stage.kappa) return true;
              auto kids = try_stages(si + 1, s.elements);
              if (!kids) return true;
              node = WitnessNode{s, std::move(*kids)};
              return false;
            },
            opts.budget);
        memo.emplace(std::move(key), node);
      }
      if (!node) return std::nullopt;  // unrecoverable scenario: fail fast
      nodes.push_back(std::move(*node));
    }
    return nodes;
  }
};

}  // namespace

RobustResult solve_robust(const RobustInstance& ri, const RobustOptions& opts) {
  Searcher searcher(ri, opts);
  Instance sigma0 = base_instance(ri);
  RobustResult result;
  for_each_solution(
      sigma0,
      [&](const Solution& s0) {
        searcher.deadline.check();
        auto kids = searcher.try_stages(0, s0.elements);
        if (!kids) return true;
        result.decision = true;
        result.witness = Witness{s0, std::move(*kids)};
        return false;
      },
      opts.budget);
  return result;
}

namespace {

bool check_node(const RobustInstance& ri, std::size_t si, const ElementSet& prev_fp,
                const std::vector<WitnessNode>& nodes, const RobustOptions& opts) {
  if (si == ri.stages.size()) {
    if (!nodes.empty()) throw ShapeMismatch("witness deeper than stage count");
    return true;
  }
  auto actives = expand(ri.stages[si].scenarios, opts.scenario_cap);
  if (nodes.size() != actives.size())
    throw ShapeMismatch("witness branching does not match scenario count");
  for (std::size_t idx = 0; idx < actives.size(); ++idx) {
    Instance inst = scenario_instance(ri, actives[idx]);
    if (!verify(inst, nodes[idx].solution)) return false;
    if (hamming(prev_fp, nodes[idx].solution.elements, ri.stages[si].measure) >
        ri.stages[si].kappa)
      return false;
    if (!check_node(ri, si + 1, nodes[idx].solution.elements, nodes[idx].children, opts))
      return false;
  }
  return true;
}

}  // namespace

bool verify_witness(const RobustInstance& ri, const Witness& w) {
  RobustOptions opts;
  Instance sigma0 = base_instance(ri);
  if (!verify(sigma0, w.base_solution)) return false;
  return check_node(ri, 0, w.base_solution.elements, w.children, opts);
}

}  // namespace hdrr
