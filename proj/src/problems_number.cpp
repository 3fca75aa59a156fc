#include <algorithm>

#include "problems_detail.hpp"

namespace hdrr::detail {

namespace {

BigNat sum_of(const ValueMap& values, const ElementSet& chosen) {
  BigNat total;
  for (const auto& e : chosen) {
    auto it = values.find(e);
    if (it == values.end()) throw MalformedCandidate("no value for " + e.str());
    total += it->second;
  }
  return total;
}

BigNat total_of(const ValueMap& values) {
  BigNat total;
  for (const auto& [e, v] : values) total += v;
  return total;
}

}  // namespace

bool verify_number(const Instance& inst, const Solution& cand) {
  for (const auto& e : cand.elements)
    if (!inst.universe.count(e))
      throw MalformedCandidate("candidate element outside universe: " + e.str());
  switch (inst.problem) {
    case Problem::SubsetSum:
      return sum_of(inst.values(), cand.elements) == inst.big_param("target");
    case Problem::Knapsack:
      return sum_of(inst.values("weights"), cand.elements) <= inst.big_param("capacity") &&
             sum_of(inst.values("prices"), cand.elements) >= inst.big_param("threshold");
    case Problem::Partition: {
      // Canonical side holds the smallest number.
      if (!inst.universe.empty() && !cand.elements.count(*inst.universe.begin()))
        return false;
      BigNat side = sum_of(inst.values(), cand.elements);
      BigNat total = total_of(inst.values());
      return side + side == total;
    }
    case Problem::TwoMachineScheduling: {
      if (!inst.universe.empty() && !cand.elements.count(*inst.universe.begin()))
        return false;
      BigNat side = sum_of(inst.values(), cand.elements);
      BigNat total = total_of(inst.values());
      BigNat other = total - side;
      const BigNat& makespan = inst.big_param("makespan");
      return side <= makespan && other <= makespan;
    }
    default:
      throw UnsupportedFamily("verify_number: " + problem_name(inst.problem));
  }
}

void enumerate_number(const Instance& inst, const SolutionSink& sink, Gauge& gauge) {
  ElementVec items(inst.universe.begin(), inst.universe.end());
  const bool canonical_first =
      inst.problem == Problem::Partition || inst.problem == Problem::TwoMachineScheduling;

  // Monotone prefix-sum pruning for subset sum; generic leaf checks otherwise.
  const ValueMap* prune_values = nullptr;
  const BigNat* prune_limit = nullptr;
  BigNat limit_storage;
  if (inst.problem == Problem::SubsetSum) {
    prune_values = &inst.values();
    limit_storage = inst.big_param("target");
    prune_limit = &limit_storage;
  } else if (inst.problem == Problem::Knapsack) {
    prune_values = &inst.values("weights");
    limit_storage = inst.big_param("capacity");
    prune_limit = &limit_storage;
  }

  ElementSet chosen;
  BigNat running;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    gauge.tick();
    if (i == items.size()) {
      Solution s;
      s.elements = chosen;
      if (!verify_number(inst, s)) return true;
      return sink(s);
    }
    // Exclude branch first: subsets stream in indicator order.
    if (!rec(i + 1)) return false;
    BigNat value;
    if (prune_values) {
      auto it = prune_values->find(items[i]);
      value = it == prune_values->end() ? BigNat(0) : it->second;
      BigNat next = running + value;
      if (next > *prune_limit) return true;
      running = next;
    }
    chosen.insert(items[i]);
    bool cont = rec(i + 1);
    chosen.erase(items[i]);
    if (prune_values) running -= value;
    return cont;
  };

  if (canonical_first && !items.empty()) {
    chosen.insert(items[0]);
    rec(1);
    return;
  }
  rec(0);
}

}  // namespace hdrr::detail
