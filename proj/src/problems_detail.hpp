#pragma once

#include "hdrr/problems.hpp"

namespace hdrr::detail {

// Shared step counter for enumeration budgets.
struct Gauge {
  std::uint64_t remaining;
  explicit Gauge(const Budget& b) : remaining(b.max_steps) {}
  void tick(std::uint64_t n = 1) {
    if (remaining < n) throw BudgetExceeded("enumeration budget exceeded");
    remaining -= n;
  }
};

bool verify_sat(const Instance&, const Solution&);
bool verify_ustcon(const Instance&, const Solution&);
bool verify_subset_family(const Instance&, const Solution&);  // VC/DS/HS/FVS/IS/Clique
bool verify_coloring(const Instance&, const Solution&);       // KColoring/CliqueCover
bool verify_ham(const Instance&, const Solution&);            // DHP/DHC/UHP/UHC/TSP
bool verify_kddp(const Instance&, const Solution&);
bool verify_number(const Instance&, const Solution&);  // SS/KS/Partition/Scheduling

void enumerate_sat(const Instance&, const SolutionSink&, Gauge&);
void enumerate_ustcon(const Instance&, const SolutionSink&, Gauge&);
void enumerate_subset_family(const Instance&, const SolutionSink&, Gauge&);
void enumerate_coloring(const Instance&, const SolutionSink&, Gauge&);
void enumerate_ham(const Instance&, const SolutionSink&, Gauge&);
void enumerate_kddp(const Instance&, const SolutionSink&, Gauge&);
void enumerate_number(const Instance&, const SolutionSink&, Gauge&);

}  // namespace hdrr::detail
