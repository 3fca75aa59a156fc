#pragma once

#include "hdrr/solver.hpp"

namespace hdrr {

// The Hamiltonian-cycle to robust s-t-connectivity construction: vertex
// paths opened at s/t, one easy base scenario over the inter-path cycle
// edges, and one recovery scenario over the quadruplicated original edges.
RobustInstance reduce_uhc_to_robust_ustcon(const Instance& uhc_graph,
                                           Measure measure = Measure::AdditionsOnly);

}  // namespace hdrr
