#pragma once

#include "hdrr/reduction.hpp"

namespace hdrr::catalog {

// Every concrete reduction of the chain, in registry order:
// 3sat-vc, vc-ds, vc-hs, vc-fvs, 3sat-is, is-clique, 3sat-subsetsum,
// subsetsum-knapsack, subsetsum-partition, partition-scheduling, 3sat-dhp,
// dhp-dhc, dhp-uhp, dhc-uhc, uhc-tsp, 3sat-2ddp, 2ddp-kddp, 3sat-3col,
// 3col-kcol, kcol-cliquecover.
const std::vector<CatalogEntry>& entries();
const CatalogEntry& entry(const std::string& name);
std::vector<std::string> entry_names();

}  // namespace hdrr::catalog
