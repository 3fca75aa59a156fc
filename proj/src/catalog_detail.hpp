#pragma once

#include "hdrr/catalog.hpp"

namespace hdrr::catalog_detail {

// Source-side view of a 3SAT instance split into live and removed elements
// relative to its originating structure.
struct SatView {
  ElementVec origin_vars;
  ElementVec origin_clauses;
  ElementVec live_vars;
  ElementVec live_clauses;
  ElementSet live_var_set;
  ElementSet live_clause_set;

  bool var_live(const ElementId& v) const { return live_var_set.count(v) != 0; }
  bool clause_live(const ElementId& c) const { return live_clause_set.count(c) != 0; }
  std::size_t clause_ordinal(const ElementId& c) const;  // position in origin order
  // Origin clause contains a literal of variable v.
  static bool clause_mentions_var(const ElementId& c, const ElementId& v);
};

SatView sat_view(const Instance& src);

CatalogEntry make_3sat_vc();
CatalogEntry make_vc_ds();
CatalogEntry make_vc_hs();
CatalogEntry make_vc_fvs();
CatalogEntry make_3sat_is();
CatalogEntry make_is_clique();
CatalogEntry make_3sat_subsetsum();
CatalogEntry make_subsetsum_knapsack();
CatalogEntry make_subsetsum_partition();
CatalogEntry make_partition_scheduling();
CatalogEntry make_3sat_dhp();
CatalogEntry make_dhp_dhc();
CatalogEntry make_dhp_uhp();
CatalogEntry make_dhc_uhc();
CatalogEntry make_uhc_tsp();
CatalogEntry make_3sat_2ddp();
CatalogEntry make_2ddp_kddp();
CatalogEntry make_3sat_3col();
CatalogEntry make_3col_kcol();
CatalogEntry make_kcol_cliquecover();

}  // namespace hdrr::catalog_detail
