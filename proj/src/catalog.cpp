#include "catalog_detail.hpp"

namespace hdrr::catalog {

const std::vector<CatalogEntry>& entries() {
  using namespace catalog_detail;
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> v;
    v.push_back(make_3sat_vc());
    v.push_back(make_vc_ds());
    v.push_back(make_vc_hs());
    v.push_back(make_vc_fvs());
    v.push_back(make_3sat_is());
    v.push_back(make_is_clique());
    v.push_back(make_3sat_subsetsum());
    v.push_back(make_subsetsum_knapsack());
    v.push_back(make_subsetsum_partition());
    v.push_back(make_partition_scheduling());
    v.push_back(make_3sat_dhp());
    v.push_back(make_dhp_dhc());
    v.push_back(make_dhp_uhp());
    v.push_back(make_dhc_uhc());
    v.push_back(make_uhc_tsp());
    v.push_back(make_3sat_2ddp());
    v.push_back(make_2ddp_kddp());
    v.push_back(make_3sat_3col());
    v.push_back(make_3col_kcol());
    v.push_back(make_kcol_cliquecover());
    return v;
  }();
  return all;
}

const CatalogEntry& entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog entry named " + name);
}

std::vector<std::string> entry_names() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

}  // namespace hdrr::catalog
