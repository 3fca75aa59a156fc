#include <algorithm>

#include "catalog_detail.hpp"

namespace hdrr::catalog_detail {

namespace {

// Column layout of the subset-sum image: one digit per originating literal,
// one per originating variable, one per originating clause.
struct Columns {
  std::map<ElementId, std::size_t> index;
  std::size_t total = 0;

  BigNat value(const std::vector<std::pair<ElementId, std::uint32_t>>& digits) const {
    std::vector<std::uint32_t> v(total, 0);
    for (const auto& [el, d] : digits) v[index.at(el)] += d;
    return BigNat::from_digits_base100(v);
  }
};

Columns columns_of(const SatView& view) {
  Columns c;
  for (const auto& v : view.origin_vars) {
    c.index[v] = c.total++;
    c.index[sat::negate(v)] = c.total++;
  }
  for (const auto& v : view.origin_vars) c.index[sat::neg_element(v)] = c.total++;
  for (const auto& cl : view.origin_clauses) c.index[cl] = c.total++;
  return c;
}

}  // namespace

CatalogEntry make_3sat_subsetsum() {
  CatalogEntry e;
  e.name = "3sat-subsetsum";
  e.source = Problem::ThreeSat;
  e.target = Problem::SubsetSum;
  e.strength = Strength::Weak;
  e.ground = GroundKind::Numbers;
  SizeFunction f;
  f.per_variable = {2, 0, 0, 0, 0};
  f.per_clause = {1, 0, 0, 0, 0};
  f.per_removed_variable = {1, 0, 0, 0, 0};
  f.per_removed_clause = {1, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    SatView view = sat_view(src);
    Columns cols = columns_of(view);
    Reduced out;
    out.target.problem = Problem::SubsetSum;
    ValueMap values;

    auto add_number = [&](const ElementId& id, const BigNat& v) {
      out.target.universe.insert(id);
      values[id] = v;
    };

    for (const auto& v : view.origin_vars) {
      ElementId neg = sat::negate(v);
      if (view.var_live(v)) {
        for (const auto& l : {v, neg}) {
          ElementId row = ElementId::gadget(l, 0);
          add_number(row, cols.value({{l, 1}, {sat::neg_element(v), 1}}));
          out.table.gadgets[l] = {row};
        }
        out.table.gadgets[sat::neg_element(v)];  // empty image, explicit key
      } else {
        // Removal gadget: four rows covering the variable's three columns and
        // stamping every clause column the variable used to feed.
        std::vector<std::pair<ElementId, std::uint32_t>> base{
            {v, 1}, {neg, 1}, {sat::neg_element(v), 1}};
        ElementSet rows;
        for (std::uint32_t j = 0; j < 4; ++j) {
          auto digits = base;
          for (const auto& c : view.origin_clauses)
            if (!view.clause_live(c) && SatView::clause_mentions_var(c, v))
              digits.emplace_back(c, 11 + j);
          ElementId row = ElementId::removal(v, j);
          add_number(row, cols.value(digits));
          rows.insert(row);
        }
        out.table.removals[v] = rows;
      }
    }
    for (const auto& c : view.origin_clauses) {
      if (view.clause_live(c)) {
        ElementSet rows;
        for (std::uint32_t j = 0; j < 3; ++j) {
          ElementId row = ElementId::gadget(c, j);
          add_number(row, cols.value({{c, 11 + j}}));
          rows.insert(row);
        }
        out.table.gadgets[c] = rows;
        continue;
      }
      // Directly removed clauses (no removed variable involved) get the
      // single satisfaction row; variable removals cover the rest.
      bool via_variable = false;
      for (const auto& v : view.origin_vars)
        if (!view.var_live(v) && SatView::clause_mentions_var(c, v)) via_variable = true;
      if (!via_variable) {
        ElementId row = ElementId::removal(c, 0);
        add_number(row, cols.value({{c, 14}}));
        out.table.removals[c] = {row};
      }
    }
    for (const auto& inc : src.relation("lit-clause")) {
      const auto& p = inc.parts();
      ElementId row = ElementId::gadget(inc, 0);
      add_number(row, cols.value({{p[0], 1}, {p[1], 1}}));
      out.table.gadgets[inc] = {row};
    }

    std::vector<std::pair<ElementId, std::uint32_t>> target_digits;
    for (const auto& v : view.origin_vars) {
      target_digits.emplace_back(v, 1);
      target_digits.emplace_back(sat::negate(v), 1);
      target_digits.emplace_back(sat::neg_element(v), 1);
    }
    for (const auto& c : view.origin_clauses) target_digits.emplace_back(c, 14);
    out.target.params["target"] = cols.value(target_digits);
    out.target.params["values"] = std::move(values);
    return out;
  };
  return e;
}

CatalogEntry make_subsetsum_knapsack() {
  CatalogEntry e;
  e.name = "subsetsum-knapsack";
  e.source = Problem::SubsetSum;
  e.target = Problem::Knapsack;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Objects;
  SizeFunction f;
  f.per_variable = {2, 0, 0, 0, 0};
  f.per_clause = {1, 0, 0, 0, 0};
  f.per_removed_variable = {1, 0, 0, 0, 0};
  f.per_removed_clause = {1, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::Knapsack;
    const ValueMap& values = src.values();
    ValueMap weights, prices;
    for (const auto& a : src.universe) {
      ElementId obj = ElementId::gadget(a, 0);
      out.target.universe.insert(obj);
      weights[obj] = values.at(a);
      prices[obj] = values.at(a);
      out.table.gadgets[a] = {obj};
    }
    out.target.params["weights"] = std::move(weights);
    out.target.params["prices"] = std::move(prices);
    out.target.params["capacity"] = src.big_param("target");
    out.target.params["threshold"] = src.big_param("target");
    return out;
  };
  return e;
}

CatalogEntry make_subsetsum_partition() {
  CatalogEntry e;
  e.name = "subsetsum-partition";
  e.source = Problem::SubsetSum;
  e.target = Problem::Partition;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Numbers;
  SizeFunction f;
  f.constant = {1, 0, 0, 0, 0};
  f.per_variable = {2, 0, 0, 0, 0};
  f.per_clause = {1, 0, 0, 0, 0};
  f.per_removed_variable = {1, 0, 0, 0, 0};
  f.per_removed_clause = {1, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::Partition;
    const ValueMap& values = src.values();
    const BigNat& target = src.big_param("target");
    BigNat total;
    ValueMap out_values;
    for (const auto& a : src.universe) {
      ElementId num = ElementId::gadget(a, 0);
      out.target.universe.insert(num);
      out_values[num] = values.at(a);
      total += values.at(a);
      out.table.gadgets[a] = {num};
    }
    if (target > total)
      throw std::invalid_argument("subset-sum target exceeds the total; the "
                                  "partition constant gadget needs target <= sum");
    ElementId c1 = ElementId::constant(0, "t+1");
    ElementId c2 = ElementId::constant(1, "rest");
    out.target.universe.insert(c1);
    out.target.universe.insert(c2);
    out_values[c1] = target + BigNat(1);
    out_values[c2] = total + BigNat(1) - target;
    out.table.constant = {c1, c2};
    out.target.params["values"] = std::move(out_values);
    return out;
  };
  return e;
}

CatalogEntry make_partition_scheduling() {
  CatalogEntry e;
  e.name = "partition-scheduling";
  e.source = Problem::Partition;
  e.target = Problem::TwoMachineScheduling;
  e.strength = Strength::Strong;
  e.ground = GroundKind::Jobs;
  SizeFunction f;
  f.constant = {1, 0, 0, 0, 0};
  f.per_variable = {2, 0, 0, 0, 0};
  f.per_clause = {1, 0, 0, 0, 0};
  f.per_removed_variable = {1, 0, 0, 0, 0};
  f.per_removed_clause = {1, 0, 0, 0, 0};
  e.size = f;
  e.build = [](const Instance& src) {
    Reduced out;
    out.target.problem = Problem::TwoMachineScheduling;
    const ValueMap& values = src.values();
    BigNat total;
    ValueMap durations;
    for (const auto& a : src.universe) {
      ElementId job = ElementId::gadget(a, 0);
      out.target.universe.insert(job);
      durations[job] = values.at(a);
      total += values.at(a);
      out.table.gadgets[a] = {job};
    }
    // Exact half: odd totals stay infeasible, matching partition.
    out.target.params["makespan"] = total.half();
    out.target.params["values"] = std::move(durations);
    return out;
  };
  return e;
}

}  // namespace hdrr::catalog_detail
