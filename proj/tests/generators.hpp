// Seeded generators for property tests.
#pragma once

#include <algorithm>
#include <string>

#include "graphoid/bayesnet.hpp"
#include "graphoid/rng.hpp"

namespace gen {

// A dag over v1..vn with a random construction order and at most max_edges
// links, each pointing forward in that order.
inline graphoid::Dag random_dag(std::size_t n, std::size_t max_edges, std::uint64_t seed) {
  using graphoid::VarSet;
  graphoid::Rng rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  const auto u = graphoid::Universe::named(names);
  graphoid::Order order = graphoid::canonical_order(u);
  rng.shuffle(order);

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(order[a], order[b]);
  }
  rng.shuffle(slots);
  const std::size_t edges = rng.below(std::min(max_edges, slots.size()) + 1);
  std::vector<VarSet> parents(n);
  for (std::size_t k = 0; k < edges; ++k) parents[slots[k].second] |= VarSet::single(slots[k].first);
  return graphoid::Dag(u, order, parents);
}

// Three pairwise disjoint sets with x and y non-empty.
struct Query {
  graphoid::VarSet x, y, z;
};

inline Query random_query(std::size_t n, graphoid::Rng& rng) {
  using graphoid::VarSet;
  while (true) {
    Query q;
    for (std::size_t i = 0; i < n; ++i) {
      switch (rng.below(4)) {
        case 0: q.x |= VarSet::single(i); break;
        case 1: q.y |= VarSet::single(i); break;
        case 2: q.z |= VarSet::single(i); break;
        default: break;
      }
    }
    if (!q.x.empty() && !q.y.empty()) return q;
  }
}

}  // namespace gen
