#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphoid/distribution.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

// A construction order: universe positions, each exactly once.
using Order = std::vector<std::size_t>;

// Throws InvalidOrder unless order is a permutation of the universe.
void validate_order(const Universe& u, std::span<const std::size_t> order);

// The universe listing order 0, 1, ..., n-1.
Order canonical_order(const Universe& u);

// A directed acyclic graph whose every link points forward in its stored
// construction order.
class Dag {
 public:
  Dag() = default;
  // parents[i] are the parents of universe position i. Throws InvalidOrder or
  // InvalidDag when some parent does not precede its child in the order.
  Dag(Universe universe, Order order, std::vector<VarSet> parents);

  // No links.
  static Dag empty(Universe universe, Order order);

  const Universe& universe() const { return universe_; }
  const Order& order() const { return order_; }
  std::size_t size() const { return parents_.size(); }
  VarSet parents(std::size_t node) const { return parents_.at(node); }
  VarSet children(std::size_t node) const { return children_.at(node); }
  VarSet neighbours(std::size_t node) const { return parents_.at(node) | children_.at(node); }

  // (parent, child) pairs sorted by child then parent.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

  // Nodes reachable by a directed path of length at least one.
  VarSet descendants(std::size_t node) const;
  VarSet ancestors(VarSet nodes) const;

  // A copy with the link from -> to added. Throws InvalidDag if it would not
  // point forward in the construction order.
  Dag with_link(std::size_t from, std::size_t to) const;

  bool operator==(const Dag&) const = default;

 private:
  Universe universe_;
  Order order_;
  std::vector<VarSet> parents_;
  std::vector<VarSet> children_;
};

// One link of a trail, always stored parent -> child regardless of the
// direction the trail traverses it.
struct Link {
  std::size_t parent;
  std::size_t child;
  bool operator==(const Link&) const = default;
};

// A simple path in the underlying undirected graph.
struct Trail {
  std::vector<std::size_t> nodes;
  std::vector<Link> links;
  bool operator==(const Trail&) const = default;
};

struct SeparationQuery {
  VarSet x;
  VarSet y;
  VarSet z;
};

// The least parent set (by cardinality, then lexicographically) among the
// predecessors of order[position] that makes it independent of the remaining
// predecessors. position is 0-based.
VarSet minimal_parents(const CiOracle& oracle, std::span<const std::size_t> order, std::size_t position);

// The minimal network of the oracle under the given construction order.
Dag build_network(const CiOracle& oracle, std::span<const std::size_t> order);
Dag build_network(const CiOracle& oracle);

// True iff every trail between X and Y is blocked by Z. Runs a reachability
// sweep over (node, arrival direction) states. Throws InvalidSets.
bool d_separated(const Dag& dag, const SeparationQuery& query);

// Maximal connected components of the underlying graph, ordered by their
// least member.
std::vector<VarSet> connected_components(const Dag& dag);

// A shortest trail between a and b (neighbours visited in universe order), or
// nullopt when they are disconnected.
std::optional<Trail> find_trail(const Dag& dag, std::size_t a, std::size_t b);

struct MinimalityViolation {
  std::size_t node;
  // Non-empty subset of the node's parents that the node is independent of
  // given the other parents.
  VarSet removable;
  bool operator==(const MinimalityViolation&) const = default;
};

// Every (u, Z1) with Z1 a non-empty subset of u's parents such that
// ({u}, Z1 | parents(u) \ Z1) holds. Sorted by node, then Z1.
std::vector<MinimalityViolation> audit_minimality(const Dag& dag, const CiOracle& oracle);

// Largest |P(u_1..u_n) - prod_i P(u_i | parents(u_i))| over all entries of
// the table. dag must be over the table's universe.
double factorization_residual(const JointTable& table, const Dag& dag);

}  // namespace graphoid
