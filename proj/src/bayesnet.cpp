#include "graphoid/bayesnet.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "graphoid/errors.hpp"

namespace graphoid {
namespace {

// Index of the assignment restricted to s, mixed radix over s in universe order.
std::size_t sub_index(const Universe& u, std::span<const std::size_t> assignment, VarSet s) {
  std::size_t index = 0;
  for (auto i : s.members()) index = index * u.domain_size(i) + assignment[i];
  return index;
}

}  // namespace

void validate_order(const Universe& u, std::span<const std::size_t> order) {
  if (order.size() != u.size()) {
    throw InvalidOrder("order lists " + std::to_string(order.size()) + " variables, universe has " +
                       std::to_string(u.size()));
  }
  VarSet seen;
  for (auto i : order) {
    if (i >= u.size()) throw InvalidOrder("order mentions a position outside the universe");
    if (seen.contains(i)) throw InvalidOrder("order lists '" + u.name(i) + "' twice");
    seen |= VarSet::single(i);
  }
}

Order canonical_order(const Universe& u) {
  Order order(u.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return order;
}

Dag::Dag(Universe universe, Order order, std::vector<VarSet> parents)
    : universe_(std::move(universe)), order_(std::move(order)), parents_(std::move(parents)) {
  validate_order(universe_, order_);
  if (parents_.size() != universe_.size()) throw InvalidDag("parent list does not match the universe");
  children_.assign(parents_.size(), VarSet{});
  VarSet before;
  for (auto node : order_) {
    if (!parents_[node].subset_of(before)) {
      throw InvalidDag("parents of '" + universe_.name(node) + "' do not all precede it in the construction order");
    }
    for (auto p : parents_[node].members()) children_[p] |= VarSet::single(node);
    before |= VarSet::single(node);
  }
}

Dag Dag::empty(Universe universe, Order order) {
  std::vector<VarSet> parents(universe.size());
  return Dag(std::move(universe), std::move(order), std::move(parents));
}

std::vector<std::pair<std::size_t, std::size_t>> Dag::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t c = 0; c < parents_.size(); ++c) {
    for (auto p : parents_[c].members()) out.emplace_back(p, c);
  }
  return out;
}

std::size_t Dag::edge_count() const {
  std::size_t n = 0;
  for (auto p : parents_) n += p.size();
  return n;
}

VarSet Dag::descendants(std::size_t node) const {
  VarSet out;
  VarSet frontier = children_.at(node);
  while (!frontier.empty()) {
    out |= frontier;
    VarSet next;
    for (auto c : frontier.members()) next |= children_[c];
    frontier = next - out;
  }
  return out;
}

VarSet Dag::ancestors(VarSet nodes) const {
  VarSet out;
  VarSet frontier;
  for (auto n : nodes.members()) frontier |= parents_.at(n);
  while (!frontier.empty()) {
    out |= frontier;
    VarSet next;
    for (auto p : frontier.members()) next |= parents_[p];
    frontier = next - out;
  }
  return out;
}

Dag Dag::with_link(std::size_t from, std::size_t to) const {
  auto parents = parents_;
  parents.at(to) |= VarSet::single(from);
  return Dag(universe_, order_, std::move(parents));
}

VarSet minimal_parents(const CiOracle& oracle, std::span<const std::size_t> order, std::size_t position) {
  validate_order(oracle.universe(), order);
  if (position >= order.size()) throw InvalidOrder("position is outside the construction order");
  const VarSet node = VarSet::single(order[position]);
  VarSet predecessors;
  for (std::size_t k = 0; k < position; ++k) predecessors |= VarSet::single(order[k]);

  for (VarSet candidate : subsets_in_order(predecessors)) {
    if (oracle.holds(node, predecessors - candidate, candidate)) return candidate;
  }
  // Unreachable for a graphoid: the full predecessor set always qualifies.
  return predecessors;
}

Dag build_network(const CiOracle& oracle, std::span<const std::size_t> order) {
  const Universe& u = oracle.universe();
  validate_order(u, order);
  std::vector<VarSet> parents(u.size());
  for (std::size_t k = 0; k < order.size(); ++k) parents[order[k]] = minimal_parents(oracle, order, k);
  return Dag(u, Order(order.begin(), order.end()), std::move(parents));
}

Dag build_network(const CiOracle& oracle) { return build_network(oracle, canonical_order(oracle.universe())); }

bool d_separated(const Dag& dag, const SeparationQuery& q) {
  const VarSet all = dag.universe().all();
  if (!(q.x | q.y | q.z).subset_of(all)) throw InvalidSets("separation query mentions unknown variables");
  if (q.x.intersects(q.y) || q.x.intersects(q.z) || q.y.intersects(q.z)) {
    throw InvalidSets("separation query sets must be pairwise disjoint");
  }
  if (q.x.empty() || q.y.empty()) return true;

  // A head-to-head node passes the ball iff it is in Z or has a descendant in Z.
  const VarSet opens_collider = q.z | dag.ancestors(q.z);

  enum Direction : std::size_t { kFromChild = 0, kFromParent = 1 };
  std::vector<VarSet> visited(2);
  std::deque<std::pair<std::size_t, Direction>> work;
  for (auto x : q.x.members()) work.emplace_back(x, kFromChild);

  VarSet reached;
  while (!work.empty()) {
    const auto [node, dir] = work.front();
    work.pop_front();
    if (visited[dir].contains(node)) continue;
    visited[dir] |= VarSet::single(node);

    const bool observed = q.z.contains(node);
    if (!observed) reached |= VarSet::single(node);

    if (dir == kFromChild) {
      if (observed) continue;
      for (auto p : dag.parents(node).members()) work.emplace_back(p, kFromChild);
      for (auto c : dag.children(node).members()) work.emplace_back(c, kFromParent);
    } else {
      if (!observed) {
        for (auto c : dag.children(node).members()) work.emplace_back(c, kFromParent);
      }
      if (opens_collider.contains(node)) {
        for (auto p : dag.parents(node).members()) work.emplace_back(p, kFromChild);
      }
    }
  }
  return !reached.intersects(q.y);
}

std::vector<VarSet> connected_components(const Dag& dag) {
  std::vector<VarSet> out;
  VarSet assigned;
  for (std::size_t start = 0; start < dag.size(); ++start) {
    if (assigned.contains(start)) continue;
    VarSet component = VarSet::single(start);
    VarSet frontier = component;
    while (!frontier.empty()) {
      VarSet next;
      for (auto n : frontier.members()) next |= dag.neighbours(n);
      frontier = next - component;
      component |= frontier;
    }
    assigned |= component;
    out.push_back(component);
  }
  return out;
}

std::optional<Trail> find_trail(const Dag& dag, std::size_t a, std::size_t b) {
  if (a >= dag.size() || b >= dag.size()) throw UnknownVariable("trail endpoint outside the universe");
  std::vector<std::size_t> previous(dag.size(), dag.size());
  VarSet seen = VarSet::single(a);
  std::deque<std::size_t> work{a};
  while (!work.empty() && !seen.contains(b)) {
    const auto n = work.front();
    work.pop_front();
    for (auto m : (dag.neighbours(n) - seen).members()) {
      seen |= VarSet::single(m);
      previous[m] = n;
      work.push_back(m);
    }
  }
  if (!seen.contains(b)) return std::nullopt;

  Trail trail;
  for (std::size_t n = b; n != a; n = previous[n]) trail.nodes.push_back(n);
  trail.nodes.push_back(a);
  std::reverse(trail.nodes.begin(), trail.nodes.end());
  for (std::size_t k = 0; k + 1 < trail.nodes.size(); ++k) {
    const auto u = trail.nodes[k], v = trail.nodes[k + 1];
    trail.links.push_back(dag.parents(v).contains(u) ? Link{u, v} : Link{v, u});
  }
  return trail;
}

std::vector<MinimalityViolation> audit_minimality(const Dag& dag, const CiOracle& oracle) {
  if (!(dag.universe() == oracle.universe())) throw InvalidDag("network and oracle are over different universes");
  std::vector<MinimalityViolation> out;
  for (std::size_t node = 0; node < dag.size(); ++node) {
    const VarSet parents = dag.parents(node);
    for (VarSet removable : subsets_in_order(parents)) {
      if (removable.empty()) continue;
      if (oracle.holds(VarSet::single(node), removable, parents - removable)) out.push_back({node, removable});
    }
  }
  return out;
}

double factorization_residual(const JointTable& table, const Dag& dag) {
  const Universe& u = table.universe();
  if (!(dag.universe() == u)) throw InvalidDag("network and table are over different universes");

  std::vector<std::vector<double>> family_mass(u.size()), parent_mass(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    family_mass[i] = table.marginal_probs(dag.parents(i) | VarSet::single(i));
    parent_mass[i] = table.marginal_probs(dag.parents(i));
  }

  double worst = 0.0;
  for (std::size_t index = 0; index < table.size(); ++index) {
    const auto assignment = table.assignment_of(index);
    double product = 1.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double pp = parent_mass[i][sub_index(u, assignment, dag.parents(i))];
      const double pf = family_mass[i][sub_index(u, assignment, dag.parents(i) | VarSet::single(i))];
      product *= pp > 0.0 ? pf / pp : 0.0;
    }
    worst = std::max(worst, std::abs(product - table.probs()[index]));
  }
  return worst;
}

}  // namespace graphoid
