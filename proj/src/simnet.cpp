#include "graphoid/simnet.hpp"

#include <algorithm>
#include <string>

#include "graphoid/errors.hpp"
#include "graphoid/relevance.hpp"

namespace graphoid {
namespace {

std::vector<std::size_t> sorted_values(const Universe& u, std::size_t h, std::vector<std::size_t> hs) {
  if (h >= u.size()) throw InvalidCover("hypothesis variable is outside the universe");
  std::sort(hs.begin(), hs.end());
  if (std::adjacent_find(hs.begin(), hs.end()) != hs.end()) throw InvalidCover("hypothesis values repeat");
  if (hs.size() < 2) throw InvalidCover("each hypothesis group needs at least two values");
  if (hs.back() >= u.domain_size(h)) {
    throw InvalidCover("hypothesis value out of range for '" + u.name(h) + "'");
  }
  return hs;
}

Order h_first(std::size_t n, std::size_t h) {
  Order order{h};
  for (std::size_t i = 0; i < n; ++i) {
    if (i != h) order.push_back(i);
  }
  return order;
}

}  // namespace

void validate_cover(const Universe& u, const HypothesisCover& cover) {
  if (cover.h >= u.size()) throw InvalidCover("hypothesis variable is outside the universe");
  if (cover.subsets.empty()) throw InvalidCover("cover has no hypothesis groups");
  std::vector<bool> seen(u.domain_size(cover.h), false);
  for (const auto& group : cover.subsets) {
    for (auto v : sorted_values(u, cover.h, group)) seen[v] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidCover("hypothesis groups do not cover every value of '" + u.name(cover.h) + "'");
  }
}

JointTable restrict_to_hypotheses(const JointTable& table, std::size_t h, const std::vector<std::size_t>& hs) {
  const Universe& u = table.universe();
  const auto values = sorted_values(u, h, hs);

  std::vector<std::size_t> slot(u.domain_size(h), values.size());
  for (std::size_t k = 0; k < values.size(); ++k) slot[values[k]] = k;

  auto variables = u.variables();
  std::vector<std::string> labels;
  for (auto v : values) labels.push_back(variables[h].values[v]);
  variables[h].values = std::move(labels);
  Universe reduced(std::move(variables));

  std::size_t reduced_size = 1;
  for (std::size_t i = 0; i < reduced.size(); ++i) reduced_size *= reduced.domain_size(i);
  std::vector<double> probs(reduced_size, 0.0);
  std::vector<std::size_t> target(u.size());
  double mass = 0.0;
  for (std::size_t index = 0; index < table.size(); ++index) {
    auto assignment = table.assignment_of(index);
    if (slot[assignment[h]] == values.size()) continue;
    assignment[h] = slot[assignment[h]];
    std::size_t r = 0;
    for (std::size_t i = 0; i < u.size(); ++i) r = r * reduced.domain_size(i) + assignment[i];
    probs[r] = table.probs()[index];
    mass += probs[r];
  }
  if (!(mass > 0.0)) {
    throw ZeroProbabilityEvidence("the selected values of '" + u.name(h) + "' have probability zero");
  }
  for (auto& p : probs) p /= mass;
  return JointTable(std::move(reduced), std::move(probs));
}

JointTable local_marginal(const JointTable& table, std::size_t h, const LocalNetwork& local) {
  return marginalize(restrict_to_hypotheses(table, h, local.hypotheses), local.included | VarSet::single(h));
}

LocalNetwork build_local(const JointTable& table, std::size_t h, const std::vector<std::size_t>& hs,
                         SimilarityType type, double tolerance) {
  LocalNetwork local;
  local.hypotheses = sorted_values(table.universe(), h, hs);
  const JointTable restricted = restrict_to_hypotheses(table, h, local.hypotheses);
  const CiOracle oracle(restricted, tolerance);
  const std::size_t n = restricted.universe().size();

  if (type == SimilarityType::Related) {
    const Dag full = build_network(oracle, h_first(n, h));
    for (VarSet component : connected_components(full)) {
      if (component.contains(h)) local.included = component - VarSet::single(h);
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      if (x != h && !mutually_irrelevant(oracle, x, h).holds) local.included |= VarSet::single(x);
    }
  }

  const VarSet keep = local.included | VarSet::single(h);
  const JointTable marginal = marginalize(restricted, keep);
  local.dag = build_network(CiOracle(marginal, tolerance), h_first(keep.size(), compress(VarSet::single(h), keep).lowest()));
  return local;
}

SimilarityNetwork build_similarity(const JointTable& table, const HypothesisCover& cover, SimilarityType type,
                                   double tolerance) {
  validate_cover(table.universe(), cover);
  SimilarityNetwork net{cover, type, {}};
  for (const auto& group : cover.subsets) net.locals.push_back(build_local(table, cover.h, group, type, tolerance));
  return net;
}

EquivalenceReport types_equivalent(const JointTable& table, const HypothesisCover& cover, double tolerance) {
  const auto related = build_similarity(table, cover, SimilarityType::Related, tolerance);
  const auto relevant = build_similarity(table, cover, SimilarityType::Relevant, tolerance);
  EquivalenceReport report;
  for (std::size_t k = 0; k < cover.subsets.size(); ++k) {
    const VarSet a = related.locals[k].included, b = relevant.locals[k].included;
    report.divergence.push_back((a - b) | (b - a));
    if (a != b) report.equivalent = false;
  }
  return report;
}

}  // namespace graphoid
