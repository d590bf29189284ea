#pragma once

#include <cstddef>
#include <vector>

#include "graphoid/bayesnet.hpp"
#include "graphoid/distribution.hpp"

namespace graphoid {

// A distinguished hypothesis variable and the groups of its values that get
// their own local network.
struct HypothesisCover {
  std::size_t h = 0;
  // Value indices of h; each group has at least two distinct values and the
  // groups together cover the domain of h.
  std::vector<std::vector<std::size_t>> subsets;
};

// Throws InvalidCover.
void validate_cover(const Universe& u, const HypothesisCover& cover);

// Type 1 keeps the variables related to h, type 2 those relevant to h.
enum class SimilarityType { Related = 1, Relevant = 2 };

struct LocalNetwork {
  // Sorted value indices of h, in the original domain.
  std::vector<std::size_t> hypotheses;
  // Positions in the original universe; never contains h.
  VarSet included;
  // Over {h} u included with h's domain shrunk to the hypotheses; h is
  // first in the construction order.
  Dag dag;
};

struct SimilarityNetwork {
  HypothesisCover cover;
  SimilarityType type = SimilarityType::Related;
  std::vector<LocalNetwork> locals;
};

// The table conditioned on h taking a value in hs. h keeps its position; its
// domain becomes the listed values in ascending order.
// Throws InvalidCover or ZeroProbabilityEvidence.
JointTable restrict_to_hypotheses(const JointTable& table, std::size_t h, const std::vector<std::size_t>& hs);

LocalNetwork build_local(const JointTable& table, std::size_t h, const std::vector<std::size_t>& hs,
                         SimilarityType type, double tolerance = kDiscreteTolerance);

SimilarityNetwork build_similarity(const JointTable& table, const HypothesisCover& cover, SimilarityType type,
                                   double tolerance = kDiscreteTolerance);

struct EquivalenceReport {
  bool equivalent = true;
  // Per cover subset: type-1 included set symmetric-difference type-2 set.
  std::vector<VarSet> divergence;
};

EquivalenceReport types_equivalent(const JointTable& table, const HypothesisCover& cover,
                                   double tolerance = kDiscreteTolerance);

// The marginal of the restricted table that a local network describes.
JointTable local_marginal(const JointTable& table, std::size_t h, const LocalNetwork& local);

}  // namespace graphoid
