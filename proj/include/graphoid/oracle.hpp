#pragma once

#include <memory>
#include <variant>

#include "graphoid/distribution.hpp"
#include "graphoid/model.hpp"

namespace graphoid {

// Answers "does (X, Y | Z) hold?" for one backend. A DependencyModel backend
// answers by membership in its graphoid closure.
//
// Oracles are immutable values; copies share any precomputed answers.
class CiOracle {
 public:
  using Backend = std::variant<JointTable, GaussianModel, DependencyModel>;

  explicit CiOracle(JointTable table, double tolerance = kDiscreteTolerance);
  explicit CiOracle(GaussianModel gaussian, double tolerance = kGaussianTolerance);
  // Computes the closure; throws UniverseTooLarge beyond kMaxClosureVariables.
  explicit CiOracle(DependencyModel model);

  const Universe& universe() const;
  const Backend& backend() const { return backend_; }
  double tolerance() const { return tolerance_; }

  // Throws InvalidSets on overlapping or unknown sets; SingularConditioning
  // from a Gaussian backend.
  bool holds(const Triplet& t) const;
  bool holds(VarSet x, VarSet y, VarSet z) const { return holds(Triplet{x, y, z}); }

  // Backend-specific size of the violation: largest probability discrepancy,
  // largest conditional-covariance entry, or 0/1 for a model backend.
  double discrepancy(const Triplet& t) const;

  // A copy that has answered every triplet once up front and serves all
  // later queries from that table. Throws UniverseTooLarge beyond
  // kMaxTabulatedVariables.
  CiOracle tabulated() const;
  bool is_tabulated() const { return answers_ != nullptr; }

 private:
  double evaluate(const Triplet& t) const;

  Backend backend_;
  double tolerance_ = 0.0;
  std::shared_ptr<const TripletIndex> answers_;
};

inline constexpr std::size_t kMaxTabulatedVariables = 8;
inline constexpr std::size_t kMaxExtractVariables = 5;

// Every triplet over the oracle's universe that the oracle accepts.
// Throws UniverseTooLarge beyond kMaxExtractVariables.
DependencyModel extract_model(const CiOracle& oracle);

}  // namespace graphoid
