#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "graphoid/varset.hpp"

namespace graphoid {

// Absolute tolerance on conditional-probability differences.
inline constexpr double kDiscreteTolerance = 1e-9;
// Absolute tolerance on conditional-covariance entries.
inline constexpr double kGaussianTolerance = 1e-7;
// Conditioning blocks whose reciprocal condition estimate falls below this
// are reported as singular.
inline constexpr double kMinReciprocalCondition = 1e-12;

// A discrete joint distribution stored densely. Index order is mixed radix
// over the universe with the last-listed variable varying fastest.
class JointTable {
 public:
  JointTable() = default;
  // Throws InvalidDistribution on wrong length, negative or non-finite
  // entries, empty domains, or a total that is not 1 within 1e-12.
  JointTable(Universe universe, std::vector<double> probs);

  const Universe& universe() const { return universe_; }
  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  bool strictly_positive() const;

  std::size_t index_of(std::span<const std::size_t> assignment) const;
  std::vector<std::size_t> assignment_of(std::size_t index) const;
  double probability(std::span<const std::size_t> assignment) const { return probs_[index_of(assignment)]; }

  // Probability mass on the variables in keep, mixed-radix over the members
  // of keep in universe order.
  std::vector<double> marginal_probs(VarSet keep) const;

  bool operator==(const JointTable&) const = default;

 private:
  Universe universe_;
  std::vector<double> probs_;
};

// A multivariate normal distribution. Value labels of the universe are
// ignored; every variable is real-valued.
class GaussianModel {
 public:
  GaussianModel() = default;
  // Throws InvalidDistribution unless the covariance is finite, symmetric
  // within 1e-12 and positive definite.
  GaussianModel(Universe universe, Eigen::VectorXd mean, Eigen::MatrixXd covariance);

  const Universe& universe() const { return universe_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }

  bool operator==(const GaussianModel& o) const {
    return universe_ == o.universe_ && mean_ == o.mean_ && covariance_ == o.covariance_;
  }

 private:
  Universe universe_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd covariance_;
};

// Largest |P(x | y, z) - P(x | z)| over all value combinations whose
// conditioning events have probability above `null_mass`. Events at or below
// it are treated as probability zero. Throws InvalidSets.
double ci_discrepancy_discrete(const JointTable& table, VarSet x, VarSet y, VarSet z,
                               double null_mass = kDiscreteTolerance);

bool ci_holds_discrete(const JointTable& table, VarSet x, VarSet y, VarSet z,
                       double tolerance = kDiscreteTolerance);

// The X-by-Y block of the conditional covariance given Z, computed through a
// Cholesky factorization of the Z block. Throws InvalidSets, or
// SingularConditioning when the Z block is numerically singular.
Eigen::MatrixXd conditional_cross_covariance(const GaussianModel& g, VarSet x, VarSet y, VarSet z);

// Largest absolute entry of conditional_cross_covariance (0 for empty blocks).
double ci_discrepancy_gaussian(const GaussianModel& g, VarSet x, VarSet y, VarSet z);

bool ci_holds_gaussian(const GaussianModel& g, VarSet x, VarSet y, VarSet z,
                       double tolerance = kGaussianTolerance);

// The distribution of the remaining variables given var = value.
// Throws ZeroProbabilityEvidence.
JointTable condition_on(const JointTable& table, std::size_t var, std::size_t value);

// Sums out every variable outside keep. Throws UnknownVariable, or InvalidSets
// when keep is empty.
JointTable marginalize(const JointTable& table, VarSet keep);

// Strictly positive table over variables u1..un with the given domain sizes.
// Raw entries are 1e-3 + U[0,1) before normalization.
JointTable random_positive_table(std::span<const std::size_t> domain_sizes, std::uint64_t seed);

// Strictly positive binary distribution over u1..un, 2 <= n <= 6.
JointTable random_spb(std::size_t n, std::uint64_t seed);

// Regular Gaussian over u1..un, 2 <= n <= 8: covariance A*A^T + 1e-2*I with
// A uniform on [-1,1]; mean uniform on [-1,1].
GaussianModel random_gaussian(std::size_t n, std::uint64_t seed);

// Strictly positive binary distribution over u1..un (2 <= n <= 6) that
// factorizes over a random grouping of the variables into independent blocks.
JointTable random_block_spb(std::size_t n, std::uint64_t seed);

// Regular Gaussian over u1..un (2 <= n <= 8) whose covariance is block
// diagonal over a random grouping of the variables.
GaussianModel random_block_gaussian(std::size_t n, std::uint64_t seed);

inline constexpr double kSpbEntryFloor = 1e-3;
inline constexpr double kGaussianRidge = 1e-2;

}  // namespace graphoid
