#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "graphoid/bayesnet.hpp"
#include "graphoid/distribution.hpp"
#include "graphoid/oracle.hpp"

namespace graphoid {

inline constexpr std::size_t kMaxRelevanceVariables = 12;
inline constexpr std::size_t kMaxTransitivityVariables = 8;
inline constexpr std::size_t kMaxGaussianAxiomVariables = 6;

enum class Relation { MutuallyIrrelevant, Uncoupled, Unrelated };

std::string_view relation_name(Relation r);

// Two marginally independent halves of the universe.
struct Bipartition {
  VarSet first;
  VarSet second;
  bool operator==(const Bipartition&) const = default;
};

// Evidence attached to a verdict:
//   mutually irrelevant, holds=false -> the least Z making x and y dependent
//   uncoupled, holds=true            -> the least separating bipartition
//   unrelated, holds=false           -> a trail connecting x and y
using Witness = std::variant<std::monostate, VarSet, Bipartition, Trail>;

struct RelationVerdict {
  Relation relation;
  bool holds;
  Witness witness;
};

// ({x}, {y} | Z) for every Z outside {x, y}. Throws UniverseTooLarge beyond
// kMaxRelevanceVariables, InvalidSets when x == y.
RelationVerdict mutually_irrelevant(const CiOracle& oracle, std::size_t x, std::size_t y);

// (A, B | Z) for every Z outside A u B. A and B must be disjoint and non-empty.
bool mutually_irrelevant_sets(const CiOracle& oracle, VarSet a, VarSet b);

// Brute-force scan for a bipartition U1 (containing x), U2 (containing y)
// with (U1, U2 | {}) in the model. Independent of any network construction.
RelationVerdict uncoupled(const CiOracle& oracle, std::size_t x, std::size_t y);

// Disconnection of x and y in the minimal network built under the universe
// listing order.
RelationVerdict unrelated(const CiOracle& oracle, std::size_t x, std::size_t y);

// relevant(a, b) for all pairs; the diagonal is false.
std::vector<std::vector<bool>> relevance_matrix(const CiOracle& oracle);

struct TransitivityResult {
  bool transitive;
  // Least (a, b, c) with relevant(a,b), relevant(b,c) and not relevant(a,c).
  std::optional<std::array<std::size_t, 3>> witness;
};

// Throws UniverseTooLarge beyond kMaxTransitivityVariables.
TransitivityResult is_transitive(const CiOracle& oracle);

// Three bipartitions {X1,X2}, {Y1,Y2}, {Z1,Z2} of the universe minus e, plus
// two distinct values of e. Parts are positions in the full universe.
struct PartitionTriple {
  VarSet x1, x2;
  VarSet y1, y2;
  VarSet z1, z2;
  std::size_t e = 0;
  std::size_t e_first = 0;
  std::size_t e_second = 1;

  VarSet r1() const { return x1 & y1 & z1; }
  VarSet r2() const { return x2 & y2 & z2; }
};

// Builds a triple from the first halves; the second halves are the
// complements inside the universe minus e.
PartitionTriple make_partition_triple(const Universe& u, std::size_t e, VarSet x1, VarSet y1, VarSet z1,
                                      std::size_t e_first = 0, std::size_t e_second = 1);

// Throws InvalidPartition.
void validate_partition_triple(const Universe& u, const PartitionTriple& pt);

// The eight-block form: A1..A4 and B1..B4 pairwise disjoint, covering the
// universe minus e; empty blocks allowed.
struct PtBinBlocks {
  std::array<VarSet, 4> a;
  std::array<VarSet, 4> b;
  std::size_t e = 0;
  std::size_t e_first = 0;
  std::size_t e_second = 1;
};

// X1 = A1A2A3A4, X2 = B1B2B3B4, Y1 = A1A2B3B4, Y2 = B1B2A3A4,
// Z1 = A1A3B2B4, Z2 = B1B3A2A4. Under this mapping R1 = A1 and R2 = B1.
PartitionTriple to_partition_triple(const PtBinBlocks& blocks);
PtBinBlocks to_blocks(const PartitionTriple& pt);

enum class CleanOutcome { AntecedentFails, ConsequentHolds, Violation };

std::string_view outcome_name(CleanOutcome o);

struct CheckResult {
  CleanOutcome outcome;
  // Marginal statement, statement given e', statement given e''.
  std::array<bool, 3> antecedents;
  // Consequent disjuncts; evaluated only when every antecedent holds.
  bool r1_side = false;
  bool r2_side = false;
};

// Evaluates the implication for many partition triples against one
// distribution and one choice of (e, e', e''), sharing the conditioned
// distributions and their tabulated answers.
class CleanChecker {
 public:
  // Throws InvalidPartition on a bad e or equal values.
  CleanChecker(const JointTable& table, std::size_t e, std::size_t e_first, std::size_t e_second,
               double tolerance = kDiscreteTolerance);
  // Gaussian statements conditioned on a value of e do not depend on the value.
  CleanChecker(const GaussianModel& gaussian, std::size_t e, double tolerance = kGaussianTolerance);

  const Universe& universe() const { return joint_.universe(); }
  std::size_t e() const { return e_; }

  // R1 or R2 empty reports AntecedentFails.
  CheckResult check(const PartitionTriple& pt) const;
  CheckResult check(const PtBinBlocks& blocks) const;

 private:
  bool marginal(VarSet a, VarSet b) const;
  bool given(std::size_t which, VarSet a, VarSet b) const;

  CiOracle joint_;
  std::size_t e_;
  std::size_t e_first_ = 0;
  std::size_t e_second_ = 1;
  bool gaussian_ = false;
  // Discrete only; nullopt when the conditioning value has probability zero.
  std::array<std::optional<CiOracle>, 2> conditioned_;
};

CheckResult check_clean(const JointTable& table, const PartitionTriple& pt, double tolerance = kDiscreteTolerance);
CheckResult check_clean(const GaussianModel& g, const PartitionTriple& pt, double tolerance = kGaussianTolerance);

// e must be binary. Throws InvalidPartition.
CheckResult check_pt_bin(const JointTable& table, const PtBinBlocks& blocks, double tolerance = kDiscreteTolerance);

enum class GaussianProperty { Composition, MarginalWeakTransitivity };

std::string_view property_name(GaussianProperty p);

struct GaussianPropertyViolation {
  GaussianProperty property;
  VarSet x;
  VarSet y;
  // W for composition; {e} for marginal weak transitivity.
  VarSet w;
  // Conditioning set for composition; empty otherwise.
  VarSet z;
};

struct GaussianAxiomsReport {
  std::vector<GaussianPropertyViolation> violations;
  std::size_t composition_instances = 0;
  std::size_t transitivity_instances = 0;
  // The oracle takes no conditioning values, so value-level statements
  // coincide with set-level ones.
  bool unification_structural = true;
};

// Throws UniverseTooLarge beyond kMaxGaussianAxiomVariables.
GaussianAxiomsReport gaussian_axioms_check(const GaussianModel& g, double tolerance = kGaussianTolerance);

}  // namespace graphoid
