#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "graphoid/varset.hpp"

namespace graphoid {

// The independence statement (X, Y | Z): X independent of Y given Z.
struct Triplet {
  VarSet x;
  VarSet y;
  VarSet z;

  VarSet mentioned() const { return x | y | z; }
  bool disjoint() const { return !x.intersects(y) && !x.intersects(z) && !y.intersects(z); }
  Triplet swapped() const { return {y, x, z}; }

  bool operator==(const Triplet&) const = default;
  std::strong_ordering operator<=>(const Triplet&) const = default;
};

// Throws InvalidTriplet unless t's sets are pairwise disjoint and inside u.
void validate_triplet(const Universe& u, const Triplet& t);

// "(X, Y | Z)" with variable names.
std::string format_triplet(const Universe& u, const Triplet& t);

// Dense membership bitmap over all 4^n triplets of an n-variable universe.
// Each variable contributes one base-4 digit: 0 absent, 1 in X, 2 in Y, 3 in Z.
class TripletIndex {
 public:
  TripletIndex() = default;
  explicit TripletIndex(std::size_t n_variables);

  static std::uint64_t code(const Triplet& t);
  static Triplet decode(std::uint64_t code, std::size_t n_variables);

  std::size_t n_variables() const { return n_; }
  std::uint64_t capacity() const { return std::uint64_t{1} << (2 * n_); }
  bool test(const Triplet& t) const { return test(code(t)); }
  bool test(std::uint64_t c) const { return (words_[c >> 6] >> (c & 63)) & 1U; }
  // Returns true if the triplet was newly inserted.
  bool set(const Triplet& t);
  std::size_t count() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// An explicit finite set of triplets over a universe.
class DependencyModel {
 public:
  DependencyModel() = default;
  explicit DependencyModel(Universe universe, std::set<Triplet> triplets = {});

  const Universe& universe() const { return universe_; }
  const std::set<Triplet>& triplets() const { return triplets_; }
  std::size_t size() const { return triplets_.size(); }

  // Exact set membership; no axiom is applied. Throws InvalidTriplet.
  bool contains(const Triplet& t) const;
  // Validates and inserts; returns false if already present.
  bool insert(const Triplet& t);

  bool operator==(const DependencyModel&) const = default;

 private:
  Universe universe_;
  std::set<Triplet> triplets_;
};

// Largest universe the axiom machinery enumerates.
inline constexpr std::size_t kMaxClosureVariables = 8;

// Least superset of the model closed under trivial independence, symmetry,
// decomposition, weak union and contraction. Throws UniverseTooLarge.
DependencyModel graphoid_closure(const DependencyModel& model);

enum class Axiom { TrivialIndependence, Symmetry, Decomposition, WeakUnion, Contraction };

std::string_view axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  // Triplets of the model that instantiate the axiom's antecedent (empty for
  // trivial independence).
  std::vector<Triplet> premises;
  // The consequent that the model lacks.
  Triplet missing;

  bool operator==(const AxiomViolation&) const = default;
};

// Empty iff the model is a graphoid. One entry per (axiom, missing consequent),
// carrying the least premises; sorted by (axiom, missing).
// Throws UniverseTooLarge beyond kMaxClosureVariables.
std::vector<AxiomViolation> check_graphoid_axioms(const DependencyModel& model);

// The model over the members of keep, containing exactly the triplets that
// mention no other variable. Throws UnknownVariable.
DependencyModel restrict(const DependencyModel& model, VarSet keep);

}  // namespace graphoid
