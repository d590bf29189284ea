#include "graphoid/relevance.hpp"

#include <string>

#include "graphoid/errors.hpp"

namespace graphoid {
namespace {

// Tabulating pays off once a checker answers more than a handful of queries.
constexpr std::size_t kTabulateUpTo = 6;

void require_pair(const CiOracle& oracle, std::size_t x, std::size_t y, std::size_t bound) {
  const std::size_t n = oracle.universe().size();
  if (n > bound) {
    throw UniverseTooLarge("relation scans support at most " + std::to_string(bound) + " variables");
  }
  if (x >= n || y >= n) throw UnknownVariable("relation query outside the universe");
  if (x == y) throw InvalidSets("relation query needs two distinct variables");
}

CiOracle maybe_tabulated(CiOracle oracle) {
  return oracle.universe().size() <= kTabulateUpTo ? oracle.tabulated() : oracle;
}

bool is_bipartition(VarSet first, VarSet second, VarSet whole) {
  return !first.empty() && !second.empty() && !first.intersects(second) && (first | second) == whole;
}

}  // namespace

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::MutuallyIrrelevant: return "mutually_irrelevant";
    case Relation::Uncoupled: return "uncoupled";
    case Relation::Unrelated: return "unrelated";
  }
  return "unknown";
}

RelationVerdict mutually_irrelevant(const CiOracle& oracle, std::size_t x, std::size_t y) {
  require_pair(oracle, x, y, kMaxRelevanceVariables);
  const VarSet sx = VarSet::single(x), sy = VarSet::single(y);
  for (VarSet z : subsets_in_order(oracle.universe().all() - sx - sy)) {
    if (!oracle.holds(sx, sy, z)) return {Relation::MutuallyIrrelevant, false, z};
  }
  return {Relation::MutuallyIrrelevant, true, std::monostate{}};
}

bool mutually_irrelevant_sets(const CiOracle& oracle, VarSet a, VarSet b) {
  const Universe& u = oracle.universe();
  if (u.size() > kMaxRelevanceVariables) {
    throw UniverseTooLarge("relation scans support at most " + std::to_string(kMaxRelevanceVariables) +
                           " variables");
  }
  if (a.empty() || b.empty() || a.intersects(b) || !(a | b).subset_of(u.all())) {
    throw InvalidSets("mutual irrelevance of sets needs two disjoint non-empty sets");
  }
  bool all_hold = true;
  for_each_subset(u.all() - a - b, [&](VarSet z) { all_hold = all_hold && oracle.holds(a, b, z); });
  return all_hold;
}

RelationVerdict uncoupled(const CiOracle& oracle, std::size_t x, std::size_t y) {
  require_pair(oracle, x, y, kMaxRelevanceVariables);
  const VarSet all = oracle.universe().all();
  const VarSet sx = VarSet::single(x), sy = VarSet::single(y);
  // Adding x to every candidate preserves the shortlex order, so the first hit
  // is the least U1.
  for (VarSet extra : subsets_in_order(all - sx - sy)) {
    const VarSet first = sx | extra;
    const VarSet second = all - first;
    if (oracle.holds(first, second, VarSet{})) return {Relation::Uncoupled, true, Bipartition{first, second}};
  }
  return {Relation::Uncoupled, false, std::monostate{}};
}

RelationVerdict unrelated(const CiOracle& oracle, std::size_t x, std::size_t y) {
  require_pair(oracle, x, y, kMaxVariables);
  const Dag dag = build_network(oracle);
  if (auto trail = find_trail(dag, x, y)) return {Relation::Unrelated, false, *std::move(trail)};
  return {Relation::Unrelated, true, std::monostate{}};
}

std::vector<std::vector<bool>> relevance_matrix(const CiOracle& oracle) {
  const std::size_t n = oracle.universe().size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      rel[a][b] = rel[b][a] = !mutually_irrelevant(oracle, a, b).holds;
    }
  }
  return rel;
}

TransitivityResult is_transitive(const CiOracle& oracle) {
  const std::size_t n = oracle.universe().size();
  if (n > kMaxTransitivityVariables) {
    throw UniverseTooLarge("transitivity check supports at most " + std::to_string(kMaxTransitivityVariables) +
                           " variables");
  }
  const auto rel = relevance_matrix(oracle);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || !rel[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (rel[b][c] && !rel[a][c]) return {false, std::array<std::size_t, 3>{a, b, c}};
      }
    }
  }
  return {true, std::nullopt};
}

PartitionTriple make_partition_triple(const Universe& u, std::size_t e, VarSet x1, VarSet y1, VarSet z1,
                                      std::size_t e_first, std::size_t e_second) {
  if (e >= u.size()) throw InvalidPartition("e is outside the universe");
  const VarSet rest = u.all() - VarSet::single(e);
  PartitionTriple pt{x1, rest - x1, y1, rest - y1, z1, rest - z1, e, e_first, e_second};
  validate_partition_triple(u, pt);
  return pt;
}

void validate_partition_triple(const Universe& u, const PartitionTriple& pt) {
  if (pt.e >= u.size()) throw InvalidPartition("e is outside the universe");
  const VarSet rest = u.all() - VarSet::single(pt.e);
  if (!is_bipartition(pt.x1, pt.x2, rest) || !is_bipartition(pt.y1, pt.y2, rest) ||
      !is_bipartition(pt.z1, pt.z2, rest)) {
    throw InvalidPartition("X, Y and Z must each split the universe minus e into two non-empty parts");
  }
  if (pt.e_first == pt.e_second) throw InvalidPartition("the two values of e must differ");
}

PartitionTriple to_partition_triple(const PtBinBlocks& k) {
  const auto& a = k.a;
  const auto& b = k.b;
  PartitionTriple pt;
  pt.x1 = a[0] | a[1] | a[2] | a[3];
  pt.x2 = b[0] | b[1] | b[2] | b[3];
  pt.y1 = a[0] | a[1] | b[2] | b[3];
  pt.y2 = b[0] | b[1] | a[2] | a[3];
  pt.z1 = a[0] | a[2] | b[1] | b[3];
  pt.z2 = b[0] | b[2] | a[1] | a[3];
  pt.e = k.e;
  pt.e_first = k.e_first;
  pt.e_second = k.e_second;
  return pt;
}

PtBinBlocks to_blocks(const PartitionTriple& pt) {
  PtBinBlocks k;
  k.a = {pt.x1 & pt.y1 & pt.z1, pt.x1 & pt.y1 & pt.z2, pt.x1 & pt.y2 & pt.z1, pt.x1 & pt.y2 & pt.z2};
  k.b = {pt.x2 & pt.y2 & pt.z2, pt.x2 & pt.y2 & pt.z1, pt.x2 & pt.y1 & pt.z2, pt.x2 & pt.y1 & pt.z1};
  k.e = pt.e;
  k.e_first = pt.e_first;
  k.e_second = pt.e_second;
  return k;
}

std::string_view outcome_name(CleanOutcome o) {
  switch (o) {
    case CleanOutcome::AntecedentFails: return "antecedent_fails";
    case CleanOutcome::ConsequentHolds: return "consequent_holds";
    case CleanOutcome::Violation: return "violation";
  }
  return "unknown";
}

CleanChecker::CleanChecker(const JointTable& table, std::size_t e, std::size_t e_first, std::size_t e_second,
                           double tolerance)
    : joint_(maybe_tabulated(CiOracle(table, tolerance))), e_(e), e_first_(e_first), e_second_(e_second) {
  const Universe& u = table.universe();
  if (e >= u.size()) throw InvalidPartition("e is outside the universe");
  if (u.size() < 3) throw InvalidPartition("the universe minus e needs at least two variables");
  if (e_first == e_second) throw InvalidPartition("the two values of e must differ");
  if (e_first >= u.domain_size(e) || e_second >= u.domain_size(e)) {
    throw InvalidPartition("value index out of range for '" + u.name(e) + "'");
  }
  const std::array<std::size_t, 2> values{e_first, e_second};
  for (std::size_t k = 0; k < 2; ++k) {
    try {
      conditioned_[k] = maybe_tabulated(CiOracle(condition_on(table, e, values[k]), tolerance));
    } catch (const ZeroProbabilityEvidence&) {
      // Every statement given a null event holds.
      conditioned_[k].reset();
    }
  }
}

CleanChecker::CleanChecker(const GaussianModel& gaussian, std::size_t e, double tolerance)
    : joint_(maybe_tabulated(CiOracle(gaussian, tolerance))), e_(e), gaussian_(true) {
  const Universe& u = gaussian.universe();
  if (e >= u.size()) throw InvalidPartition("e is outside the universe");
  if (u.size() < 3) throw InvalidPartition("the universe minus e needs at least two variables");
}

bool CleanChecker::marginal(VarSet a, VarSet b) const { return joint_.holds(a, b, VarSet{}); }

bool CleanChecker::given(std::size_t which, VarSet a, VarSet b) const {
  if (gaussian_) return joint_.holds(a, b, VarSet::single(e_));
  const auto& oracle = conditioned_[which];
  if (!oracle) return true;
  const VarSet rest = universe().all() - VarSet::single(e_);
  return oracle->holds(compress(a, rest), compress(b, rest), VarSet{});
}

CheckResult CleanChecker::check(const PartitionTriple& pt) const {
  validate_partition_triple(universe(), pt);
  if (pt.e != e_) throw InvalidPartition("partition triple names a different e than the checker");
  if (!gaussian_ && (pt.e_first != e_first_ || pt.e_second != e_second_)) {
    throw InvalidPartition("partition triple names different values of e than the checker");
  }

  CheckResult r;
  r.antecedents = {marginal(pt.x1, pt.x2), given(0, pt.y1, pt.y2), given(1, pt.z1, pt.z2)};
  const VarSet r1 = pt.r1(), r2 = pt.r2();
  const bool antecedents_hold = r.antecedents[0] && r.antecedents[1] && r.antecedents[2];
  if (r1.empty() || r2.empty() || !antecedents_hold) {
    r.outcome = CleanOutcome::AntecedentFails;
    return r;
  }
  const VarSet all = universe().all();
  r.r1_side = marginal(r1, all - r1);
  r.r2_side = marginal(r2, all - r2);
  r.outcome = (r.r1_side || r.r2_side) ? CleanOutcome::ConsequentHolds : CleanOutcome::Violation;
  return r;
}

CheckResult CleanChecker::check(const PtBinBlocks& k) const {
  const Universe& u = universe();
  if (k.e != e_) throw InvalidPartition("blocks name a different e than the checker");
  if (!gaussian_) {
    if (u.domain_size(e_) != 2) throw InvalidPartition("the eight-block form needs a binary e");
    if (k.e_first != e_first_ || k.e_second != e_second_) {
      throw InvalidPartition("blocks name different values of e than the checker");
    }
  }
  VarSet covered;
  for (const auto& part : {k.a, k.b}) {
    for (VarSet s : part) {
      if (s.intersects(covered)) throw InvalidPartition("blocks must be pairwise disjoint");
      covered |= s;
    }
  }
  if (covered != u.all() - VarSet::single(e_)) {
    throw InvalidPartition("blocks must cover exactly the universe minus e");
  }

  const auto& a = k.a;
  const auto& b = k.b;
  CheckResult r;
  r.antecedents = {marginal(a[0] | a[1] | a[2] | a[3], b[0] | b[1] | b[2] | b[3]),
                   given(0, a[0] | a[1] | b[2] | b[3], b[0] | b[1] | a[2] | a[3]),
                   given(1, a[0] | a[2] | b[1] | b[3], b[0] | b[2] | a[1] | a[3])};
  if (!(r.antecedents[0] && r.antecedents[1] && r.antecedents[2])) {
    r.outcome = CleanOutcome::AntecedentFails;
    return r;
  }
  const VarSet all = u.all();
  r.r1_side = marginal(a[0], all - a[0]);
  r.r2_side = marginal(b[0], all - b[0]);
  r.outcome = (r.r1_side || r.r2_side) ? CleanOutcome::ConsequentHolds : CleanOutcome::Violation;
  return r;
}

CheckResult check_clean(const JointTable& table, const PartitionTriple& pt, double tolerance) {
  validate_partition_triple(table.universe(), pt);
  return CleanChecker(table, pt.e, pt.e_first, pt.e_second, tolerance).check(pt);
}

CheckResult check_clean(const GaussianModel& g, const PartitionTriple& pt, double tolerance) {
  validate_partition_triple(g.universe(), pt);
  return CleanChecker(g, pt.e, tolerance).check(pt);
}

CheckResult check_pt_bin(const JointTable& table, const PtBinBlocks& blocks, double tolerance) {
  if (blocks.e >= table.universe().size()) throw InvalidPartition("e is outside the universe");
  if (table.universe().domain_size(blocks.e) != 2) throw InvalidPartition("the eight-block form needs a binary e");
  return CleanChecker(table, blocks.e, blocks.e_first, blocks.e_second, tolerance).check(blocks);
}

std::string_view property_name(GaussianProperty p) {
  switch (p) {
    case GaussianProperty::Composition: return "composition";
    case GaussianProperty::MarginalWeakTransitivity: return "marginal_weak_transitivity";
  }
  return "unknown";
}

GaussianAxiomsReport gaussian_axioms_check(const GaussianModel& g, double tolerance) {
  const std::size_t n = g.universe().size();
  if (n > kMaxGaussianAxiomVariables) {
    throw UniverseTooLarge("Gaussian property checks support at most " +
                           std::to_string(kMaxGaussianAxiomVariables) + " variables");
  }
  const CiOracle oracle = CiOracle(g, tolerance).tabulated();
  GaussianAxiomsReport report;

  // Each variable goes to one of: nowhere, X, Y, W, Z.
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 5;
  for (std::size_t code = 0; code < total; ++code) {
    std::array<VarSet, 5> part{};
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 5) part[c % 5] |= VarSet::single(i);
    const auto [x, y, w, z] = std::tuple{part[1], part[2], part[3], part[4]};
    if (x.empty() || y.empty() || w.empty() || !(y < w)) continue;
    ++report.composition_instances;
    if (oracle.holds(x, y, z) && oracle.holds(x, w, z) && !oracle.holds(x, y | w, z)) {
      report.violations.push_back({GaussianProperty::Composition, x, y, w, z});
    }
  }

  for (std::size_t e = 0; e < n; ++e) {
    const VarSet se = VarSet::single(e);
    const VarSet rest = g.universe().all() - se;
    for_each_subset(rest, [&](VarSet x) {
      if (x.empty()) return;
      for_each_subset(rest - x, [&](VarSet y) {
        if (y.empty()) return;
        ++report.transitivity_instances;
        if (oracle.holds(x, y, VarSet{}) && oracle.holds(x, y, se) && !oracle.holds(x, se, VarSet{}) &&
            !oracle.holds(se, y, VarSet{})) {
          report.violations.push_back({GaussianProperty::MarginalWeakTransitivity, x, y, se, VarSet{}});
        }
      });
    });
  }
  return report;
}

}  // namespace graphoid
