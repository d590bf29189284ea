#include "graphoid/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "graphoid/errors.hpp"
#include "graphoid/fixtures.hpp"
#include "graphoid/relevance.hpp"
#include "graphoid/rng.hpp"
#include "graphoid/simnet.hpp"

namespace graphoid {
namespace {

using io::Json;

constexpr double kChainingTolerance = 1e-9;
constexpr std::size_t kSampledTriples = 200;
constexpr std::size_t kExhaustiveTriplesUpTo = 4;
constexpr std::size_t kRandomOrders = 3;

struct Source {
  std::string generator;
  std::size_t n;
  std::uint64_t seed;

  Json json() const { return {{"generator", generator}, {"n", n}, {"seed", seed}}; }
  std::string id(std::size_t k) const { return generator + "-" + std::to_string(k); }
};

class Runner {
 public:
  explicit Runner(SuiteReport& report) : report_(report) {}

  void count() { ++report_.cases; }
  void fail(std::string case_id, Json inputs, std::string expected, std::string actual, Json witness = nullptr) {
    report_.failures.push_back(
        {std::move(case_id), std::move(inputs), std::move(expected), std::move(actual), std::move(witness)});
  }

 private:
  SuiteReport& report_;
};

struct Spec {
  std::size_t min_n;
  std::size_t max_n;
  std::size_t default_n;
  std::size_t default_samples;
  // Cycle n through min_n..n_vars across cases instead of fixing it.
  bool cycle;
  std::function<void(const SuiteConfig&, Runner&)> run;
};

std::size_t case_n(const SuiteConfig& c, std::size_t min_n, bool cycle, std::size_t k) {
  return cycle ? min_n + k % (c.n_vars - min_n + 1) : c.n_vars;
}

JointTable make_table(const Source& s) {
  return s.generator == "random_block_spb" ? random_block_spb(s.n, s.seed) : random_spb(s.n, s.seed);
}

GaussianModel make_gaussian(const Source& s) {
  return s.generator == "random_block_gaussian" ? random_block_gaussian(s.n, s.seed)
                                                : random_gaussian(s.n, s.seed);
}

std::vector<Source> table_sources(std::size_t n, std::uint64_t seed) {
  return {{"random_spb", n, seed}, {"random_block_spb", n, derive_seed(seed, 1)}};
}

std::vector<Source> gaussian_sources(std::size_t n, std::uint64_t seed) {
  return {{"random_gaussian", n, derive_seed(seed, 2)}, {"random_block_gaussian", n, derive_seed(seed, 3)}};
}

Json order_json(const Universe& u, const Order& order) {
  Json out = Json::array();
  for (auto i : order) out.push_back(u.name(i));
  return out;
}

Json triplet_json(const Universe& u, const Triplet& t) {
  return {{"x", io::set_to_json(u, t.x)}, {"y", io::set_to_json(u, t.y)}, {"z", io::set_to_json(u, t.z)}};
}

std::string verdict_word(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- axioms

void axioms_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  for (std::size_t k = 0; k < c.samples; ++k) {
    for (const auto& src : table_sources(case_n(c, min_n, true, k), derive_seed(c.seed, k))) {
      run.count();
      const auto violations = check_graphoid_axioms(extract_model(CiOracle(make_table(src))));
      if (!violations.empty()) {
        const auto& v = violations.front();
        const Universe u = Universe::binary([&] {
          std::vector<std::string> names;
          for (std::size_t i = 0; i < src.n; ++i) names.push_back("u" + std::to_string(i + 1));
          return names;
        }());
        run.fail(src.id(k), src.json(), "no axiom violations", std::to_string(violations.size()) + " violations",
                 {{"axiom", axiom_name(v.axiom)}, {"missing", triplet_json(u, v.missing)}});
      }
    }
  }
}

// -------------------------------------------------------- dsep soundness

void dsep_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  for (std::size_t k = 0; k < c.samples; ++k) {
    for (const auto& src : table_sources(case_n(c, min_n, true, k), derive_seed(c.seed, k))) {
      const JointTable table = make_table(src);
      const Universe& u = table.universe();
      const CiOracle oracle(table);
      Rng rng(derive_seed(src.seed, 7));
      for (std::size_t r = 0; r < kRandomOrders; ++r) {
        run.count();
        Order order = canonical_order(u);
        rng.shuffle(order);
        const Dag dag = build_network(oracle, order);
        Json inputs = src.json();
        inputs["order"] = order_json(u, order);
        const std::string id = src.id(k) + "/order-" + std::to_string(r);

        for (std::size_t a = 0; a < u.size(); ++a) {
          for (std::size_t b = a + 1; b < u.size(); ++b) {
            const VarSet sa = VarSet::single(a), sb = VarSet::single(b);
            for_each_subset(u.all() - sa - sb, [&](VarSet z) {
              if (d_separated(dag, {sa, sb, z}) && !ci_holds_discrete(table, sa, sb, z)) {
                run.fail(id, inputs, "separated pair is independent", "dependent", triplet_json(u, {sa, sb, z}));
              }
            });
          }
        }
        // Each node is independent of its other non-descendants given its parents.
        for (std::size_t x = 0; x < u.size(); ++x) {
          const VarSet rest = u.all() - dag.descendants(x) - dag.parents(x) - VarSet::single(x);
          if (!ci_holds_discrete(table, VarSet::single(x), rest, dag.parents(x))) {
            run.fail(id, inputs, "node independent of non-descendants given parents", "dependent",
                     triplet_json(u, {VarSet::single(x), rest, dag.parents(x)}));
          }
        }
        if (!audit_minimality(dag, oracle).empty()) {
          run.fail(id, inputs, "minimal network", "reducible parent set");
        }
      }
    }
  }
}

// ------------------------------------------------------------ components

void components_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  for (std::size_t k = 0; k < c.samples; ++k) {
    for (const auto& src : table_sources(case_n(c, min_n, false, k), derive_seed(c.seed, k))) {
      run.count();
      const JointTable table = make_table(src);
      const Universe& u = table.universe();
      const CiOracle oracle = CiOracle(table).tabulated();
      Order order = canonical_order(u);
      const auto reference = connected_components(build_network(oracle, order));
      while (std::next_permutation(order.begin(), order.end())) {
        const auto other = connected_components(build_network(oracle, order));
        if (other != reference) {
          Json inputs = src.json();
          inputs["order"] = order_json(u, order);
          Json got = Json::array();
          for (VarSet s : other) got.push_back(io::set_to_json(u, s));
          run.fail(src.id(k), inputs, "same components under every order", "different components", got);
          break;
        }
      }
      for (std::size_t i = 0; i < reference.size(); ++i) {
        for (std::size_t j = i + 1; j < reference.size(); ++j) {
          if (!oracle.holds(reference[i], reference[j], VarSet{})) {
            run.fail(src.id(k), src.json(), "components marginally independent", "dependent",
                     triplet_json(u, {reference[i], reference[j], VarSet{}}));
          }
        }
      }
    }
  }
}

// ------------------------------------------------------------- relations

void check_relations(const CiOracle& oracle, const std::string& id, const Json& inputs, Runner& run) {
  const Universe& u = oracle.universe();
  const bool transitive = is_transitive(oracle).transitive;
  for (std::size_t x = 0; x < u.size(); ++x) {
    for (std::size_t y = x + 1; y < u.size(); ++y) {
      const auto mi = mutually_irrelevant(oracle, x, y);
      const auto unc = uncoupled(oracle, x, y);
      const auto unr = unrelated(oracle, x, y);
      Json pair = inputs;
      pair["x"] = u.name(x);
      pair["y"] = u.name(y);
      if (unc.holds != unr.holds) {
        run.fail(id, pair, "uncoupled equals unrelated",
                 "uncoupled=" + verdict_word(unc.holds) + " unrelated=" + verdict_word(unr.holds),
                 io::to_json(u, x, y, unc.holds ? unc : unr));
      }
      if (unc.holds && !mi.holds) {
        run.fail(id, pair, "uncoupled implies mutually irrelevant", "relevant yet uncoupled",
                 io::to_json(u, x, y, mi));
      }
      if (transitive && mi.holds && !unc.holds) {
        run.fail(id, pair, "transitive: coupled implies relevant", "coupled yet mutually irrelevant");
      }
    }
  }
}

// J(A,B) and J(A,C) imply J(A, B u C).
void check_irrelevance_union(const CiOracle& oracle, const std::string& id, const Json& inputs, Runner& run) {
  const Universe& u = oracle.universe();
  const std::size_t n = u.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::array<VarSet, 4> part{};
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i, rest /= 4) part[rest % 4] |= VarSet::single(i);
    const VarSet a = part[1], b = part[2], cc = part[3];
    if (a.empty() || b.empty() || cc.empty() || !(b < cc)) continue;
    if (mutually_irrelevant_sets(oracle, a, b) && mutually_irrelevant_sets(oracle, a, cc) &&
        !mutually_irrelevant_sets(oracle, a, b | cc)) {
      run.fail(id, inputs, "mutual irrelevance closed under union", "union relevant",
               {{"a", io::set_to_json(u, a)}, {"b", io::set_to_json(u, b)}, {"c", io::set_to_json(u, cc)}});
    }
  }
}

void check_xor_gap(Runner& run) {
  run.count();
  const CiOracle xor_oracle(fixtures::xor_table());
  const bool mi = mutually_irrelevant(xor_oracle, 0, 1).holds;
  const bool unc = uncoupled(xor_oracle, 0, 1).holds;
  const auto tr = is_transitive(xor_oracle);
  const std::array<std::size_t, 3> expected{0, 2, 1};
  if (!mi || unc || tr.transitive || tr.witness != expected) {
    run.fail("xor", {{"fixture", "xor"}}, "mutually_irrelevant=true uncoupled=false transitive=false witness=(x,z,y)",
             "mutually_irrelevant=" + verdict_word(mi) + " uncoupled=" + verdict_word(unc) +
                 " transitive=" + verdict_word(tr.transitive));
  }
}

void relations_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  check_xor_gap(run);
  for (std::size_t k = 0; k < c.samples; ++k) {
    const std::size_t n = case_n(c, min_n, false, k);
    const std::uint64_t seed = derive_seed(c.seed, k);
    for (const auto& src : table_sources(n, seed)) {
      run.count();
      const CiOracle oracle = CiOracle(make_table(src)).tabulated();
      check_relations(oracle, src.id(k), src.json(), run);
      if (n <= 4) check_irrelevance_union(oracle, src.id(k), src.json(), run);
    }
    for (const auto& src : gaussian_sources(n, seed)) {
      run.count();
      check_relations(CiOracle(make_gaussian(src)).tabulated(), src.id(k), src.json(), run);
    }
  }
}

// ----------------------------------------------------------------- clean

VarSet random_proper_subset(VarSet whole, Rng& rng) {
  const auto members = whole.members();
  while (true) {
    VarSet s;
    for (auto m : members) {
      if (rng.below(2) == 1) s |= VarSet::single(m);
    }
    if (!s.empty() && s != whole) return s;
  }
}

// Runs every check of one checker family; returns true if none was a violation.
template <class MakeChecker>
bool sweep_partitions(const Universe& u, std::size_t value_orders, MakeChecker make, Rng& rng, bool exhaustive,
                      const std::string& id, const Json& inputs, Runner& run) {
  bool clean = true;
  auto record = [&](const CheckResult& r, const PartitionTriple& pt) {
    if (r.outcome == CleanOutcome::Violation) {
      clean = false;
      run.fail(id, inputs, "no violation", "violation", {{"partition", io::to_json(u, pt)}, {"result", io::to_json(r)}});
    }
  };
  const std::size_t n = u.size();
  if (exhaustive) {
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t o = 0; o < value_orders; ++o) {
        const auto checker = make(e, o);
        const VarSet rest = u.all() - VarSet::single(e);
        for (VarSet x1 : subsets_in_order(rest)) {
          if (x1.empty() || x1 == rest) continue;
          for (VarSet y1 : subsets_in_order(rest)) {
            if (y1.empty() || y1 == rest) continue;
            for (VarSet z1 : subsets_in_order(rest)) {
              if (z1.empty() || z1 == rest) continue;
              const auto pt = make_partition_triple(u, e, x1, y1, z1, o, 1 - o);
              record(checker.check(pt), pt);
            }
          }
        }
      }
    }
    return clean;
  }
  std::map<std::pair<std::size_t, std::size_t>, decltype(make(0, 0))> checkers;
  for (std::size_t s = 0; s < kSampledTriples; ++s) {
    const std::size_t e = rng.below(n);
    const std::size_t o = rng.below(value_orders);
    const VarSet rest = u.all() - VarSet::single(e);
    const VarSet x1 = random_proper_subset(rest, rng);
    const VarSet y1 = random_proper_subset(rest, rng);
    const VarSet z1 = random_proper_subset(rest, rng);
    auto it = checkers.find({e, o});
    if (it == checkers.end()) it = checkers.emplace(std::pair{e, o}, make(e, o)).first;
    const auto pt = make_partition_triple(u, e, x1, y1, z1, o, 1 - o);
    record(it->second.check(pt), pt);
  }
  return clean;
}

void clean_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  for (std::size_t k = 0; k < c.samples; ++k) {
    const std::size_t n = case_n(c, min_n, true, k);
    const std::uint64_t seed = derive_seed(c.seed, k);
    const bool exhaustive = n <= kExhaustiveTriplesUpTo;
    for (const auto& src : table_sources(n, seed)) {
      run.count();
      const JointTable table = make_table(src);
      Rng rng(derive_seed(src.seed, 11));
      const bool clean = sweep_partitions(
          table.universe(), 2, [&](std::size_t e, std::size_t o) { return CleanChecker(table, e, o, 1 - o); }, rng,
          exhaustive, src.id(k), src.json(), run);
      if (clean && exhaustive && !is_transitive(CiOracle(table)).transitive) {
        run.fail(src.id(k), src.json(), "no violations implies transitive", "not transitive");
      }
    }
    for (const auto& src : gaussian_sources(n, seed)) {
      run.count();
      const GaussianModel g = make_gaussian(src);
      Rng rng(derive_seed(src.seed, 11));
      sweep_partitions(
          g.universe(), 1, [&](std::size_t e, std::size_t) { return CleanChecker(g, e); }, rng, exhaustive, src.id(k),
          src.json(), run);
    }
  }
}

// ---------------------------------------------------------------- pt-bin

void pt_bin_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  for (std::size_t k = 0; k < c.samples; ++k) {
    const std::size_t n = case_n(c, min_n, true, k);
    const std::uint64_t seed = derive_seed(c.seed, k);
    const Source src = table_sources(n, seed)[k % 2];
    run.count();
    const JointTable table = make_table(src);
    const Universe& u = table.universe();
    Rng rng(derive_seed(src.seed, 13));

    PtBinBlocks blocks;
    blocks.e = rng.below(n);
    blocks.e_first = rng.below(2);
    blocks.e_second = 1 - blocks.e_first;
    const VarSet rest = u.all() - VarSet::single(blocks.e);
    do {
      blocks.a.fill(VarSet{});
      blocks.b.fill(VarSet{});
      for (auto v : rest.members()) {
        const std::size_t slot = rng.below(8);
        (slot < 4 ? blocks.a[slot] : blocks.b[slot - 4]) |= VarSet::single(v);
      }
    } while (blocks.a[0].empty() || blocks.b[0].empty());

    const PartitionTriple pt = to_partition_triple(blocks);
    Json inputs = src.json();
    inputs["partition"] = io::to_json(u, pt);
    const CheckResult by_blocks = check_pt_bin(table, blocks);
    const CheckResult by_partition = check_clean(table, pt);
    if (by_blocks.outcome != by_partition.outcome || by_blocks.antecedents != by_partition.antecedents ||
        by_blocks.r1_side != by_partition.r1_side || by_blocks.r2_side != by_partition.r2_side) {
      run.fail(src.id(k), inputs, io::to_json(by_partition).dump(), io::to_json(by_blocks).dump());
    }
    if (by_blocks.outcome == CleanOutcome::Violation) {
      run.fail(src.id(k), inputs, "no violation", "violation", io::to_json(by_blocks));
    }
    const PtBinBlocks back = to_blocks(pt);
    if (back.a != blocks.a || back.b != blocks.b) {
      run.fail(src.id(k), inputs, "block mapping round-trips", "blocks changed");
    }
  }
}

// -------------------------------------------------------- gaussian-props

void gaussian_props_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  for (std::size_t k = 0; k < c.samples; ++k) {
    for (const auto& src : gaussian_sources(case_n(c, min_n, true, k), derive_seed(c.seed, k))) {
      run.count();
      const GaussianModel g = make_gaussian(src);
      const auto report = gaussian_axioms_check(g);
      for (const auto& v : report.violations) {
        const Universe& u = g.universe();
        run.fail(src.id(k), src.json(), "no violations", std::string(property_name(v.property)),
                 {{"x", io::set_to_json(u, v.x)},
                  {"y", io::set_to_json(u, v.y)},
                  {"w", io::set_to_json(u, v.w)},
                  {"z", io::set_to_json(u, v.z)}});
      }
    }
  }
}

// ---------------------------------------------------------- transitivity

void transitivity_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  check_xor_gap(run);
  for (std::size_t k = 0; k < c.samples; ++k) {
    const std::size_t n = case_n(c, min_n, true, k);
    const std::uint64_t seed = derive_seed(c.seed, k);
    auto check = [&](const CiOracle& oracle, const Source& src) {
      run.count();
      const auto tr = is_transitive(oracle);
      if (!tr.transitive) {
        const Universe& u = oracle.universe();
        run.fail(src.id(k), src.json(), "transitive", "not transitive",
                 Json::array({u.name((*tr.witness)[0]), u.name((*tr.witness)[1]), u.name((*tr.witness)[2])}));
      }
    };
    for (const auto& src : table_sources(n, seed)) check(CiOracle(make_table(src)), src);
    for (const auto& src : gaussian_sources(n, seed)) check(CiOracle(make_gaussian(src)), src);
  }
}

// ---------------------------------------------------------- simnet-equiv

void check_chaining(const JointTable& table, const SimilarityNetwork& net, const std::string& id, const Json& inputs,
                    Runner& run) {
  for (const auto& local : net.locals) {
    const double residual = factorization_residual(local_marginal(table, net.cover.h, local), local.dag);
    if (residual > kChainingTolerance) {
      run.fail(id, inputs, "chaining rule within 1e-9", "residual " + std::to_string(residual));
    }
  }
}

void check_similarity(const JointTable& table, const HypothesisCover& cover, const std::string& id,
                      const Json& inputs, bool expect_equivalent, Runner& run) {
  const auto related = build_similarity(table, cover, SimilarityType::Related);
  const auto relevant = build_similarity(table, cover, SimilarityType::Relevant);
  check_chaining(table, related, id, inputs, run);
  check_chaining(table, relevant, id, inputs, run);
  const auto report = types_equivalent(table, cover);
  for (std::size_t i = 0; i < cover.subsets.size(); ++i) {
    if (!relevant.locals[i].included.subset_of(related.locals[i].included)) {
      run.fail(id, inputs, "type-2 included within type-1 included", "type-2 has extra variables");
    }
  }
  if (expect_equivalent && !report.equivalent) {
    run.fail(id, inputs, "types equivalent", "types differ", io::to_json(table.universe(), report));
  }
}

void simnet_suite(const SuiteConfig& c, Runner& run, std::size_t min_n) {
  {
    run.count();
    const JointTable xor_table = fixtures::xor_table();
    const HypothesisCover cover{0, {{0, 1}}};
    check_similarity(xor_table, cover, "xor", {{"fixture", "xor"}}, false, run);
    const auto report = types_equivalent(xor_table, cover);
    if (report.equivalent || report.divergence != std::vector<VarSet>{VarSet::single(1)}) {
      run.fail("xor", {{"fixture", "xor"}}, "not equivalent, divergence {y}",
               io::to_json(xor_table.universe(), report).dump());
    }
  }
  {
    run.count();
    const JointTable table = fixtures::figure2_table();
    const Universe& u = table.universe();
    check_similarity(table, fixtures::figure2_cover(), "figure2", {{"fixture", "figure2"}}, true, run);
    const std::vector<VarSet> expected{u.set_of({"u1", "u2", "u3", "u5"}), u.set_of({"u3", "u4", "u5"}),
                                       u.set_of({"u1"})};
    const auto net = build_similarity(table, fixtures::figure2_cover(), SimilarityType::Related);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (net.locals[i].included != expected[i]) {
        run.fail("figure2", {{"fixture", "figure2"}, {"subset", i}}, u.format(expected[i]),
                 u.format(net.locals[i].included));
      }
    }
  }
  for (std::size_t k = 0; k < c.samples; ++k) {
    for (const auto& src : table_sources(case_n(c, min_n, true, k), derive_seed(c.seed, k))) {
      run.count();
      check_similarity(make_table(src), HypothesisCover{0, {{0, 1}}}, src.id(k), src.json(), true, run);
    }
  }
}

const std::map<std::string_view, Spec>& registry() {
  static const std::map<std::string_view, Spec> suites{
      {"axioms", {2, 5, 4, 200, true, [](auto& c, auto& r) { axioms_suite(c, r, 2); }}},
      {"dsep-soundness", {2, 6, 5, 200, true, [](auto& c, auto& r) { dsep_suite(c, r, 2); }}},
      {"components", {2, 6, 4, 100, false, [](auto& c, auto& r) { components_suite(c, r, 2); }}},
      {"relations", {2, 6, 4, 100, false, [](auto& c, auto& r) { relations_suite(c, r, 2); }}},
      {"clean", {3, 6, 5, 500, true, [](auto& c, auto& r) { clean_suite(c, r, 3); }}},
      {"pt-bin", {3, 6, 5, 200, true, [](auto& c, auto& r) { pt_bin_suite(c, r, 3); }}},
      {"gaussian-props", {2, 6, 5, 100, true, [](auto& c, auto& r) { gaussian_props_suite(c, r, 2); }}},
      {"transitivity", {2, 6, 5, 200, true, [](auto& c, auto& r) { transitivity_suite(c, r, 2); }}},
      {"simnet-equiv", {2, 6, 5, 50, true, [](auto& c, auto& r) { simnet_suite(c, r, 2); }}},
  };
  return suites;
}

}  // namespace

Json SuiteReport::to_json() const {
  Json failed = Json::array();
  for (const auto& f : failures) {
    failed.push_back({{"case", f.case_id},
                      {"inputs", f.inputs},
                      {"expected", f.expected},
                      {"actual", f.actual},
                      {"witness", f.witness}});
  }
  return {{"suite", suite}, {"seed", seed},   {"n_vars", n_vars}, {"samples", samples},
          {"cases", cases}, {"passed", passed()}, {"failures", failed}};
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"axioms",         "dsep-soundness", "components",
                                                   "relations",      "clean",          "pt-bin",
                                                   "gaussian-props", "transitivity",   "simnet-equiv"};
  return names;
}

bool is_suite(std::string_view name) { return registry().contains(name); }

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  const Spec& spec = it->second;

  SuiteConfig c = config;
  if (c.n_vars == 0) c.n_vars = spec.default_n;
  if (c.samples == 0) c.samples = spec.default_samples;
  if (c.n_vars < spec.min_n || c.n_vars > spec.max_n) {
    throw std::invalid_argument("suite '" + std::string(name) + "' supports --n-vars " + std::to_string(spec.min_n) +
                                ".." + std::to_string(spec.max_n));
  }

  SuiteReport report{std::string(name), c.seed, c.n_vars, c.samples, 0, {}};
  Runner runner(report);
  spec.run(c, runner);
  return report;
}

}  // namespace graphoid
