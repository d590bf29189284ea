#include "doctest.h"

#include "graphoid/errors.hpp"
#include "graphoid/fixtures.hpp"
#include "graphoid/relevance.hpp"
#include "graphoid/rng.hpp"

using namespace graphoid;

namespace {

// Product of a dependent (x,w) block and a dependent (y,v) block, listed x, y, w, v.
JointTable two_blocks() {
  const double xw[2][2] = {{0.4, 0.1}, {0.2, 0.3}};
  const double yv[2][2] = {{0.05, 0.45}, {0.35, 0.15}};
  std::vector<double> p;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int w = 0; w < 2; ++w)
        for (int v = 0; v < 2; ++v) p.push_back(xw[x][w] * yv[y][v]);
  return JointTable(Universe::binary({"x", "y", "w", "v"}), p);
}

JointTable independent3() {
  std::vector<double> p;
  for (double a : {0.3, 0.7})
    for (double b : {0.6, 0.4})
      for (double c : {0.2, 0.8}) p.push_back(a * b * c);
  return JointTable(Universe::binary({"a", "b", "c"}), p);
}

}  // namespace

TEST_SUITE("relations") {
  TEST_CASE("mutual irrelevance") {
    const CiOracle o(fixtures::xor_table());
    CHECK(mutually_irrelevant(o, 0, 1).holds);
    const auto xz = mutually_irrelevant(o, 0, 2);
    CHECK_FALSE(xz.holds);
    CHECK(std::get<VarSet>(xz.witness) == VarSet{});
    CHECK(mutually_irrelevant(CiOracle(JointTable(Universe::binary({"a", "b"}), {0.12, 0.28, 0.18, 0.42})), 0, 1).holds);
    CHECK(mutually_irrelevant_sets(o, VarSet::of({0}), VarSet::of({1})));
    CHECK_FALSE(mutually_irrelevant_sets(o, VarSet::of({0}), VarSet::of({1, 2})));
    CHECK_THROWS_AS(mutually_irrelevant(o, 1, 1), InvalidSets);
    CHECK_THROWS_AS(mutually_irrelevant_sets(o, VarSet{}, VarSet::of({1})), InvalidSets);
  }

  TEST_CASE("witness is the least dependence-inducing set") {
    // c is the parity of two fair coins a and b.
    const auto chain = JointTable(Universe::binary({"a", "b", "c"}),
                                  {0.25, 0.0, 0.0, 0.25, 0.0, 0.25, 0.25, 0.0});
    const auto v = mutually_irrelevant(CiOracle(chain), 0, 1);
    CHECK_FALSE(v.holds);
    CHECK(std::get<VarSet>(v.witness) == VarSet::of({2}));
  }

  TEST_CASE("uncoupled") {
    CHECK_FALSE(uncoupled(CiOracle(fixtures::xor_table()), 0, 1).holds);
    const auto ind = uncoupled(CiOracle(independent3()), 0, 2);
    CHECK(ind.holds);
    CHECK(std::get<Bipartition>(ind.witness) == Bipartition{VarSet::of({0}), VarSet::of({1, 2})});
    const auto blocks = uncoupled(CiOracle(two_blocks()), 0, 1);
    CHECK(blocks.holds);
    CHECK(std::get<Bipartition>(blocks.witness) == Bipartition{VarSet::of({0, 2}), VarSet::of({1, 3})});
  }

  TEST_CASE("unrelated") {
    const CiOracle o(fixtures::xor_table());
    const auto v = unrelated(o, 0, 1);
    CHECK_FALSE(v.holds);
    CHECK(std::get<Trail>(v.witness).nodes == std::vector<std::size_t>{0, 2, 1});
    Order order{0, 1, 2};
    do {
      CHECK(find_trail(build_network(o, order), 0, 1).has_value());
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(unrelated(CiOracle(independent3()), 0, 1).holds);
  }

  TEST_CASE("transitivity") {
    const auto tr = is_transitive(CiOracle(fixtures::xor_table()));
    CHECK_FALSE(tr.transitive);
    CHECK(tr.witness == std::array<std::size_t, 3>{0, 2, 1});
    CHECK(is_transitive(CiOracle(two_blocks())).transitive);
    CHECK(is_transitive(CiOracle(fixtures::burglary_model())).transitive);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      CHECK(is_transitive(CiOracle(random_spb(4, seed))).transitive);
      CHECK(is_transitive(CiOracle(random_gaussian(4, seed))).transitive);
    }
  }

  TEST_CASE("size bounds") {
    std::vector<Variable> vars;
    for (int i = 0; i < 13; ++i) vars.push_back({"v" + std::to_string(i), {"0"}});
    const JointTable point(Universe(vars), {1.0});
    CHECK_THROWS_AS(mutually_irrelevant(CiOracle(point), 0, 1), UniverseTooLarge);
    vars.resize(9);
    CHECK_THROWS_AS(is_transitive(CiOracle(JointTable(Universe(vars), {1.0}))), UniverseTooLarge);
  }
}

TEST_SUITE("three-partition implication") {
  TEST_CASE("xor violates it with e = z") {
    const auto t = fixtures::xor_table();
    const auto pt = make_partition_triple(t.universe(), 2, VarSet::of({0}), VarSet::of({0}), VarSet::of({0}), 0, 1);
    const auto r = check_clean(t, pt);
    CHECK(r.outcome == CleanOutcome::Violation);
    CHECK(r.antecedents == std::array<bool, 3>{true, true, true});
    CHECK_FALSE(r.r1_side);
    CHECK_FALSE(r.r2_side);
  }

  TEST_CASE("equal partitions on a two-block table") {
    // a and e dependent, b independent of both.
    std::vector<double> p;
    const double ae[2][2] = {{0.4, 0.1}, {0.1, 0.4}};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int e = 0; e < 2; ++e) p.push_back(ae[a][e] * (b ? 0.3 : 0.7));
    const JointTable t(Universe::binary({"a", "b", "e"}), p);
    const auto pt = make_partition_triple(t.universe(), 2, VarSet::of({0}), VarSet::of({0}), VarSet::of({0}));
    const auto r = check_clean(t, pt);
    CHECK(r.outcome == CleanOutcome::ConsequentHolds);
    CHECK_FALSE(r.r1_side);
    CHECK(r.r2_side);
  }

  TEST_CASE("empty intersections report a failed antecedent") {
    const auto t = random_block_spb(4, 3);
    const auto pt = make_partition_triple(t.universe(), 3, VarSet::of({0}), VarSet::of({1}), VarSet::of({0}));
    CHECK(pt.r1().empty());
    CHECK(check_clean(t, pt).outcome == CleanOutcome::AntecedentFails);
  }

  TEST_CASE("partition validation") {
    const Universe u = Universe::binary({"a", "b", "c", "e"});
    CHECK_THROWS_AS(make_partition_triple(u, 3, VarSet{}, VarSet::of({0}), VarSet::of({0})), InvalidPartition);
    CHECK_THROWS_AS(make_partition_triple(u, 3, VarSet::of({0, 1, 2}), VarSet::of({0}), VarSet::of({0})),
                    InvalidPartition);
    CHECK_THROWS_AS(make_partition_triple(u, 3, VarSet::of({3}), VarSet::of({0}), VarSet::of({0})), InvalidPartition);
    CHECK_THROWS_AS(make_partition_triple(u, 3, VarSet::of({0}), VarSet::of({0}), VarSet::of({0}), 1, 1),
                    InvalidPartition);
    CHECK_THROWS_AS(CleanChecker(random_spb(3, 0), 0, 0, 2), InvalidPartition);
  }

  TEST_CASE("multi-valued e is accepted by the partition form only") {
    const auto t = fixtures::xor_table();
    const auto pt = make_partition_triple(t.universe(), 2, VarSet::of({0}), VarSet::of({1}), VarSet::of({0}), 1, 3);
    CHECK_NOTHROW(check_clean(t, pt));
    PtBinBlocks k;
    k.e = 2;
    k.a[0] = VarSet::of({0});
    k.b[0] = VarSet::of({1});
    CHECK_THROWS_AS(check_pt_bin(t, k), InvalidPartition);
  }

  TEST_CASE("block form matches the partition form") {
    Rng rng(17);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto t = seed % 2 ? random_block_spb(5, seed) : random_spb(5, seed);
      PtBinBlocks k;
      k.e = rng.below(5);
      k.e_first = rng.below(2);
      k.e_second = 1 - k.e_first;
      do {
        k.a.fill(VarSet{});
        k.b.fill(VarSet{});
        for (auto v : (t.universe().all() - VarSet::single(k.e)).members()) {
          const auto s = rng.below(8);
          (s < 4 ? k.a[s] : k.b[s - 4]) |= VarSet::single(v);
        }
      } while (k.a[0].empty() || k.b[0].empty());
      const auto pt = to_partition_triple(k);
      CHECK(pt.r1() == k.a[0]);
      CHECK(pt.r2() == k.b[0]);
      const auto back = to_blocks(pt);
      CHECK(back.a == k.a);
      CHECK(back.b == k.b);
      const auto x = check_pt_bin(t, k), y = check_clean(t, pt);
      CHECK(x.outcome == y.outcome);
      CHECK(x.antecedents == y.antecedents);
      CHECK(x.outcome != CleanOutcome::Violation);
    }
  }

  TEST_CASE("block form rejects overlaps and gaps") {
    const auto t = random_spb(4, 1);
    PtBinBlocks k;
    k.e = 3;
    k.a[0] = VarSet::of({0});
    k.b[0] = VarSet::of({1});
    CHECK_THROWS_AS(check_pt_bin(t, k), InvalidPartition);
    k.a[1] = VarSet::of({1, 2});
    CHECK_THROWS_AS(check_pt_bin(t, k), InvalidPartition);
  }

  TEST_CASE("Gaussian checker") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = random_block_gaussian(4, seed);
      const CleanChecker checker(g, 0);
      for (VarSet x1 : subsets_in_order(VarSet::of({1, 2, 3}))) {
        if (x1.empty() || x1.size() == 3) continue;
        const auto pt = make_partition_triple(g.universe(), 0, x1, x1, x1);
        CHECK(checker.check(pt).outcome != CleanOutcome::Violation);
      }
    }
  }
}

TEST_SUITE("Gaussian properties") {
  TEST_CASE("diagonal and random models satisfy composition and marginal weak transitivity") {
    const GaussianModel diag(Universe::named({"a", "b", "c", "d"}), Eigen::VectorXd::Zero(4),
                             Eigen::MatrixXd::Identity(4, 4));
    const auto r = gaussian_axioms_check(diag);
    CHECK(r.violations.empty());
    CHECK(r.composition_instances > 0);
    CHECK(r.transitivity_instances > 0);
    CHECK(r.unification_structural);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      CHECK(gaussian_axioms_check(random_gaussian(4, seed)).violations.empty());
      CHECK(gaussian_axioms_check(random_block_gaussian(5, seed)).violations.empty());
    }
  }
}

TEST_SUITE("relevance properties") {
  TEST_CASE("unrelated equals uncoupled; uncoupled implies irrelevant") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const std::size_t n = 2 + seed % 3;
      const CiOracle oracles[] = {CiOracle(random_block_spb(n, seed)).tabulated(),
                                  CiOracle(random_block_gaussian(n, seed)).tabulated()};
      for (const auto& o : oracles) {
        const bool transitive = is_transitive(o).transitive;
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            const bool unc = uncoupled(o, x, y).holds;
            const bool mi = mutually_irrelevant(o, x, y).holds;
            CHECK(unc == unrelated(o, x, y).holds);
            if (unc) CHECK(mi);
            if (transitive && mi) CHECK(unc);
          }
        }
      }
    }
  }

  TEST_CASE("mutual irrelevance is closed under union") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const CiOracle o = CiOracle(random_block_spb(4, seed)).tabulated();
      for (std::uint64_t c = 0; c < 256; ++c) {
        const auto t = TripletIndex::decode(c, 4);
        const VarSet a = t.x, b = t.y, w = t.z;
        if (a.empty() || b.empty() || w.empty()) continue;
        if (mutually_irrelevant_sets(o, a, b) && mutually_irrelevant_sets(o, a, w)) {
          CHECK(mutually_irrelevant_sets(o, a, b | w));
        }
      }
    }
  }

  TEST_CASE("tables with no violation are transitive") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto t = random_block_spb(4, seed);
      bool clean = true;
      for (std::size_t e = 0; e < 4; ++e) {
        const VarSet rest = t.universe().all() - VarSet::single(e);
        for (std::size_t o = 0; o < 2; ++o) {
          const CleanChecker checker(t, e, o, 1 - o);
          for (VarSet x1 : subsets_in_order(rest)) {
            for (VarSet y1 : subsets_in_order(rest)) {
              for (VarSet z1 : subsets_in_order(rest)) {
                if (x1.empty() || y1.empty() || z1.empty() || x1 == rest || y1 == rest || z1 == rest) continue;
                const auto r = checker.check(make_partition_triple(t.universe(), e, x1, y1, z1, o, 1 - o));
                if (r.outcome == CleanOutcome::Violation) clean = false;
              }
            }
          }
        }
      }
      CHECK(clean);
      CHECK(is_transitive(CiOracle(t)).transitive);
    }
  }
}
