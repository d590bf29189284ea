#include "doctest.h"

#include <algorithm>

#include "generators.hpp"
#include "graphoid/errors.hpp"
#include "graphoid/fixtures.hpp"
#include "oracles.hpp"

using namespace graphoid;

namespace {

std::vector<std::pair<std::string, std::string>> named_edges(const Dag& d) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [p, c] : d.edges()) out.emplace_back(d.universe().name(p), d.universe().name(c));
  std::sort(out.begin(), out.end());
  return out;
}

using Edges = std::vector<std::pair<std::string, std::string>>;

}  // namespace

TEST_SUITE("construction") {
  TEST_CASE("minimal parents on xor") {
    const CiOracle o(fixtures::xor_table());
    CHECK(minimal_parents(o, Order{0, 1, 2}, 2) == VarSet::of({0, 1}));
    CHECK(minimal_parents(o, Order{2, 0, 1}, 2) == VarSet::of({2}));
    CHECK(minimal_parents(o, Order{1, 2, 0}, 0) == VarSet{});
    CHECK_THROWS_AS(minimal_parents(o, Order{0, 1}, 1), InvalidOrder);
    CHECK_THROWS_AS(minimal_parents(o, Order{0, 1, 2}, 3), InvalidOrder);
  }

  TEST_CASE("xor networks") {
    const CiOracle o(fixtures::xor_table());
    CHECK(named_edges(build_network(o, Order{0, 1, 2})) == Edges{{"x", "z"}, {"y", "z"}});
    CHECK(named_edges(build_network(o, Order{2, 0, 1})) == Edges{{"z", "x"}, {"z", "y"}});
    CHECK(build_network(o) == build_network(o, Order{0, 1, 2}));
  }

  TEST_CASE("independent table gives an edgeless network under every order") {
    std::vector<double> probs;
    const double px[] = {0.3, 0.7}, py[] = {0.6, 0.4}, pz[] = {0.1, 0.9};
    for (double a : px) for (double b : py) for (double c : pz) probs.push_back(a * b * c);
    const CiOracle o(JointTable(Universe::binary({"a", "b", "c"}), probs));
    Order order{0, 1, 2};
    do {
      CHECK(build_network(o, order).edge_count() == 0);
    } while (std::next_permutation(order.begin(), order.end()));
  }

  TEST_CASE("burglary closure yields the alarm network") {
    const CiOracle o(fixtures::burglary_model());
    const Dag d = build_network(o);
    CHECK(named_edges(d) == Edges{{"alarm", "patrol"},
                                  {"burglary", "sensorA"},
                                  {"burglary", "sensorB"},
                                  {"sensorA", "alarm"},
                                  {"sensorB", "alarm"}});
    CHECK(audit_minimality(d, o).empty());
  }

  TEST_CASE("dag validation") {
    const Universe u = Universe::named({"a", "b"});
    CHECK_THROWS_AS(Dag(u, Order{0, 1}, {VarSet::of({1}), VarSet{}}), InvalidDag);
    CHECK_THROWS_AS(Dag(u, Order{0, 0}, {VarSet{}, VarSet{}}), InvalidOrder);
    CHECK_THROWS_AS(Dag::empty(u, Order{0, 1}).with_link(1, 0), InvalidDag);
  }
}

TEST_SUITE("separation") {
  TEST_CASE("alarm network statements") {
    const Dag d = fixtures::figure1_dag();
    const auto& u = d.universe();
    CHECK(d_separated(d, {u.set_of({"u2"}), u.set_of({"u3"}), u.set_of({"u1"})}));
    CHECK_FALSE(d_separated(d, {u.set_of({"u2"}), u.set_of({"u3"}), u.set_of({"u1", "u5"})}));
    CHECK(d_separated(d, {u.set_of({"u1"}), u.set_of({"u5"}), u.set_of({"u2", "u4"})}));
    // The text also names {u2,u3} as a separator of u5 from u1.
    CHECK(d_separated(d, {u.set_of({"u5"}), u.set_of({"u1"}), u.set_of({"u2", "u3"})}));
    CHECK_THROWS_AS(d_separated(d, {u.set_of({"u1"}), u.set_of({"u1"}), VarSet{}}), InvalidSets);
  }

  TEST_CASE("descendants are strict") {
    const Dag d = fixtures::figure1_dag();
    CHECK(d.descendants(0) == VarSet::of({1, 2, 3, 4}));
    CHECK(d.descendants(4) == VarSet{});
    CHECK(d.ancestors(VarSet::of({3})) == VarSet::of({0, 1, 2}));
  }

  TEST_CASE("components and trails") {
    CHECK(connected_components(fixtures::figure1_dag()) == std::vector<VarSet>{VarSet::first_n(5)});
    const Dag empty = Dag::empty(Universe::named({"a", "b", "c"}), Order{2, 0, 1});
    CHECK(connected_components(empty) == std::vector<VarSet>{VarSet::of({0}), VarSet::of({1}), VarSet::of({2})});
    CHECK_FALSE(find_trail(empty, 0, 1).has_value());

    const Dag x = build_network(CiOracle(fixtures::xor_table()));
    CHECK(connected_components(x).size() == 1);
    const auto trail = find_trail(x, 0, 1);
    REQUIRE(trail.has_value());
    CHECK(trail->nodes == std::vector<std::size_t>{0, 2, 1});
    CHECK(trail->links == std::vector<Link>{{0, 2}, {1, 2}});
  }

  TEST_CASE("audit finds a removable parent") {
    const CiOracle o(fixtures::xor_table());
    const Dag d = build_network(o, Order{0, 1, 2}).with_link(0, 1);
    const auto v = audit_minimality(d, o);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == MinimalityViolation{1, VarSet::of({0})});
    CHECK(audit_minimality(Dag::empty(o.universe(), Order{0, 1, 2}), o).empty());
  }
}

TEST_SUITE("bayesnet properties") {
  TEST_CASE("reachability agrees with trail enumeration") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const Dag d = gen::random_dag(2 + seed % 5, 8, seed);
      Rng rng(seed ^ 0xabcdef);
      for (int k = 0; k < 10; ++k) {
        const auto q = gen::random_query(d.size(), rng);
        CHECK(d_separated(d, {q.x, q.y, q.z}) == oracle::trail_separated(d, q.x, q.y, q.z));
      }
    }
  }

  TEST_CASE("networks are sound, minimal and factorize the table") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const JointTable t = seed % 2 ? random_block_spb(4, seed) : random_spb(4, seed);
      const CiOracle o(t);
      Rng rng(seed);
      Order order = canonical_order(t.universe());
      rng.shuffle(order);
      const Dag d = build_network(o, order);
      CHECK(audit_minimality(d, o).empty());
      CHECK(factorization_residual(t, d) < 1e-12);
      for (std::uint64_t c = 0; c < 256; ++c) {
        const auto q = TripletIndex::decode(c, 4);
        if (d_separated(d, {q.x, q.y, q.z})) CHECK(o.holds(q));
      }
    }
  }

  TEST_CASE("components do not depend on the construction order") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const CiOracle o = CiOracle(random_block_spb(4, seed)).tabulated();
      Order order{0, 1, 2, 3};
      const auto ref = connected_components(build_network(o, order));
      while (std::next_permutation(order.begin(), order.end())) {
        CHECK(connected_components(build_network(o, order)) == ref);
      }
    }
  }
}
