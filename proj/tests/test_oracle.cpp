#include "doctest.h"

#include "graphoid/errors.hpp"
#include "graphoid/fixtures.hpp"
#include "graphoid/oracle.hpp"

using namespace graphoid;

TEST_SUITE("oracle") {
  TEST_CASE("xor model contents") {
    const auto m = extract_model(CiOracle(fixtures::xor_table()));
    const VarSet x = VarSet::of({0}), y = VarSet::of({1}), z = VarSet::of({2});
    CHECK(m.contains({x, y, VarSet{}}));
    CHECK(m.contains({x, y, z}));
    CHECK_FALSE(m.contains({x, y | z, VarSet{}}));
    CHECK(check_graphoid_axioms(m).empty());
  }

  TEST_CASE("diagonal Gaussian extracts the full-independence model") {
    const GaussianModel g(Universe::named({"a", "b", "c"}), Eigen::VectorXd::Zero(3), Eigen::MatrixXd::Identity(3, 3));
    const auto m = extract_model(CiOracle(g));
    CHECK(m.size() == 64);
    const DependencyModel pairs(g.universe(), {{VarSet::of({0}), VarSet::of({1, 2}), VarSet{}},
                                               {VarSet::of({1}), VarSet::of({2}), VarSet{}}});
    CHECK(graphoid_closure(pairs) == m);
  }

  TEST_CASE("model backend answers from the closure") {
    const Universe u = Universe::binary({"x", "y", "w"});
    const CiOracle o(DependencyModel(u, {{VarSet::of({0}), VarSet::of({1, 2}), VarSet{}}}));
    CHECK(o.holds(VarSet::of({1}), VarSet::of({0}), VarSet::of({2})));
    CHECK_FALSE(o.holds(VarSet::of({1}), VarSet::of({2}), VarSet{}));
    CHECK(o.discrepancy({VarSet::of({1}), VarSet::of({2}), VarSet{}}) == 1.0);
    CHECK(o.is_tabulated());
  }

  TEST_CASE("tabulated answers equal direct answers") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const CiOracle direct(random_block_spb(4, seed));
      const CiOracle table = direct.tabulated();
      CHECK_FALSE(direct.is_tabulated());
      CHECK(table.is_tabulated());
      for (std::uint64_t c = 0; c < 256; ++c) {
        const auto t = TripletIndex::decode(c, 4);
        CHECK(direct.holds(t) == table.holds(t));
      }
    }
  }

  TEST_CASE("bounds and invalid queries") {
    CHECK_THROWS_AS(extract_model(CiOracle(random_spb(6, 1))), UniverseTooLarge);
    CHECK_THROWS_AS(CiOracle(random_spb(2, 1), -1.0), InvalidSets);
    const CiOracle o(fixtures::xor_table());
    CHECK_THROWS_AS(o.holds(VarSet::of({0}), VarSet::of({0}), VarSet{}), InvalidSets);
  }

  TEST_CASE("extracted models are graphoids") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const std::size_t n = 2 + seed % 3;
      CHECK(check_graphoid_axioms(extract_model(CiOracle(random_block_spb(n, seed)))).empty());
      CHECK(check_graphoid_axioms(extract_model(CiOracle(random_block_gaussian(n, seed)))).empty());
    }
  }
}
