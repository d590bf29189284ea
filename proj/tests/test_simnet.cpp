#include "doctest.h"

#include <numeric>

#include "graphoid/errors.hpp"
#include "graphoid/fixtures.hpp"
#include "graphoid/simnet.hpp"

using namespace graphoid;

TEST_SUITE("similarity networks") {
  TEST_CASE("restriction") {
    const auto t = fixtures::figure2_table();
    const auto r = restrict_to_hypotheses(t, 0, {3, 1});
    CHECK(r.universe().variable(0).values == std::vector<std::string>{"h2", "h4"});
    CHECK(std::accumulate(r.probs().begin(), r.probs().end(), 0.0) == doctest::Approx(1.0));
    const auto full = restrict_to_hypotheses(t, 0, {0, 1, 2, 3, 4});
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(full.probs()[i] == doctest::Approx(t.probs()[i]));
    CHECK_THROWS_AS(restrict_to_hypotheses(t, 0, {2}), InvalidCover);
    CHECK_THROWS_AS(restrict_to_hypotheses(t, 0, {2, 2}), InvalidCover);
    CHECK_THROWS_AS(restrict_to_hypotheses(t, 0, {2, 9}), InvalidCover);
  }

  TEST_CASE("zero-probability hypotheses") {
    const JointTable gap(Universe({{"h", {"a", "b", "c"}}, {"u", {"0", "1"}}}), {0.5, 0.5, 0.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(restrict_to_hypotheses(gap, 0, {1, 2}), ZeroProbabilityEvidence);
  }

  TEST_CASE("cover validation") {
    const Universe u = fixtures::figure2_table().universe();
    CHECK_NOTHROW(validate_cover(u, fixtures::figure2_cover()));
    CHECK_THROWS_AS(validate_cover(u, {0, {{0, 1}, {2, 3}}}), InvalidCover);
    CHECK_THROWS_AS(validate_cover(u, {0, {}}), InvalidCover);
    CHECK_THROWS_AS(validate_cover(u, {9, {{0, 1}}}), InvalidCover);
  }

  TEST_CASE("xor relabelled: related keeps y, relevant drops it") {
    const auto t = fixtures::xor_table();
    const auto one = build_local(t, 0, {0, 1}, SimilarityType::Related);
    const auto two = build_local(t, 0, {0, 1}, SimilarityType::Relevant);
    CHECK(one.included == VarSet::of({1, 2}));
    CHECK(two.included == VarSet::of({2}));
    CHECK(one.dag.order().front() == 0);
    const auto eq = types_equivalent(t, {0, {{0, 1}}});
    CHECK_FALSE(eq.equivalent);
    CHECK(eq.divergence == std::vector<VarSet>{VarSet::of({1})});
  }

  TEST_CASE("a variable independent of everything is excluded") {
    // a depends on h; b is independent of both.
    const JointTable t(Universe::binary({"h", "a", "b"}),
                       {0.5 * 0.2 * 0.6, 0.5 * 0.2 * 0.4, 0.5 * 0.8 * 0.6, 0.5 * 0.8 * 0.4,
                        0.5 * 0.7 * 0.6, 0.5 * 0.7 * 0.4, 0.5 * 0.3 * 0.6, 0.5 * 0.3 * 0.4});
    for (auto type : {SimilarityType::Related, SimilarityType::Relevant}) {
      CHECK(build_local(t, 0, {0, 1}, type).included == VarSet::of({1}));
    }
  }

  TEST_CASE("alarm-style fixture") {
    const auto t = fixtures::figure2_table();
    const auto& u = t.universe();
    for (auto type : {SimilarityType::Related, SimilarityType::Relevant}) {
      const auto net = build_similarity(t, fixtures::figure2_cover(), type);
      REQUIRE(net.locals.size() == 3);
      CHECK(net.locals[0].included == u.set_of({"u1", "u2", "u3", "u5"}));
      CHECK(net.locals[1].included == u.set_of({"u3", "u4", "u5"}));
      CHECK(net.locals[2].included == u.set_of({"u1"}));
      for (const auto& local : net.locals) {
        CHECK(local.dag.universe().name(local.dag.order().front()) == "h");
        CHECK(factorization_residual(local_marginal(t, 0, local), local.dag) < 1e-9);
      }
    }
    CHECK(types_equivalent(t, fixtures::figure2_cover()).equivalent);
  }

  TEST_CASE("single finding plus hypothesis") {
    const JointTable t(Universe::binary({"h", "u"}), {0.1, 0.4, 0.3, 0.2});
    CHECK(types_equivalent(t, {0, {{0, 1}}}).equivalent);
  }

  TEST_CASE("deterministic output") {
    const auto t = random_spb(5, 4);
    const auto a = build_similarity(t, {0, {{0, 1}}}, SimilarityType::Related);
    const auto b = build_similarity(t, {0, {{0, 1}}}, SimilarityType::Related);
    CHECK(a.locals[0].dag == b.locals[0].dag);
    CHECK(a.locals[0].included == b.locals[0].included);
  }
}

TEST_SUITE("similarity properties") {
  TEST_CASE("relevant variables are related; equal sets on positive binary tables") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto t = seed % 2 ? random_block_spb(5, seed) : random_spb(4, seed);
      const HypothesisCover cover{0, {{0, 1}}};
      const auto one = build_similarity(t, cover, SimilarityType::Related);
      const auto two = build_similarity(t, cover, SimilarityType::Relevant);
      CHECK(two.locals[0].included.subset_of(one.locals[0].included));
      CHECK(one.locals[0].included == two.locals[0].included);
      CHECK(factorization_residual(local_marginal(t, 0, one.locals[0]), one.locals[0].dag) < 1e-9);
    }
  }
}
