#include "graphoid/fixtures.hpp"

#include <array>

namespace graphoid::fixtures {

JointTable xor_table() {
  Universe u({{"x", {"head", "tail"}}, {"y", {"head", "tail"}}, {"z", {"hh", "ht", "th", "tt"}}});
  std::vector<double> probs(16, 0.0);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) probs[(x * 2 + y) * 4 + (x * 2 + y)] = 0.25;
  }
  return JointTable(std::move(u), std::move(probs));
}

Dag figure1_dag() {
  Universe u = Universe::binary({"u1", "u2", "u3", "u4", "u5"});
  Order order = canonical_order(u);
  std::vector<VarSet> parents{VarSet{}, VarSet::of({0}), VarSet::of({0}), VarSet::of({1, 2}), VarSet::of({3})};
  return Dag(std::move(u), std::move(order), std::move(parents));
}

DependencyModel burglary_model() {
  Universe u = Universe::named({"burglary", "sensorA", "sensorB", "alarm", "patrol"});
  std::set<Triplet> t{
      {u.set_of({"sensorA"}), u.set_of({"sensorB"}), u.set_of({"burglary"})},
      {u.set_of({"alarm"}), u.set_of({"burglary"}), u.set_of({"sensorA", "sensorB"})},
      {u.set_of({"patrol"}), u.set_of({"burglary", "sensorA", "sensorB"}), u.set_of({"alarm"})},
  };
  return DependencyModel(std::move(u), std::move(t));
}

JointTable figure2_table() {
  std::vector<Variable> vars{{"h", {"h1", "h2", "h3", "h4", "h5"}}};
  for (const char* name : {"u1", "u2", "u3", "u4", "u5"}) vars.push_back({name, {"0", "1"}});
  Universe u(std::move(vars));

  // Probability of value 1 for each finding, per hypothesis.
  constexpr std::array<double, 5> u1{0.2, 0.5, 0.4, 0.4, 0.85};
  constexpr std::array<std::array<double, 2>, 5> u2{{{0.3, 0.8}, {0.6, 0.1}, {0.35, 0.35}, {0.35, 0.35}, {0.35, 0.35}}};
  constexpr std::array<double, 5> u3{0.3, 0.6, 0.15, 0.75, 0.75};
  constexpr std::array<double, 5> u4{0.5, 0.5, 0.5, 0.2, 0.2};
  // u5 follows u3 under h1..h3 and u4 under h4, h5.
  constexpr std::array<std::array<double, 2>, 5> u5{{{0.2, 0.9}, {0.7, 0.4}, {0.1, 0.6}, {0.3, 0.8}, {0.3, 0.8}}};

  auto bern = [](double p1, std::size_t v) { return v == 1 ? p1 : 1.0 - p1; };
  std::vector<double> probs;
  probs.reserve(5 * 32);
  for (std::size_t h = 0; h < 5; ++h) {
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t c = 0; c < 2; ++c) {
          for (std::size_t d = 0; d < 2; ++d) {
            for (std::size_t e = 0; e < 2; ++e) {
              const std::size_t driver = h < 3 ? c : d;
              probs.push_back(0.2 * bern(u1[h], a) * bern(u2[h][a], b) * bern(u3[h], c) * bern(u4[h], d) *
                              bern(u5[h][driver], e));
            }
          }
        }
      }
    }
  }
  return JointTable(std::move(u), std::move(probs));
}

HypothesisCover figure2_cover() { return {0, {{0, 1, 2}, {2, 3}, {3, 4}}}; }

}  // namespace graphoid::fixtures
