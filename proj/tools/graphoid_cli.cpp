#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graphoid/bayesnet.hpp"
#include "graphoid/errors.hpp"
#include "graphoid/fixtures.hpp"
#include "graphoid/json_io.hpp"
#include "graphoid/relevance.hpp"
#include "graphoid/simnet.hpp"
#include "graphoid/suites.hpp"

namespace {

using graphoid::io::Json;
namespace gi = graphoid::io;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& list, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

graphoid::VarSet names_to_set(const graphoid::Universe& u, const std::string& list) {
  const auto names = split(list);
  return u.set_of(names);
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    gi::write_json_file(out, j);
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GRAPHOID_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return seed;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("GRAPHOID_SEED is not an unsigned integer: ") + env);
  }
}

std::string edge_list(const graphoid::Dag& dag) {
  std::string out;
  for (const auto& [p, c] : dag.edges()) {
    if (!out.empty()) out += ", ";
    out += dag.universe().name(p) + "->" + dag.universe().name(c);
  }
  return out.empty() ? "(none)" : out;
}

// ------------------------------------------------------------------ ci

struct CiArgs {
  std::string file, x, y, given;
  double tolerance = -1.0;
};

int run_ci(const CiArgs& a) {
  const auto backend = gi::backend_from_json(gi::read_json_file(a.file));
  auto oracle = std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, graphoid::DependencyModel>) {
          return graphoid::CiOracle(b);
        } else {
          return a.tolerance >= 0.0 ? graphoid::CiOracle(b, a.tolerance) : graphoid::CiOracle(b);
        }
      },
      backend);
  const auto& u = oracle.universe();
  const graphoid::Triplet t{names_to_set(u, a.x), names_to_set(u, a.y), names_to_set(u, a.given)};
  const bool holds = oracle.holds(t);
  std::cout << (holds ? "holds" : "fails") << " discrepancy=" << oracle.discrepancy(t) << '\n';
  return holds ? kOk : kFails;
}

// ------------------------------------------------------------ build-net

struct BuildArgs {
  std::string file, order, out;
  bool json = false;
};

int run_build_net(const BuildArgs& a) {
  const auto oracle = gi::oracle_from_json(gi::read_json_file(a.file));
  const auto& u = oracle.universe();
  graphoid::Order order;
  if (a.order.empty()) {
    order = graphoid::canonical_order(u);
  } else {
    for (const auto& name : split(a.order)) {
      const auto i = u.find(name);
      if (!i) throw graphoid::InvalidOrder("order names unknown variable '" + name + "'");
      order.push_back(*i);
    }
  }
  const auto dag = graphoid::build_network(oracle, order);
  if (!a.out.empty()) gi::write_json_file(a.out, gi::to_json(dag));
  if (a.json) {
    std::cout << gi::to_json(dag).dump(2) << '\n';
    return kOk;
  }
  std::cout << "edges: " << edge_list(dag) << '\n';
  std::cout << "components:";
  for (auto c : graphoid::connected_components(dag)) std::cout << ' ' << u.format(c);
  std::cout << '\n';
  return kOk;
}

// ----------------------------------------------------------------- dsep

struct DsepArgs {
  std::string file, x, y, given;
};

int run_dsep(const DsepArgs& a) {
  const auto dag = gi::dag_from_json(gi::read_json_file(a.file));
  const auto& u = dag.universe();
  const bool separated = graphoid::d_separated(dag, {names_to_set(u, a.x), names_to_set(u, a.y), names_to_set(u, a.given)});
  std::cout << (separated ? "separated" : "connected") << '\n';
  return separated ? kOk : kFails;
}

// ------------------------------------------------------------ relations

struct RelationsArgs {
  std::string file, x, y, out;
};

int run_relations(const RelationsArgs& a) {
  const auto oracle = gi::oracle_from_json(gi::read_json_file(a.file));
  const auto& u = oracle.universe();
  const auto x = u.index_of(a.x), y = u.index_of(a.y);
  Json verdicts = Json::array({gi::to_json(u, x, y, graphoid::mutually_irrelevant(oracle, x, y)),
                               gi::to_json(u, x, y, graphoid::uncoupled(oracle, x, y)),
                               gi::to_json(u, x, y, graphoid::unrelated(oracle, x, y))});
  emit(verdicts, a.out);
  return kOk;
}

// ----------------------------------------------------------- transitive

int run_transitive(const std::string& file) {
  const auto oracle = gi::oracle_from_json(gi::read_json_file(file));
  const auto r = graphoid::is_transitive(oracle);
  if (r.transitive) {
    std::cout << "transitive\n";
    return kOk;
  }
  const auto& u = oracle.universe();
  const auto& w = *r.witness;
  std::cout << "not transitive: (" << u.name(w[0]) << ", " << u.name(w[1]) << ", " << u.name(w[2]) << ")\n";
  return kFails;
}

// ---------------------------------------------------------- clean-check

struct CleanArgs {
  std::string file, e, x1, y1, z1, values;
};

int run_clean_check(const CleanArgs& a) {
  const auto backend = gi::backend_from_json(gi::read_json_file(a.file));
  Json result;
  bool violation = false;
  auto finish = [&](const graphoid::Universe& u, const graphoid::PartitionTriple& pt, const graphoid::CheckResult& r) {
    violation = r.outcome == graphoid::CleanOutcome::Violation;
    result = {{"partition", gi::to_json(u, pt)}, {"result", gi::to_json(r)}};
  };
  if (const auto* table = std::get_if<graphoid::JointTable>(&backend)) {
    const auto& u = table->universe();
    const auto e = u.index_of(a.e);
    std::size_t first = 0, second = 1;
    if (!a.values.empty()) {
      const auto labels = split(a.values);
      if (labels.size() != 2) throw graphoid::InvalidPartition("--values takes exactly two values of e");
      const auto& dom = u.variable(e).values;
      auto find = [&](const std::string& label) {
        const auto it = std::find(dom.begin(), dom.end(), label);
        if (it == dom.end()) throw graphoid::InvalidPartition("unknown value '" + label + "' of '" + a.e + "'");
        return static_cast<std::size_t>(it - dom.begin());
      };
      first = find(labels[0]);
      second = find(labels[1]);
    }
    const auto pt = graphoid::make_partition_triple(u, e, names_to_set(u, a.x1), names_to_set(u, a.y1),
                                                    names_to_set(u, a.z1), first, second);
    finish(u, pt, graphoid::check_clean(*table, pt));
  } else if (const auto* g = std::get_if<graphoid::GaussianModel>(&backend)) {
    const auto& u = g->universe();
    const auto pt = graphoid::make_partition_triple(u, u.index_of(a.e), names_to_set(u, a.x1),
                                                    names_to_set(u, a.y1), names_to_set(u, a.z1));
    finish(u, pt, graphoid::check_clean(*g, pt));
  } else {
    throw graphoid::ParseError("clean-check needs a joint table or a Gaussian model");
  }
  std::cout << result.dump(2) << '\n';
  return violation ? kFails : kOk;
}

// --------------------------------------------------------------- simnet

struct SimnetArgs {
  std::string file, cover, h, subsets, type = "1", out;
};

int run_simnet(const SimnetArgs& a) {
  const auto table = gi::table_from_json(gi::read_json_file(a.file));
  const auto& u = table.universe();
  graphoid::HypothesisCover cover;
  if (!a.cover.empty()) {
    cover = gi::cover_from_json(gi::read_json_file(a.cover), u);
  } else {
    if (a.h.empty()) throw graphoid::InvalidCover("give --cover FILE or --hypothesis NAME");
    Json j{{"h", a.h}, {"subsets", Json::array()}};
    if (a.subsets.empty()) {
      j["subsets"].push_back(u.variable(u.index_of(a.h)).values);
    } else {
      for (const auto& group : split(a.subsets, ';')) j["subsets"].push_back(split(group));
    }
    cover = gi::cover_from_json(j, u);
  }
  if (a.type == "both") {
    const auto report = graphoid::types_equivalent(table, cover);
    emit(gi::to_json(u, report), a.out);
    return report.equivalent ? kOk : kFails;
  }
  if (a.type != "1" && a.type != "2") throw std::invalid_argument("--type must be 1, 2 or both");
  const auto type = a.type == "1" ? graphoid::SimilarityType::Related : graphoid::SimilarityType::Relevant;
  emit(gi::to_json(u, graphoid::build_similarity(table, cover, type)), a.out);
  return kOk;
}

// -------------------------------------------------------------- randgen

struct RandgenArgs {
  std::string kind, out;
  std::size_t n = 4;
  std::optional<std::uint64_t> seed;
};

int run_randgen(const RandgenArgs& a) {
  namespace fx = graphoid::fixtures;
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  Json j;
  if (a.kind == "spb") j = gi::to_json(graphoid::random_spb(a.n, seed));
  else if (a.kind == "block-spb") j = gi::to_json(graphoid::random_block_spb(a.n, seed));
  else if (a.kind == "gaussian") j = gi::to_json(graphoid::random_gaussian(a.n, seed));
  else if (a.kind == "block-gaussian") j = gi::to_json(graphoid::random_block_gaussian(a.n, seed));
  else if (a.kind == "xor") j = gi::to_json(fx::xor_table());
  else if (a.kind == "figure1") j = gi::to_json(fx::figure1_dag());
  else if (a.kind == "burglary") j = gi::to_json(fx::burglary_model());
  else if (a.kind == "figure2") j = gi::to_json(fx::figure2_table());
  else throw std::invalid_argument("unknown kind '" + a.kind + "'");
  emit(j, a.out);
  return kOk;
}

// ---------------------------------------------------------------- suite

struct SuiteArgs {
  std::string name, out;
  std::optional<std::uint64_t> seed;
  std::size_t n_vars = 0, samples = 0;
};

int run_suite(const SuiteArgs& a) {
  if (!graphoid::is_suite(a.name)) {
    std::cerr << "error: unknown suite '" << a.name << "'; known suites:";
    for (auto s : graphoid::suite_names()) std::cerr << ' ' << s;
    std::cerr << '\n';
    return kUsage;
  }
  graphoid::SuiteConfig config{a.seed ? *a.seed : default_seed(), a.n_vars, a.samples};
  const auto start = std::chrono::steady_clock::now();
  const auto report = graphoid::run_suite(a.name, config);
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;

  const std::string out = a.out.empty() ? "suite-" + a.name + ".json" : a.out;
  gi::write_json_file(out, report.to_json());
  std::cout << "suite " << report.suite << ": " << report.cases << " cases, " << report.failures.size()
            << " failures, seed " << report.seed << ", n_vars " << report.n_vars << ", samples " << report.samples
            << ", " << wall.count() << " s\n";
  for (const auto& f : report.failures) {
    std::cout << "  " << f.case_id << ": expected " << f.expected << ", got " << f.actual << '\n';
  }
  std::cout << "report: " << out << '\n';
  return report.passed() ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional-independence reasoning over small distributions and graphoids"};
  app.require_subcommand(1);
  int code = kOk;

  CiArgs ci;
  auto* ci_cmd = app.add_subcommand("ci", "Test (X, Y | Z) against a table, Gaussian or dependency model");
  ci_cmd->add_option("file", ci.file, "Distribution or model JSON")->required();
  ci_cmd->add_option("x", ci.x, "Comma-separated X")->required();
  ci_cmd->add_option("y", ci.y, "Comma-separated Y")->required();
  ci_cmd->add_option("--given", ci.given, "Comma-separated Z");
  ci_cmd->add_option("--tolerance", ci.tolerance, "Override the backend tolerance");
  ci_cmd->callback([&] { code = run_ci(ci); });

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build-net", "Build the minimal network under a construction order");
  build_cmd->add_option("file", build.file, "Distribution or model JSON")->required();
  build_cmd->add_option("--order", build.order, "Comma-separated construction order (default: listing order)");
  build_cmd->add_option("--out", build.out, "Write the network JSON here");
  build_cmd->add_flag("--json", build.json, "Print the network JSON instead of a summary");
  build_cmd->callback([&] { code = run_build_net(build); });

  DsepArgs dsep;
  auto* dsep_cmd = app.add_subcommand("dsep", "Test d-separation in a network");
  dsep_cmd->add_option("file", dsep.file, "Network JSON")->required();
  dsep_cmd->add_option("x", dsep.x, "Comma-separated X")->required();
  dsep_cmd->add_option("y", dsep.y, "Comma-separated Y")->required();
  dsep_cmd->add_option("--given", dsep.given, "Comma-separated Z");
  dsep_cmd->callback([&] { code = run_dsep(dsep); });

  RelationsArgs rel;
  auto* rel_cmd = app.add_subcommand("relations", "Mutual irrelevance, uncoupledness and unrelatedness of a pair");
  rel_cmd->add_option("file", rel.file, "Distribution or model JSON")->required();
  rel_cmd->add_option("x", rel.x, "First variable")->required();
  rel_cmd->add_option("y", rel.y, "Second variable")->required();
  rel_cmd->add_option("--out", rel.out, "Write the verdicts here");
  rel_cmd->callback([&] { code = run_relations(rel); });

  std::string transitive_file;
  auto* tr_cmd = app.add_subcommand("transitive", "Check whether relevance is transitive");
  tr_cmd->add_option("file", transitive_file, "Distribution or model JSON")->required();
  tr_cmd->callback([&] { code = run_transitive(transitive_file); });

  CleanArgs clean;
  auto* clean_cmd = app.add_subcommand("clean-check", "Check the three-partition implication for one partition triple");
  clean_cmd->add_option("file", clean.file, "Joint table or Gaussian JSON")->required();
  clean_cmd->add_option("--e", clean.e, "Conditioning variable")->required();
  clean_cmd->add_option("--x1", clean.x1, "First half of the X split")->required();
  clean_cmd->add_option("--y1", clean.y1, "First half of the Y split")->required();
  clean_cmd->add_option("--z1", clean.z1, "First half of the Z split")->required();
  clean_cmd->add_option("--values", clean.values, "Two values of e, e.g. 0,1 (default: first two)");
  clean_cmd->callback([&] { code = run_clean_check(clean); });

  SimnetArgs sim;
  auto* sim_cmd = app.add_subcommand("simnet", "Build a similarity network or compare the two types");
  sim_cmd->add_option("file", sim.file, "Joint table JSON")->required();
  sim_cmd->add_option("--cover", sim.cover, "Cover JSON {\"h\":..., \"subsets\":[[...],...]}");
  sim_cmd->add_option("--hypothesis", sim.h, "Hypothesis variable");
  sim_cmd->add_option("--subsets", sim.subsets, "Value groups, e.g. h1,h2;h2,h3 (default: whole domain)");
  sim_cmd->add_option("--type", sim.type, "1, 2 or both");
  sim_cmd->add_option("--out", sim.out, "Write the JSON here");
  sim_cmd->callback([&] { code = run_simnet(sim); });

  RandgenArgs gen;
  auto* gen_cmd = app.add_subcommand("randgen", "Emit a random distribution or a builtin fixture as JSON");
  gen_cmd->add_option("kind", gen.kind, "spb, block-spb, gaussian, block-gaussian, xor, figure1, burglary, figure2")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Number of variables");
  gen_cmd->add_option("--seed", gen.seed, "Seed (default: GRAPHOID_SEED or 0)");
  gen_cmd->add_option("--out", gen.out, "Write the JSON here");
  gen_cmd->callback([&] { code = run_randgen(gen); });

  SuiteArgs suite;
  auto* suite_cmd = app.add_subcommand("suite", "Run a verification suite");
  suite_cmd->add_option("name", suite.name, "Suite name")->required();
  suite_cmd->add_option("--seed", suite.seed, "Seed (default: GRAPHOID_SEED or 0)");
  suite_cmd->add_option("--n-vars", suite.n_vars, "Universe size (0: suite default)");
  suite_cmd->add_option("--samples", suite.samples, "Number of random draws (0: suite default)");
  suite_cmd->add_option("--out", suite.out, "Report path (default: suite-<name>.json)");
  suite_cmd->callback([&] { code = run_suite(suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
