#include "graphoid/json_io.hpp"

#include <fstream>
#include <sstream>

#include "graphoid/errors.hpp"

namespace graphoid::io {
namespace {

template <class F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Variable variable_from_json(const Json& v) {
  if (v.is_string()) return {v.get<std::string>(), {}};
  Variable out{field(v, "name").get<std::string>(), {}};
  if (v.contains("values")) out.values = v.at("values").get<std::vector<std::string>>();
  return out;
}

Universe universe_from_json(const Json& j) {
  const auto& list = field(j, "variables");
  if (!list.is_array()) throw ParseError("'variables' must be an array");
  std::vector<Variable> vars;
  for (const auto& v : list) vars.push_back(variable_from_json(v));
  return Universe(std::move(vars));
}

Json names_json(const Universe& u) {
  Json out = Json::array();
  for (const auto& v : u.variables()) out.push_back(v.name);
  return out;
}

Json trail_json(const Universe& u, const Trail& t) {
  Json nodes = Json::array(), links = Json::array();
  for (auto n : t.nodes) nodes.push_back(u.name(n));
  for (const auto& l : t.links) links.push_back({{"parent", u.name(l.parent)}, {"child", u.name(l.child)}});
  return {{"nodes", nodes}, {"links", links}};
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

Json set_to_json(const Universe& u, VarSet s) {
  Json out = Json::array();
  for (auto i : s.members()) out.push_back(u.name(i));
  return out;
}

VarSet set_from_json(const Universe& u, const Json& j) {
  return parsing("variable set", [&] {
    VarSet s;
    for (const auto& name : j) s |= VarSet::single(u.index_of(name.get<std::string>()));
    return s;
  });
}

Json to_json(const DependencyModel& model) {
  const Universe& u = model.universe();
  Json triplets = Json::array();
  for (const auto& t : model.triplets()) {
    triplets.push_back({{"x", set_to_json(u, t.x)}, {"y", set_to_json(u, t.y)}, {"z", set_to_json(u, t.z)}});
  }
  return {{"variables", names_json(u)}, {"triplets", triplets}};
}

Json to_json(const JointTable& table) {
  Json vars = Json::array();
  for (const auto& v : table.universe().variables()) vars.push_back({{"name", v.name}, {"values", v.values}});
  return {{"variables", vars}, {"probs", std::vector<double>(table.probs().begin(), table.probs().end())}};
}

Json to_json(const GaussianModel& g) {
  const auto n = static_cast<Eigen::Index>(g.universe().size());
  std::vector<double> mean(g.mean().data(), g.mean().data() + n);
  Json cov = Json::array();
  for (Eigen::Index r = 0; r < n; ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < n; ++c) row.push_back(g.covariance()(r, c));
    cov.push_back(row);
  }
  return {{"variables", names_json(g.universe())}, {"mean", mean}, {"cov", cov}};
}

Json to_json(const Dag& dag) {
  const Universe& u = dag.universe();
  Json order = Json::array();
  for (auto i : dag.order()) order.push_back(u.name(i));
  Json parents = Json::object();
  for (auto i : dag.order()) {
    if (!dag.parents(i).empty()) parents[u.name(i)] = set_to_json(u, dag.parents(i));
  }
  return {{"order", order}, {"parents", parents}};
}

DependencyModel model_from_json(const Json& j) {
  return parsing("dependency model", [&] {
    Universe u = universe_from_json(j);
    DependencyModel model(u);
    for (const auto& t : field(j, "triplets")) {
      model.insert({set_from_json(u, field(t, "x")), set_from_json(u, field(t, "y")), set_from_json(u, field(t, "z"))});
    }
    return model;
  });
}

JointTable table_from_json(const Json& j) {
  return parsing("joint table", [&] {
    return JointTable(universe_from_json(j), field(j, "probs").get<std::vector<double>>());
  });
}

GaussianModel gaussian_from_json(const Json& j) {
  return parsing("Gaussian model", [&] {
    Universe u = universe_from_json(j);
    const auto mean = field(j, "mean").get<std::vector<double>>();
    const auto rows = field(j, "cov").get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(u.size());
    if (static_cast<Eigen::Index>(mean.size()) != n || static_cast<Eigen::Index>(rows.size()) != n) {
      throw InvalidDistribution("mean and covariance must match the number of variables");
    }
    Eigen::VectorXd m(n);
    Eigen::MatrixXd c(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      m(r) = mean[r];
      if (static_cast<Eigen::Index>(rows[r].size()) != n) throw InvalidDistribution("covariance must be square");
      for (Eigen::Index k = 0; k < n; ++k) c(r, k) = rows[r][k];
    }
    return GaussianModel(std::move(u), std::move(m), std::move(c));
  });
}

Dag dag_from_json(const Json& j, const Universe& u) {
  return parsing("network", [&] {
    Order order;
    for (const auto& name : field(j, "order")) order.push_back(u.index_of(name.get<std::string>()));
    std::vector<VarSet> parents(u.size());
    if (j.contains("parents")) {
      for (const auto& [child, ps] : j.at("parents").items()) parents[u.index_of(child)] = set_from_json(u, ps);
    }
    return Dag(u, std::move(order), std::move(parents));
  });
}

Dag dag_from_json(const Json& j) {
  const auto names = parsing("network", [&] { return field(j, "order").get<std::vector<std::string>>(); });
  return dag_from_json(j, Universe::named(names));
}

CiOracle::Backend backend_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("probs")) return table_from_json(j);
  if (j.contains("cov")) return gaussian_from_json(j);
  if (j.contains("triplets")) return model_from_json(j);
  throw ParseError("unrecognised artifact: expected \"probs\", \"cov\" or \"triplets\"");
}

CiOracle oracle_from_json(const Json& j) {
  return std::visit([](auto&& b) { return CiOracle(std::move(b)); }, backend_from_json(j));
}

Json to_json(const Universe& u, std::size_t x, std::size_t y, const RelationVerdict& v) {
  Json witness = nullptr;
  if (const auto* z = std::get_if<VarSet>(&v.witness)) {
    witness = {{"kind", "conditioning_set"}, {"z", set_to_json(u, *z)}};
  } else if (const auto* p = std::get_if<Bipartition>(&v.witness)) {
    witness = {{"kind", "partition"}, {"first", set_to_json(u, p->first)}, {"second", set_to_json(u, p->second)}};
  } else if (const auto* t = std::get_if<Trail>(&v.witness)) {
    witness = {{"kind", "trail"}, {"trail", trail_json(u, *t)}};
  }
  return {{"relation", relation_name(v.relation)}, {"x", u.name(x)}, {"y", u.name(y)}, {"holds", v.holds},
          {"witness", witness}};
}

Json to_json(const Universe& u, const PartitionTriple& pt) {
  return {{"x1", set_to_json(u, pt.x1)}, {"x2", set_to_json(u, pt.x2)}, {"y1", set_to_json(u, pt.y1)},
          {"y2", set_to_json(u, pt.y2)}, {"z1", set_to_json(u, pt.z1)}, {"z2", set_to_json(u, pt.z2)},
          {"e", u.name(pt.e)},           {"e_values", {pt.e_first, pt.e_second}}};
}

Json to_json(const CheckResult& r) {
  return {{"outcome", outcome_name(r.outcome)},
          {"antecedents", {r.antecedents[0], r.antecedents[1], r.antecedents[2]}},
          {"r1_side", r.r1_side},
          {"r2_side", r.r2_side}};
}

Json to_json(const Universe& u, const SimilarityNetwork& net) {
  Json locals = Json::array();
  for (const auto& local : net.locals) {
    locals.push_back({{"hypotheses", local.hypotheses},
                      {"included", set_to_json(u, local.included)},
                      {"dag", to_json(local.dag)}});
  }
  return {{"h", u.name(net.cover.h)}, {"type", static_cast<int>(net.type)}, {"locals", locals}};
}

Json to_json(const Universe& u, const EquivalenceReport& report) {
  Json divergence = Json::array();
  for (VarSet s : report.divergence) divergence.push_back(set_to_json(u, s));
  return {{"equivalent", report.equivalent}, {"divergence", divergence}};
}

HypothesisCover cover_from_json(const Json& j, const Universe& u) {
  return parsing("hypothesis cover", [&] {
    HypothesisCover cover;
    cover.h = u.index_of(field(j, "h").get<std::string>());
    const auto& labels = u.variable(cover.h).values;
    for (const auto& group : field(j, "subsets")) {
      std::vector<std::size_t> values;
      for (const auto& v : group) {
        if (v.is_number_integer()) {
          if (v.get<long long>() < 0) throw InvalidCover("negative value index for '" + u.name(cover.h) + "'");
          values.push_back(v.get<std::size_t>());
          continue;
        }
        const auto label = v.get<std::string>();
        const auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw InvalidCover("unknown value '" + label + "' of '" + u.name(cover.h) + "'");
        values.push_back(static_cast<std::size_t>(it - labels.begin()));
      }
      cover.subsets.push_back(std::move(values));
    }
    validate_cover(u, cover);
    return cover;
  });
}

}  // namespace graphoid::io
