#pragma once

#include <string>

#include "json.hpp"

#include "graphoid/bayesnet.hpp"
#include "graphoid/distribution.hpp"
#include "graphoid/model.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/relevance.hpp"
#include "graphoid/simnet.hpp"

namespace graphoid::io {

// Objects keep their fields in insertion order, so dumps are stable.
using Json = nlohmann::ordered_json;

// Throws ParseError when the file is unreadable or not JSON.
Json read_json_file(const std::string& path);
// Two-space indent and a trailing newline. Throws ParseError when the file
// cannot be written.
void write_json_file(const std::string& path, const Json& j);

// Sets are arrays of names in universe order.
Json set_to_json(const Universe& u, VarSet s);
// Throws ParseError or UnknownVariable.
VarSet set_from_json(const Universe& u, const Json& j);

Json to_json(const DependencyModel& model);
Json to_json(const JointTable& table);
Json to_json(const GaussianModel& g);
Json to_json(const Dag& dag);

// Model, table and Gaussian parsers validate their input and throw ParseError
// on structural problems, or the library's own errors on semantic ones.
DependencyModel model_from_json(const Json& j);
JointTable table_from_json(const Json& j);
GaussianModel gaussian_from_json(const Json& j);
// Names resolve against u.
Dag dag_from_json(const Json& j, const Universe& u);
// Universe inferred from the order, as unlabelled variables.
Dag dag_from_json(const Json& j);

// Detects the kind of artifact from its keys: "probs", "cov" or "triplets".
CiOracle::Backend backend_from_json(const Json& j);
CiOracle oracle_from_json(const Json& j);

Json to_json(const Universe& u, std::size_t x, std::size_t y, const RelationVerdict& v);
Json to_json(const Universe& u, const PartitionTriple& pt);
Json to_json(const CheckResult& r);
Json to_json(const Universe& u, const SimilarityNetwork& net);
Json to_json(const Universe& u, const EquivalenceReport& report);

// {"h": name, "subsets": [[value, ...], ...]}; values are labels or indices.
HypothesisCover cover_from_json(const Json& j, const Universe& u);

}  // namespace graphoid::io
