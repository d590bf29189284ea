#include "graphoid/oracle.hpp"

#include <string>

#include "graphoid/errors.hpp"

namespace graphoid {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_tolerance(double tolerance) {
  if (!(tolerance >= 0.0)) throw InvalidSets("oracle tolerance must be non-negative");
}

}  // namespace

CiOracle::CiOracle(JointTable table, double tolerance) : backend_(std::move(table)), tolerance_(tolerance) {
  require_tolerance(tolerance);
}

CiOracle::CiOracle(GaussianModel gaussian, double tolerance) : backend_(std::move(gaussian)), tolerance_(tolerance) {
  require_tolerance(tolerance);
}

CiOracle::CiOracle(DependencyModel model) : backend_(std::move(model)) {
  const auto closed = graphoid_closure(std::get<DependencyModel>(backend_));
  auto index = std::make_shared<TripletIndex>(closed.universe().size());
  for (const auto& t : closed.triplets()) index->set(t);
  answers_ = std::move(index);
}

const Universe& CiOracle::universe() const {
  return std::visit([](const auto& b) -> const Universe& { return b.universe(); }, backend_);
}

double CiOracle::evaluate(const Triplet& t) const {
  return std::visit(Overloaded{
                        [&](const JointTable& table) { return ci_discrepancy_discrete(table, t.x, t.y, t.z, tolerance_); },
                        [&](const GaussianModel& g) { return ci_discrepancy_gaussian(g, t.x, t.y, t.z); },
                        [&](const DependencyModel&) -> double { return answers_->test(t) ? 0.0 : 1.0; },
                    },
                    backend_);
}

bool CiOracle::holds(const Triplet& t) const {
  const Universe& u = universe();
  if (!t.mentioned().subset_of(u.all()) || !t.disjoint()) {
    throw InvalidSets("invalid independence query " + format_triplet(u, t));
  }
  if (answers_) return answers_->test(t);
  return evaluate(t) <= tolerance_;
}

double CiOracle::discrepancy(const Triplet& t) const {
  const Universe& u = universe();
  if (!t.mentioned().subset_of(u.all()) || !t.disjoint()) {
    throw InvalidSets("invalid independence query " + format_triplet(u, t));
  }
  return evaluate(t);
}

CiOracle CiOracle::tabulated() const {
  if (answers_) return *this;
  const std::size_t n = universe().size();
  if (n > kMaxTabulatedVariables) {
    throw UniverseTooLarge("tabulation supports at most " + std::to_string(kMaxTabulatedVariables) + " variables");
  }
  auto index = std::make_shared<TripletIndex>(n);
  for (std::uint64_t c = 0; c < index->capacity(); ++c) {
    const Triplet t = TripletIndex::decode(c, n);
    if (evaluate(t) <= tolerance_) index->set(t);
  }
  CiOracle copy = *this;
  copy.answers_ = std::move(index);
  return copy;
}

DependencyModel extract_model(const CiOracle& oracle) {
  const std::size_t n = oracle.universe().size();
  if (n > kMaxExtractVariables) {
    throw UniverseTooLarge("extract_model supports at most " + std::to_string(kMaxExtractVariables) + " variables");
  }
  std::set<Triplet> out;
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  for (std::uint64_t c = 0; c < count; ++c) {
    const Triplet t = TripletIndex::decode(c, n);
    if (oracle.holds(t)) out.insert(t);
  }
  return DependencyModel(oracle.universe(), std::move(out));
}

}  // namespace graphoid
