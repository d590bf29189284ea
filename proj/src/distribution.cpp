#include "graphoid/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphoid/errors.hpp"
#include "graphoid/rng.hpp"

namespace graphoid {
namespace {

// Walks all assignments of a mixed-radix space (last position fastest) while
// keeping running indices into any number of projected sub-spaces.
class Odometer {
 public:
  explicit Odometer(std::vector<std::size_t> dims) : dims_(std::move(dims)), digits_(dims_.size(), 0) {}

  // Starts tracking the index into the sub-space over the positions in keep.
  std::size_t track(VarSet keep) {
    std::vector<std::size_t> strides(dims_.size(), 0);
    std::size_t stride = 1;
    for (std::size_t j = dims_.size(); j-- > 0;) {
      if (keep.contains(j)) {
        strides[j] = stride;
        stride *= dims_[j];
      }
    }
    projections_.push_back({std::move(strides), 0});
    return projections_.size() - 1;
  }

  std::size_t index(std::size_t id) const { return projections_[id].current; }
  const std::vector<std::size_t>& digits() const { return digits_; }

  // Advances to the next assignment; false once every assignment was visited.
  bool next() {
    for (std::size_t j = dims_.size(); j-- > 0;) {
      if (digits_[j] + 1 < dims_[j]) {
        ++digits_[j];
        for (auto& p : projections_) p.current += p.strides[j];
        return true;
      }
      for (auto& p : projections_) p.current -= p.strides[j] * digits_[j];
      digits_[j] = 0;
    }
    return false;
  }

 private:
  struct Projection {
    std::vector<std::size_t> strides;
    std::size_t current;
  };
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> digits_;
  std::vector<Projection> projections_;
};

std::size_t space_size(std::span<const std::size_t> dims, VarSet keep) {
  std::size_t n = 1;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (keep.contains(j)) n *= dims[j];
  }
  return n;
}

std::vector<double> sum_onto(std::span<const double> p, const std::vector<std::size_t>& dims, VarSet keep) {
  std::vector<double> out(space_size(dims, keep), 0.0);
  Odometer od(dims);
  const auto id = od.track(keep);
  std::size_t i = 0;
  do {
    out[od.index(id)] += p[i++];
  } while (od.next());
  return out;
}

std::vector<std::size_t> domain_sizes(const Universe& u) {
  std::vector<std::size_t> dims(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) dims[i] = u.domain_size(i);
  return dims;
}

void validate_sets(const Universe& u, VarSet x, VarSet y, VarSet z) {
  if (!(x | y | z).subset_of(u.all())) throw InvalidSets("sets mention variables outside the universe");
  if (x.intersects(y) || x.intersects(z) || y.intersects(z)) {
    throw InvalidSets("sets must be pairwise disjoint: " + u.format(x) + ", " + u.format(y) + ", " + u.format(z));
  }
}

std::vector<Eigen::Index> positions(VarSet s) {
  std::vector<Eigen::Index> out;
  for (auto i : s.members()) out.push_back(static_cast<Eigen::Index>(i));
  return out;
}

Universe numbered_universe(std::span<const std::size_t> domain_sizes) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < domain_sizes.size(); ++i) {
    Variable v{"u" + std::to_string(i + 1), {}};
    for (std::size_t k = 0; k < domain_sizes[i]; ++k) v.values.push_back(std::to_string(k));
    vars.push_back(std::move(v));
  }
  return Universe(std::move(vars));
}

}  // namespace

JointTable::JointTable(Universe universe, std::vector<double> probs)
    : universe_(std::move(universe)), probs_(std::move(probs)) {
  std::size_t expected = 1;
  for (const auto& v : universe_.variables()) {
    if (v.values.empty()) throw InvalidDistribution("variable '" + v.name + "' has an empty domain");
    expected *= v.values.size();
  }
  if (probs_.size() != expected) {
    throw InvalidDistribution("table has " + std::to_string(probs_.size()) + " entries, expected " +
                              std::to_string(expected));
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw InvalidDistribution("table entries must be finite and non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidDistribution("table entries sum to " + std::to_string(total) + ", not 1");
  }
}

bool JointTable::strictly_positive() const {
  return std::all_of(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; });
}

std::size_t JointTable::index_of(std::span<const std::size_t> assignment) const {
  if (assignment.size() != universe_.size()) throw InvalidSets("assignment has the wrong number of values");
  std::size_t index = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= universe_.domain_size(i)) {
      throw InvalidSets("value index out of range for '" + universe_.name(i) + "'");
    }
    index = index * universe_.domain_size(i) + assignment[i];
  }
  return index;
}

std::vector<std::size_t> JointTable::assignment_of(std::size_t index) const {
  std::vector<std::size_t> out(universe_.size());
  for (std::size_t i = universe_.size(); i-- > 0;) {
    out[i] = index % universe_.domain_size(i);
    index /= universe_.domain_size(i);
  }
  return out;
}

std::vector<double> JointTable::marginal_probs(VarSet keep) const {
  if (!keep.subset_of(universe_.all())) throw UnknownVariable("marginal over variables outside the universe");
  if (keep == universe_.all()) return probs_;
  return sum_onto(probs_, domain_sizes(universe_), keep);
}

GaussianModel::GaussianModel(Universe universe, Eigen::VectorXd mean, Eigen::MatrixXd covariance)
    : universe_(std::move(universe)), mean_(std::move(mean)), covariance_(std::move(covariance)) {
  const auto n = static_cast<Eigen::Index>(universe_.size());
  if (mean_.size() != n || covariance_.rows() != n || covariance_.cols() != n) {
    throw InvalidDistribution("mean/covariance dimensions do not match the universe");
  }
  if (!mean_.allFinite() || !covariance_.allFinite()) throw InvalidDistribution("non-finite Gaussian parameters");
  if ((covariance_ - covariance_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidDistribution("covariance is not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(covariance_);
  if (llt.info() != Eigen::Success) throw InvalidDistribution("covariance is not positive definite");
}

double ci_discrepancy_discrete(const JointTable& table, VarSet x, VarSet y, VarSet z, double null_mass) {
  validate_sets(table.universe(), x, y, z);
  if (x.empty() || y.empty()) return 0.0;

  const VarSet s = x | y | z;
  const auto p_xyz = table.marginal_probs(s);
  std::vector<std::size_t> dims;
  for (auto i : s.members()) dims.push_back(table.universe().domain_size(i));
  const VarSet cx = compress(x, s), cy = compress(y, s), cz = compress(z, s);

  const auto p_yz = sum_onto(p_xyz, dims, cy | cz);
  const auto p_xz = sum_onto(p_xyz, dims, cx | cz);
  const auto p_z = sum_onto(p_xyz, dims, cz);

  Odometer od(dims);
  const auto yz = od.track(cy | cz), xz = od.track(cx | cz), zz = od.track(cz);
  double worst = 0.0;
  std::size_t i = 0;
  do {
    const double pz = p_z[od.index(zz)];
    const double pyz = p_yz[od.index(yz)];
    if (pz > null_mass && pyz > null_mass) {
      worst = std::max(worst, std::abs(p_xyz[i] / pyz - p_xz[od.index(xz)] / pz));
    }
    ++i;
  } while (od.next());
  return worst;
}

bool ci_holds_discrete(const JointTable& table, VarSet x, VarSet y, VarSet z, double tolerance) {
  return ci_discrepancy_discrete(table, x, y, z, tolerance) <= tolerance;
}

Eigen::MatrixXd conditional_cross_covariance(const GaussianModel& g, VarSet x, VarSet y, VarSet z) {
  validate_sets(g.universe(), x, y, z);
  const auto& cov = g.covariance();
  const auto xi = positions(x), yi = positions(y), zi = positions(z);
  Eigen::MatrixXd xy = cov(xi, yi);
  if (z.empty() || x.empty() || y.empty()) return xy;

  const Eigen::MatrixXd zz = cov(zi, zi);
  Eigen::LLT<Eigen::MatrixXd> llt(zz);
  if (llt.info() != Eigen::Success || llt.rcond() < kMinReciprocalCondition) {
    throw SingularConditioning("conditioning block " + g.universe().format(z) + " is numerically singular");
  }
  const Eigen::MatrixXd lzx = llt.matrixL().solve(Eigen::MatrixXd(cov(zi, xi)));
  const Eigen::MatrixXd lzy = llt.matrixL().solve(Eigen::MatrixXd(cov(zi, yi)));
  return xy - lzx.transpose() * lzy;
}

double ci_discrepancy_gaussian(const GaussianModel& g, VarSet x, VarSet y, VarSet z) {
  if (x.empty() || y.empty()) {
    validate_sets(g.universe(), x, y, z);
    return 0.0;
  }
  return conditional_cross_covariance(g, x, y, z).cwiseAbs().maxCoeff();
}

bool ci_holds_gaussian(const GaussianModel& g, VarSet x, VarSet y, VarSet z, double tolerance) {
  return ci_discrepancy_gaussian(g, x, y, z) <= tolerance;
}

JointTable condition_on(const JointTable& table, std::size_t var, std::size_t value) {
  const Universe& u = table.universe();
  if (var >= u.size()) throw UnknownVariable("conditioning variable outside the universe");
  if (value >= u.domain_size(var)) throw InvalidSets("value index out of range for '" + u.name(var) + "'");

  // Entries with var == value appear in the same relative order as in the
  // reduced table.
  std::size_t stride = 1;
  for (std::size_t j = var + 1; j < u.size(); ++j) stride *= u.domain_size(j);
  const std::size_t block = stride * u.domain_size(var);

  std::vector<double> out;
  out.reserve(table.size() / u.domain_size(var));
  double mass = 0.0;
  for (std::size_t base = 0; base < table.size(); base += block) {
    for (std::size_t k = 0; k < stride; ++k) {
      const double p = table.probs()[base + value * stride + k];
      out.push_back(p);
      mass += p;
    }
  }
  if (!(mass > 0.0)) {
    throw ZeroProbabilityEvidence("P(" + u.name(var) + " = " + u.variable(var).values[value] + ") = 0");
  }
  for (auto& p : out) p /= mass;
  return JointTable(u.subset(u.all() - VarSet::single(var)), std::move(out));
}

JointTable marginalize(const JointTable& table, VarSet keep) {
  if (keep.empty()) throw InvalidSets("marginalize: keep set is empty");
  if (!keep.subset_of(table.universe().all())) throw UnknownVariable("marginalize: unknown variable in keep set");
  return JointTable(table.universe().subset(keep), table.marginal_probs(keep));
}

JointTable random_positive_table(std::span<const std::size_t> domain_sizes, std::uint64_t seed) {
  Universe u = numbered_universe(domain_sizes);
  std::size_t total = 1;
  for (auto d : domain_sizes) {
    if (d == 0) throw InvalidDistribution("domain sizes must be positive");
    total *= d;
  }
  Rng rng(seed);
  std::vector<double> probs(total);
  for (auto& p : probs) p = kSpbEntryFloor + rng.uniform();
  const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (auto& p : probs) p /= sum;
  return JointTable(std::move(u), std::move(probs));
}

JointTable random_spb(std::size_t n, std::uint64_t seed) {
  if (n < 2 || n > 6) throw InvalidDistribution("random_spb supports 2..6 variables");
  const std::vector<std::size_t> dims(n, 2);
  return random_positive_table(dims, seed);
}

GaussianModel random_gaussian(std::size_t n, std::uint64_t seed) {
  if (n < 2 || n > 8) throw InvalidDistribution("random_gaussian supports 2..8 variables");
  Rng rng(seed);
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
  }
  Eigen::VectorXd mean(m);
  for (Eigen::Index i = 0; i < m; ++i) mean(i) = rng.uniform(-1.0, 1.0);
  Eigen::MatrixXd cov = a * a.transpose();
  cov = (0.5 * (cov + cov.transpose())).eval();
  cov.diagonal().array() += kGaussianRidge;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
  return GaussianModel(Universe::named(std::move(names)), std::move(mean), std::move(cov));
}

namespace {

// Block label per variable; roughly half as many labels as variables.
std::vector<std::size_t> random_blocks(std::size_t n, Rng& rng) {
  std::vector<std::size_t> label(n);
  for (auto& l : label) l = rng.below(std::max<std::size_t>(1, n / 2 + 1));
  return label;
}

}  // namespace

JointTable random_block_spb(std::size_t n, std::uint64_t seed) {
  if (n < 2 || n > 6) throw InvalidDistribution("random_block_spb supports 2..6 variables");
  Rng rng(seed);
  const auto label = random_blocks(n, rng);

  std::vector<VarSet> blocks;
  for (std::size_t b = 0; b < n; ++b) {
    VarSet members;
    for (std::size_t i = 0; i < n; ++i) {
      if (label[i] == b) members |= VarSet::single(i);
    }
    if (!members.empty()) blocks.push_back(members);
  }
  std::vector<std::vector<double>> factor;
  for (VarSet members : blocks) {
    std::vector<double> f(std::size_t{1} << members.size());
    double total = 0.0;
    for (auto& p : f) total += (p = kSpbEntryFloor + rng.uniform());
    for (auto& p : f) p /= total;
    factor.push_back(std::move(f));
  }

  const std::size_t size = std::size_t{1} << n;
  std::vector<double> probs(size);
  for (std::size_t index = 0; index < size; ++index) {
    double p = 1.0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::size_t sub = 0;
      for (auto i : blocks[b].members()) sub = sub * 2 + ((index >> (n - 1 - i)) & 1U);
      p *= factor[b][sub];
    }
    probs[index] = p;
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (auto& p : probs) p /= total;
  const std::vector<std::size_t> dims(n, 2);
  return JointTable(numbered_universe(dims), std::move(probs));
}

GaussianModel random_block_gaussian(std::size_t n, std::uint64_t seed) {
  if (n < 2 || n > 8) throw InvalidDistribution("random_block_gaussian supports 2..8 variables");
  Rng rng(seed);
  const auto label = random_blocks(n, rng);
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double v = rng.uniform(-1.0, 1.0);
      if (label[static_cast<std::size_t>(i)] == label[static_cast<std::size_t>(j)]) a(i, j) = v;
    }
  }
  Eigen::VectorXd mean(m);
  for (Eigen::Index i = 0; i < m; ++i) mean(i) = rng.uniform(-1.0, 1.0);
  Eigen::MatrixXd cov = a * a.transpose();
  cov = (0.5 * (cov + cov.transpose())).eval();
  cov.diagonal().array() += kGaussianRidge;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
  return GaussianModel(Universe::named(std::move(names)), std::move(mean), std::move(cov));
}

}  // namespace graphoid
