// Reference implementations used only by the tests. Each one follows a
// textbook definition directly and shares no code path with the library
// routine it checks.
#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "graphoid/bayesnet.hpp"
#include "graphoid/distribution.hpp"
#include "graphoid/model.hpp"

namespace oracle {

using graphoid::Dag;
using graphoid::DependencyModel;
using graphoid::GaussianModel;
using graphoid::JointTable;
using graphoid::Triplet;
using graphoid::VarSet;

// Marginal mass keyed by the projected assignment.
inline std::map<std::vector<std::size_t>, double> project(const JointTable& t, VarSet s) {
  std::map<std::vector<std::size_t>, double> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto a = t.assignment_of(i);
    std::vector<std::size_t> key;
    for (std::size_t v = 0; v < a.size(); ++v) key.push_back(s.contains(v) ? a[v] : 0);
    out[key] += t.probs()[i];
  }
  return out;
}

inline std::vector<std::size_t> mask(const std::vector<std::size_t>& a, VarSet s) {
  auto out = a;
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (!s.contains(v)) out[v] = 0;
  }
  return out;
}

// Largest |P(xyz) P(z) - P(xz) P(yz)| over all assignments.
inline double factorization_gap(const JointTable& t, VarSet x, VarSet y, VarSet z) {
  const auto pxyz = project(t, x | y | z), pz = project(t, z), pxz = project(t, x | z), pyz = project(t, y | z);
  double worst = 0.0;
  for (const auto& [key, p] : pxyz) {
    worst = std::max(worst, std::abs(p * pz.at(mask(key, z)) - pxz.at(mask(key, x | z)) * pyz.at(mask(key, y | z))));
  }
  return worst;
}

// Sigma_XY - Sigma_XZ Sigma_ZZ^{-1} Sigma_ZY with an explicit inverse.
inline Eigen::MatrixXd schur_cross(const GaussianModel& g, VarSet x, VarSet y, VarSet z) {
  auto pick = [&](VarSet r, VarSet c) {
    const auto rs = r.members(), cs = c.members();
    Eigen::MatrixXd m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = g.covariance()(rs[i], cs[j]);
    }
    return m;
  };
  if (z.empty()) return pick(x, y);
  return pick(x, y) - pick(x, z) * pick(z, z).inverse() * pick(z, y);
}

// Closure by repeated sweeps over every triplet and every pair of triplets.
inline std::set<Triplet> naive_closure(const DependencyModel& m) {
  const VarSet all = m.universe().all();
  std::set<Triplet> s = m.triplets();
  auto subsets = [](VarSet v) {
    std::vector<VarSet> out;
    graphoid::for_each_subset(v, [&](VarSet sub) { out.push_back(sub); });
    return out;
  };
  for (VarSet x : subsets(all)) {
    for (VarSet z : subsets(all - x)) s.insert({x, VarSet{}, z});
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Triplet> next = s;
    for (const auto& t : s) {
      next.insert(t.swapped());
      for (VarSet w : subsets(t.y)) {
        next.insert({t.x, t.y - w, t.z});
        next.insert({t.x, t.y - w, t.z | w});
      }
      for (const auto& u : s) {
        if (u.x == t.x && u.z == (t.z | t.y)) next.insert({t.x, t.y | u.y, t.z});
      }
    }
    if (next.size() != s.size()) {
      grew = true;
      s = std::move(next);
    }
  }
  return s;
}

// d-separation by enumerating every simple trail between X and Y.
inline bool trail_separated(const Dag& dag, VarSet x, VarSet y, VarSet z) {
  const std::size_t n = dag.size();
  std::vector<std::vector<std::size_t>> kids(n);
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (const auto& [p, c] : dag.edges()) {
    kids[p].push_back(c);
    edge[p][c] = true;
  }
  std::vector<VarSet> desc(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::function<void(std::size_t)> walk = [&](std::size_t u) {
      for (auto c : kids[u]) {
        if (!desc[v].contains(c)) {
          desc[v] |= VarSet::single(c);
          walk(c);
        }
      }
    };
    walk(v);
  }
  std::vector<std::size_t> path;
  std::vector<bool> on(n, false);
  std::function<bool(std::size_t)> active_from = [&](std::size_t u) -> bool {
    if (y.contains(u) && path.size() > 1) {
      for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        const auto a = path[k - 1], m = path[k], b = path[k + 1];
        const bool collider = edge[a][m] && edge[b][m];
        if (collider ? !(z.contains(m) || desc[m].intersects(z)) : z.contains(m)) return false;
      }
      return true;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (on[v] || !(edge[u][v] || edge[v][u])) continue;
      on[v] = true;
      path.push_back(v);
      const bool found = active_from(v);
      path.pop_back();
      on[v] = false;
      if (found) return true;
    }
    return false;
  };
  for (auto s : x.members()) {
    path = {s};
    on.assign(n, false);
    on[s] = true;
    if (active_from(s)) return false;
  }
  return true;
}

}  // namespace oracle
