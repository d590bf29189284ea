#include "graphoid/varset.hpp"

#include <algorithm>
#include <unordered_set>

#include "graphoid/errors.hpp"

namespace graphoid {

std::vector<VarSet> subsets_in_order(VarSet s) {
  std::vector<VarSet> out;
  out.reserve(std::size_t{1} << s.size());
  for_each_subset(s, [&](VarSet sub) { out.push_back(sub); });
  std::sort(out.begin(), out.end());
  return out;
}

VarSet compress(VarSet s, VarSet keep) {
  VarSet out;
  std::size_t pos = 0;
  for (auto i : keep.members()) {
    if (s.contains(i)) out |= VarSet::single(pos);
    ++pos;
  }
  return out;
}

VarSet expand(VarSet s, VarSet keep) {
  VarSet out;
  std::size_t pos = 0;
  for (auto i : keep.members()) {
    if (s.contains(pos)) out |= VarSet::single(i);
    ++pos;
  }
  return out;
}

Universe::Universe(std::vector<Variable> variables) : variables_(std::move(variables)) {
  if (variables_.size() > kMaxVariables) {
    throw UniverseTooLarge("universe has " + std::to_string(variables_.size()) +
                           " variables; at most " + std::to_string(kMaxVariables) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.name.empty()) throw InvalidSets("variable names must be non-empty");
    if (!seen.insert(v.name).second) throw InvalidSets("duplicate variable '" + v.name + "'");
  }
}

Universe Universe::named(std::vector<std::string> names) {
  std::vector<Variable> vars;
  vars.reserve(names.size());
  for (auto& n : names) vars.push_back({std::move(n), {}});
  return Universe(std::move(vars));
}

Universe Universe::binary(std::vector<std::string> names) {
  std::vector<Variable> vars;
  vars.reserve(names.size());
  for (auto& n : names) vars.push_back({std::move(n), {"0", "1"}});
  return Universe(std::move(vars));
}

std::optional<std::size_t> Universe::find(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Universe::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable("unknown variable '" + name + "'");
}

VarSet Universe::set_of(std::span<const std::string> names) const {
  VarSet s;
  for (const auto& n : names) s |= VarSet::single(index_of(n));
  return s;
}

VarSet Universe::set_of(std::initializer_list<std::string> names) const {
  return set_of(std::span<const std::string>(names.begin(), names.size()));
}

std::vector<std::string> Universe::names_of(VarSet s) const {
  std::vector<std::string> out;
  for (auto i : s.members()) out.push_back(name(i));
  return out;
}

Universe Universe::subset(VarSet keep) const {
  if (!keep.subset_of(all())) throw UnknownVariable("subset mentions positions outside the universe");
  std::vector<Variable> vars;
  for (auto i : keep.members()) vars.push_back(variables_[i]);
  return Universe(std::move(vars));
}

std::string Universe::format(VarSet s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ',';
    out += i < variables_.size() ? variables_[i].name : "#" + std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace graphoid
