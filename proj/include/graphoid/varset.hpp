#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphoid {

// Hard cap on universe size. Every set of variables is a 32-bit mask; the
// individual operations impose much smaller enumeration bounds.
inline constexpr std::size_t kMaxVariables = 16;

// A set of variables, stored as a bit mask over universe positions.
//
// Ordering is "shortlex": smaller cardinality first, then lexicographic on
// the ascending list of member positions. Every "least witness" reported by
// the library is least with respect to this order.
class VarSet {
 public:
  using Bits = std::uint32_t;

  constexpr VarSet() = default;
  constexpr explicit VarSet(Bits bits) : bits_(bits) {}

  static constexpr VarSet single(std::size_t i) { return VarSet(Bits{1} << i); }
  static constexpr VarSet first_n(std::size_t n) {
    return VarSet(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }
  static VarSet of(std::initializer_list<std::size_t> members) {
    VarSet s;
    for (auto m : members) s.bits_ |= Bits{1} << m;
    return s;
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VarSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  constexpr VarSet operator-(VarSet o) const { return VarSet(bits_ & ~o.bits_); }
  constexpr VarSet& operator|=(VarSet o) { bits_ |= o.bits_; return *this; }
  constexpr VarSet& operator&=(VarSet o) { bits_ &= o.bits_; return *this; }
  constexpr VarSet& operator-=(VarSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VarSet&) const = default;
  constexpr std::strong_ordering operator<=>(const VarSet& o) const {
    if (bits_ == o.bits_) return std::strong_ordering::equal;
    if (size() != o.size()) return size() <=> o.size();
    // Equal cardinality: the set owning the lowest differing position wins.
    const Bits diff = bits_ ^ o.bits_;
    return (bits_ & diff & (~diff + 1)) != 0 ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
  }

 private:
  Bits bits_ = 0;
};

// Calls f(sub) for every subset of s, including the empty set and s itself,
// in increasing mask order.
template <class F>
void for_each_subset(VarSet s, F&& f) {
  const VarSet::Bits full = s.bits();
  VarSet::Bits sub = 0;
  while (true) {
    f(VarSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

// All subsets of s in shortlex order.
std::vector<VarSet> subsets_in_order(VarSet s);

// Renumbers the members of s (all inside keep) onto positions 0..|keep|-1,
// preserving their relative order. Used when a universe is reduced.
VarSet compress(VarSet s, VarSet keep);
// Inverse of compress.
VarSet expand(VarSet s, VarSet keep);

struct Variable {
  std::string name;
  // Value labels. Empty for real-valued (Gaussian) variables.
  std::vector<std::string> values;

  bool operator==(const Variable&) const = default;
};

// An ordered list of named variables. Position in the list is the variable's
// identity inside VarSet masks.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<Variable> variables);

  // Convenience: variables with the given names and no value labels.
  static Universe named(std::vector<std::string> names);
  // Convenience: variables with the given names, each labelled "0","1".
  static Universe binary(std::vector<std::string> names);

  std::size_t size() const { return variables_.size(); }
  VarSet all() const { return VarSet::first_n(variables_.size()); }
  const Variable& variable(std::size_t i) const { return variables_.at(i); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::string& name(std::size_t i) const { return variables_.at(i).name; }
  std::size_t domain_size(std::size_t i) const { return variables_.at(i).values.size(); }

  std::optional<std::size_t> find(const std::string& name) const;
  // Throws UnknownVariable.
  std::size_t index_of(const std::string& name) const;
  VarSet set_of(std::span<const std::string> names) const;
  VarSet set_of(std::initializer_list<std::string> names) const;
  std::vector<std::string> names_of(VarSet s) const;

  // The sub-universe made of the members of keep, in the original order.
  Universe subset(VarSet keep) const;

  // "{a,b}" for human-readable output.
  std::string format(VarSet s) const;

  bool operator==(const Universe&) const = default;

 private:
  std::vector<Variable> variables_;
};

}  // namespace graphoid
