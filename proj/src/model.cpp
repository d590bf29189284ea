#include "graphoid/model.hpp"

#include <bit>
#include <deque>
#include <map>
#include <utility>

#include "graphoid/errors.hpp"

namespace graphoid {
namespace {

// Moves bit i of v to bit 2i.
std::uint64_t spread(std::uint64_t v) {
  v &= 0xFFFFFFFFULL;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

void require_closure_bound(const Universe& u) {
  if (u.size() > kMaxClosureVariables) {
    throw UniverseTooLarge("axiom enumeration supports at most " + std::to_string(kMaxClosureVariables) +
                           " variables, got " + std::to_string(u.size()));
  }
}

// Calls f(x, z) for every pair of disjoint subsets of the universe.
template <class F>
void for_each_disjoint_pair(VarSet all, F&& f) {
  for_each_subset(all, [&](VarSet x) { for_each_subset(all - x, [&](VarSet z) { f(x, z); }); });
}

}  // namespace

void validate_triplet(const Universe& u, const Triplet& t) {
  if (!t.mentioned().subset_of(u.all())) {
    throw InvalidTriplet("triplet mentions variables outside the universe");
  }
  if (!t.disjoint()) {
    throw InvalidTriplet("triplet sets overlap: " + format_triplet(u, t));
  }
}

std::string format_triplet(const Universe& u, const Triplet& t) {
  return "(" + u.format(t.x) + ", " + u.format(t.y) + " | " + u.format(t.z) + ")";
}

TripletIndex::TripletIndex(std::size_t n_variables) : n_(n_variables) {
  words_.assign(std::max<std::uint64_t>(1, capacity() / 64), 0);
}

std::uint64_t TripletIndex::code(const Triplet& t) {
  return spread(t.x.bits()) + 2 * spread(t.y.bits()) + 3 * spread(t.z.bits());
}

Triplet TripletIndex::decode(std::uint64_t code, std::size_t n_variables) {
  Triplet t;
  for (std::size_t i = 0; i < n_variables; ++i) {
    switch ((code >> (2 * i)) & 3U) {
      case 1: t.x |= VarSet::single(i); break;
      case 2: t.y |= VarSet::single(i); break;
      case 3: t.z |= VarSet::single(i); break;
      default: break;
    }
  }
  return t;
}

bool TripletIndex::set(const Triplet& t) {
  const auto c = code(t);
  auto& w = words_[c >> 6];
  const auto bit = std::uint64_t{1} << (c & 63);
  if (w & bit) return false;
  w |= bit;
  return true;
}

std::size_t TripletIndex::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

DependencyModel::DependencyModel(Universe universe, std::set<Triplet> triplets)
    : universe_(std::move(universe)), triplets_(std::move(triplets)) {
  for (const auto& t : triplets_) validate_triplet(universe_, t);
}

bool DependencyModel::contains(const Triplet& t) const {
  validate_triplet(universe_, t);
  return triplets_.count(t) != 0;
}

bool DependencyModel::insert(const Triplet& t) {
  validate_triplet(universe_, t);
  return triplets_.insert(t).second;
}

DependencyModel graphoid_closure(const DependencyModel& model) {
  const Universe& u = model.universe();
  require_closure_bound(u);
  const VarSet all = u.all();

  TripletIndex in(u.size());
  std::deque<Triplet> work;
  auto add = [&](const Triplet& t) {
    if (in.set(t)) work.push_back(t);
  };

  for (const auto& t : model.triplets()) add(t);
  for_each_disjoint_pair(all, [&](VarSet x, VarSet z) { add({x, VarSet{}, z}); });

  while (!work.empty()) {
    const Triplet t = work.front();
    work.pop_front();

    add(t.swapped());

    // Decomposition and weak union split Y into a kept part and a part that
    // is dropped or moved into the conditioning set.
    for_each_subset(t.y, [&](VarSet kept) {
      add({t.x, kept, t.z});
      add({t.x, kept, t.z | (t.y - kept)});
    });

    // Contraction with t as (X, Y | Z): look for (X, W | Z u Y).
    const VarSet rest = all - t.mentioned();
    for_each_subset(rest, [&](VarSet w) {
      if (!w.empty() && in.test(Triplet{t.x, w, t.z | t.y})) add({t.x, t.y | w, t.z});
    });

    // Contraction with t as (X, W | Z'): split Z' = Z u Y, look for (X, Y | Z).
    for_each_subset(t.z, [&](VarSet y) {
      if (!y.empty() && in.test(Triplet{t.x, y, t.z - y})) add({t.x, y | t.y, t.z - y});
    });
  }

  std::set<Triplet> out;
  for (std::uint64_t c = 0; c < in.capacity(); ++c) {
    if (in.test(c)) out.insert(TripletIndex::decode(c, u.size()));
  }
  return DependencyModel(u, std::move(out));
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::TrivialIndependence: return "trivial_independence";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::Decomposition: return "decomposition";
    case Axiom::WeakUnion: return "weak_union";
    case Axiom::Contraction: return "contraction";
  }
  return "unknown";
}

std::vector<AxiomViolation> check_graphoid_axioms(const DependencyModel& model) {
  const Universe& u = model.universe();
  require_closure_bound(u);
  const VarSet all = u.all();

  TripletIndex in(u.size());
  for (const auto& t : model.triplets()) in.set(t);

  std::map<std::pair<Axiom, Triplet>, std::vector<Triplet>> found;
  auto report = [&](Axiom a, std::vector<Triplet> premises, const Triplet& missing) {
    auto [it, inserted] = found.try_emplace({a, missing}, premises);
    if (!inserted && premises < it->second) it->second = std::move(premises);
  };
  auto require = [&](Axiom a, std::vector<Triplet> premises, const Triplet& conclusion) {
    if (!in.test(conclusion)) report(a, std::move(premises), conclusion);
  };

  for_each_disjoint_pair(all, [&](VarSet x, VarSet z) {
    require(Axiom::TrivialIndependence, {}, {x, VarSet{}, z});
  });

  for (const auto& t : model.triplets()) {
    require(Axiom::Symmetry, {t}, t.swapped());
    for_each_subset(t.y, [&](VarSet kept) {
      require(Axiom::Decomposition, {t}, {t.x, kept, t.z});
      require(Axiom::WeakUnion, {t}, {t.x, kept, t.z | (t.y - kept)});
    });
    for_each_subset(all - t.mentioned(), [&](VarSet w) {
      const Triplet second{t.x, w, t.z | t.y};
      if (!w.empty() && in.test(second)) {
        require(Axiom::Contraction, {t, second}, {t.x, t.y | w, t.z});
      }
    });
  }

  std::vector<AxiomViolation> out;
  out.reserve(found.size());
  for (auto& [key, premises] : found) out.push_back({key.first, std::move(premises), key.second});
  return out;
}

DependencyModel restrict(const DependencyModel& model, VarSet keep) {
  const Universe& u = model.universe();
  if (!keep.subset_of(u.all())) throw UnknownVariable("restrict: keep set is not inside the universe");
  std::set<Triplet> out;
  for (const auto& t : model.triplets()) {
    if (t.mentioned().subset_of(keep)) {
      out.insert({compress(t.x, keep), compress(t.y, keep), compress(t.z, keep)});
    }
  }
  return DependencyModel(u.subset(keep), std::move(out));
}

}  // namespace graphoid
