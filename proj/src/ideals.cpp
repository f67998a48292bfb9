#include "ringcover/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ringcover/kernels.hpp"

namespace ringcover {

std::string to_string(Side s) {
  switch (s) {
    case Side::left:
      return "left";
    case Side::right:
      return "right";
    case Side::two_sided:
      return "two-sided";
  }
  return "?";
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  if (s == "two-sided" || s == "two_sided" || s == "both") return Side::two_sided;
  throw std::invalid_argument("unknown side '" + s + "'");
}

bool is_closed(const RingPresentation& r, const Subspace& s, Side side) {
  for (const Vec& b : s.rows()) {
    for (std::size_t i = 0; i < r.dimension(); ++i) {
      if (side != Side::right && !s.contains(r.mul(r.basis(i), b))) return false;
      if (side != Side::left && !s.contains(r.mul(b, r.basis(i)))) return false;
    }
  }
  return true;
}

IdealBasis make_ideal(const RingPresentation& r, Subspace s, Side side) {
  if (s.ambient() != r.dimension() || s.characteristic() != r.characteristic()) {
    throw std::invalid_argument("subspace does not live in this ring");
  }
  if (!is_closed(r, s, side)) throw std::invalid_argument("subspace is not a " + to_string(side) + " ideal");
  return IdealBasis(side, std::move(s));
}

IdealBasis trusted_ideal(Subspace s, Side side) { return IdealBasis(side, std::move(s)); }

IdealBasis ideal_closure(const RingPresentation& r, std::span<const RingElement> gens, Side side) {
  Subspace s = Subspace::span(r.characteristic(), r.dimension(), gens);
  return IdealBasis(side, kernels::close_under_action(r, std::move(s), side));
}

bool ideal_membership(const IdealBasis& ideal, const RingElement& x) { return ideal.contains(x); }

bool IdealLattice::is_cyclic(const IdealBasis& ideal) const {
  return std::binary_search(cyclic.begin(), cyclic.end(), ideal);
}

IdealLattice ideal_lattice(const RingPresentation& r, Side side, const Limits& limits) {
  auto order = checked_power(r.characteristic(), r.dimension());
  if (!order || *order > limits.max_elements) {
    throw GuardExceeded("ideal enumeration needs an element scan above the cap of " +
                        std::to_string(limits.max_elements) + " elements");
  }
  Deadline deadline(limits.time_budget_s);
  const std::vector<Subspace> cyclic = kernels::parallel::cyclic_ideals(r, side);

  std::set<Subspace> seen(cyclic.begin(), cyclic.end());
  seen.insert(Subspace(r.characteristic(), r.dimension()));
  if (seen.size() > limits.max_ideals) throw GuardExceeded("ideal lattice exceeds the cap", seen.size());
  // Every ideal is a sum of cyclic ideals, so closing under "+ cyclic" reaches the whole lattice.
  std::deque<Subspace> work(seen.begin(), seen.end());
  while (!work.empty()) {
    Subspace w = std::move(work.front());
    work.pop_front();
    for (const Subspace& c : cyclic) {
      if (w.contains(c)) continue;
      Subspace s = w.sum(c);
      if (seen.insert(s).second) {
        if (seen.size() > limits.max_ideals) {
          throw GuardExceeded("ideal lattice exceeds the cap of " + std::to_string(limits.max_ideals) + " ideals",
                              seen.size());
        }
        work.push_back(std::move(s));
      }
    }
    deadline.check("ideal enumeration");
  }

  IdealLattice lat;
  lat.side = side;
  for (const Subspace& s : seen) lat.all.push_back(trusted_ideal(s, side));
  for (const Subspace& c : cyclic) lat.cyclic.push_back(trusted_ideal(c, side));
  for (const Subspace& m : seen) {
    if (m.is_full()) continue;
    bool maximal = std::all_of(cyclic.begin(), cyclic.end(), [&](const Subspace& c) {
      return m.contains(c) || m.sum(c).is_full();
    });
    if (maximal) lat.maximal.push_back(trusted_ideal(m, side));
  }
  return lat;
}

std::vector<IdealBasis> enumerate_ideals(const RingPresentation& r, Side side, const Limits& limits) {
  return ideal_lattice(r, side, limits).all;
}

std::vector<IdealBasis> maximal_ideals(const RingPresentation& r, Side side, const Limits& limits) {
  return ideal_lattice(r, side, limits).maximal;
}

}  // namespace ringcover
