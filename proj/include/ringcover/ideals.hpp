#pragma once

// Left, right and two-sided ideals as canonical (reduced-echelon) subspaces.

#include <compare>
#include <span>
#include <vector>

#include "ringcover/common.hpp"
#include "ringcover/linalg.hpp"
#include "ringcover/ring.hpp"

namespace ringcover {

/// A subspace verified to be closed under ring multiplication on its side(s).
class IdealBasis {
 public:
  Side side() const { return side_; }
  const Subspace& subspace() const { return space_; }
  const std::vector<Vec>& rows() const { return space_.rows(); }
  std::size_t dimension() const { return space_.dimension(); }
  std::uint64_t order() const { return space_.order(); }
  bool is_zero() const { return space_.is_zero(); }
  bool is_whole_ring() const { return space_.is_full(); }
  bool contains(const RingElement& x) const { return space_.contains(x); }
  bool contains(const IdealBasis& other) const { return space_.contains(other.space_); }

  friend bool operator==(const IdealBasis& a, const IdealBasis& b) { return a.side_ == b.side_ && a.space_ == b.space_; }
  /// Canonical order: (dimension, lexicographic echelon matrix).
  friend std::strong_ordering operator<=>(const IdealBasis& a, const IdealBasis& b) {
    if (auto c = a.space_ <=> b.space_; c != 0) return c;
    return a.side_ <=> b.side_;
  }

 private:
  friend IdealBasis make_ideal(const RingPresentation&, Subspace, Side);
  friend IdealBasis ideal_closure(const RingPresentation&, std::span<const RingElement>, Side);
  friend IdealBasis trusted_ideal(Subspace, Side);
  IdealBasis(Side side, Subspace space) : side_(side), space_(std::move(space)) {}

  Side side_;
  Subspace space_;
};

/// True iff s is closed under multiplication by ring elements on the given side(s).
bool is_closed(const RingPresentation& r, const Subspace& s, Side side);

/// Wraps a subspace after verifying closure; throws std::invalid_argument otherwise.
IdealBasis make_ideal(const RingPresentation& r, Subspace s, Side side);

/// The smallest side-ideal containing gens (for a nonunital ring: Zx + Rx for one left generator).
IdealBasis ideal_closure(const RingPresentation& r, std::span<const RingElement> gens, Side side);

/// Wraps a subspace already known to be closed (results of the closure kernels, sums of ideals).
IdealBasis trusted_ideal(Subspace s, Side side);

bool ideal_membership(const IdealBasis& ideal, const RingElement& x);

/// Complete side-ideal lattice with its cyclic members and coatoms.
struct IdealLattice {
  Side side;
  /// Sorted canonically; includes {0} and R.
  std::vector<IdealBasis> all;
  /// Distinct ideals generated by a single element, sorted.
  std::vector<IdealBasis> cyclic;
  /// Proper ideals with nothing strictly between them and R, sorted.
  std::vector<IdealBasis> maximal;

  bool is_cyclic(const IdealBasis& ideal) const;
};

/// Join-closure of the cyclic ideals. Throws GuardExceeded (with the partial count)
/// when more than limits.max_ideals distinct ideals appear.
IdealLattice ideal_lattice(const RingPresentation& r, Side side, const Limits& limits = {});

std::vector<IdealBasis> enumerate_ideals(const RingPresentation& r, Side side, const Limits& limits = {});
std::vector<IdealBasis> maximal_ideals(const RingPresentation& r, Side side, const Limits& limits = {});

}  // namespace ringcover
