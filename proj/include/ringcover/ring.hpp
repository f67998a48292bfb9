#pragma once

// Finite, possibly nonunital, F_p-algebras given by structure constants.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringcover/common.hpp"
#include "ringcover/field.hpp"
#include "ringcover/linalg.hpp"

namespace ringcover {

/// Coordinates of an element with respect to the ring's F_p-basis.
using RingElement = Vec;

/// sc[i][j] = coordinates of e_i * e_j.
using StructureTable = std::vector<std::vector<Vec>>;

struct IdentityFlags {
  bool has_identity = false;
  std::vector<RingElement> left_identities;
  std::vector<RingElement> right_identities;

  friend bool operator==(const IdentityFlags&, const IdentityFlags&) = default;
};

/// Thrown by make_ring for a non-associative table; carries a witness triple.
class AssociativityError : public std::invalid_argument {
 public:
  AssociativityError(std::size_t i, std::size_t j, std::size_t k);
  std::size_t i, j, k;
};

class RingPresentation {
 public:
  std::uint32_t characteristic() const { return f_.p(); }
  std::size_t dimension() const { return d_; }
  /// p^d; throws std::overflow_error when it does not fit.
  std::uint64_t order() const;
  const ModP& scalars() const { return f_; }
  const Vec& basis_product(std::size_t i, std::size_t j) const { return sc_[i * d_ + j]; }
  StructureTable table() const;

  RingElement zero() const { return RingElement(d_); }
  RingElement basis(std::size_t i) const { return unit_vector(d_, i); }
  RingElement element(std::uint64_t index) const { return element_at(index, f_.p(), d_); }
  std::uint64_t index_of(const RingElement& a) const { return element_index(a, f_.p()); }

  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement add(const RingElement& a, const RingElement& b) const { return ringcover::add(a, b, f_); }
  RingElement sub(const RingElement& a, const RingElement& b) const { return ringcover::sub(a, b, f_); }
  RingElement neg(const RingElement& a) const { return scale(f_.neg(1), a, f_); }

  bool is_commutative() const;
  bool is_null() const;

  /// Cached exhaustive identity scan; throws GuardExceeded when the ring was
  /// too large to scan at construction.
  const IdentityFlags& identity_flags() const;
  bool has_identity() const { return identity_flags().has_identity; }
  bool has_left_identity() const { return !identity_flags().left_identities.empty(); }
  bool has_right_identity() const { return !identity_flags().right_identities.empty(); }

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.f_.p() == b.f_.p() && a.d_ == b.d_ && a.sc_ == b.sc_;
  }

 private:
  friend RingPresentation make_ring(std::uint32_t, std::size_t, const StructureTable&, const Limits&);

  ModP f_;
  std::size_t d_ = 0;
  std::vector<Vec> sc_;
  std::optional<IdentityFlags> flags_;
};

/// Validates entries and associativity; scans identities when p^d <= limits.max_elements.
RingPresentation make_ring(std::uint32_t p, std::size_t d, const StructureTable& sc, const Limits& limits = {});

RingElement ring_mul(const RingPresentation& r, const RingElement& a, const RingElement& b);
IdentityFlags identity_flags(const RingPresentation& r);

RingPresentation opposite(const RingPresentation& r);
/// Block-diagonal structure constants; all factors must share the characteristic.
RingPresentation direct_product(std::span<const RingPresentation> factors);
/// F_p x R with (n1,r1)(n2,r2) = (n1 n2, n1 r2 + n2 r1 + r1 r2); coordinate 0 is the F_p part.
RingPresentation dorroh(const RingPresentation& r);
/// M_n(F_q) over F_p; basis index ((i*n + j)*k + t) stands for x^t E_ij.
RingPresentation matrix_algebra(std::size_t n, const FieldSpec& f);

/// The F_p-span of {x^t E_ij : (i,j) in positions} inside M_m(F_q), basis index
/// (position * k + t). The position set must be closed under E_ij E_jl = E_il.
RingPresentation matrix_subalgebra(std::size_t m, std::span<const std::pair<std::size_t, std::size_t>> positions,
                                   const FieldSpec& f);

class IdealBasis;

struct QuotientRing {
  RingPresentation ring;
  /// Ambient coordinates kept as the quotient basis (non-pivot columns of the ideal).
  std::vector<std::size_t> complement;
  Subspace ideal;

  /// The quotient map R -> R/I in quotient coordinates.
  RingElement project(const RingElement& x) const;
  /// The canonical representative of a quotient element in R.
  RingElement lift(const RingElement& y) const;
};

/// R/I for a two-sided ideal I; throws std::invalid_argument when I is one-sided.
QuotientRing quotient(const RingPresentation& r, const IdealBasis& ideal);
QuotientRing quotient(const RingPresentation& r, const Subspace& ideal);

/// Checks x(yz) = (xy)z on basis triples; returns the first failing triple.
std::optional<std::array<std::size_t, 3>> associativity_witness(std::uint32_t p, std::size_t d, const StructureTable& sc);

}  // namespace ringcover
