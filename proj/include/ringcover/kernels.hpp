#pragma once

// Element-wise scans over a finite ring. Each kernel has a serial reference and
// an OpenMP version with identical, scheduling-independent results; the engine
// calls the parallel versions and the tests hold them to the serial ones.

#include <cstdint>
#include <span>
#include <vector>

#include "ringcover/common.hpp"
#include "ringcover/linalg.hpp"
#include "ringcover/ring.hpp"

namespace ringcover::kernels {

/// One byte per element (indexed by RingPresentation::index_of).
using ElementMask = std::vector<std::uint8_t>;

/// Smallest subspace containing gens and closed under multiplication by ring
/// basis elements on the requested side(s).
Subspace close_under_action(const RingPresentation& r, Subspace s, Side side);

/// Left quasi-regularity of a single element by solving b(1 - a) = -a,
/// i.e. b - ba = -a, as a linear system in b.
bool left_quasi_regular_linear(const RingPresentation& r, const RingElement& a);

namespace serial {

IdentityFlags identity_scan(const RingPresentation& r);
ElementMask quasi_regular_mask(const RingPresentation& r);
/// mask[a] = 1 iff a is left quasi-regular and every element of Ra is.
ElementMask radical_mask(const RingPresentation& r, const ElementMask& quasi_regular);
/// Distinct cyclic side-ideals {closure(x) : x in R}, sorted canonically.
std::vector<Subspace> cyclic_ideals(const RingPresentation& r, Side side);
/// Element-membership bitset of each subspace over the ring's element indices.
std::vector<Bitset> membership_bitsets(const RingPresentation& r, std::span<const Subspace> subspaces);

}  // namespace serial

namespace parallel {

IdentityFlags identity_scan(const RingPresentation& r);
ElementMask quasi_regular_mask(const RingPresentation& r);
ElementMask radical_mask(const RingPresentation& r, const ElementMask& quasi_regular);
std::vector<Subspace> cyclic_ideals(const RingPresentation& r, Side side);
std::vector<Bitset> membership_bitsets(const RingPresentation& r, std::span<const Subspace> subspaces);

}  // namespace parallel

}  // namespace ringcover::kernels
