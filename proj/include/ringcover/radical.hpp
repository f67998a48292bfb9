#pragma once

// Quasi-regularity, the Jacobson radical (by definition and through the unital
// extension), and the S + J splitting of a finite F_p-algebra.

#include <optional>

#include "ringcover/common.hpp"
#include "ringcover/ideals.hpp"
#include "ringcover/ring.hpp"

namespace ringcover {

/// a o b = a + b - ab
RingElement circle(const RingPresentation& r, const RingElement& a, const RingElement& b);

/// Lexicographically first b with b o a = 0, by exhaustive scan.
std::optional<RingElement> left_quasi_inverse(const RingPresentation& r, const RingElement& a, const Limits& limits = {});
bool left_quasi_regular(const RingPresentation& r, const RingElement& a, const Limits& limits = {});

/// {a : a and every ta (t in R) are left quasi-regular}, as a two-sided ideal.
IdealBasis jacobson_radical(const RingPresentation& r, const Limits& limits = {});

/// Intersection of the maximal left ideals of the unital extension F_p x R,
/// projected back to R.
IdealBasis radical_dorroh_oracle(const RingPresentation& r, const Limits& limits = {});

/// Intersection of the ring's own maximal left ideals; requires an identity.
IdealBasis radical_by_maximal_left_ideals(const RingPresentation& r, const Limits& limits = {});

struct Decomposition {
  Subspace S;   // multiplicatively closed complement of J (possibly zero)
  Subspace J;   // Jacobson radical
  Subspace SJ;  // span{s x : s in S, x in J}
  Subspace K;   // {x in J : Rx = 0}
  /// J = SJ (+) K. Guaranteed when JR = 0 and S is unital; reported, not assumed.
  bool j_splits = false;
  std::uint64_t search_nodes = 0;
};

/// Backtracking search for a subring S with R = S (+) J, lifting the canonical
/// complement basis by J-coset representatives in lexicographic order.
Decomposition wedderburn_complement(const RingPresentation& r, const Limits& limits = {});

struct SjK {
  Subspace SJ;
  Subspace K;
  bool direct_sum = false;  // J = SJ (+) K
};

/// Throws std::invalid_argument when D is not a valid S (+) J decomposition.
SjK sj_and_k(const RingPresentation& r, const Decomposition& d);

/// J R, the span of products x t with x in J.
Subspace radical_times_ring(const RingPresentation& r, const Subspace& j);

}  // namespace ringcover
