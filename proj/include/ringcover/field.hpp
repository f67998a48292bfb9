#pragma once

// Finite fields F_{p^k} as F_p[x]/(m(x)), used to expand F_q-matrix data into
// F_p structure constants.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringcover {

/// Polynomial representative of an element of F_{p^k}: k coefficients, little-endian.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class FieldSpec {
 public:
  /// Validates primality of p, monicity and irreducibility of the modulus.
  FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// k+1 coefficients, little-endian, leading coefficient 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of x^i, 0 <= i < k.
  FieldElement basis(std::uint32_t i) const;
  /// Elements are indexed by their little-endian base-p coefficient value.
  FieldElement element(std::uint32_t index) const;
  std::uint32_t index(const FieldElement& a) const;
  bool is_valid(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  std::string describe() const;

 private:
  FieldElement mul_poly(const FieldElement& a, const FieldElement& b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  // Filled when q <= 256.
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;
};

/// True iff the monic polynomial (little-endian) has no factor of degree 1..deg/2 over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// F_{p^k} with the lexicographically smallest (little-endian) monic irreducible modulus.
FieldSpec make_field(std::uint32_t p, std::uint32_t k);

/// make_field for a prime power q.
FieldSpec make_field_of_order(std::uint32_t q);

FieldElement field_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldSpec& f, const FieldElement& a);

}  // namespace ringcover
