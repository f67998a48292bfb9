#include "ringcover/field.hpp"

#include <stdexcept>

#include "ringcover/linalg.hpp"

namespace ringcover {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(const Poly& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (f.back() != 1) throw std::invalid_argument("is_irreducible expects a monic polynomial");
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
    std::uint64_t count = *checked_power(p, dg);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(dg + 1);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < dg; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[dg] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) throw std::invalid_argument("field modulus must be monic of degree >= 1");
  for (auto c : modulus_) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus_, p)) throw std::invalid_argument("field modulus is reducible");
  k_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  auto q = checked_power(p, k_);
  if (!q || *q > (1U << 20)) throw std::invalid_argument("field order too large");
  q_ = static_cast<std::uint32_t>(*q);

  if (q_ <= 256) {
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t c = index(mul_poly(element(a), element(b)));
        mul_table_[a * q_ + b] = c;
        if (c == 1) inv_table_[a] = b;
      }
    }
  }
}

FieldElement FieldSpec::zero() const { return FieldElement{std::vector<std::uint32_t>(k_, 0)}; }

FieldElement FieldSpec::one() const { return basis(0); }

FieldElement FieldSpec::basis(std::uint32_t i) const {
  if (i >= k_) throw std::out_of_range("field basis index out of range");
  FieldElement x = zero();
  x.coeffs[i] = 1;
  return x;
}

FieldElement FieldSpec::element(std::uint32_t index) const {
  FieldElement x = zero();
  for (std::uint32_t i = 0; i < k_; ++i) {
    x.coeffs[i] = index % p_;
    index /= p_;
  }
  return x;
}

std::uint32_t FieldSpec::index(const FieldElement& a) const {
  std::uint32_t idx = 0;
  for (std::uint32_t i = k_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
  return idx;
}

bool FieldSpec::is_valid(const FieldElement& a) const {
  if (a.coeffs.size() != k_) return false;
  for (auto c : a.coeffs) {
    if (c >= p_) return false;
  }
  return true;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

FieldElement FieldSpec::neg(const FieldElement& a) const {
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = (p_ - a.coeffs[i]) % p_;
  return r;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldSpec::mul_poly(const FieldElement& a, const FieldElement& b) const {
  Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % p_;
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return FieldElement{std::move(r)};
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  if (!mul_table_.empty()) return element(mul_table_[index(a) * q_ + index(b)]);
  return mul_poly(a, b);
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
  if (index(a) == 0) throw std::domain_error("division by zero in " + describe());
  if (!inv_table_.empty()) return element(inv_table_[index(a)]);
  return pow(a, q_ - 2);
}

std::string FieldSpec::describe() const {
  std::string s = "GF(" + std::to_string(q_) + ") mod [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s + "]";
}

FieldSpec make_field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field degree must be >= 1");
  auto count = checked_power(p, k);
  if (!count || *count > (1U << 20)) throw std::invalid_argument("field order too large");
  // Enumerate coefficient lists [c0, ..., c_{k-1}, 1] in lexicographic order, c0 most significant.
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    Poly m(k + 1, 0);
    std::uint64_t t = idx;
    for (std::uint32_t i = k; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return FieldSpec(p, std::move(m));
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldSpec make_field_of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    std::uint32_t k = 0;
    std::uint32_t t = q;
    while (t % p == 0) {
      t /= p;
      ++k;
    }
    if (t != 1) break;
    return make_field(p, k);
  }
  throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

FieldElement field_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b) { return f.mul(a, b); }

FieldElement field_inv(const FieldSpec& f, const FieldElement& a) { return f.inv(a); }

}  // namespace ringcover
