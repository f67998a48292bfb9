#include <set>

#include "doctest.h"
#include "ringcover/field.hpp"

using namespace ringcover;

namespace {

FieldElement fe(std::initializer_list<std::uint32_t> c) { return FieldElement{std::vector<std::uint32_t>(c)}; }

// Polynomial product over F_p without reduction, little-endian.
std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
  std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> monic_polys(std::uint32_t p, std::size_t deg) {
  std::vector<std::vector<std::uint32_t>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < deg; ++i) total *= p;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint32_t> c(deg + 1, 0);
    std::size_t rest = idx;
    // c0 is the most significant digit, so idx order is little-endian lexicographic order.
    for (std::size_t i = deg; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    c[deg] = 1;
    out.push_back(c);
  }
  return out;
}

// Smallest monic degree-k polynomial that is not a product of two monic factors of lower degree.
std::vector<std::uint32_t> oracle_modulus(std::uint32_t p, std::size_t k) {
  std::set<std::vector<std::uint32_t>> reducible;
  for (std::size_t a = 1; a < k; ++a) {
    for (const auto& f : monic_polys(p, a)) {
      for (const auto& g : monic_polys(p, k - a)) reducible.insert(poly_mul(f, g, p));
    }
  }
  for (const auto& c : monic_polys(p, k)) {
    if (!reducible.count(c)) return c;
  }
  return {};
}

}  // namespace

TEST_CASE("make_field picks the canonical modulus") {
  CHECK(make_field(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(make_field(5, 1).modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    CHECK(make_field(p, k).modulus() == oracle_modulus(p, k));
  }
}

TEST_CASE("FieldSpec validates its modulus") {
  CHECK_THROWS_AS(FieldSpec(2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
  CHECK_THROWS_AS(FieldSpec(2, {1, 1, 0}), std::invalid_argument);  // not monic
  CHECK_THROWS_AS(FieldSpec(6, {1, 1}), std::invalid_argument);
  CHECK_NOTHROW(FieldSpec(3, {1, 0, 1}));  // x^2 + 1 over F_3
  CHECK(make_field_of_order(9).q() == 9);
  CHECK_THROWS_AS(make_field_of_order(12), std::invalid_argument);
}

TEST_CASE("GF(4) multiplication and inverses") {
  const FieldSpec f = make_field(2, 2);
  const FieldElement a = fe({0, 1});
  const FieldElement a1 = fe({1, 1});
  CHECK(field_mul(f, a, a) == a1);
  CHECK(field_mul(f, f.one(), a) == a);
  CHECK(field_mul(f, f.zero(), a) == f.zero());
  CHECK(field_inv(f, f.one()) == f.one());
  CHECK(field_inv(f, a) == a1);
  CHECK_THROWS_AS(field_inv(f, f.zero()), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 16U, 25U, 27U, 32U, 49U, 64U}) {
    CAPTURE(q);
    const FieldSpec f = make_field_of_order(q);
    std::set<FieldElement> distinct;
    for (std::uint32_t i = 0; i < q; ++i) distinct.insert(f.element(i));
    CHECK(distinct.size() == q);
    bool ok = true;
    for (std::uint32_t i = 0; i < q && ok; ++i) {
      const FieldElement a = f.element(i);
      ok = ok && f.index(a) == i && f.is_valid(a);
      if (i != 0) ok = ok && f.pow(a, q - 1) == f.one() && f.mul(a, f.inv(a)) == f.one();
      for (std::uint32_t j = 0; j < q && ok; ++j) {
        const FieldElement b = f.element(j);
        ok = f.mul(a, b) == f.mul(b, a) && f.add(a, b) == f.add(b, a) && f.sub(f.add(a, b), b) == a;
        for (std::uint32_t k = 0; k < q && ok; ++k) {
          const FieldElement c = f.element(k);
          ok = f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
               f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("large fields fall back to polynomial arithmetic") {
  const FieldSpec f = make_field(2, 9);  // q = 512, no tables
  CHECK(f.q() == 512);
  for (std::uint32_t i = 1; i < 512; i += 37) {
    const FieldElement a = f.element(i);
    CHECK(f.mul(a, f.inv(a)) == f.one());
    CHECK(f.pow(a, 511) == f.one());
  }
}
