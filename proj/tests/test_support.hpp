#pragma once

// Independent oracles and ring corpora shared by the unit and acceptance tests.
// Nothing here calls the engine's enumeration, radical or cover routines.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ringcover/field.hpp"
#include "ringcover/linalg.hpp"
#include "ringcover/paperlab.hpp"
#include "ringcover/ring.hpp"

namespace testsupport {

using namespace ringcover;

struct NamedRing {
  std::string name;
  RingPresentation ring;
};

/// Every subspace of F_p^d, by breadth-first insertion of single vectors.
inline std::vector<Subspace> all_subspaces(std::uint32_t p, std::size_t d) {
  std::set<Subspace> seen{Subspace(p, d)};
  std::vector<Subspace> frontier{Subspace(p, d)};
  const std::uint64_t n = *checked_power(p, d);
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier) {
      for (std::uint64_t i = 1; i < n; ++i) {
        Subspace t = s;
        if (!t.insert(element_at(i, p, d))) continue;
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Closure under multiplication by every ring element on the given side, by full element expansion.
inline bool naive_closed(const RingPresentation& r, const Subspace& s, Side side) {
  const std::uint64_t n = r.order();
  std::vector<Vec> members;
  s.for_each_element([&](const Vec& v) { members.push_back(v); });
  for (std::uint64_t i = 0; i < n; ++i) {
    const Vec t = r.element(i);
    for (const Vec& x : members) {
      if (side != Side::right && !s.contains(r.mul(t, x))) return false;
      if (side != Side::left && !s.contains(r.mul(x, t))) return false;
    }
  }
  return true;
}

inline std::vector<Subspace> naive_ideals(const RingPresentation& r, Side side) {
  std::vector<Subspace> out;
  for (const auto& s : all_subspaces(r.characteristic(), r.dimension())) {
    if (naive_closed(r, s, side)) out.push_back(s);
  }
  return out;
}

inline std::vector<Subspace> naive_maximal(const std::vector<Subspace>& ideals) {
  std::vector<Subspace> out;
  for (const auto& m : ideals) {
    if (m.is_full()) continue;
    bool maximal = true;
    for (const auto& o : ideals) {
      if (!o.is_full() && o != m && o.contains(m)) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

/// Smallest number of the given subspaces whose union is F_p^d, by enumerating subsets
/// in increasing size; 0 when no subset covers.
inline std::size_t naive_min_cover(const std::vector<Subspace>& cands, std::uint32_t p, std::size_t d) {
  const std::uint64_t n = *checked_power(p, d);
  const std::size_t m = cands.size();
  std::vector<std::vector<bool>> member(m, std::vector<bool>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::uint64_t e = 0; e < n; ++e) member[i][e] = cands[i].contains(element_at(e, p, d));
  }
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (best != 0 && size >= best) continue;
    bool all = true;
    for (std::uint64_t e = 0; e < n && all; ++e) {
      bool hit = false;
      for (std::size_t i = 0; i < m && !hit; ++i) hit = ((mask >> i) & 1U) && member[i][e];
      all = hit;
    }
    if (all) best = size;
  }
  return best;
}

/// {a : a and every ta are left quasi-regular}, each by scanning all b for b + a - ba = 0.
inline Subspace naive_radical(const RingPresentation& r) {
  const std::uint64_t n = r.order();
  const ModP& f = r.scalars();
  std::vector<bool> qr(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Vec a = r.element(i);
    for (std::uint64_t j = 0; j < n && !qr[i]; ++j) {
      const Vec b = r.element(j);
      qr[i] = sub(add(b, a, f), r.mul(b, a), f).is_zero();
    }
  }
  Subspace out(r.characteristic(), r.dimension());
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!qr[i]) continue;
    const Vec a = r.element(i);
    bool all = true;
    for (std::uint64_t t = 0; t < n && all; ++t) all = qr[r.index_of(r.mul(r.element(t), a))];
    if (all) out.insert(a);
  }
  return out;
}

/// Structure constants of the F_p-subalgebra spanned by `basis` inside `host`
/// (which must be closed), expressed in that basis.
inline RingPresentation restrict_to(const RingPresentation& host, const std::vector<Vec>& basis) {
  const std::size_t d = basis.size();
  const std::uint32_t p = host.characteristic();
  StructureTable sc(d, std::vector<Vec>(d, Vec(d)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto x = solve_left(basis, host.mul(basis[i], basis[j]), host.scalars());
      if (!x) throw std::logic_error("basis does not span a subalgebra");
      sc[i][j] = *x;
    }
  }
  return make_ring(p, d, sc);
}

/// Random associative algebra: the subalgebra of M_m(F_p) generated by a few
/// random (often singular or nilpotent) matrices, in a randomly changed basis.
inline RingPresentation random_algebra(std::mt19937_64& rng, std::uint32_t p, std::size_t max_dim) {
  std::uniform_int_distribution<int> coin(0, 99);
  for (;;) {
    const std::size_t m = coin(rng) < 50 ? 2 : 3;
    const RingPresentation host = matrix_algebra(m, make_field(p, 1));
    const std::size_t hd = host.dimension();
    std::uniform_int_distribution<std::uint64_t> pick(0, *checked_power(p, hd) - 1);
    const int gens = 1 + coin(rng) % 3;
    Subspace s(p, hd);
    for (int g = 0; g < gens; ++g) {
      Vec x = host.element(pick(rng));
      // Zero out a random set of entries to favour nonunital and nilpotent pieces.
      for (std::size_t i = 0; i < hd; ++i) {
        if (coin(rng) < 35) x[i] = 0;
      }
      s.insert(x);
    }
    bool grew = true;
    while (grew && s.dimension() <= max_dim) {
      grew = false;
      const std::vector<Vec> rows = s.rows();
      for (const Vec& a : rows) {
        for (const Vec& b : rows) grew = s.insert(host.mul(a, b)) || grew;
      }
    }
    if (s.is_zero() || s.dimension() > max_dim) continue;
    if (s.dimension() == 1 && coin(rng) < 75) continue;
    // Random change of basis inside the subalgebra.
    const std::size_t d = s.dimension();
    std::vector<Vec> basis;
    Subspace check(p, d);
    std::uniform_int_distribution<int> digit(0, static_cast<int>(p) - 1);
    while (basis.size() < d) {
      Vec c(d);
      for (std::size_t i = 0; i < d; ++i) c[i] = static_cast<Coord>(digit(rng));
      if (!check.insert(c)) continue;
      Vec v(hd);
      for (std::size_t i = 0; i < d; ++i) axpy(v, c[i], s.rows()[i], host.scalars());
      basis.push_back(v);
    }
    return restrict_to(host, basis);
  }
}

inline std::vector<NamedRing> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  std::vector<NamedRing> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t p = i % 2 == 0 ? 2 : 3;
    out.push_back({"random#" + std::to_string(i) + "/F" + std::to_string(p), random_algebra(rng, p, max_dim)});
  }
  return out;
}

/// The 2-dimensional unital algebra F_p[x]/(x^2) with basis {1, x}.
inline RingPresentation dual_numbers(std::uint32_t p) {
  StructureTable sc(2, std::vector<Vec>(2, Vec(2)));
  sc[0][0] = Vec{1, 0};
  sc[0][1] = Vec{0, 1};
  sc[1][0] = Vec{0, 1};
  return make_ring(p, 2, sc);
}

/// Named rings used across suites: the block-matrix family, null rings, matrix
/// algebras, products, opposites and unital extensions, all of order <= 4096.
inline std::vector<NamedRing> family_corpus() {
  std::vector<NamedRing> out;
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}}) {
    const auto ctx = build_Rnq(n, make_field_of_order(q));
    out.push_back({"R(" + std::to_string(n) + "," + std::to_string(q) + ")", ctx.ring()});
    out.push_back({"op R(" + std::to_string(n) + "," + std::to_string(q) + ")", opposite(ctx.ring())});
  }
  for (std::uint32_t p : {2U, 3U, 5U}) out.push_back({"null C" + std::to_string(p) + "^2", build_null_ring(p, 2)});
  out.push_back({"null C2^1", build_null_ring(2, 1)});
  out.push_back({"null C2^3", build_null_ring(2, 3)});
  out.push_back({"F2", matrix_algebra(1, make_field(2, 1))});
  out.push_back({"GF4", matrix_algebra(1, make_field(2, 2))});
  out.push_back({"M2(F2)", matrix_algebra(2, make_field(2, 1))});
  out.push_back({"F2[x]/x^2", dual_numbers(2)});
  out.push_back({"F3[x]/x^2", dual_numbers(3)});
  const RingPresentation r12 = build_Rnq(1, make_field(2, 1)).ring();
  const RingPresentation n22 = build_null_ring(2, 2);
  const RingPresentation f2 = matrix_algebra(1, make_field(2, 1));
  out.push_back({"R(1,2)xR(1,2)", direct_product(std::vector{r12, r12})});
  out.push_back({"R(1,2)xnull C2^2", direct_product(std::vector{r12, n22})});
  out.push_back({"null C2^2 x F2", direct_product(std::vector{n22, f2})});
  out.push_back({"R(1,2)xnull C2", direct_product(std::vector{r12, build_null_ring(2, 1)})});
  out.push_back({"dorroh R(1,2)", dorroh(r12)});
  out.push_back({"dorroh null C2^2", dorroh(n22)});
  return out;
}

}  // namespace testsupport
