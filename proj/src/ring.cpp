#include "ringcover/ring.hpp"

#include <algorithm>
#include <map>

#include "ringcover/ideals.hpp"
#include "ringcover/kernels.hpp"

namespace ringcover {

AssociativityError::AssociativityError(std::size_t i_, std::size_t j_, std::size_t k_)
    : std::invalid_argument("structure constants are not associative: (e" + std::to_string(i_ + 1) + " e" +
                            std::to_string(j_ + 1) + ") e" + std::to_string(k_ + 1) + " != e" +
                            std::to_string(i_ + 1) + " (e" + std::to_string(j_ + 1) + " e" + std::to_string(k_ + 1) +
                            ")"),
      i(i_),
      j(j_),
      k(k_) {}

namespace {

Vec combine(std::span<const Vec> sc, std::size_t d, const Vec& a, const Vec& b, const ModP& f) {
  // Accumulate without reduction: each term is below 251^2 and at most d^2 <= 576 terms.
  std::array<std::uint32_t, kMaxDim> acc{};
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const std::uint32_t ab = f.mul(a[i], b[j]);
      const Vec& e = sc[i * d + j];
      for (std::size_t m = 0; m < d; ++m) acc[m] += ab * e[m];
    }
  }
  Vec out(d);
  for (std::size_t m = 0; m < d; ++m) out[m] = static_cast<Coord>(acc[m] % f.p());
  return out;
}

}  // namespace

std::uint64_t RingPresentation::order() const {
  auto o = checked_power(f_.p(), d_);
  if (!o) throw std::overflow_error("ring order overflows 64 bits");
  return *o;
}

StructureTable RingPresentation::table() const {
  StructureTable t(d_, std::vector<Vec>(d_));
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) t[i][j] = sc_[i * d_ + j];
  }
  return t;
}

RingElement RingPresentation::mul(const RingElement& a, const RingElement& b) const {
  return combine(sc_, d_, a, b, f_);
}

bool RingPresentation::is_commutative() const {
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = i + 1; j < d_; ++j) {
      if (sc_[i * d_ + j] != sc_[j * d_ + i]) return false;
    }
  }
  return true;
}

bool RingPresentation::is_null() const {
  return std::all_of(sc_.begin(), sc_.end(), [](const Vec& v) { return v.is_zero(); });
}

const IdentityFlags& RingPresentation::identity_flags() const {
  if (!flags_) throw GuardExceeded("ring of order " + std::to_string(f_.p()) + "^" + std::to_string(d_) +
                                   " exceeds the element cap for identity scans");
  return *flags_;
}

std::optional<std::array<std::size_t, 3>> associativity_witness(std::uint32_t p, std::size_t d, const StructureTable& sc) {
  ModP f(p);
  std::vector<Vec> flat;
  flat.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) flat.push_back(sc[i][j]);
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec& ij = flat[i * d + j];
      for (std::size_t k = 0; k < d; ++k) {
        const Vec& jk = flat[j * d + k];
        Vec lhs = combine(flat, d, ij, unit_vector(d, k), f);
        Vec rhs = combine(flat, d, unit_vector(d, i), jk, f);
        if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

RingPresentation make_ring(std::uint32_t p, std::size_t d, const StructureTable& sc, const Limits& limits) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (d > kMaxDim) throw std::invalid_argument("dimension exceeds " + std::to_string(kMaxDim));
  if (sc.size() != d) throw std::invalid_argument("structure table must have d rows");
  for (const auto& row : sc) {
    if (row.size() != d) throw std::invalid_argument("structure table must be d x d");
    for (const Vec& v : row) {
      if (v.size() != d) throw std::invalid_argument("structure constant vectors must have length d");
      for (Coord c : v.coords()) {
        if (c >= p) throw std::invalid_argument("structure constant outside [0, p)");
      }
    }
  }
  if (auto w = associativity_witness(p, d, sc)) throw AssociativityError((*w)[0], (*w)[1], (*w)[2]);

  RingPresentation r;
  r.f_ = ModP(p);
  r.d_ = d;
  r.sc_.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) r.sc_.push_back(sc[i][j]);
  }
  auto order = checked_power(p, d);
  if (order && *order <= limits.max_elements) r.flags_ = kernels::parallel::identity_scan(r);
  return r;
}

RingElement ring_mul(const RingPresentation& r, const RingElement& a, const RingElement& b) { return r.mul(a, b); }

IdentityFlags identity_flags(const RingPresentation& r) { return r.identity_flags(); }

RingPresentation opposite(const RingPresentation& r) {
  const std::size_t d = r.dimension();
  StructureTable t(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) t[i][j] = r.basis_product(j, i);
  }
  return make_ring(r.characteristic(), d, t);
}

RingPresentation direct_product(std::span<const RingPresentation> factors) {
  if (factors.empty()) throw std::invalid_argument("direct product of no factors");
  const std::uint32_t p = factors.front().characteristic();
  std::size_t d = 0;
  for (const auto& f : factors) {
    if (f.characteristic() != p) throw std::invalid_argument("direct product factors have mixed characteristics");
    d += f.dimension();
  }
  StructureTable t(d, std::vector<Vec>(d, Vec(d)));
  std::size_t off = 0;
  for (const auto& f : factors) {
    const std::size_t fd = f.dimension();
    for (std::size_t i = 0; i < fd; ++i) {
      for (std::size_t j = 0; j < fd; ++j) {
        const Vec& v = f.basis_product(i, j);
        for (std::size_t m = 0; m < fd; ++m) t[off + i][off + j][off + m] = v[m];
      }
    }
    off += fd;
  }
  return make_ring(p, d, t);
}

RingPresentation dorroh(const RingPresentation& r) {
  const std::size_t d = r.dimension();
  const std::size_t dd = d + 1;
  StructureTable t(dd, std::vector<Vec>(dd, Vec(dd)));
  t[0][0][0] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    t[0][i + 1][i + 1] = 1;
    t[i + 1][0][i + 1] = 1;
    for (std::size_t j = 0; j < d; ++j) {
      const Vec& v = r.basis_product(i, j);
      for (std::size_t m = 0; m < d; ++m) t[i + 1][j + 1][m + 1] = v[m];
    }
  }
  return make_ring(r.characteristic(), dd, t);
}

RingPresentation matrix_subalgebra(std::size_t m, std::span<const std::pair<std::size_t, std::size_t>> positions,
                                   const FieldSpec& f) {
  const std::size_t k = f.k();
  const std::size_t d = positions.size() * k;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (std::size_t s = 0; s < positions.size(); ++s) {
    if (positions[s].first >= m || positions[s].second >= m) throw std::invalid_argument("matrix position out of range");
    slot[positions[s]] = s;
  }
  StructureTable t(d, std::vector<Vec>(d, Vec(d)));
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = 0; b < positions.size(); ++b) {
      auto [i, j] = positions[a];
      auto [jj, l] = positions[b];
      if (j != jj) continue;
      auto it = slot.find({i, l});
      if (it == slot.end()) throw std::invalid_argument("matrix positions are not closed under multiplication");
      for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t u = 0; u < k; ++u) {
          FieldElement prod = f.mul(f.basis(static_cast<std::uint32_t>(s)), f.basis(static_cast<std::uint32_t>(u)));
          Vec& out = t[a * k + s][b * k + u];
          for (std::size_t c = 0; c < k; ++c) out[it->second * k + c] = static_cast<Coord>(prod.coeffs[c]);
        }
      }
    }
  }
  return make_ring(f.p(), d, t);
}

RingPresentation matrix_algebra(std::size_t n, const FieldSpec& f) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pos.emplace_back(i, j);
  }
  return matrix_subalgebra(n, pos, f);
}

// ---------------------------------------------------------------------------

RingElement QuotientRing::project(const RingElement& x) const {
  Vec r = ideal.reduce(x);
  Vec y(complement.size());
  for (std::size_t c = 0; c < complement.size(); ++c) y[c] = r[complement[c]];
  return y;
}

RingElement QuotientRing::lift(const RingElement& y) const {
  Vec x(ideal.ambient());
  for (std::size_t c = 0; c < complement.size(); ++c) x[complement[c]] = y[c];
  return x;
}

QuotientRing quotient(const RingPresentation& r, const Subspace& ideal) {
  const std::size_t d = r.dimension();
  if (ideal.ambient() != d || ideal.characteristic() != r.characteristic()) {
    throw std::invalid_argument("ideal does not belong to this ring");
  }
  for (const Vec& b : ideal.rows()) {
    for (std::size_t i = 0; i < d; ++i) {
      if (!ideal.contains(r.mul(r.basis(i), b)) || !ideal.contains(r.mul(b, r.basis(i)))) {
        throw std::invalid_argument("quotient requires a two-sided ideal; the subspace is not closed on both sides");
      }
    }
  }
  QuotientRing q;
  q.ideal = ideal;
  q.complement = ideal.nonpivots();
  const std::size_t m = q.complement.size();
  StructureTable t(m, std::vector<Vec>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t[a][b] = q.project(r.mul(r.basis(q.complement[a]), r.basis(q.complement[b])));
    }
  }
  q.ring = make_ring(r.characteristic(), m, t);
  return q;
}

QuotientRing quotient(const RingPresentation& r, const IdealBasis& ideal) { return quotient(r, ideal.subspace()); }

}  // namespace ringcover
