#include "ringcover/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace ringcover::kernels {

Subspace close_under_action(const RingPresentation& r, Subspace s, Side side) {
  const std::size_t d = r.dimension();
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Vec> rows = s.rows();
    for (const Vec& b : rows) {
      for (std::size_t i = 0; i < d; ++i) {
        if (side != Side::right) grew |= s.insert(r.mul(r.basis(i), b));
        if (side != Side::left) grew |= s.insert(r.mul(b, r.basis(i)));
      }
    }
  }
  return s;
}

bool left_quasi_regular_linear(const RingPresentation& r, const RingElement& a) {
  // b o a = b + a - ba = 0  <=>  b (1 - R_a) = -a, with R_a(b) = ba linear in b.
  const std::size_t d = r.dimension();
  std::vector<Vec> rows(d);
  for (std::size_t i = 0; i < d; ++i) rows[i] = r.sub(r.basis(i), r.mul(r.basis(i), a));
  return solve_left(rows, r.neg(a), r.scalars()).has_value();
}

namespace {

constexpr std::uint8_t kLeft = 1;
constexpr std::uint8_t kRight = 2;

std::uint8_t identity_bits(const RingPresentation& r, const RingElement& x) {
  std::uint8_t bits = kLeft | kRight;
  for (std::size_t j = 0; j < r.dimension() && bits != 0; ++j) {
    const RingElement e = r.basis(j);
    if ((bits & kLeft) && r.mul(x, e) != e) bits &= static_cast<std::uint8_t>(~kLeft);
    if ((bits & kRight) && r.mul(e, x) != e) bits &= static_cast<std::uint8_t>(~kRight);
  }
  return bits;
}

IdentityFlags gather_identities(const RingPresentation& r, const std::vector<std::uint8_t>& bits) {
  IdentityFlags f;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & kLeft) f.left_identities.push_back(r.element(i));
    if (bits[i] & kRight) f.right_identities.push_back(r.element(i));
    if ((bits[i] & kLeft) && (bits[i] & kRight)) f.has_identity = true;
  }
  return f;
}

bool radical_member(const RingPresentation& r, const ElementMask& q, const RingElement& a) {
  if (!q[r.index_of(a)]) return false;
  std::vector<Vec> gens;
  gens.reserve(r.dimension());
  for (std::size_t i = 0; i < r.dimension(); ++i) gens.push_back(r.mul(r.basis(i), a));
  const Subspace ra = Subspace::span(r.characteristic(), r.dimension(), gens);
  return ra.all_of_elements([&](const Vec& t) { return q[r.index_of(t)] != 0; });
}

Subspace cyclic_of(const RingPresentation& r, const RingElement& x, Side side) {
  Subspace s(r.characteristic(), r.dimension());
  s.insert(x);
  return close_under_action(r, std::move(s), side);
}

Bitset members(const RingPresentation& r, const Subspace& s) {
  Bitset b(static_cast<std::size_t>(r.order()));
  s.for_each_element([&](const Vec& v) { b.set(static_cast<std::size_t>(r.index_of(v))); });
  return b;
}

std::vector<Subspace> sort_unique(std::vector<Subspace> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

namespace serial {

IdentityFlags identity_scan(const RingPresentation& r) {
  const std::uint64_t n = r.order();
  std::vector<std::uint8_t> bits(n);
  for (std::uint64_t i = 0; i < n; ++i) bits[i] = identity_bits(r, r.element(i));
  return gather_identities(r, bits);
}

ElementMask quasi_regular_mask(const RingPresentation& r) {
  const std::uint64_t n = r.order();
  ElementMask m(n);
  for (std::uint64_t i = 0; i < n; ++i) m[i] = left_quasi_regular_linear(r, r.element(i)) ? 1 : 0;
  return m;
}

ElementMask radical_mask(const RingPresentation& r, const ElementMask& quasi_regular) {
  const std::uint64_t n = r.order();
  ElementMask m(n);
  for (std::uint64_t i = 0; i < n; ++i) m[i] = radical_member(r, quasi_regular, r.element(i)) ? 1 : 0;
  return m;
}

std::vector<Subspace> cyclic_ideals(const RingPresentation& r, Side side) {
  const std::uint64_t n = r.order();
  std::vector<Subspace> out(n);
  for (std::uint64_t i = 0; i < n; ++i) out[i] = cyclic_of(r, r.element(i), side);
  return sort_unique(std::move(out));
}

std::vector<Bitset> membership_bitsets(const RingPresentation& r, std::span<const Subspace> subspaces) {
  std::vector<Bitset> out(subspaces.size());
  for (std::size_t i = 0; i < subspaces.size(); ++i) out[i] = members(r, subspaces[i]);
  return out;
}

}  // namespace serial

// ---------------------------------------------------------------------------

namespace parallel {

IdentityFlags identity_scan(const RingPresentation& r) {
  const auto n = static_cast<std::int64_t>(r.order());
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = identity_bits(r, r.element(static_cast<std::uint64_t>(i)));
  return gather_identities(r, bits);
}

ElementMask quasi_regular_mask(const RingPresentation& r) {
  const auto n = static_cast<std::int64_t>(r.order());
  ElementMask m(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)] = left_quasi_regular_linear(r, r.element(static_cast<std::uint64_t>(i))) ? 1 : 0;
  }
  return m;
}

ElementMask radical_mask(const RingPresentation& r, const ElementMask& quasi_regular) {
  const auto n = static_cast<std::int64_t>(r.order());
  ElementMask m(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)] = radical_member(r, quasi_regular, r.element(static_cast<std::uint64_t>(i))) ? 1 : 0;
  }
  return m;
}

std::vector<Subspace> cyclic_ideals(const RingPresentation& r, Side side) {
  const auto n = static_cast<std::int64_t>(r.order());
  std::vector<Subspace> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = cyclic_of(r, r.element(static_cast<std::uint64_t>(i)), side);
  }
  return sort_unique(std::move(out));
}

std::vector<Bitset> membership_bitsets(const RingPresentation& r, std::span<const Subspace> subspaces) {
  const auto n = static_cast<std::int64_t>(subspaces.size());
  std::vector<Bitset> out(subspaces.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = members(r, subspaces[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace parallel

}  // namespace ringcover::kernels
