#include "ringcover/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ringcover {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModP::ModP(std::uint32_t p) : p_(p), inv_(p, 0) {
  if (!is_prime(p) || p > 251) throw std::invalid_argument("characteristic must be a prime below 256, got " + std::to_string(p));
  for (std::uint32_t a = 1; a < p; ++a) {
    for (std::uint32_t b = 1; b < p; ++b) {
      if ((a * b) % p == 1) {
        inv_[a] = static_cast<Coord>(b);
        break;
      }
    }
  }
}

Vec::Vec(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
  if (n > kMaxDim) throw std::length_error("dimension " + std::to_string(n) + " exceeds kMaxDim");
}

Vec::Vec(std::initializer_list<int> coords) : Vec(coords.size()) {
  std::size_t i = 0;
  for (int c : coords) c_[i++] = static_cast<Coord>(c);
}

bool Vec::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + n_, [](Coord c) { return c == 0; });
}

void axpy(Vec& y, Coord a, const Vec& x, const ModP& f) {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(a, x[i]));
  }
}

Vec add(const Vec& x, const Vec& y, const ModP& f) {
  Vec r = x;
  axpy(r, 1, y, f);
  return r;
}

Vec sub(const Vec& x, const Vec& y, const ModP& f) {
  Vec r = x;
  axpy(r, f.neg(1), y, f);
  return r;
}

Vec scale(Coord a, const Vec& x, const ModP& f) {
  Vec r(x.size());
  axpy(r, a, x, f);
  return r;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

std::string to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t d) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (r > UINT64_MAX / p) return std::nullopt;
    r *= p;
  }
  return r;
}

std::uint64_t element_index(const Vec& v, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < v.size(); ++i) idx = idx * p + v[i];
  return idx;
}

Vec element_at(std::uint64_t index, std::uint32_t p, std::size_t d) {
  Vec v(d);
  for (std::size_t i = d; i-- > 0;) {
    v[i] = static_cast<Coord>(index % p);
    index /= p;
  }
  return v;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::uint32_t p, std::size_t ambient) : f_(p), ambient_(ambient) {}

Subspace Subspace::span(std::uint32_t p, std::size_t ambient, std::span<const Vec> vecs) {
  Subspace s(p, ambient);
  for (const Vec& v : vecs) s.insert(v);
  return s;
}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
  Subspace s(p, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::nonpivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::uint64_t Subspace::order() const {
  auto o = checked_power(f_.p(), rows_.size());
  if (!o) throw std::overflow_error("subspace order overflows 64 bits");
  return *o;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Coord c = r[pivots_[k]];
    if (c != 0) axpy(r, f_.neg(c), rows_[k], f_);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.dimension() > dimension()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& v) { return contains(v); });
}

bool Subspace::insert(const Vec& v) {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match subspace ambient dimension");
  Vec r = reduce(v);
  std::size_t piv = 0;
  while (piv < ambient_ && r[piv] == 0) ++piv;
  if (piv == ambient_) return false;
  r = scale(f_.inv(r[piv]), r, f_);
  for (Vec& row : rows_) {
    Coord c = row[piv];
    if (c != 0) axpy(row, f_.neg(c), r, f_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto at = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + at, r);
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const Vec& v : other.rows_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Zassenhaus: row-reduce [U | U ; W | 0]; rows with zero left half span U ∩ W in the right half.
  const std::size_t n = ambient_;
  std::vector<std::vector<Coord>> m;
  for (const Vec& u : rows_) {
    std::vector<Coord> row(2 * n);
    for (std::size_t i = 0; i < n; ++i) row[i] = row[n + i] = u[i];
    m.push_back(std::move(row));
  }
  for (const Vec& w : other.rows_) {
    std::vector<Coord> row(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = w[i];
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    Coord inv = f_.inv(m[rank][col]);
    for (Coord& c : m[rank]) c = f_.mul(c, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Coord c = f_.neg(m[r][col]);
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] = f_.add(m[r][j], f_.mul(c, m[rank][j]));
    }
    ++rank;
  }
  Subspace out(f_.p(), n);
  for (const auto& row : m) {
    bool left_zero = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n), [](Coord c) { return c == 0; });
    if (!left_zero) continue;
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = row[n + i];
    out.insert(v);
  }
  return out;
}

std::optional<std::vector<Coord>> Subspace::coordinates(const Vec& v) const {
  // In RREF the coefficient of row k is the entry at its pivot column.
  std::vector<Coord> coeffs(rows_.size());
  Vec acc(ambient_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    coeffs[k] = v[pivots_[k]];
    axpy(acc, coeffs[k], rows_[k], f_);
  }
  if (acc != v) return std::nullopt;
  return coeffs;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  for (std::size_t k = 0; k < a.rows_.size(); ++k) {
    if (auto c = a.rows_[k] <=> b.rows_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::optional<Vec> solve_left(std::span<const Vec> rows, const Vec& target, const ModP& f) {
  // Track combinations: each working row carries its coefficient vector over the input rows.
  const std::size_t m = rows.size();
  const std::size_t n = target.size();
  struct Work {
    Vec v;
    std::vector<Coord> combo;
  };
  std::vector<Work> basis;
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < m; ++i) {
    Work w{rows[i], std::vector<Coord>(m, 0)};
    w.combo[i] = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Coord c = w.v[piv[k]];
      if (c == 0) continue;
      Coord nc = f.neg(c);
      axpy(w.v, nc, basis[k].v, f);
      for (std::size_t j = 0; j < m; ++j) w.combo[j] = f.add(w.combo[j], f.mul(nc, basis[k].combo[j]));
    }
    std::size_t p = 0;
    while (p < n && w.v[p] == 0) ++p;
    if (p == n) continue;
    Coord inv = f.inv(w.v[p]);
    w.v = scale(inv, w.v, f);
    for (Coord& c : w.combo) c = f.mul(c, inv);
    basis.push_back(std::move(w));
    piv.push_back(p);
  }
  Vec rem = target;
  std::vector<Coord> x(m, 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Coord c = rem[piv[k]];
    if (c == 0) continue;
    axpy(rem, f.neg(c), basis[k].v, f);
    for (std::size_t j = 0; j < m; ++j) x[j] = f.add(x[j], f.mul(c, basis[k].combo[j]));
  }
  if (!rem.is_zero()) return std::nullopt;
  Vec out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = x[j];
  return out;
}

Subspace left_kernel(std::uint32_t p, const std::vector<std::vector<Coord>>& rows) {
  const ModP f(p);
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  // Row-reduce [rows | I]; rows whose left block vanishes give kernel vectors.
  std::vector<std::vector<Coord>> a(m, std::vector<Coord>(n + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(rows[i].begin(), rows[i].end(), a[i].begin());
    a[i][n + i] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t sel = rank;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[rank], a[sel]);
    Coord inv = f.inv(a[rank][col]);
    for (Coord& c : a[rank]) c = f.mul(c, inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Coord c = f.neg(a[r][col]);
      for (std::size_t j = 0; j < n + m; ++j) a[r][j] = f.add(a[r][j], f.mul(c, a[rank][j]));
    }
    ++rank;
  }
  Subspace out(p, m);
  for (std::size_t r = rank; r < m; ++r) {
    Vec v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = a[r][n + j];
    out.insert(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

std::size_t Bitset::count_and(const Bitset& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
  return c;
}

std::size_t Bitset::next(std::size_t i) const {
  if (i >= n_) return n_;
  std::size_t wi = i >> 6;
  std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
  for (;;) {
    if (w != 0) {
      std::size_t r = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      return r < n_ ? r : n_;
    }
    if (++wi >= w_.size()) return n_;
    w = w_[wi];
  }
}

}  // namespace ringcover
