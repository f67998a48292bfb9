#pragma once

// Linear algebra over prime fields F_p: fixed-capacity coordinate vectors,
// canonical reduced-echelon subspaces, element indexing, and small bitsets.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringcover {

inline constexpr std::size_t kMaxDim = 24;
using Coord = std::uint8_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ for a prime p < 256.
class ModP {
 public:
  ModP() = default;
  explicit ModP(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  Coord add(Coord a, Coord b) const { return static_cast<Coord>((a + b) % p_); }
  Coord sub(Coord a, Coord b) const { return static_cast<Coord>((a + p_ - b) % p_); }
  Coord mul(Coord a, Coord b) const { return static_cast<Coord>((static_cast<std::uint32_t>(a) * b) % p_); }
  Coord neg(Coord a) const { return static_cast<Coord>((p_ - a) % p_); }
  /// Requires a != 0.
  Coord inv(Coord a) const { return inv_[a]; }

 private:
  std::uint32_t p_ = 2;
  std::vector<Coord> inv_;
};

/// Coordinate vector of length <= kMaxDim. Unused slots are kept zero so the
/// defaulted ordering is lexicographic on the live coordinates.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n);
  Vec(std::initializer_list<int> coords);

  std::size_t size() const { return n_; }
  Coord operator[](std::size_t i) const { return c_[i]; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  bool is_zero() const;
  std::span<const Coord> coords() const { return {c_.data(), n_}; }

  friend bool operator==(const Vec&, const Vec&) = default;
  friend auto operator<=>(const Vec&, const Vec&) = default;

 private:
  std::array<Coord, kMaxDim> c_{};
  std::uint8_t n_ = 0;
};

/// y += a * x
void axpy(Vec& y, Coord a, const Vec& x, const ModP& f);
Vec add(const Vec& x, const Vec& y, const ModP& f);
Vec sub(const Vec& x, const Vec& y, const ModP& f);
Vec scale(Coord a, const Vec& x, const ModP& f);
Vec unit_vector(std::size_t n, std::size_t i);
std::string to_string(const Vec& v);

/// p^d, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t d);

/// Big-endian base-p index; index order equals lexicographic order of coordinates.
std::uint64_t element_index(const Vec& v, std::uint32_t p);
Vec element_at(std::uint64_t index, std::uint32_t p, std::size_t d);

/// A subspace of F_p^n stored as its unique reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::uint32_t p, std::size_t ambient);

  static Subspace span(std::uint32_t p, std::size_t ambient, std::span<const Vec> vecs);
  static Subspace full(std::uint32_t p, std::size_t ambient);

  std::uint32_t characteristic() const { return f_.p(); }
  const ModP& field() const { return f_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Columns without a pivot, ascending; they index a canonical complement.
  std::vector<std::size_t> nonpivots() const;
  std::uint64_t order() const;
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const Vec& v);
  /// Eliminates every pivot column from v. The result is zero iff v is in the span.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Coefficients of v with respect to rows(); nullopt when v is outside the span.
  std::optional<std::vector<Coord>> coordinates(const Vec& v) const;

  /// Visits elements of the subspace (p^dim of them) until pred returns false;
  /// returns whether every visited element satisfied pred.
  template <class P>
  bool all_of_elements(P&& pred) const {
    Vec cur(ambient_);
    std::vector<Coord> digits(rows_.size(), 0);
    if (!pred(static_cast<const Vec&>(cur))) return false;
    for (;;) {
      std::size_t k = 0;
      while (k < digits.size()) {
        axpy(cur, 1, rows_[k], f_);
        if (++digits[k] < f_.p()) break;
        digits[k] = 0;
        ++k;
      }
      if (k == digits.size()) return true;
      if (!pred(static_cast<const Vec&>(cur))) return false;
    }
  }

  template <class F>
  void for_each_element(F&& visit) const {
    all_of_elements([&](const Vec& v) {
      visit(v);
      return true;
    });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.f_.p() == b.f_.p() && a.rows_ == b.rows_;
  }
  /// (dimension, lexicographic echelon matrix)
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  ModP f_;
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// {c in F_p^m : sum_k c_k rows[k] = 0} for m rows of arbitrary length.
Subspace left_kernel(std::uint32_t p, const std::vector<std::vector<Coord>>& rows);

/// Finds x with x * M = target where M is given by its rows (row-vector convention).
std::optional<Vec> solve_left(std::span<const Vec> rows, const Vec& target, const ModP& f);

/// Dynamic bitset sized for element universes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t count() const;
  bool all() const { return count() == n_; }
  bool none() const;
  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  /// this &= ~o
  Bitset& subtract(const Bitset& o);
  std::size_t count_and(const Bitset& o) const;
  /// First set bit at or after i, or size().
  std::size_t next(std::size_t i) const;
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ringcover
