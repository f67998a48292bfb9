#pragma once

// Minimal covers of a finite ring by proper one- or two-sided ideals.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringcover/common.hpp"
#include "ringcover/ideals.hpp"
#include "ringcover/ring.hpp"

namespace ringcover {

/// A covering number: a positive integer or infinity, with infinity above every integer.
class Eta {
 public:
  static Eta finite(std::uint64_t n) { return Eta(n); }
  static Eta infinity() { return Eta(); }

  bool is_infinite() const { return !v_.has_value(); }
  bool is_finite() const { return v_.has_value(); }
  /// Throws std::logic_error on infinity.
  std::uint64_t value() const;
  std::string to_string() const;

  friend bool operator==(const Eta&, const Eta&) = default;
  friend std::strong_ordering operator<=>(const Eta& a, const Eta& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.v_ <=> *b.v_;
  }

 private:
  Eta() = default;
  explicit Eta(std::uint64_t n) : v_(n) {}
  std::optional<std::uint64_t> v_;
};

enum class Certificate { exhaustive_branch_and_bound, forced_equals_upper, uncoverable_proof };
std::string to_string(Certificate c);

struct CoverResult {
  Eta eta = Eta::infinity();
  /// A minimum cover in canonical order; empty when eta is infinite.
  std::vector<IdealBasis> cover;
  Certificate certificate = Certificate::uncoverable_proof;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
  std::size_t maximal_count = 0;
  std::size_t forced_count = 0;
};

struct CoverOptions {
  /// Start the search from the forced (cyclic maximal) ideals.
  bool seed_forced = true;
  Limits limits{};
};

/// Exact minimum set cover by branch and bound.
struct SetCoverResult {
  /// Indices into the candidate list, ascending; nullopt when no cover exists.
  std::optional<std::vector<std::size_t>> chosen;
  std::uint64_t nodes = 0;
};

/// Covers every element of `target` using the sets, which must already contain
/// `seed`. Greedy incumbent; branches on the uncovered element with the fewest
/// candidates; prunes with chosen + ceil(uncovered / best single gain).
SetCoverResult exact_set_cover(const std::vector<Bitset>& sets, const Bitset& target, const std::vector<std::size_t>& seed,
                               const Limits& limits = {});

CoverResult covering_number(const RingPresentation& r, Side side, const CoverOptions& opts = {});

/// Like covering_number but throws std::domain_error when no cover exists.
CoverResult minimal_cover(const RingPresentation& r, Side side, const CoverOptions& opts = {});

/// Maximal side-ideals generated by one element; each belongs to every cover.
std::vector<IdealBasis> forced_ideals(const RingPresentation& r, Side side, const Limits& limits = {});

struct QuotientEta {
  IdealBasis ideal;
  Eta eta;
};

struct ElementaryReport {
  bool elementary = false;
  Eta eta = Eta::infinity();
  /// One entry per proper nonzero two-sided ideal I with eta(R/I); empty when R is uncoverable.
  std::vector<QuotientEta> quotients;
};

ElementaryReport is_eta_elementary(const RingPresentation& r, Side side, const Limits& limits = {});

/// Union of the members equals R and no member equals R.
bool covers_ring(const RingPresentation& r, const std::vector<IdealBasis>& cover);
/// Dropping any single member leaves an element uncovered.
bool is_irredundant(const RingPresentation& r, const std::vector<IdealBasis>& cover);

}  // namespace ringcover
