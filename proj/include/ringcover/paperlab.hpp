#pragma once

// The block-matrix family R(n,q) = {(A|v)} with (A|v)(B|w) = (AB|Aw), null rings,
// their distinguished left ideals, closed-form covering counts, verification
// records, and exhaustive small-dimension classification scans.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringcover/common.hpp"
#include "ringcover/cover.hpp"
#include "ringcover/field.hpp"
#include "ringcover/ideals.hpp"
#include "ringcover/ring.hpp"

namespace ringcover {

using FqVector = std::vector<FieldElement>;
/// Row-major n x n matrix over F_q.
using FqMatrix = std::vector<FqVector>;

/// R(n,q) together with the coordinates of its F_p-basis.
/// Basis index (i*n + j)*k + t is x^t in entry A_ij; (n*n + i)*k + t is x^t in v_i.
class RnqContext {
 public:
  RnqContext(std::size_t n, FieldSpec field);

  std::size_t n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const RingPresentation& ring() const { return ring_; }

  RingElement encode(const FqMatrix& a, const FqVector& v) const;
  std::pair<FqMatrix, FqVector> decode(const RingElement& x) const;
  FqMatrix zero_matrix() const;
  FqMatrix identity_matrix() const;
  FqVector zero_vector() const;
  /// The left identity (I_n | 0).
  RingElement left_identity() const { return encode(identity_matrix(), zero_vector()); }

 private:
  std::size_t n_;
  FieldSpec field_;
  RingPresentation ring_;
};

RnqContext build_Rnq(std::size_t n, const FieldSpec& f);
/// The transposed family {(A 0; v^T 0)}, isomorphic to opposite(R(n,q)).
RingPresentation build_Rnq_transpose(std::size_t n, const FieldSpec& f);
/// All products zero, additive group C_p^r.
RingPresentation build_null_ring(std::uint32_t p, std::size_t r);

/// {v in F_q^n : v . u = 0 for every u in rows}
std::vector<FqVector> fq_orthogonal_complement(const FieldSpec& f, std::size_t n, const std::vector<FqVector>& rows);
/// Every nonzero vector of F_q^n whose first nonzero entry is 1 (one per line), in index order.
std::vector<FqVector> projective_points(const FieldSpec& f, std::size_t n);
std::vector<FqVector> all_vectors(const FieldSpec& f, std::size_t n);

/// L_v = {(A | Av) : A in M_n(F_q)}
IdealBasis ideal_Lv(const RnqContext& ctx, const FqVector& v);
/// N_V = {(A | w) : AV = 0}, V the line through dir; throws on a zero direction.
IdealBasis ideal_NV(const RnqContext& ctx, const FqVector& dir);
/// N_V for the subspace spanned by the given vectors.
IdealBasis ideal_NV_subspace(const RnqContext& ctx, const std::vector<FqVector>& spanning);
/// The generator B of N_V: rows b_i^T over a basis of V-perp, and (0 .. 0 | 1) last.
RingElement nv_generator(const RnqContext& ctx, const FqVector& dir);

/// All L_v followed by N_V over every line, as left ideals.
std::vector<IdealBasis> canonical_cover(const RnqContext& ctx);
std::vector<IdealBasis> canonical_cover(std::size_t n, const FieldSpec& f);

/// (q^{n+1} - 1)/(q - 1)
std::uint64_t covering_formula(std::uint64_t n, std::uint64_t q);
/// (q^n - 1)/(q - 1), the number of lines in F_q^n.
std::uint64_t gaussian_count(std::uint64_t n, std::uint64_t q);
bool is_prime_power(std::uint64_t q);

struct VerificationRecord {
  std::string theorem;  // "main" or "two-sided"
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::uint32_t p = 0;
  std::uint64_t order = 0;
  Eta computed_eta = Eta::infinity();
  std::uint64_t formula_eta = 0;
  bool elementary = false;
  std::size_t forced_count = 0;
  std::size_t maximal_count = 0;
  double elapsed_ms = 0.0;
  bool pass = false;
  std::vector<std::string> failures;
};

/// Builds R(n,q) and checks the left covering number against the formula, the
/// elementary property, eta_r = eta = infinity, forced = maximal = formula and
/// the order of every maximal left ideal.
VerificationRecord verify_main_theorem(std::size_t n, const FieldSpec& f, const Limits& limits = {});
/// verify_main_theorem over (n, q) pairs, records run in parallel and returned in input order.
/// Rethrows the first GuardExceeded after every record has finished.
std::vector<VerificationRecord> verify_main_grid(const std::vector<std::pair<std::size_t, std::uint32_t>>& cases,
                                                 const Limits& limits = {});
/// Null ring on C_p x C_p: eta = p+1, elementary, every line quotient uncoverable.
VerificationRecord verify_two_sided_theorem(std::uint32_t p, const Limits& limits = {});

std::string csv_header(const std::string& theorem);
/// elapsed_ms is left empty unless include_timing is set, so reports stay byte-identical.
std::string csv_row(const VerificationRecord& rec, bool include_timing);

struct Fingerprint {
  std::uint64_t order = 0;
  std::uint32_t characteristic = 0;
  std::uint64_t radical_order = 0;
  bool has_identity = false;
  bool has_left_identity = false;
  bool has_right_identity = false;
  std::size_t left_ideal_count = 0;
  std::size_t two_sided_ideal_count = 0;
  Eta eta_left = Eta::infinity();
  Eta eta_right = Eta::infinity();
  Eta eta_two_sided = Eta::infinity();

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const RingPresentation& r, const Limits& limits = {});

struct ScanClass {
  Fingerprint fingerprint;
  RingPresentation representative;  // lowest table index with this fingerprint
  std::uint64_t count = 0;
};

struct ScanOptions {
  /// Examine this many uniformly drawn tables instead of all of them.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  Limits limits{};
};

struct ScanResult {
  std::uint32_t p = 0;
  std::size_t d = 0;
  bool sampled = false;
  std::uint64_t tables_examined = 0;
  std::uint64_t associative = 0;
  std::uint64_t elementary = 0;
  std::vector<ScanClass> classes;        // eta_l-elementary survivors grouped by fingerprint
  std::vector<Fingerprint> expected;     // fingerprints of the known eta_l-elementary rings of order p^d
  bool matches_classification = false;   // classes' fingerprints == expected
};

/// Enumerates structure tables of dimension d over F_p (digit order sc[i][j][m],
/// first index most significant), keeps the associative ones and groups the
/// eta_l-elementary survivors by fingerprint.
ScanResult fingerprint_scan(std::uint32_t p, std::size_t d, const ScanOptions& opts = {});

/// Decodes table number `index` in the scan order.
StructureTable table_from_index(std::uint32_t p, std::size_t d, std::uint64_t index);

/// Exhaustive search over GL(d, p) for an isomorphism a -> b; rows are the images
/// of a's basis vectors. Throws GuardExceeded when p^(d*d) exceeds max_elements.
std::optional<std::vector<Vec>> find_isomorphism(const RingPresentation& a, const RingPresentation& b,
                                                 const Limits& limits = {});

}  // namespace ringcover
