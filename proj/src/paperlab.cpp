#include "ringcover/paperlab.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <sstream>

#include "ringcover/radical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ringcover {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> rnq_positions(std::size_t n, bool transpose) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pos.emplace_back(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) pos.push_back(transpose ? std::pair{n, i} : std::pair{i, n});
  return pos;
}

bool fq_is_zero(const FqVector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& a) {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
  });
}

}  // namespace

RnqContext::RnqContext(std::size_t n, FieldSpec field) : n_(n), field_(std::move(field)) {
  if (n == 0) throw std::invalid_argument("R(n,q) needs n >= 1");
  const auto pos = rnq_positions(n, false);
  ring_ = matrix_subalgebra(n + 1, pos, field_);
}

FqMatrix RnqContext::zero_matrix() const { return FqMatrix(n_, FqVector(n_, field_.zero())); }

FqMatrix RnqContext::identity_matrix() const {
  FqMatrix m = zero_matrix();
  for (std::size_t i = 0; i < n_; ++i) m[i][i] = field_.one();
  return m;
}

FqVector RnqContext::zero_vector() const { return FqVector(n_, field_.zero()); }

RingElement RnqContext::encode(const FqMatrix& a, const FqVector& v) const {
  if (a.size() != n_ || v.size() != n_) throw std::invalid_argument("block has the wrong size");
  const std::size_t k = field_.k();
  RingElement x(ring_.dimension());
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].size() != n_) throw std::invalid_argument("block has the wrong size");
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t t = 0; t < k; ++t) x[(i * n_ + j) * k + t] = static_cast<Coord>(a[i][j].coeffs[t]);
    }
    for (std::size_t t = 0; t < k; ++t) x[(n_ * n_ + i) * k + t] = static_cast<Coord>(v[i].coeffs[t]);
  }
  return x;
}

std::pair<FqMatrix, FqVector> RnqContext::decode(const RingElement& x) const {
  const std::size_t k = field_.k();
  FqMatrix a = zero_matrix();
  FqVector v = zero_vector();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t t = 0; t < k; ++t) a[i][j].coeffs[t] = x[(i * n_ + j) * k + t];
    }
    for (std::size_t t = 0; t < k; ++t) v[i].coeffs[t] = x[(n_ * n_ + i) * k + t];
  }
  return {a, v};
}

RnqContext build_Rnq(std::size_t n, const FieldSpec& f) { return RnqContext(n, f); }

RingPresentation build_Rnq_transpose(std::size_t n, const FieldSpec& f) {
  if (n == 0) throw std::invalid_argument("R(n,q) needs n >= 1");
  const auto pos = rnq_positions(n, true);
  return matrix_subalgebra(n + 1, pos, f);
}

RingPresentation build_null_ring(std::uint32_t p, std::size_t r) {
  if (r == 0) throw std::invalid_argument("null ring needs r >= 1");
  StructureTable sc(r, std::vector<Vec>(r, Vec(r)));
  return make_ring(p, r, sc);
}

// ---------------------------------------------------------------------------

std::vector<FqVector> fq_orthogonal_complement(const FieldSpec& f, std::size_t n, const std::vector<FqVector>& rows) {
  std::vector<FqVector> m = rows;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && fq_is_zero({m[piv][c]})) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const FieldElement inv = f.inv(m[r][c]);
    for (auto& e : m[r]) e = f.mul(e, inv);
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (o == r || fq_is_zero({m[o][c]})) continue;
      const FieldElement factor = m[o][c];
      for (std::size_t j = 0; j < n; ++j) m[o][j] = f.sub(m[o][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<FqVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    FqVector u(n, f.zero());
    u[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = f.neg(m[i][free]);
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<FqVector> all_vectors(const FieldSpec& f, std::size_t n) {
  const auto total = checked_power(f.q(), n);
  if (!total) throw std::overflow_error("F_q^n too large to list");
  std::vector<FqVector> out;
  out.reserve(*total);
  for (std::uint64_t idx = 0; idx < *total; ++idx) {
    FqVector v(n);
    std::uint64_t rest = idx;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = f.element(static_cast<std::uint32_t>(rest % f.q()));
      rest /= f.q();
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FqVector> projective_points(const FieldSpec& f, std::size_t n) {
  std::vector<FqVector> out;
  for (auto& v : all_vectors(f, n)) {
    auto lead = std::find_if(v.begin(), v.end(), [&](const FieldElement& a) { return a != f.zero(); });
    if (lead != v.end() && *lead == f.one()) out.push_back(std::move(v));
  }
  return out;
}

IdealBasis ideal_Lv(const RnqContext& ctx, const FqVector& v) {
  const std::size_t n = ctx.n();
  const FieldSpec& f = ctx.field();
  if (v.size() != n) throw std::invalid_argument("L_v needs a vector of length n");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::uint32_t t = 0; t < f.k(); ++t) {
        FqMatrix a = ctx.zero_matrix();
        a[i][j] = f.basis(t);
        FqVector av = ctx.zero_vector();
        av[i] = f.mul(f.basis(t), v[j]);
        gens.push_back(ctx.encode(a, av));
      }
    }
  }
  const RingPresentation& r = ctx.ring();
  return make_ideal(r, Subspace::span(r.characteristic(), r.dimension(), gens), Side::left);
}

IdealBasis ideal_NV_subspace(const RnqContext& ctx, const std::vector<FqVector>& spanning) {
  const std::size_t n = ctx.n();
  const FieldSpec& f = ctx.field();
  for (const auto& s : spanning) {
    if (s.size() != n) throw std::invalid_argument("N_V needs vectors of length n");
  }
  const std::vector<FqVector> perp = fq_orthogonal_complement(f, n, spanning);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& b : perp) {
      for (std::uint32_t t = 0; t < f.k(); ++t) {
        FqMatrix a = ctx.zero_matrix();
        for (std::size_t j = 0; j < n; ++j) a[i][j] = f.mul(f.basis(t), b[j]);
        gens.push_back(ctx.encode(a, ctx.zero_vector()));
      }
    }
    for (std::uint32_t t = 0; t < f.k(); ++t) {
      FqVector w = ctx.zero_vector();
      w[i] = f.basis(t);
      gens.push_back(ctx.encode(ctx.zero_matrix(), w));
    }
  }
  const RingPresentation& r = ctx.ring();
  return make_ideal(r, Subspace::span(r.characteristic(), r.dimension(), gens), Side::left);
}

IdealBasis ideal_NV(const RnqContext& ctx, const FqVector& dir) {
  if (dir.size() != ctx.n()) throw std::invalid_argument("N_V needs a vector of length n");
  if (fq_is_zero(dir)) throw std::invalid_argument("N_V needs a nonzero direction");
  return ideal_NV_subspace(ctx, {dir});
}

RingElement nv_generator(const RnqContext& ctx, const FqVector& dir) {
  if (dir.size() != ctx.n() || fq_is_zero(dir)) throw std::invalid_argument("N_V needs a nonzero direction of length n");
  const std::vector<FqVector> perp = fq_orthogonal_complement(ctx.field(), ctx.n(), {dir});
  FqMatrix a = ctx.zero_matrix();
  for (std::size_t i = 0; i < perp.size(); ++i) a[i] = perp[i];
  FqVector w = ctx.zero_vector();
  w[ctx.n() - 1] = ctx.field().one();
  return ctx.encode(a, w);
}

std::vector<IdealBasis> canonical_cover(const RnqContext& ctx) {
  std::vector<IdealBasis> out;
  for (const auto& v : all_vectors(ctx.field(), ctx.n())) out.push_back(ideal_Lv(ctx, v));
  for (const auto& dir : projective_points(ctx.field(), ctx.n())) out.push_back(ideal_NV(ctx, dir));
  if (!covers_ring(ctx.ring(), out)) throw std::logic_error("the L_v and N_V ideals do not cover R(n,q)");
  return out;
}

std::vector<IdealBasis> canonical_cover(std::size_t n, const FieldSpec& f) { return canonical_cover(build_Rnq(n, f)); }

// ---------------------------------------------------------------------------

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

std::uint64_t gaussian_count(std::uint64_t n, std::uint64_t q) {
  if (n < 1 || !is_prime_power(q)) throw std::invalid_argument("gaussian_count needs n >= 1 and a prime power q");
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (sum > UINT64_MAX - term) throw std::overflow_error("gaussian_count overflows");
    sum += term;
    if (i + 1 < n) {
      if (term > UINT64_MAX / q) throw std::overflow_error("gaussian_count overflows");
      term *= q;
    }
  }
  return sum;
}

std::uint64_t covering_formula(std::uint64_t n, std::uint64_t q) {
  if (n < 1 || !is_prime_power(q)) throw std::invalid_argument("covering_formula needs n >= 1 and a prime power q");
  return gaussian_count(n + 1, q);
}

namespace {

void expect(VerificationRecord& rec, bool ok, const std::string& what) {
  if (!ok) rec.failures.push_back(what);
}

}  // namespace

VerificationRecord verify_main_theorem(std::size_t n, const FieldSpec& f, const Limits& limits) {
  Deadline clock(limits.time_budget_s);
  VerificationRecord rec;
  rec.theorem = "main";
  rec.q = f.q();
  rec.n = n;
  rec.p = f.p();
  rec.formula_eta = covering_formula(n, f.q());

  const RnqContext ctx = build_Rnq(n, f);
  const RingPresentation& r = ctx.ring();
  rec.order = r.order();
  CoverOptions opts;
  opts.limits = limits;

  const CoverResult left = covering_number(r, Side::left, opts);
  rec.computed_eta = left.eta;
  rec.forced_count = left.forced_count;
  rec.maximal_count = left.maximal_count;
  expect(rec, left.eta == Eta::finite(rec.formula_eta),
         "eta_left = " + left.eta.to_string() + ", formula gives " + std::to_string(rec.formula_eta));
  expect(rec, left.forced_count == rec.formula_eta, "forced count " + std::to_string(left.forced_count));
  expect(rec, left.maximal_count == rec.formula_eta, "maximal count " + std::to_string(left.maximal_count));

  const std::uint64_t max_order = *checked_power(f.q(), n * n);
  for (const auto& m : maximal_ideals(r, Side::left, limits)) {
    if (m.order() != max_order) {
      expect(rec, false, "maximal left ideal of order " + std::to_string(m.order()));
      break;
    }
  }

  rec.elementary = is_eta_elementary(r, Side::left, limits).elementary;
  expect(rec, rec.elementary, "not eta_left-elementary");
  const Eta right = covering_number(r, Side::right, opts).eta;
  expect(rec, right.is_infinite(), "eta_right = " + right.to_string());
  const Eta both = covering_number(r, Side::two_sided, opts).eta;
  expect(rec, both.is_infinite(), "eta = " + both.to_string());

  rec.pass = rec.failures.empty();
  rec.elapsed_ms = clock.elapsed_ms();
  return rec;
}

std::vector<VerificationRecord> verify_main_grid(const std::vector<std::pair<std::size_t, std::uint32_t>>& cases,
                                                 const Limits& limits) {
  std::vector<VerificationRecord> out(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  const auto count = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto [n, q] = cases[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = verify_main_theorem(n, make_field_of_order(q), limits);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

VerificationRecord verify_two_sided_theorem(std::uint32_t p, const Limits& limits) {
  Deadline clock(limits.time_budget_s);
  VerificationRecord rec;
  rec.theorem = "two-sided";
  rec.p = p;
  rec.formula_eta = std::uint64_t{p} + 1;
  const RingPresentation r = build_null_ring(p, 2);
  rec.order = r.order();
  CoverOptions opts;
  opts.limits = limits;

  const CoverResult res = covering_number(r, Side::two_sided, opts);
  rec.computed_eta = res.eta;
  rec.forced_count = res.forced_count;
  rec.maximal_count = res.maximal_count;
  expect(rec, res.eta == Eta::finite(rec.formula_eta),
         "eta = " + res.eta.to_string() + ", expected " + std::to_string(rec.formula_eta));

  const ElementaryReport rep = is_eta_elementary(r, Side::two_sided, limits);
  rec.elementary = rep.elementary;
  expect(rec, rep.elementary, "not eta-elementary");
  std::size_t lines = 0;
  for (const auto& qe : rep.quotients) {
    if (qe.ideal.dimension() != 1) continue;
    ++lines;
    expect(rec, qe.eta.is_infinite(), "quotient by a line has eta = " + qe.eta.to_string());
  }
  expect(rec, lines == p + 1, "found " + std::to_string(lines) + " lines");

  rec.pass = rec.failures.empty();
  rec.elapsed_ms = clock.elapsed_ms();
  return rec;
}

std::string csv_header(const std::string& theorem) {
  const std::string params = theorem == "main" ? "q,n" : "p";
  return params + ",order,eta_computed,eta_formula,match,elementary,forced,maximal,elapsed_ms";
}

std::string csv_row(const VerificationRecord& rec, bool include_timing) {
  std::ostringstream os;
  if (rec.theorem == "main") {
    os << rec.q << ',' << rec.n;
  } else {
    os << rec.p;
  }
  os << ',' << rec.order << ',' << rec.computed_eta.to_string() << ',' << rec.formula_eta << ','
     << (rec.computed_eta == Eta::finite(rec.formula_eta) ? "true" : "false") << ','
     << (rec.elementary ? "true" : "false") << ',' << rec.forced_count << ',' << rec.maximal_count << ',';
  if (include_timing) os << static_cast<std::uint64_t>(rec.elapsed_ms + 0.5);
  return os.str();
}

// ---------------------------------------------------------------------------

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << " char=" << characteristic << " radical=" << radical_order
     << " identity=" << has_identity << " left_identity=" << has_left_identity
     << " right_identity=" << has_right_identity << " left_ideals=" << left_ideal_count
     << " two_sided_ideals=" << two_sided_ideal_count << " eta_left=" << eta_left.to_string()
     << " eta_right=" << eta_right.to_string() << " eta=" << eta_two_sided.to_string();
  return os.str();
}

Fingerprint fingerprint(const RingPresentation& r, const Limits& limits) {
  Fingerprint fp;
  fp.order = r.order();
  fp.characteristic = r.characteristic();
  fp.radical_order = jacobson_radical(r, limits).order();
  fp.has_identity = r.has_identity();
  fp.has_left_identity = r.has_left_identity();
  fp.has_right_identity = r.has_right_identity();
  fp.left_ideal_count = enumerate_ideals(r, Side::left, limits).size();
  fp.two_sided_ideal_count = enumerate_ideals(r, Side::two_sided, limits).size();
  CoverOptions opts;
  opts.limits = limits;
  fp.eta_left = covering_number(r, Side::left, opts).eta;
  fp.eta_right = covering_number(r, Side::right, opts).eta;
  fp.eta_two_sided = covering_number(r, Side::two_sided, opts).eta;
  return fp;
}

StructureTable table_from_index(std::uint32_t p, std::size_t d, std::uint64_t index) {
  StructureTable sc(d, std::vector<Vec>(d, Vec(d)));
  for (std::size_t pos = d * d * d; pos-- > 0;) {
    const std::size_t m = pos % d;
    const std::size_t j = (pos / d) % d;
    const std::size_t i = pos / (d * d);
    sc[i][j][m] = static_cast<Coord>(index % p);
    index /= p;
  }
  return sc;
}

ScanResult fingerprint_scan(std::uint32_t p, std::size_t d, const ScanOptions& opts) {
  if (!is_prime(p) || d == 0) throw std::invalid_argument("scan needs a prime p and d >= 1");
  const auto total = checked_power(p, d * d * d);
  if (!total) throw GuardExceeded("table space does not fit in 64 bits");

  ScanResult res;
  res.p = p;
  res.d = d;
  std::vector<std::uint64_t> indices;
  if (opts.sample) {
    res.sampled = true;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, *total - 1);
    indices.resize(std::min(*opts.sample, *total));
    for (auto& i : indices) i = pick(rng);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  } else if (*total > opts.limits.max_search_nodes) {
    throw GuardExceeded("exhaustive scan of " + std::to_string(*total) + " tables exceeds the node budget; use sampling");
  }
  const std::uint64_t count = opts.sample ? indices.size() : *total;
  res.tables_examined = count;

  struct Survivor {
    std::uint64_t index;
    Fingerprint fp;
  };
  std::vector<Survivor> survivors;
  std::uint64_t associative = 0;
  std::exception_ptr failure;
  Deadline deadline(opts.limits.time_budget_s);

#pragma omp parallel
  {
    std::vector<Survivor> mine;
#pragma omp for schedule(dynamic, 64) reduction(+ : associative)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(count); ++t) {
      const std::uint64_t idx = opts.sample ? indices[static_cast<std::size_t>(t)] : static_cast<std::uint64_t>(t);
      try {
        if ((t & 0xFF) == 0) deadline.check("classification scan");
        const StructureTable sc = table_from_index(p, d, idx);
        if (associativity_witness(p, d, sc)) continue;
        ++associative;
        const RingPresentation r = make_ring(p, d, sc, opts.limits);
        if (!is_eta_elementary(r, Side::left, opts.limits).elementary) continue;
        mine.push_back({idx, fingerprint(r, opts.limits)});
      } catch (...) {
#pragma omp critical(scan_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(scan_merge)
    survivors.insert(survivors.end(), mine.begin(), mine.end());
  }
  if (failure) std::rethrow_exception(failure);
  res.associative = associative;
  res.elementary = survivors.size();

  std::sort(survivors.begin(), survivors.end(), [](const Survivor& a, const Survivor& b) { return a.index < b.index; });
  std::map<Fingerprint, std::size_t> slot;
  for (const auto& s : survivors) {
    auto it = slot.find(s.fp);
    if (it == slot.end()) {
      slot.emplace(s.fp, res.classes.size());
      res.classes.push_back({s.fp, make_ring(p, d, table_from_index(p, d, s.index), opts.limits), 1});
    } else {
      ++res.classes[it->second].count;
    }
  }
  std::sort(res.classes.begin(), res.classes.end(),
            [](const ScanClass& a, const ScanClass& b) { return a.fingerprint < b.fingerprint; });

  // Known eta_l-elementary rings of order p^d: the null ring on C_p x C_p and
  // R(n, p^k) with k(n^2 + n) = d.
  if (d == 2) res.expected.push_back(fingerprint(build_null_ring(p, 2), opts.limits));
  for (std::size_t n = 1; n * n + n <= d; ++n) {
    if (d % (n * n + n) != 0) continue;
    const auto k = static_cast<std::uint32_t>(d / (n * n + n));
    res.expected.push_back(fingerprint(build_Rnq(n, make_field(p, k)).ring(), opts.limits));
  }
  std::sort(res.expected.begin(), res.expected.end());
  res.expected.erase(std::unique(res.expected.begin(), res.expected.end()), res.expected.end());

  std::vector<Fingerprint> seen;
  for (const auto& c : res.classes) seen.push_back(c.fingerprint);
  res.matches_classification = seen == res.expected;
  return res;
}

std::optional<std::vector<Vec>> find_isomorphism(const RingPresentation& a, const RingPresentation& b,
                                                 const Limits& limits) {
  if (a.characteristic() != b.characteristic() || a.dimension() != b.dimension()) return std::nullopt;
  const std::uint32_t p = a.characteristic();
  const std::size_t d = a.dimension();
  const auto total = checked_power(p, d * d);
  if (!total || *total > limits.max_elements) {
    throw GuardExceeded("isomorphism search over " + std::to_string(d) + "x" + std::to_string(d) +
                        " matrices exceeds the element cap");
  }
  const ModP& f = a.scalars();
  auto image = [&](const std::vector<Vec>& rows, const Vec& x) {
    Vec y(d);
    for (std::size_t k = 0; k < d; ++k) axpy(y, x[k], rows[k], f);
    return y;
  };
  for (std::uint64_t m = 0; m < *total; ++m) {
    const Vec flat = element_at(m, p, d * d);
    std::vector<Vec> rows(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) rows[i][j] = flat[i * d + j];
    }
    if (Subspace::span(p, d, rows).dimension() != d) continue;
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      for (std::size_t j = 0; j < d && ok; ++j) {
        ok = image(rows, a.basis_product(i, j)) == b.mul(rows[i], rows[j]);
      }
    }
    if (ok) return rows;
  }
  return std::nullopt;
}

}  // namespace ringcover
