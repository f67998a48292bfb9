#include "ringcover/radical.hpp"

#include <algorithm>
#include <functional>

#include "ringcover/kernels.hpp"

namespace ringcover {

namespace {

void require_scannable(const RingPresentation& r, const Limits& limits, const char* what) {
  auto order = checked_power(r.characteristic(), r.dimension());
  if (!order || *order > limits.max_elements) {
    throw GuardExceeded(std::string(what) + " needs an element scan above the cap of " +
                        std::to_string(limits.max_elements) + " elements");
  }
}

Subspace intersect_all(const std::vector<IdealBasis>& ideals, std::uint32_t p, std::size_t d) {
  Subspace acc = Subspace::full(p, d);
  for (const auto& m : ideals) acc = acc.intersect(m.subspace());
  return acc;
}

}  // namespace

RingElement circle(const RingPresentation& r, const RingElement& a, const RingElement& b) {
  return r.sub(r.add(a, b), r.mul(a, b));
}

std::optional<RingElement> left_quasi_inverse(const RingPresentation& r, const RingElement& a, const Limits& limits) {
  require_scannable(r, limits, "quasi-regularity scan");
  const std::uint64_t n = r.order();
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElement b = r.element(i);
    if (circle(r, b, a).is_zero()) return b;
  }
  return std::nullopt;
}

bool left_quasi_regular(const RingPresentation& r, const RingElement& a, const Limits& limits) {
  return left_quasi_inverse(r, a, limits).has_value();
}

IdealBasis jacobson_radical(const RingPresentation& r, const Limits& limits) {
  require_scannable(r, limits, "radical computation");
  const auto q = kernels::parallel::quasi_regular_mask(r);
  const auto m = kernels::parallel::radical_mask(r, q);
  Subspace j(r.characteristic(), r.dimension());
  std::uint64_t members = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    ++members;
    j.insert(r.element(i));
  }
  if (j.order() != members) {
    throw std::logic_error("radical membership set is not closed under addition (" + std::to_string(members) +
                           " members, span of order " + std::to_string(j.order()) + ")");
  }
  return make_ideal(r, std::move(j), Side::two_sided);
}

IdealBasis radical_dorroh_oracle(const RingPresentation& r, const Limits& limits) {
  const RingPresentation ext = dorroh(r);
  const auto lattice = ideal_lattice(ext, Side::left, limits);
  const Subspace rad = intersect_all(lattice.maximal, ext.characteristic(), ext.dimension());
  Subspace projected(r.characteristic(), r.dimension());
  for (const Vec& row : rad.rows()) {
    if (row[0] != 0) throw std::logic_error("radical of the unital extension leaves {0} x R");
    Vec x(r.dimension());
    for (std::size_t i = 0; i < r.dimension(); ++i) x[i] = row[i + 1];
    projected.insert(x);
  }
  return make_ideal(r, std::move(projected), Side::two_sided);
}

IdealBasis radical_by_maximal_left_ideals(const RingPresentation& r, const Limits& limits) {
  if (!r.has_identity()) throw std::invalid_argument("radical via maximal left ideals requires a unital ring");
  const auto lattice = ideal_lattice(r, Side::left, limits);
  return make_ideal(r, intersect_all(lattice.maximal, r.characteristic(), r.dimension()), Side::two_sided);
}

Subspace radical_times_ring(const RingPresentation& r, const Subspace& j) {
  Subspace out(r.characteristic(), r.dimension());
  for (const Vec& x : j.rows()) {
    for (std::size_t i = 0; i < r.dimension(); ++i) out.insert(r.mul(x, r.basis(i)));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Subspace products(const RingPresentation& r, const Subspace& s, const Subspace& j) {
  Subspace out(r.characteristic(), r.dimension());
  for (const Vec& a : s.rows()) {
    for (const Vec& x : j.rows()) out.insert(r.mul(a, x));
  }
  return out;
}

Subspace left_annihilated_part(const RingPresentation& r, const Subspace& j) {
  // Coefficient vectors c with e_i (sum_k c_k j_k) = 0 for every basis element e_i.
  const std::size_t d = r.dimension();
  std::vector<std::vector<Coord>> rows;
  for (const Vec& jk : j.rows()) {
    std::vector<Coord> row;
    row.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec prod = r.mul(r.basis(i), jk);
      row.insert(row.end(), prod.coords().begin(), prod.coords().end());
    }
    rows.push_back(std::move(row));
  }
  Subspace out(r.characteristic(), d);
  if (rows.empty()) return out;
  const Subspace ker = left_kernel(r.characteristic(), rows);
  for (const Vec& c : ker.rows()) {
    Vec x(d);
    for (std::size_t k = 0; k < j.rows().size(); ++k) axpy(x, c[k], j.rows()[k], r.scalars());
    out.insert(x);
  }
  return out;
}

}  // namespace

SjK sj_and_k(const RingPresentation& r, const Decomposition& d) {
  const std::size_t n = r.dimension();
  if (d.S.ambient() != n || d.J.ambient() != n) throw std::invalid_argument("decomposition does not match ring");
  if (d.S.dimension() + d.J.dimension() != n || !d.S.intersect(d.J).is_zero()) {
    throw std::invalid_argument("S and J are not complementary");
  }
  for (const Vec& a : d.S.rows()) {
    for (const Vec& b : d.S.rows()) {
      if (!d.S.contains(r.mul(a, b))) throw std::invalid_argument("S is not multiplicatively closed");
    }
  }
  SjK out;
  out.SJ = products(r, d.S, d.J);
  out.K = left_annihilated_part(r, d.J);
  out.direct_sum = out.SJ.intersect(out.K).is_zero() && out.SJ.sum(out.K) == d.J;
  return out;
}

Decomposition wedderburn_complement(const RingPresentation& r, const Limits& limits) {
  const ModP& f = r.scalars();
  const std::size_t d = r.dimension();
  Decomposition dec;
  dec.J = jacobson_radical(r, limits).subspace();
  const std::vector<std::size_t> comp = dec.J.nonpivots();
  const std::size_t m = comp.size();

  std::vector<Vec> coset_reps;
  dec.J.for_each_element([&](const Vec& v) { coset_reps.push_back(v); });
  std::sort(coset_reps.begin(), coset_reps.end());

  std::vector<Vec> lifts(m);
  Deadline deadline(limits.time_budget_s);
  std::uint64_t nodes = 0;

  // x lies in the span of the lifts iff it equals the lift combination of its
  // image modulo J; decidable once every index in that image is assigned.
  auto consistent = [&](std::size_t depth) {
    for (std::size_t a = 0; a <= depth; ++a) {
      for (std::size_t b = 0; b <= depth; ++b) {
        const Vec x = r.mul(lifts[a], lifts[b]);
        const Vec rem = dec.J.reduce(x);
        bool ready = true;
        Vec y(d);
        for (std::size_t c = 0; c < m && ready; ++c) {
          const Coord coef = rem[comp[c]];
          if (coef == 0) continue;
          if (c > depth) {
            ready = false;
          } else {
            axpy(y, coef, lifts[c], f);
          }
        }
        if (ready && y != x) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == m) return true;
    for (const Vec& j : coset_reps) {
      if (++nodes > limits.max_search_nodes) throw GuardExceeded("complement search exceeded its node budget", nodes);
      if ((nodes & 0xFFF) == 0) deadline.check("complement search");
      lifts[depth] = add(unit_vector(d, comp[depth]), j, f);
      if (consistent(depth) && search(depth + 1)) return true;
    }
    return false;
  };
  if (!search(0)) throw std::logic_error("no multiplicatively closed complement of the radical exists");

  dec.search_nodes = nodes;
  dec.S = Subspace::span(r.characteristic(), d, lifts);
  const SjK parts = sj_and_k(r, dec);
  dec.SJ = parts.SJ;
  dec.K = parts.K;
  dec.j_splits = parts.direct_sum;
  return dec;
}

}  // namespace ringcover
