#include "doctest.h"
#include "ringcover/paperlab.hpp"
#include "ringcover/radical.hpp"
#include "test_support.hpp"

using namespace ringcover;

TEST_CASE("circle operation") {
  const RingPresentation r = build_Rnq(2, make_field(2, 1)).ring();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, r.order() - 1);
  for (int t = 0; t < 200; ++t) {
    const Vec a = r.element(pick(rng)), b = r.element(pick(rng)), c = r.element(pick(rng));
    CHECK(circle(r, a, r.zero()) == a);
    CHECK(circle(r, r.zero(), a) == a);
    CHECK(circle(r, circle(r, a, b), c) == circle(r, a, circle(r, b, c)));
  }
  const RingPresentation n = build_null_ring(3, 2);
  for (std::uint64_t i = 0; i < n.order(); ++i) {
    for (std::uint64_t j = 0; j < n.order(); ++j) CHECK(circle(n, n.element(i), n.element(j)) == n.add(n.element(i), n.element(j)));
  }
}

TEST_CASE("left quasi-regularity") {
  const RingPresentation n = build_null_ring(3, 2);
  for (std::uint64_t i = 0; i < n.order(); ++i) {
    const Vec a = n.element(i);
    CHECK(left_quasi_inverse(n, a) == n.neg(a));
  }
  const RingPresentation m2 = matrix_algebra(2, make_field(2, 1));
  CHECK_FALSE(left_quasi_regular(m2, m2.identity_flags().left_identities.at(0)));

  const auto ctx = build_Rnq(2, make_field(3, 1));
  for (const auto& v : all_vectors(ctx.field(), 2)) {
    const RingElement a = ctx.encode(ctx.zero_matrix(), v);
    CHECK(left_quasi_inverse(ctx.ring(), a) == ctx.ring().neg(a));
  }
  Limits small;
  small.max_elements = 10;
  CHECK_THROWS_AS(left_quasi_regular(ctx.ring(), ctx.ring().zero(), small), GuardExceeded);
}

TEST_CASE("Jacobson radical of the named families") {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{1, 2}, {1, 3}, {2, 2}, {1, 4}}) {
    const auto ctx = build_Rnq(n, make_field_of_order(q));
    const IdealBasis j = jacobson_radical(ctx.ring());
    CHECK(j.order() == *checked_power(q, n));
    for (const auto& v : all_vectors(ctx.field(), n)) CHECK(j.contains(ctx.encode(ctx.zero_matrix(), v)));
    CHECK(j.side() == Side::two_sided);
    CHECK(radical_times_ring(ctx.ring(), j.subspace()).is_zero());
  }
  CHECK(jacobson_radical(build_null_ring(2, 3)).is_whole_ring());
  CHECK(jacobson_radical(matrix_algebra(2, make_field(2, 1))).is_zero());
  CHECK(jacobson_radical(matrix_algebra(2, make_field(3, 1))).is_zero());
}

TEST_CASE("radical agrees with the definitional scan and the unital-extension oracle") {
  std::vector<testsupport::NamedRing> rings;
  for (auto& nr : testsupport::family_corpus()) {
    if (nr.ring.order() <= 256) rings.push_back(nr);
  }
  auto rnd = testsupport::random_corpus(99, 120, 4);
  rings.insert(rings.end(), rnd.begin(), rnd.end());
  for (const auto& [name, r] : rings) {
    CAPTURE(name);
    const Subspace j = jacobson_radical(r).subspace();
    CHECK(j == radical_dorroh_oracle(r).subspace());
    CHECK(j == testsupport::naive_radical(r));
    if (r.has_identity()) CHECK(j == radical_by_maximal_left_ideals(r).subspace());
    const QuotientRing q = quotient(r, j);
    if (q.ring.dimension() > 0) CHECK(jacobson_radical(q.ring).is_zero());
  }
}

TEST_CASE("radical via own maximal ideals needs an identity") {
  CHECK_THROWS_AS(radical_by_maximal_left_ideals(build_null_ring(2, 2)), std::invalid_argument);
}

TEST_CASE("Wedderburn complement") {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{1, 2}, {2, 2}, {1, 3}}) {
    const auto ctx = build_Rnq(n, make_field_of_order(q));
    const Decomposition d = wedderburn_complement(ctx.ring());
    std::vector<Vec> s_basis;
    for (std::size_t i = 0; i < n * n * ctx.field().k(); ++i) s_basis.push_back(unit_vector(ctx.ring().dimension(), i));
    CHECK(d.S == Subspace::span(ctx.field().p(), ctx.ring().dimension(), s_basis));
    CHECK(d.SJ == d.J);
    CHECK(d.K.is_zero());
    CHECK(d.j_splits);
  }
  const RingPresentation nr = build_null_ring(2, 2);
  const Decomposition dn = wedderburn_complement(nr);
  CHECK(dn.S.is_zero());
  CHECK(dn.K == dn.J);
  CHECK(dn.J.is_full());
  CHECK(dn.SJ.is_zero());

  const RingPresentation dual = testsupport::dual_numbers(2);
  const Decomposition dd = wedderburn_complement(dual);
  CHECK(dd.S == Subspace::span(2, 2, std::vector<Vec>{Vec{1, 0}}));
  CHECK(dd.J == Subspace::span(2, 2, std::vector<Vec>{Vec{0, 1}}));

  const RingPresentation prod =
      direct_product(std::vector{build_Rnq(1, make_field(2, 1)).ring(), build_null_ring(2, 1)});
  const Decomposition dp = wedderburn_complement(prod);
  CHECK(dp.K == Subspace::span(2, 3, std::vector<Vec>{Vec{0, 0, 1}}));
  CHECK(dp.SJ == Subspace::span(2, 3, std::vector<Vec>{Vec{0, 1, 0}}));
}

TEST_CASE("complements of random algebras are valid") {
  for (const auto& [name, r] : testsupport::random_corpus(7, 60, 4)) {
    CAPTURE(name);
    const Decomposition d = wedderburn_complement(r);
    CHECK(d.S.dimension() + d.J.dimension() == r.dimension());
    CHECK(d.S.intersect(d.J).is_zero());
    for (const Vec& a : d.S.rows()) {
      for (const Vec& b : d.S.rows()) CHECK(d.S.contains(r.mul(a, b)));
    }
    CHECK(jacobson_radical(r).subspace() == d.J);
    CHECK(d.J.contains(d.SJ));
    CHECK(d.J.contains(d.K));
  }
}

TEST_CASE("sj_and_k rejects invalid decompositions") {
  const RingPresentation r = build_Rnq(1, make_field(2, 1)).ring();
  Decomposition bad;
  bad.J = Subspace::span(2, 2, std::vector<Vec>{Vec{0, 1}});
  bad.S = Subspace::span(2, 2, std::vector<Vec>{Vec{0, 1}});
  CHECK_THROWS_AS(sj_and_k(r, bad), std::invalid_argument);
  bad.S = Subspace::span(2, 2, std::vector<Vec>{Vec{1, 1}});
  // (1|1)(1|1) = (1|1): closed, so this is a valid alternative complement.
  CHECK_NOTHROW(sj_and_k(r, bad));
  const RingPresentation m2 = matrix_algebra(2, make_field(2, 1));
  Decomposition unclosed;
  unclosed.J = Subspace(2, 4);
  unclosed.S = Subspace::full(2, 4);
  CHECK_NOTHROW(sj_and_k(m2, unclosed));
  // E12 E21 = E11 leaves span{E12, E21, E22}.
  unclosed.J = Subspace::span(2, 4, std::vector<Vec>{Vec{1, 0, 0, 0}});
  unclosed.S = Subspace::span(2, 4, std::vector<Vec>{Vec{0, 1, 0, 0}, Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1}});
  CHECK_THROWS_AS(sj_and_k(m2, unclosed), std::invalid_argument);
}
