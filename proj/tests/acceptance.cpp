// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ringcover/cover.hpp"
#include "ringcover/ideals.hpp"
#include "ringcover/paperlab.hpp"
#include "ringcover/radical.hpp"
#include "test_support.hpp"

using namespace ringcover;

namespace {

struct Case {
  std::uint32_t q;
  std::size_t n;
  std::uint64_t eta;
};

const std::vector<Case> kGrid{{2, 1, 3}, {3, 1, 4}, {4, 1, 5}, {5, 1, 6}, {2, 2, 7}, {3, 2, 13}, {2, 3, 15}};

// (q^{n+1}-1)/(q-1) by repeated multiplication
std::uint64_t geometric(std::uint64_t q, std::size_t n) {
  std::uint64_t sum = 0, pw = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    sum += pw;
    pw *= q;
  }
  return sum;
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  bool report(const std::string& detail) const {
    const bool pass = failed_ == 0;
    std::printf("%s %s: %s", pass ? "PASS" : "FAIL", name_.c_str(), detail.c_str());
    if (!pass) {
      std::printf(" [%zu failures:", failed_);
      for (const auto& f : failures_) std::printf(" %s;", f.c_str());
      std::printf("]");
    }
    std::printf("\n");
    std::fflush(stdout);
    return pass;
  }

 private:
  std::string name_;
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

std::string label(const Case& c) { return "(q=" + std::to_string(c.q) + ",n=" + std::to_string(c.n) + ")"; }

bool criterion1() {
  Criterion c("criterion 1 covering-number formula");
  double worst = 0.0;
  for (const Case& k : kGrid) {
    const auto t0 = std::chrono::steady_clock::now();
    const RingPresentation r = build_Rnq(k.n, make_field_of_order(k.q)).ring();
    const CoverResult seeded = covering_number(r, Side::left);
    CoverOptions opts;
    opts.seed_forced = false;
    const CoverResult unseeded = covering_number(r, Side::left, opts);
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    c.expect(k.eta == geometric(k.q, k.n), label(k) + " table value disagrees with formula");
    c.expect(seeded.eta == Eta::finite(k.eta), label(k) + " eta=" + seeded.eta.to_string());
    c.expect(seeded.certificate == Certificate::forced_equals_upper ||
                 seeded.certificate == Certificate::exhaustive_branch_and_bound,
             label(k) + " certificate " + to_string(seeded.certificate));
    c.expect(unseeded.eta == Eta::finite(k.eta), label(k) + " unseeded eta=" + unseeded.eta.to_string());
    c.expect(unseeded.certificate == Certificate::exhaustive_branch_and_bound, label(k) + " unseeded certificate");
    c.expect(covers_ring(r, seeded.cover) && is_irredundant(r, seeded.cover), label(k) + " cover check");
    c.expect(s < 120.0, label(k) + " took " + std::to_string(s) + " s");
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "7 cases exact and exhaustive, slowest %.2f s", worst);
  return c.report(buf);
}

bool criterion2() {
  Criterion c("criterion 2 two-sided null rings");
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    const std::string tag = "p=" + std::to_string(p);
    const RingPresentation r = build_null_ring(p, 2);
    c.expect(covering_number(r, Side::two_sided).eta == Eta::finite(p + 1), tag + " eta");
    const ElementaryReport e = is_eta_elementary(r, Side::two_sided);
    c.expect(e.elementary, tag + " not elementary");
    std::size_t lines = 0;
    for (const auto& qe : e.quotients) {
      if (qe.ideal.dimension() != 1) continue;
      ++lines;
      c.expect(qe.eta.is_infinite(), tag + " line quotient coverable");
    }
    c.expect(lines == p + 1, tag + " line count " + std::to_string(lines));
  }
  return c.report("eta = p+1 for p in {2,3,5,7}, elementary, every line quotient uncoverable");
}

bool criterion3() {
  Criterion c("criterion 3 one-sidedness");
  for (const Case& k : kGrid) {
    const RingPresentation r = build_Rnq(k.n, make_field_of_order(k.q)).ring();
    c.expect(covering_number(r, Side::right).eta.is_infinite(), label(k) + " eta_r finite");
    c.expect(covering_number(r, Side::two_sided).eta.is_infinite(), label(k) + " eta finite");
    c.expect(covering_number(opposite(r), Side::right).eta == Eta::finite(k.eta), label(k) + " opposite eta_r");
  }
  return c.report("eta_r = eta = infinity on the grid; eta_r of the opposite ring matches the formula");
}

bool criterion4() {
  Criterion c("criterion 4 elementary verdicts");
  for (const Case& k : kGrid) {
    const RingPresentation r = build_Rnq(k.n, make_field_of_order(k.q)).ring();
    c.expect(is_eta_elementary(r, Side::left).elementary, label(k) + " not elementary");
  }
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    c.expect(is_eta_elementary(build_null_ring(p, 2), Side::two_sided).elementary, "null p=" + std::to_string(p));
  }
  const RingPresentation r12 = build_Rnq(1, make_field(2, 1)).ring();
  const RingPresentation rr = direct_product(std::vector{r12, r12});
  const RingPresentation rn = direct_product(std::vector{r12, build_null_ring(2, 2)});
  for (const auto& [name, r] : {std::pair{"R(1,2)xR(1,2)", rr}, std::pair{"R(1,2)xnull", rn}}) {
    const ElementaryReport e = is_eta_elementary(r, Side::left);
    c.expect(!e.elementary, std::string(name) + " reported elementary");
    c.expect(e.eta == Eta::finite(3), std::string(name) + " eta_l=" + e.eta.to_string());
  }
  return c.report("grid and null rings elementary; both products non-elementary with eta_l = 3");
}

bool criterion5() {
  Criterion c("criterion 5 forced and maximal structure");
  for (const Case& k : kGrid) {
    const RingPresentation r = build_Rnq(k.n, make_field_of_order(k.q)).ring();
    const auto maximal = maximal_ideals(r, Side::left);
    const auto forced = forced_ideals(r, Side::left);
    c.expect(maximal.size() == k.eta, label(k) + " maximal=" + std::to_string(maximal.size()));
    c.expect(forced.size() == k.eta, label(k) + " forced=" + std::to_string(forced.size()));
    const std::uint64_t want = power(k.q, k.n * k.n);
    for (const auto& m : maximal) c.expect(m.order() == want, label(k) + " maximal ideal order");
  }
  return c.report("forced = maximal = formula and every maximal left ideal has order q^(n^2)");
}

bool criterion6() {
  Criterion c("criterion 6 radical oracle");
  std::size_t families = 0;
  for (const auto& [name, r] : testsupport::family_corpus()) {
    c.expect(jacobson_radical(r).subspace() == radical_dorroh_oracle(r).subspace(), name);
    ++families;
  }
  std::size_t random = 0;
  for (const auto& [name, r] : testsupport::random_corpus(6, 240, 4)) {
    c.expect(jacobson_radical(r).subspace() == radical_dorroh_oracle(r).subspace(), name);
    ++random;
  }
  return c.report(std::to_string(families) + " family rings and " + std::to_string(random) +
                  " random algebras over F_2/F_3 agree");
}

bool criterion7() {
  Criterion c("criterion 7 classification scan");
  std::string detail;
  for (std::uint32_t p : {2U, 3U}) {
    const auto t0 = std::chrono::steady_clock::now();
    const ScanResult res = fingerprint_scan(p, 2);
    const double s = seconds_since(t0);
    const std::string tag = "p=" + std::to_string(p);
    std::vector<Fingerprint> want{fingerprint(build_null_ring(p, 2)), fingerprint(build_Rnq(1, make_field(p, 1)).ring())};
    std::sort(want.begin(), want.end());
    std::vector<Fingerprint> got;
    for (const auto& cls : res.classes) got.push_back(cls.fingerprint);
    std::sort(got.begin(), got.end());
    c.expect(!res.sampled, tag + " sampled");
    c.expect(res.tables_examined == power(p, 8), tag + " table count");
    c.expect(got == want, tag + " fingerprints differ");
    c.expect(res.matches_classification, tag + " classification mismatch");
    c.expect(s < 600.0, tag + " took " + std::to_string(s) + " s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "%sp=%u: %llu tables, %llu associative, %zu classes, %.2f s", detail.empty() ? "" : "; ",
                  p, static_cast<unsigned long long>(res.tables_examined),
                  static_cast<unsigned long long>(res.associative), res.classes.size(), s);
    detail += buf;
  }
  return c.report(detail);
}

bool criterion8() {
  Criterion c("criterion 8 structural properties");
  std::vector<testsupport::NamedRing> rings = testsupport::family_corpus();
  auto rnd = testsupport::random_corpus(88, 120, 4);
  rings.insert(rings.end(), rnd.begin(), rnd.end());
  std::size_t compared = 0;
  for (const auto& [name, r] : rings) {
    std::vector<CoverResult> res;
    for (Side side : {Side::left, Side::right, Side::two_sided}) res.push_back(covering_number(r, side));
    c.expect(res[0].eta <= res[2].eta && res[1].eta <= res[2].eta, name + " ordering");
    for (std::size_t s = 0; s < 3; ++s) {
      const CoverResult& cr = res[s];
      if (cr.eta.is_infinite()) continue;
      c.expect(cr.eta.value() >= 3, name + " eta < 3");
      c.expect(cr.cover.size() == cr.eta.value(), name + " cover size");
      c.expect(covers_ring(r, cr.cover), name + " union");
      c.expect(is_irredundant(r, cr.cover), name + " irredundant");
    }
    if (r.order() > 256) continue;
    const Side sides[] = {Side::left, Side::right, Side::two_sided};
    for (std::size_t s = 0; s < 3; ++s) {
      const auto maximal = testsupport::naive_maximal(testsupport::naive_ideals(r, sides[s]));
      if (maximal.size() > 12) continue;
      const std::size_t best = testsupport::naive_min_cover(maximal, r.characteristic(), r.dimension());
      c.expect(res[s].eta == (best == 0 ? Eta::infinity() : Eta::finite(best)), name + " naive mismatch");
      ++compared;
    }
  }
  return c.report(std::to_string(rings.size()) + " rings checked, " + std::to_string(compared) +
                  " branch-and-bound results equal naive search");
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8};
  bool all = true;
  for (const auto& run : criteria) {
    try {
      all = run() && all;
    } catch (const std::exception& e) {
      std::printf("FAIL criterion raised: %s\n", e.what());
      all = false;
    }
  }
  return all ? 0 : 1;
}
