#include "ringcover/cover.hpp"

#include <algorithm>
#include <numeric>

#include "ringcover/kernels.hpp"

namespace ringcover {

std::uint64_t Eta::value() const {
  if (!v_) throw std::logic_error("covering number is infinite");
  return *v_;
}

std::string Eta::to_string() const { return v_ ? std::to_string(*v_) : std::string("infinity"); }

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::exhaustive_branch_and_bound:
      return "exhaustive-branch-and-bound";
    case Certificate::forced_equals_upper:
      return "forced-equals-upper";
    case Certificate::uncoverable_proof:
      return "uncoverable-proof";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const std::vector<Bitset>& sets, const Limits& limits)
      : sets_(sets), limits_(limits), deadline_(limits.time_budget_s), excluded_(sets.size(), false) {}

  std::optional<std::vector<std::size_t>> solve(const Bitset& uncovered, std::vector<std::size_t> chosen) {
    chosen_ = std::move(chosen);
    for (auto i : chosen_) excluded_[i] = true;
    if (auto g = greedy(uncovered)) {
      best_ = *g;
      best_size_ = best_.size();
    }
    search(uncovered);
    if (best_size_ == kNone) return std::nullopt;
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::optional<std::vector<std::size_t>> greedy(Bitset rem) const {
    std::vector<std::size_t> pick = chosen_;
    while (!rem.none()) {
      std::size_t best = kNone;
      std::size_t gain = 0;
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (excluded_[i]) continue;
        std::size_t g = sets_[i].count_and(rem);
        if (g > gain) {
          gain = g;
          best = i;
        }
      }
      if (best == kNone) return std::nullopt;
      pick.push_back(best);
      rem.subtract(sets_[best]);
    }
    return pick;
  }

  void search(const Bitset& rem) {
    if (++nodes_ > limits_.max_search_nodes) throw GuardExceeded("cover search exceeded its node budget", nodes_);
    if ((nodes_ & 0x3FF) == 0) deadline_.check("cover search");
    if (rem.none()) {
      if (chosen_.size() < best_size_) {
        best_ = chosen_;
        best_size_ = chosen_.size();
      }
      return;
    }
    std::size_t max_gain = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (!excluded_[i]) max_gain = std::max(max_gain, sets_[i].count_and(rem));
    }
    if (max_gain == 0) return;
    const std::size_t left = rem.count();
    const std::size_t lower = chosen_.size() + (left + max_gain - 1) / max_gain;
    if (best_size_ != kNone && lower >= best_size_) return;

    // Branch on the uncovered element with the fewest available candidates.
    std::size_t pivot = rem.size();
    std::size_t fewest = kNone;
    for (std::size_t e = rem.next(0); e < rem.size(); e = rem.next(e + 1)) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < sets_.size() && c < fewest; ++i) {
        if (!excluded_[i] && sets_[i].test(e)) ++c;
      }
      if (c < fewest) {
        fewest = c;
        pivot = e;
        if (c <= 1) break;
      }
    }
    if (fewest == 0) return;

    std::vector<std::size_t> branched;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (excluded_[i] || !sets_[i].test(pivot)) continue;
      Bitset next = rem;
      next.subtract(sets_[i]);
      chosen_.push_back(i);
      excluded_[i] = true;
      search(next);
      chosen_.pop_back();
      // Later siblings may skip i: every cover containing it was explored in this branch.
      branched.push_back(i);
    }
    for (auto i : branched) excluded_[i] = false;
  }

  const std::vector<Bitset>& sets_;
  Limits limits_;
  Deadline deadline_;
  std::vector<bool> excluded_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = kNone;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SetCoverResult exact_set_cover(const std::vector<Bitset>& sets, const Bitset& target, const std::vector<std::size_t>& seed,
                               const Limits& limits) {
  Bitset rem = target;
  for (auto i : seed) rem.subtract(sets[i]);
  BranchAndBound bb(sets, limits);
  SetCoverResult out;
  out.chosen = bb.solve(rem, seed);
  out.nodes = bb.nodes();
  return out;
}

// ---------------------------------------------------------------------------

CoverResult covering_number(const RingPresentation& r, Side side, const CoverOptions& opts) {
  Deadline clock(opts.limits.time_budget_s);
  const IdealLattice lat = ideal_lattice(r, side, opts.limits);
  CoverResult res;
  res.maximal_count = lat.maximal.size();

  std::vector<Subspace> spaces;
  spaces.reserve(lat.maximal.size());
  for (const auto& m : lat.maximal) spaces.push_back(m.subspace());
  const std::vector<Bitset> members = kernels::parallel::membership_bitsets(r, spaces);

  Bitset all(static_cast<std::size_t>(r.order()));
  for (const auto& b : members) all |= b;
  std::vector<std::size_t> forced;
  for (std::size_t i = 0; i < lat.maximal.size(); ++i) {
    if (lat.is_cyclic(lat.maximal[i])) forced.push_back(i);
  }
  res.forced_count = forced.size();

  if (!all.all()) {
    res.certificate = Certificate::uncoverable_proof;
    res.elapsed_ms = clock.elapsed_ms();
    return res;
  }

  std::vector<std::size_t> seed = opts.seed_forced ? forced : std::vector<std::size_t>{};
  Bitset rem(all.size());
  for (std::size_t e = 0; e < rem.size(); ++e) rem.set(e);
  for (auto i : seed) rem.subtract(members[i]);

  std::vector<std::size_t> chosen;
  if (rem.none()) {
    chosen = seed;
    res.certificate = Certificate::forced_equals_upper;
  } else {
    // Track only the elements left uncovered by the seed.
    std::vector<std::size_t> universe;
    for (std::size_t e = rem.next(0); e < rem.size(); e = rem.next(e + 1)) universe.push_back(e);
    std::vector<Bitset> compressed(members.size(), Bitset(universe.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t u = 0; u < universe.size(); ++u) {
        if (members[i].test(universe[u])) compressed[i].set(u);
      }
    }
    Bitset target(universe.size());
    for (std::size_t u = 0; u < universe.size(); ++u) target.set(u);
    SetCoverResult sc = exact_set_cover(compressed, target, seed, opts.limits);
    res.nodes = sc.nodes;
    if (!sc.chosen) throw std::logic_error("maximal ideals cover R but the search found no cover");
    chosen = *sc.chosen;
    res.certificate = Certificate::exhaustive_branch_and_bound;
  }
  std::sort(chosen.begin(), chosen.end());
  res.eta = Eta::finite(chosen.size());
  for (auto i : chosen) res.cover.push_back(lat.maximal[i]);
  res.elapsed_ms = clock.elapsed_ms();
  return res;
}

CoverResult minimal_cover(const RingPresentation& r, Side side, const CoverOptions& opts) {
  CoverResult res = covering_number(r, side, opts);
  if (res.eta.is_infinite()) throw std::domain_error("ring has no cover by proper " + to_string(side) + " ideals");
  return res;
}

std::vector<IdealBasis> forced_ideals(const RingPresentation& r, Side side, const Limits& limits) {
  const IdealLattice lat = ideal_lattice(r, side, limits);
  std::vector<IdealBasis> out;
  for (const auto& m : lat.maximal) {
    if (lat.is_cyclic(m)) out.push_back(m);
  }
  return out;
}

ElementaryReport is_eta_elementary(const RingPresentation& r, Side side, const Limits& limits) {
  ElementaryReport rep;
  CoverOptions opts;
  opts.limits = limits;
  rep.eta = covering_number(r, side, opts).eta;
  if (rep.eta.is_infinite()) return rep;
  rep.elementary = true;
  for (const auto& ideal : enumerate_ideals(r, Side::two_sided, limits)) {
    if (ideal.is_zero() || ideal.is_whole_ring()) continue;
    const QuotientRing q = quotient(r, ideal);
    Eta qe = covering_number(q.ring, side, opts).eta;
    if (!(rep.eta < qe)) rep.elementary = false;
    rep.quotients.push_back({ideal, qe});
  }
  return rep;
}

bool covers_ring(const RingPresentation& r, const std::vector<IdealBasis>& cover) {
  Bitset all(static_cast<std::size_t>(r.order()));
  for (const auto& m : cover) {
    if (m.is_whole_ring()) return false;
    m.subspace().for_each_element([&](const Vec& v) { all.set(static_cast<std::size_t>(r.index_of(v))); });
  }
  return all.all();
}

bool is_irredundant(const RingPresentation& r, const std::vector<IdealBasis>& cover) {
  for (std::size_t skip = 0; skip < cover.size(); ++skip) {
    std::vector<IdealBasis> rest;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      if (i != skip) rest.push_back(cover[i]);
    }
    if (covers_ring(r, rest)) return false;
  }
  return true;
}

}  // namespace ringcover
