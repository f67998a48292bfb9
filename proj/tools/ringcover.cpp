// Command-line front end: construct, radical, ideals, cover, elementary, verify, scan.
//
// Exit status: 0 success or PASS, 1 verification FAIL, 2 usage error, 3 guard exhausted.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ringcover/cover.hpp"
#include "ringcover/paperlab.hpp"
#include "ringcover/radical.hpp"
#include "ringcover/ring_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace ringcover;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  // ring source
  std::string family;
  std::string ring_file;
  std::size_t n = 1;
  std::uint32_t q = 2;
  std::uint32_t p = 2;
  std::size_t r = 2;
  bool opposite = false;
  bool dorroh = false;
  // workflow options
  std::string side = "left";
  std::string theorem = "main";
  std::uint32_t qmax = 4;
  std::size_t nmax = 2;
  std::uint32_t pmax = 7;
  std::size_t d = 2;
  std::uint64_t sample = 0;
  std::uint64_t seed = 1;
  bool decompose = false;
  bool unseeded = false;
  // guards and output
  Limits limits;
  std::string format = "human";
  std::string out;
  int threads = 0;
  bool timing = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string basis_string(const std::vector<Vec>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? " " : "") + to_string(rows[i]);
  return s + "]";
}

RingPresentation load_ring(const RunConfig& cfg) {
  const bool have_family = !cfg.family.empty();
  const bool have_file = !cfg.ring_file.empty();
  if (have_family == have_file) throw UsageError("give exactly one ring source: --family or --ring");
  RingPresentation r;
  if (have_file) {
    if (!fs::exists(cfg.ring_file)) throw UsageError("cannot read ring file " + cfg.ring_file);
    r = read_ring_file(cfg.ring_file, cfg.limits);
  } else if (cfg.family == "Rnq") {
    r = build_Rnq(cfg.n, make_field_of_order(cfg.q)).ring();
  } else if (cfg.family == "Rnq-transpose") {
    r = build_Rnq_transpose(cfg.n, make_field_of_order(cfg.q));
  } else if (cfg.family == "null") {
    r = build_null_ring(cfg.p, cfg.r);
  } else if (cfg.family == "matrix") {
    r = matrix_algebra(cfg.n, make_field_of_order(cfg.q));
  } else {
    throw UsageError("unknown family '" + cfg.family + "' (Rnq, Rnq-transpose, null, matrix)");
  }
  if (cfg.opposite) r = opposite(r);
  if (cfg.dorroh) r = dorroh(r);
  return r;
}

struct Report {
  std::string body;
  int status = kOk;
};

// --------------------------------------------------------------------------- construct

Report run_construct(const RunConfig& cfg) {
  const RingPresentation r = load_ring(cfg);
  std::ostringstream os;
  if (cfg.format == "text") {
    os << ring_to_json(r);
  } else if (cfg.format == "csv") {
    os << "i,j,product\n";
    for (std::size_t i = 0; i < r.dimension(); ++i) {
      for (std::size_t j = 0; j < r.dimension(); ++j) os << i << ',' << j << ',' << to_string(r.basis_product(i, j)) << '\n';
    }
  } else {
    os << "characteristic: " << r.characteristic() << "\ndimension: " << r.dimension() << "\norder: " << r.order()
       << "\ncommutative: " << yes_no(r.is_commutative()) << "\nnull: " << yes_no(r.is_null()) << '\n';
    if (r.order() <= cfg.limits.max_elements) {
      const auto& fl = r.identity_flags();
      os << "identity: " << yes_no(fl.has_identity) << "\nleft identities: " << fl.left_identities.size()
         << "\nright identities: " << fl.right_identities.size() << '\n';
    }
    os << "products e_i * e_j:\n";
    for (std::size_t i = 0; i < r.dimension(); ++i) {
      for (std::size_t j = 0; j < r.dimension(); ++j) {
        os << "  e" << i << " * e" << j << " = " << to_string(r.basis_product(i, j)) << '\n';
      }
    }
  }
  return {os.str()};
}

// --------------------------------------------------------------------------- radical

Report run_radical(const RunConfig& cfg) {
  const RingPresentation r = load_ring(cfg);
  const IdealBasis j = jacobson_radical(r, cfg.limits);
  std::optional<Decomposition> dec;
  if (cfg.decompose) dec = wedderburn_complement(r, cfg.limits);
  std::ostringstream os;
  if (cfg.format == "text") {
    os << radical_to_json(j, dec ? &*dec : nullptr);
  } else if (cfg.format == "csv") {
    os << "part,dimension,order,basis\n";
    os << "J," << j.dimension() << ',' << j.order() << ',' << basis_string(j.rows()) << '\n';
    if (dec) {
      os << "S," << dec->S.dimension() << ',' << dec->S.order() << ',' << basis_string(dec->S.rows()) << '\n';
      os << "SJ," << dec->SJ.dimension() << ',' << dec->SJ.order() << ',' << basis_string(dec->SJ.rows()) << '\n';
      os << "K," << dec->K.dimension() << ',' << dec->K.order() << ',' << basis_string(dec->K.rows()) << '\n';
    }
  } else {
    os << "radical order: " << j.order() << " (dimension " << j.dimension() << ")\n";
    os << "whole ring: " << yes_no(j.is_whole_ring()) << "\nbasis: " << basis_string(j.rows()) << '\n';
    if (dec) {
      os << "complement S: " << basis_string(dec->S.rows()) << "\nSJ: " << basis_string(dec->SJ.rows())
         << "\nK: " << basis_string(dec->K.rows()) << "\nJ = SJ + K direct: " << yes_no(dec->j_splits) << '\n';
    }
  }
  return {os.str()};
}

// --------------------------------------------------------------------------- ideals

Report run_ideals(const RunConfig& cfg) {
  const RingPresentation r = load_ring(cfg);
  const Side side = parse_side(cfg.side);
  const IdealLattice lat = ideal_lattice(r, side, cfg.limits);
  std::ostringstream os;
  if (cfg.format == "text") {
    os << ideals_to_json(lat);
  } else {
    if (cfg.format == "csv") {
      os << "index,side,dimension,order,cyclic,maximal,basis\n";
    } else {
      os << lat.all.size() << ' ' << to_string(side) << " ideals, " << lat.maximal.size() << " maximal, "
         << lat.cyclic.size() << " cyclic\n";
    }
    for (std::size_t i = 0; i < lat.all.size(); ++i) {
      const auto& id = lat.all[i];
      const bool maximal = std::binary_search(lat.maximal.begin(), lat.maximal.end(), id);
      if (cfg.format == "csv") {
        os << i << ',' << to_string(side) << ',' << id.dimension() << ',' << id.order() << ','
           << (lat.is_cyclic(id) ? "true" : "false") << ',' << (maximal ? "true" : "false") << ','
           << basis_string(id.rows()) << '\n';
      } else {
        os << "  #" << i << " order " << id.order() << (maximal ? " maximal" : "") << (lat.is_cyclic(id) ? " cyclic" : "")
           << ' ' << basis_string(id.rows()) << '\n';
      }
    }
  }
  return {os.str()};
}

// --------------------------------------------------------------------------- cover

Report run_cover(const RunConfig& cfg) {
  const RingPresentation r = load_ring(cfg);
  const Side side = parse_side(cfg.side);
  CoverOptions opts;
  opts.limits = cfg.limits;
  opts.seed_forced = !cfg.unseeded;
  const CoverResult res = covering_number(r, side, opts);
  std::ostringstream os;
  if (cfg.format == "text") {
    os << cover_to_json(res, side, cfg.timing);
  } else if (cfg.format == "csv") {
    os << "side,eta,certificate,maximal,forced,nodes,elapsed_ms\n";
    os << to_string(side) << ',' << res.eta.to_string() << ',' << to_string(res.certificate) << ','
       << res.maximal_count << ',' << res.forced_count << ',' << res.nodes << ',';
    if (cfg.timing) os << static_cast<std::uint64_t>(res.elapsed_ms + 0.5);
    os << '\n';
  } else {
    os << "eta=" << res.eta.to_string() << "\nside: " << to_string(side) << "\ncertificate: " << to_string(res.certificate)
       << "\nmaximal ideals: " << res.maximal_count << "\nforced ideals: " << res.forced_count
       << "\nsearch nodes: " << res.nodes << '\n';
    if (cfg.timing) os << "elapsed_ms: " << res.elapsed_ms << '\n';
    for (const auto& m : res.cover) os << "  order " << m.order() << ' ' << basis_string(m.rows()) << '\n';
  }
  return {os.str()};
}

// --------------------------------------------------------------------------- elementary

Report run_elementary(const RunConfig& cfg) {
  const RingPresentation r = load_ring(cfg);
  const Side side = parse_side(cfg.side);
  const ElementaryReport rep = is_eta_elementary(r, side, cfg.limits);
  std::ostringstream os;
  if (cfg.format == "text") {
    os << elementary_to_json(rep, side);
  } else if (cfg.format == "csv") {
    os << "ideal_dimension,ideal_order,quotient_eta,ring_eta,strict\n";
    for (const auto& q : rep.quotients) {
      os << q.ideal.dimension() << ',' << q.ideal.order() << ',' << q.eta.to_string() << ',' << rep.eta.to_string() << ','
         << (rep.eta < q.eta ? "true" : "false") << '\n';
    }
  } else {
    os << "elementary: " << yes_no(rep.elementary) << "\neta=" << rep.eta.to_string() << '\n';
    for (const auto& q : rep.quotients) {
      os << "  quotient by ideal of order " << q.ideal.order() << ": eta=" << q.eta.to_string() << '\n';
    }
  }
  return {os.str()};
}

// --------------------------------------------------------------------------- verify

Report run_verify(const RunConfig& cfg) {
  std::vector<VerificationRecord> recs;
  if (cfg.theorem == "main") {
    std::vector<std::pair<std::size_t, std::uint32_t>> cases;
    for (std::uint32_t q = 2; q <= cfg.qmax; ++q) {
      if (!is_prime_power(q)) continue;
      for (std::size_t n = 1; n <= cfg.nmax; ++n) cases.emplace_back(n, q);
    }
    if (cases.empty()) throw UsageError("empty (q, n) grid");
    recs = verify_main_grid(cases, cfg.limits);
  } else if (cfg.theorem == "two-sided") {
    for (std::uint32_t p = 2; p <= cfg.pmax; ++p) {
      if (is_prime(p)) recs.push_back(verify_two_sided_theorem(p, cfg.limits));
    }
    if (recs.empty()) throw UsageError("no primes up to --pmax");
  } else {
    throw UsageError("unknown theorem '" + cfg.theorem + "' (main, two-sided)");
  }
  Report rep;
  for (const auto& r : recs) {
    if (!r.pass) rep.status = kFail;
  }
  std::ostringstream os;
  if (cfg.format == "text") {
    os << records_to_json(recs, cfg.timing);
  } else if (cfg.format == "csv") {
    os << csv_header(cfg.theorem) << '\n';
    for (const auto& r : recs) os << csv_row(r, cfg.timing) << '\n';
  } else {
    for (const auto& r : recs) {
      os << (r.pass ? "PASS " : "FAIL ");
      if (r.theorem == "main") {
        os << "q=" << r.q << " n=" << r.n;
      } else {
        os << "p=" << r.p;
      }
      os << " order=" << r.order << " eta=" << r.computed_eta.to_string() << " formula=" << r.formula_eta
         << " elementary=" << yes_no(r.elementary) << " forced=" << r.forced_count << " maximal=" << r.maximal_count;
      if (cfg.timing) os << " elapsed_ms=" << r.elapsed_ms;
      for (const auto& f : r.failures) os << " [" << f << ']';
      os << '\n';
    }
  }
  rep.body = os.str();
  return rep;
}

// --------------------------------------------------------------------------- scan

Report run_scan(const RunConfig& cfg) {
  ScanOptions opts;
  opts.limits = cfg.limits;
  opts.seed = cfg.seed;
  if (cfg.sample > 0) opts.sample = cfg.sample;
  const ScanResult res = fingerprint_scan(cfg.p, cfg.d, opts);
  Report rep;
  rep.status = res.matches_classification ? kOk : kFail;
  std::ostringstream os;
  if (cfg.format == "text") {
    os << scan_to_json(res);
  } else if (cfg.format == "csv") {
    os << "count,order,characteristic,radical_order,has_identity,has_left_identity,has_right_identity,"
          "left_ideal_count,two_sided_ideal_count,eta_left,eta_right,eta_two_sided,expected\n";
    for (const auto& c : res.classes) {
      const Fingerprint& f = c.fingerprint;
      const bool known = std::binary_search(res.expected.begin(), res.expected.end(), f);
      os << c.count << ',' << f.order << ',' << f.characteristic << ',' << f.radical_order << ',' << f.has_identity << ','
         << f.has_left_identity << ',' << f.has_right_identity << ',' << f.left_ideal_count << ','
         << f.two_sided_ideal_count << ',' << f.eta_left.to_string() << ',' << f.eta_right.to_string() << ','
         << f.eta_two_sided.to_string() << ',' << (known ? "true" : "false") << '\n';
    }
  } else {
    os << "p=" << res.p << " d=" << res.d << (res.sampled ? " (sampled)" : " (exhaustive)") << '\n';
    os << "tables examined: " << res.tables_examined << "\nassociative: " << res.associative
       << "\neta_left-elementary: " << res.elementary << '\n';
    for (const auto& c : res.classes) os << "  " << c.count << " x " << c.fingerprint.to_string() << '\n';
    os << "classification " << (res.matches_classification ? "matches" : "DOES NOT match") << " ("
       << res.expected.size() << " expected fingerprints)\n";
  }
  rep.body = os.str();
  return rep;
}

void emit(const RunConfig& cfg, const std::string& body) {
  fs::path target;
  const char* dir = std::getenv("RINGCOVER_OUTPUT_DIR");
  if (!cfg.out.empty()) {
    target = cfg.out;
    if (target.is_relative() && dir && *dir) target = fs::path(dir) / target;
  } else if (dir && *dir) {
    const std::string ext = cfg.format == "csv" ? ".csv" : cfg.format == "text" ? ".json" : ".txt";
    target = fs::path(dir) / (cfg.command + ext);
  }
  if (target.empty()) {
    std::cout << body;
    return;
  }
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::ofstream f(target, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + target.string());
  f << body;
  std::cerr << "wrote " << target.string() << '\n';
}

void add_ring_source(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "Built-in family: Rnq, Rnq-transpose, null, matrix");
  sub->add_option("--ring", cfg.ring_file, "Ring exchange file (JSON with p, dim, table)");
  sub->add_option("--n", cfg.n, "Matrix size n for Rnq and matrix families")->check(CLI::PositiveNumber);
  sub->add_option("--q", cfg.q, "Field order q (prime power)")->check(CLI::PositiveNumber);
  sub->add_option("--p", cfg.p, "Prime p for the null family")->check(CLI::PositiveNumber);
  sub->add_option("--r", cfg.r, "Rank r of the null family")->check(CLI::PositiveNumber);
  sub->add_flag("--opposite", cfg.opposite, "Use the opposite ring");
  sub->add_flag("--dorroh", cfg.dorroh, "Use the unital extension F_p x R");
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "text", "human"}));
  sub->add_option("--out", cfg.out, "Write the report to this path");
  sub->add_option("--threads", cfg.threads, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  sub->add_flag("--timing", cfg.timing, "Include wall-clock timings in reports");
  sub->add_option("--max-elements", cfg.limits.max_elements, "Element scan cap")->check(CLI::PositiveNumber);
  sub->add_option("--max-ideals", cfg.limits.max_ideals, "Ideal lattice cap")->check(CLI::PositiveNumber);
  sub->add_option("--time-budget", cfg.limits.time_budget_s, "Seconds per record")->check(CLI::PositiveNumber);
  sub->add_option("--max-nodes", cfg.limits.max_search_nodes, "Search node cap")->check(CLI::PositiveNumber);
}

void add_side(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--side", cfg.side, "left, right or two-sided")
      ->check(CLI::IsMember({"left", "right", "two-sided", "two_sided", "both"}));
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Covering finite rings by proper ideals"};
  app.require_subcommand(1);

  CLI::App* construct = app.add_subcommand("construct", "Build a ring and print its structure constants");
  CLI::App* radical = app.add_subcommand("radical", "Jacobson radical and optional S + J splitting");
  CLI::App* ideals = app.add_subcommand("ideals", "Enumerate one- or two-sided ideals");
  CLI::App* cover = app.add_subcommand("cover", "Covering number and a minimal cover");
  CLI::App* elementary = app.add_subcommand("elementary", "Check whether every proper quotient has larger covering number");
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites over a parameter grid");
  CLI::App* scan = app.add_subcommand("scan", "Classify small algebras by fingerprint");

  for (CLI::App* sub : {construct, radical, ideals, cover, elementary}) add_ring_source(sub, cfg);
  for (CLI::App* sub : {construct, radical, ideals, cover, elementary, verify, scan}) add_common(sub, cfg);
  for (CLI::App* sub : {ideals, cover, elementary}) add_side(sub, cfg);
  radical->add_flag("--decompose", cfg.decompose, "Also compute a complement S with SJ and K");
  cover->add_flag("--unseeded", cfg.unseeded, "Do not seed the search with forced ideals");
  verify->add_option("--theorem", cfg.theorem, "main or two-sided")->check(CLI::IsMember({"main", "two-sided"}));
  verify->add_option("--qmax", cfg.qmax, "Largest q in the main grid")->check(CLI::Range(2U, 251U));
  verify->add_option("--nmax", cfg.nmax, "Largest n in the main grid")->check(CLI::PositiveNumber);
  verify->add_option("--pmax", cfg.pmax, "Largest p for the two-sided suite")->check(CLI::Range(2U, 251U));
  scan->add_option("--p", cfg.p, "Prime characteristic")->check(CLI::Range(2U, 251U));
  scan->add_option("--d", cfg.d, "Dimension")->check(CLI::Range(1U, 4U));
  scan->add_option("--sample", cfg.sample, "Examine this many random tables instead of all");
  scan->add_option("--seed", cfg.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif

  try {
    Report rep;
    if (*construct) {
      cfg.command = "construct";
      rep = run_construct(cfg);
    } else if (*radical) {
      cfg.command = "radical";
      rep = run_radical(cfg);
    } else if (*ideals) {
      cfg.command = "ideals";
      rep = run_ideals(cfg);
    } else if (*cover) {
      cfg.command = "cover";
      rep = run_cover(cfg);
    } else if (*elementary) {
      cfg.command = "elementary";
      rep = run_elementary(cfg);
    } else if (*verify) {
      cfg.command = "verify";
      rep = run_verify(cfg);
    } else {
      cfg.command = "scan";
      rep = run_scan(cfg);
    }
    emit(cfg, rep.body);
    return rep.status;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exhausted: " << e.what();
    if (e.partial_count()) std::cerr << " (partial count " << e.partial_count() << ')';
    std::cerr << '\n';
    return kGuard;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
