#include "ringcover/ring_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ringcover {

namespace {

using Json = nlohmann::ordered_json;

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (Coord c : v.coords()) a.push_back(static_cast<unsigned>(c));
  return a;
}

Json eta_json(const Eta& e) { return e.is_infinite() ? Json("infinity") : Json(e.value()); }

Json ideal_json(const IdealBasis& ideal) {
  Json j;
  j["side"] = to_string(ideal.side());
  j["dimension"] = ideal.dimension();
  j["order"] = ideal.order();
  Json rows = Json::array();
  for (const Vec& v : ideal.rows()) rows.push_back(vec_json(v));
  j["basis"] = std::move(rows);
  return j;
}

Json subspace_json(const Subspace& s) {
  Json j;
  j["dimension"] = s.dimension();
  j["order"] = s.order();
  Json rows = Json::array();
  for (const Vec& v : s.rows()) rows.push_back(vec_json(v));
  j["basis"] = std::move(rows);
  return j;
}

Json fingerprint_json(const Fingerprint& fp) {
  Json j;
  j["order"] = fp.order;
  j["characteristic"] = fp.characteristic;
  j["radical_order"] = fp.radical_order;
  j["has_identity"] = fp.has_identity;
  j["has_left_identity"] = fp.has_left_identity;
  j["has_right_identity"] = fp.has_right_identity;
  j["left_ideal_count"] = fp.left_ideal_count;
  j["two_sided_ideal_count"] = fp.two_sided_ideal_count;
  j["eta_left"] = eta_json(fp.eta_left);
  j["eta_right"] = eta_json(fp.eta_right);
  j["eta_two_sided"] = eta_json(fp.eta_two_sided);
  return j;
}

Json ring_json(const RingPresentation& r) {
  Json j;
  j["p"] = r.characteristic();
  j["dim"] = r.dimension();
  Json table = Json::array();
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < r.dimension(); ++k) row.push_back(vec_json(r.basis_product(i, k)));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

std::uint64_t read_uint(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw std::invalid_argument(std::string("ring file: field '") + key + "' must be a non-negative integer");
  }
  return j[key].get<std::uint64_t>();
}

}  // namespace

std::string ring_to_json(const RingPresentation& r) { return ring_json(r).dump(2) + "\n"; }

RingPresentation ring_from_json(const std::string& text, const Limits& limits) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("ring file: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("ring file: expected an object");
  const std::uint64_t p = read_uint(j, "p");
  const std::uint64_t d = read_uint(j, "dim");
  if (p > 251 || !is_prime(p)) throw std::invalid_argument("ring file: p must be a prime <= 251");
  if (d == 0 || d > kMaxDim) throw std::invalid_argument("ring file: dim out of range");
  if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != d) {
    throw std::invalid_argument("ring file: table must have dim rows");
  }
  StructureTable sc(d, std::vector<Vec>(d, Vec(d)));
  for (std::size_t i = 0; i < d; ++i) {
    const Json& row = j["table"][i];
    if (!row.is_array() || row.size() != d) throw std::invalid_argument("ring file: table row has the wrong length");
    for (std::size_t k = 0; k < d; ++k) {
      const Json& cell = row[k];
      if (!cell.is_array() || cell.size() != d) throw std::invalid_argument("ring file: product has the wrong length");
      for (std::size_t m = 0; m < d; ++m) {
        if (!cell[m].is_number_unsigned() || cell[m].get<std::uint64_t>() >= p) {
          throw std::invalid_argument("ring file: coefficient outside 0..p-1");
        }
        sc[i][k][m] = static_cast<Coord>(cell[m].get<std::uint64_t>());
      }
    }
  }
  return make_ring(static_cast<std::uint32_t>(p), d, sc, limits);
}

void write_ring_file(const std::filesystem::path& path, const RingPresentation& r) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << ring_to_json(r);
}

RingPresentation read_ring_file(const std::filesystem::path& path, const Limits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ring_from_json(buf.str(), limits);
}

std::string ideal_to_json(const IdealBasis& ideal) { return ideal_json(ideal).dump(2) + "\n"; }

std::string ideals_to_json(const IdealLattice& lattice) {
  Json j;
  j["side"] = to_string(lattice.side);
  j["count"] = lattice.all.size();
  j["cyclic_count"] = lattice.cyclic.size();
  j["maximal_count"] = lattice.maximal.size();
  Json all = Json::array();
  for (const auto& i : lattice.all) {
    Json e = ideal_json(i);
    e["cyclic"] = lattice.is_cyclic(i);
    e["maximal"] = std::binary_search(lattice.maximal.begin(), lattice.maximal.end(), i);
    all.push_back(std::move(e));
  }
  j["ideals"] = std::move(all);
  return j.dump(2) + "\n";
}

std::string cover_to_json(const CoverResult& res, Side side, bool include_timing) {
  Json j;
  j["side"] = to_string(side);
  j["eta"] = eta_json(res.eta);
  j["certificate"] = to_string(res.certificate);
  j["maximal_count"] = res.maximal_count;
  j["forced_count"] = res.forced_count;
  j["search_nodes"] = res.nodes;
  j["elapsed_ms"] = include_timing ? Json(res.elapsed_ms) : Json(nullptr);
  Json cover = Json::array();
  for (const auto& m : res.cover) cover.push_back(ideal_json(m));
  j["cover"] = std::move(cover);
  return j.dump(2) + "\n";
}

std::string elementary_to_json(const ElementaryReport& rep, Side side) {
  Json j;
  j["side"] = to_string(side);
  j["eta"] = eta_json(rep.eta);
  j["elementary"] = rep.elementary;
  Json qs = Json::array();
  for (const auto& q : rep.quotients) {
    Json e;
    e["ideal"] = ideal_json(q.ideal);
    e["quotient_eta"] = eta_json(q.eta);
    qs.push_back(std::move(e));
  }
  j["quotients"] = std::move(qs);
  return j.dump(2) + "\n";
}

std::string radical_to_json(const IdealBasis& radical, const Decomposition* dec) {
  Json j;
  j["radical"] = ideal_json(radical);
  if (dec) {
    j["complement"] = subspace_json(dec->S);
    j["SJ"] = subspace_json(dec->SJ);
    j["K"] = subspace_json(dec->K);
    j["j_splits"] = dec->j_splits;
  }
  return j.dump(2) + "\n";
}

std::string fingerprint_to_json(const Fingerprint& fp) { return fingerprint_json(fp).dump(2) + "\n"; }

std::string records_to_json(const std::vector<VerificationRecord>& recs, bool include_timing) {
  Json arr = Json::array();
  for (const auto& r : recs) {
    Json j;
    j["theorem"] = r.theorem;
    if (r.theorem == "main") {
      j["q"] = r.q;
      j["n"] = r.n;
    } else {
      j["p"] = r.p;
    }
    j["order"] = r.order;
    j["eta_computed"] = eta_json(r.computed_eta);
    j["eta_formula"] = r.formula_eta;
    j["elementary"] = r.elementary;
    j["forced"] = r.forced_count;
    j["maximal"] = r.maximal_count;
    j["elapsed_ms"] = include_timing ? Json(r.elapsed_ms) : Json(nullptr);
    j["status"] = r.pass ? "PASS" : "FAIL";
    j["failures"] = r.failures;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string scan_to_json(const ScanResult& res) {
  Json j;
  j["p"] = res.p;
  j["d"] = res.d;
  j["sampled"] = res.sampled;
  j["tables_examined"] = res.tables_examined;
  j["associative"] = res.associative;
  j["elementary"] = res.elementary;
  Json classes = Json::array();
  for (const auto& c : res.classes) {
    Json e;
    e["fingerprint"] = fingerprint_json(c.fingerprint);
    e["count"] = c.count;
    e["representative"] = ring_json(c.representative);
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  Json expected = Json::array();
  for (const auto& fp : res.expected) expected.push_back(fingerprint_json(fp));
  j["expected"] = std::move(expected);
  j["matches_classification"] = res.matches_classification;
  return j.dump(2) + "\n";
}

}  // namespace ringcover
