#pragma once

// JSON exchange format for rings and machine-readable reports.
//
// Ring file: {"p": 2, "dim": 2, "table": [[[c..], ...], ...]} where table[i][j]
// lists the coordinates of e_i * e_j.

#include <filesystem>
#include <string>

#include "ringcover/cover.hpp"
#include "ringcover/ideals.hpp"
#include "ringcover/paperlab.hpp"
#include "ringcover/radical.hpp"
#include "ringcover/ring.hpp"

namespace ringcover {

std::string ring_to_json(const RingPresentation& r);
/// Throws std::invalid_argument on malformed input, AssociativityError on a bad table.
RingPresentation ring_from_json(const std::string& text, const Limits& limits = {});

void write_ring_file(const std::filesystem::path& path, const RingPresentation& r);
/// Throws std::runtime_error when the file cannot be read.
RingPresentation read_ring_file(const std::filesystem::path& path, const Limits& limits = {});

std::string ideal_to_json(const IdealBasis& ideal);
std::string ideals_to_json(const IdealLattice& lattice);
/// Timing fields are written as null unless include_timing is set.
std::string cover_to_json(const CoverResult& res, Side side, bool include_timing);
std::string elementary_to_json(const ElementaryReport& rep, Side side);
std::string radical_to_json(const IdealBasis& radical, const Decomposition* dec);
std::string fingerprint_to_json(const Fingerprint& fp);
std::string records_to_json(const std::vector<VerificationRecord>& recs, bool include_timing);
std::string scan_to_json(const ScanResult& res);

}  // namespace ringcover
