#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "relmub/complementarity.hpp"
#include "relmub/mols.hpp"
#include "relmub/rel.hpp"
#include "relmub/search.hpp"
#include "relmub/structures.hpp"

namespace relmub::io {

// All parsers throw std::invalid_argument with line/field diagnostics on
// malformed input.

// --- JSON ---------------------------------------------------------------

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const ClassicalStructure& cs);
nlohmann::json to_json(const MccsFamily& family);
nlohmann::json to_json(const LatinSquare& sq);
nlohmann::json to_json(const SearchCertificate& cert);

/// { "n": int, "blocks": [[int,...],...],
///   "groups": [ {"table": [[int,...],...], "identity": int} | "cyclic", ... ] }
/// "identity" is the index of the identity within the block; a missing
/// "groups" array means all-cyclic defaults.
ClassicalStructure structure_from_json(const nlohmann::json& j);

/// { "n": int, "partitions": [ [[int,...],...], ... ] }
MccsFamily mccs_from_json(const nlohmann::json& j);

// --- Text formats --------------------------------------------------------

/// Latin square: line 1 "d", then d lines of d space-separated symbols.
std::string latin_to_text(const LatinSquare& sq);

/// MOLS set: squares in the single-square format, separated by blank lines.
std::string mols_to_text(const std::vector<LatinSquare>& squares);
std::vector<LatinSquare> mols_from_text(const std::string& content);

/// Relation: first line "dom cod", then one line "x y" per related pair.
std::string rel_to_text(const Rel& r);
Rel rel_from_text(const std::string& content);

// --- Lenient readers (accept piped JSON output of other commands) --------

/// Latin squares from MOLS text, a JSON array of grids, or a JSON object
/// carrying "squares" or "witnesses".
std::vector<LatinSquare> squares_from_any(const std::string& content);

/// A family from family JSON or a certificate object carrying "n" and
/// partition-shaped "witnesses".
MccsFamily mccs_from_any(const std::string& content);

nlohmann::json parse_json(const std::string& content);

}  // namespace relmub::io
