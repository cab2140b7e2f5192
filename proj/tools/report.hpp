#pragma once

// JSON binding for the CLI. nlohmann::json keeps object keys in a std::map,
// so every dump is key-sorted and reproducible.

#include <json.hpp>
#include <string>
#include <vector>

#include "curvelattice/adjunction.hpp"
#include "curvelattice/lattice.hpp"
#include "curvelattice/mordellweil.hpp"
#include "curvelattice/spectrum.hpp"
#include "curvelattice/torus.hpp"
#include "curvelattice/weierstrass.hpp"
#include "curvelattice/zariski.hpp"

namespace cl::report {

using json = nlohmann::json;

inline constexpr const char* kSchema = "curvelattice/1";

// Convention notes carried in the "deviations" array of reports that use them.
extern const char* const kPairingNote;
extern const char* const kScaleNote;
extern const char* const kHyperellipticNote;

// Wraps a body with schema, command and deviations.
json envelope(const std::string& command, json body, const std::vector<std::string>& deviations);
json error_report(const std::string& command, const std::string& kind, const std::string& message);

json to_json(const Rat& q);
json to_json(const QMatrix& m);
json to_json(const IntMatrix& m);
json to_json(const Spectrum& s);
json to_json(const CurveProfile& p);
json to_json(const DefectRow& r);
json to_json(const AlexanderPoly& a);
json to_json(const RankReport& r);
json to_json(const QuasiToricPoint& p);
json to_json(const ToricSearch& s);
json to_json(const Table1Result& r);
json to_json(const WeierstrassData& w);
json to_json(const FiberReport& f);
json to_json(const ShortVectors& s);
json to_json(const LatticeEvidence& e);
json to_json(const Diagonalization& d);
json to_json(const QEquivalence& q);
json to_json(const ZariskiSide& s);
json to_json(const ZariskiCertificate& c);

json read_document(const std::string& path_or_inline);

// {"poly", "vars", "components"?, "singularities"?}; an explicit singularity
// list replaces detection.
CurveProfile curve_from_json(const json& doc);
// {"X", "Y", "Z", "g", "vars"}.
QuasiToricPoint point_from_json(const json& doc);
// A list of decomposition documents, or {"points": [...]} as written by toric find.
std::vector<QuasiToricPoint> points_from_json(const json& doc);
// An array of rows, or {"gram": rows}; entries are integers or rational strings.
QMatrix gram_from_json(const json& doc);
// {"kind": "fixture" | "table1" | "curve", ...}; see data/ for examples.
ZariskiSide side_from_json(const json& doc);

// Coprime weights making f(x, y) quasi-homogeneous, smallest sum first.
std::array<int, 2> infer_weights(const MPoly& f);

}  // namespace cl::report
