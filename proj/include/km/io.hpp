#ifndef KM_IO_HPP
#define KM_IO_HPP

#include <json.hpp>

#include <string>

#include "km/blades.hpp"
#include "km/census.hpp"
#include "km/darts.hpp"
#include "km/ratfun.hpp"

namespace km {

using Json = nlohmann::json; // sorted keys, deterministic dumps

/// Map file: {"n": N, "signature": [l0,l1,linf] with 0 = infinity,
/// "tau"/"lambda"/"rho": arrays of cycles of 1-based blades, fixed points
/// omitted}. Serialization is canonical: cycles start at their minimum and
/// are ordered by it, keys are sorted; parse(serialize(b)) == b bit-exactly.
Json blade_to_json(const BladeSystem& b);
BladeSystem blade_from_json(const Json& j);

/// Dart file: {"n": N, "x": cycles, "y": cycles}.
Json dart_to_json(const DartMap& d);
DartMap dart_from_json(const Json& j);

bool looks_like_dart(const Json& j);
Json parse_text(const std::string& text); // ParseError on malformed JSON

/// Blade adjacency graph with generator-labeled edges; fixed blades appear as
/// dotted self-loops.
std::string blade_dot(const BladeSystem& b);

Json surface_to_json(const SurfaceType& s);
Json passport_to_json(const Passport& p);
Json boundary_to_json(const BoundaryReport& r);
Json double_to_json(const ComplexDouble& d);
Json schreier_to_json(const SchreierData& s);
Json census_record_to_json(const CensusRecord& r);
Json certificate_to_json(const NormalizeResult& r);

Json cycles_to_json(const Permutation& p);
Permutation cycles_from_json(const Json& j, int n);

} // namespace km

#endif
