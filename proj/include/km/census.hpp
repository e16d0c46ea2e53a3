#ifndef KM_CENSUS_HPP
#define KM_CENSUS_HPP

#include <functional>
#include <optional>
#include <utility>

#include "km/blades.hpp"

namespace km {

struct CensusFilters {
    std::optional<bool> orientable;
    std::optional<std::pair<int, int>> boundary; // inclusive range; exact = [k,k]
    std::optional<int> genus_or_crosscaps;
    std::optional<int> euler;
};

struct CensusQuery {
    int max_blades = 10;
    TriangleSignature signature{}; // default (inf,inf,inf)
    CensusFilters filters;
    int cap = 10;     // guard against accidental huge runs; raise explicitly
    int threads = 0;  // 0 = KLEINMAPS_THREADS env or hardware concurrency
};

struct CensusRecord {
    BladeSystem system; // equal to its own canonical form
    SurfaceType surface;
    Passport pass;
    std::pair<long long, long long> type; // map_type
};

/// Exactly one record per isomorphism class of valid blade systems with
/// N <= max_blades satisfying the signature and filters, ordered by
/// (N, canonical transition table). Deterministic across runs and thread
/// counts. The sink may return false to stop early (granularity: records are
/// produced blade-count by blade-count).
using CensusSink = std::function<bool(const CensusRecord&)>;
void census_enumerate(const CensusQuery& q, const CensusSink& sink);

long long census_count(const CensusQuery& q);

} // namespace km

#endif
