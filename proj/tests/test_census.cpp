#include <doctest.h>

#include <sstream>

#include "km/census.hpp"
#include "km/io.hpp"
#include "oracles.hpp"

using namespace km;

namespace {

long long count_at(int n, TriangleSignature sig = {}, int threads = 1) {
    CensusQuery q;
    q.max_blades = n;
    q.signature = sig;
    q.threads = threads;
    long long only_n = 0;
    census_enumerate(q, [&](const CensusRecord& r) {
        if (r.system.n == n) ++only_n;
        return true;
    });
    return only_n;
}

} // namespace

TEST_CASE("one blade: exactly the disc") {
    CensusQuery q;
    q.max_blades = 1;
    std::vector<CensusRecord> records;
    census_enumerate(q, [&](const CensusRecord& r) {
        records.push_back(r);
        return true;
    });
    REQUIRE(records.size() == 1);
    CHECK(records[0].system.tau.is_identity());
    CHECK(records[0].system.lambda.is_identity());
    CHECK(records[0].system.rho.is_identity());
    CHECK(records[0].surface == SurfaceType{1, true, 1, 0});
}

TEST_CASE("two blades add seven classes") {
    CensusQuery q;
    q.max_blades = 2;
    CHECK(census_count(q) == 8);
    CHECK(count_at(2) == 7);
}

TEST_CASE("census equals brute-force conjugacy classification up to 6 blades") {
    for (int n = 1; n <= 6; ++n)
        CHECK(count_at(n) == kmtest::brute_force_class_count(n, TriangleSignature{}));
}

TEST_CASE("census respects finite signatures, against brute force") {
    TriangleSignature sig = map_signature(2, 2);
    for (int n = 1; n <= 5; ++n)
        CHECK(count_at(n, sig) == kmtest::brute_force_class_count(n, sig));
    TriangleSignature maps = map_signature(0, 0);
    for (int n = 1; n <= 6; ++n)
        CHECK(count_at(n, maps) == kmtest::brute_force_class_count(n, maps));
    TriangleSignature modular = builtin_signature(BuiltinSignature::modular_star);
    for (int n = 1; n <= 6; ++n)
        CHECK(count_at(n, modular) == kmtest::brute_force_class_count(n, modular));
}

TEST_CASE("records are canonical, valid and sorted") {
    CensusQuery q;
    q.max_blades = 5;
    int last_n = 0;
    std::vector<std::vector<int>> last_table;
    census_enumerate(q, [&](const CensusRecord& r) {
        CanonicalForm cf = canonical_form(r.system);
        CHECK(cf.system == r.system);
        CHECK(r.surface == classify(r.system));
        CHECK(r.pass == passport(r.system));
        CHECK(r.type == map_type(r.system));

        std::vector<std::vector<int>> table{r.system.tau.images(), r.system.lambda.images(),
                                            r.system.rho.images()};
        if (r.system.n == last_n) CHECK(last_table < table);
        CHECK(r.system.n >= last_n);
        last_n = r.system.n;
        last_table = table;
        return true;
    });
}

TEST_CASE("filters are honored and find the Moebius band") {
    CensusQuery q;
    q.max_blades = 6;
    q.filters.orientable = false;
    q.filters.boundary = {1, std::numeric_limits<int>::max()};
    q.filters.euler = 0;
    long long hits = 0;
    census_enumerate(q, [&](const CensusRecord& r) {
        CHECK_FALSE(r.surface.orientable);
        CHECK(r.surface.boundary >= 1);
        CHECK(r.surface.euler == 0);
        ++hits;
        return true;
    });
    CHECK(hits >= 1);
}

TEST_CASE("byte-identical output across thread counts") {
    for (TriangleSignature sig : {TriangleSignature{}, map_signature(0, 0)}) {
        std::string streams[3];
        int threads[3] = {1, 2, 4};
        for (int k = 0; k < 3; ++k) {
            CensusQuery q;
            q.max_blades = 5;
            q.signature = sig;
            q.threads = threads[k];
            std::ostringstream os;
            census_enumerate(q, [&](const CensusRecord& r) {
                os << census_record_to_json(r).dump() << "\n";
                return true;
            });
            streams[k] = os.str();
        }
        CHECK(streams[0] == streams[1]);
        CHECK(streams[0] == streams[2]);
        CHECK_FALSE(streams[0].empty());
    }
}

TEST_CASE("cap guard") {
    CensusQuery q;
    q.max_blades = 11; // default cap is 10
    try {
        census_count(q);
        FAIL("expected CapExceeded");
    } catch (const error& e) {
        CHECK(e.code() == errc::cap_exceeded);
    }
    q.max_blades = 3;
    q.cap = 3;
    CHECK(census_count(q) == 15);
}

TEST_CASE("sink can stop the stream early") {
    CensusQuery q;
    q.max_blades = 6;
    int taken = 0;
    census_enumerate(q, [&](const CensusRecord&) { return ++taken < 3; });
    CHECK(taken == 3);
}

TEST_CASE("degenerate signature entries collapse the generators") {
    // l = 1 forces the corresponding product to be trivial; at (2,1,1) all
    // three involutions coincide, leaving only the one- and two-blade systems
    CensusQuery q;
    q.max_blades = 10;
    q.signature = map_signature(1, 1);
    std::vector<CensusRecord> records;
    census_enumerate(q, [&](const CensusRecord& r) {
        records.push_back(r);
        return true;
    });
    REQUIRE(records.size() == 2);
    CHECK(records[0].system.n == 1);
    CHECK(records[0].surface == SurfaceType{1, true, 1, 0});
    CHECK(records[1].system.n == 2);
    CHECK(records[1].surface == SurfaceType{2, true, 0, 0});
    CHECK(records[1].system.tau == records[1].system.lambda);
    CHECK(records[1].system.tau == records[1].system.rho);
}

TEST_CASE("query validation") {
    CensusQuery q;
    q.max_blades = 0;
    CHECK_THROWS_AS(census_count(q), error);
    q.max_blades = 2;
    q.filters.boundary = {3, 1};
    CHECK_THROWS_AS(census_count(q), error);
}
