// Acceptance suite: one line per criterion, exact checks, pinned runtime
// limits. Exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "km/blades.hpp"
#include "km/census.hpp"
#include "km/darts.hpp"
#include "km/ratfun.hpp"
#include "oracles.hpp"

using namespace km;

namespace {

long long checks = 0;
long long failures = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::printf("    FAILED CHECK: %s\n", what.c_str());
    }
}

BladeSystem make(int n, std::string_view t, std::string_view l, std::string_view r,
                 TriangleSignature sig = TriangleSignature{}) {
    return validate(n, Permutation::parse_cycles(n, t), Permutation::parse_cycles(n, l),
                    Permutation::parse_cycles(n, r), sig);
}

std::string surface_str(const SurfaceType& s) {
    std::ostringstream os;
    os << "(chi=" << s.euler << "," << (s.orientable ? "orientable" : "non-orientable")
       << ",b=" << s.boundary << "," << (s.orientable ? "g=" : "k=") << s.genus_or_crosscaps << ")";
    return os.str();
}

// ---- criterion 1: known-surface table ------------------------------------

void criterion1(std::string& detail) {
    struct Entry {
        BladeSystem system;
        SurfaceType expected; // frozen from the flag complex oracle
        const char* name;
    };
    std::vector<Entry> table;
    table.push_back({make(1, "", "", "", map_signature(1, 1)), {1, true, 1, 0}, "trivial disc map"});
    table.push_back(
        {make(2, "(1 2)", "(1 2)", "(1 2)", map_signature(1, 1)), {2, true, 0, 0}, "trivial sphere map"});
    // each generator fixes a blade, so the quotient has boundary: Moebius band
    table.push_back({make(3, "(1 2)", "(1 3)", "(2 3)"), {0, false, 1, 1}, "3-blade hypermap"});
    table.push_back({make(4, "(1 2)(3 4)", "(1 4)(2 3)", "(1 3)(2 4)"),
                     {1, false, 0, 1},
                     "4-blade projective plane"});
    table.push_back({make(4, "(1 2)(3 4)", "(1 4)(2 3)", ""), {1, true, 1, 0}, "4-blade path map"});

    for (const auto& e : table) {
        SurfaceType oracle = kmtest::flag_complex_classify(e.system);
        SurfaceType got = classify(e.system);
        expect(oracle == e.expected,
               std::string(e.name) + ": oracle " + surface_str(oracle) + " != expected " +
                   surface_str(e.expected));
        expect(got == e.expected, std::string(e.name) + ": classify " + surface_str(got) +
                                      " != expected " + surface_str(e.expected));
    }
    detail = "5 systems, classify and flag-complex oracle, exact";
}

// ---- criteria 2 & 3: randomized invariant suite and double laws ----------

std::vector<BladeSystem> corpus;

void build_corpus() {
    std::mt19937 rng(20260808);
    corpus.reserve(10000);
    for (int i = 0; i < 10000; ++i) {
        int n = 1 + static_cast<int>(rng() % 64);
        corpus.push_back(kmtest::random_blade_system(rng, n));
    }
}

void criterion2(std::string& detail) {
    std::mt19937 rng(171717);
    for (const auto& b : corpus) {
        int numerator = cycle_count(compose(b.tau, b.lambda)) +
                        cycle_count(compose(b.lambda, b.rho)) +
                        cycle_count(compose(b.rho, b.tau)) - b.n;
        expect(numerator % 2 == 0, "chi numerator parity");

        SurfaceType s = classify(b);
        if (s.orientable)
            expect(s.euler == 2 - 2 * s.genus_or_crosscaps - s.boundary, "chi = 2 - 2g - b");
        else
            expect(s.euler == 2 - s.genus_or_crosscaps - s.boundary && s.genus_or_crosscaps >= 1,
                   "chi = 2 - k - b");

        BladeSystem c = conjugate(b, kmtest::random_permutation(rng, b.n));
        expect(euler_characteristic(c) == s.euler, "conjugation invariance: euler");
        expect(orientable(c) == s.orientable, "conjugation invariance: orientability");
        expect(boundary(c).count() == s.boundary, "conjugation invariance: boundary");
        expect(map_type(c) == map_type(b), "conjugation invariance: map_type");
        expect(passport(c) == passport(b), "conjugation invariance: passport");

        // boundary() asserts 2-regularity internally; check the partition here
        BoundaryReport r = boundary(b);
        size_t covered = 0;
        for (const auto& comp : r.components) covered += comp.size();
        expect(covered == r.fixed_pairs.size(), "components partition the fixed pairs");
        bool has_fixed = false;
        for (Gen g : {Gen::tau, Gen::lambda, Gen::rho})
            for (int i = 0; i < b.n; ++i)
                if (generator(b, g)(i) == i) has_fixed = true;
        expect((r.count() == 0) == !has_fixed, "b = 0 iff no generator fixed point");
    }
    detail = "10000 random systems, N <= 64";
}

void criterion3(std::string& detail) {
    for (const auto& b : corpus) {
        ComplexDouble d = complex_double(b);
        int total = 0;
        bool free_of_fixed = true;
        for (const auto& comp : d.components) {
            total += euler_characteristic(comp);
            for (Gen g : {Gen::tau, Gen::lambda, Gen::rho})
                for (int i = 0; i < comp.n; ++i)
                    if (generator(comp, g)(i) == i) free_of_fixed = false;
        }
        expect(free_of_fixed, "double components are fixed-point-free");
        expect(total == 2 * euler_characteristic(b), "sum chi(double) = 2 chi");
        bool closed_orientable = orientable(b) && boundary(b).count() == 0;
        expect((d.components.size() == 2) == closed_orientable,
               "disconnection iff orientable and closed");
    }
    detail = "double laws on the same corpus";
}

// ---- criterion 4: exhaustive census oracle equivalence -------------------

void criterion4(std::string& detail) {
    std::vector<long long> census_counts(7, 0);
    CensusQuery q;
    q.max_blades = 6;
    census_enumerate(q, [&](const CensusRecord& r) {
        ++census_counts[r.system.n];
        return true;
    });
    expect(census_counts[1] == 1, "N=1 count is 1");
    expect(census_counts[2] == 7, "N=2 adds 7 classes (8 cumulative)");
    for (int n = 1; n <= 6; ++n) {
        long long brute = kmtest::brute_force_class_count(n, TriangleSignature{});
        expect(census_counts[n] == brute,
               "N=" + std::to_string(n) + ": census " + std::to_string(census_counts[n]) +
                   " vs brute force " + std::to_string(brute));
    }
    detail = "brute-force conjugacy classes, N <= 6";
}

// ---- criterion 5: dart/blade round trips ----------------------------------

void criterion5(std::string& detail) {
    long long dart_count = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto invs = kmtest::all_involutions(n);
        const auto perms = kmtest::all_permutations(n);
        for (const auto& x : invs)
            for (const auto& y : perms) {
                const std::array<Permutation, 2> gens{x, y};
                if (!is_transitive(gens, n)) continue;
                ++dart_count;
                DartMap d = validate_dart(n, x, y);
                BladeSystem b = to_blades(d);
                expect(dart_isomorphic(orient(b).map, d), "orient(to_blades(D)) isomorphic to D");
                expect(euler_characteristic(b) == dart_euler(d), "euler agreement dart vs blade");
            }
    }

    long long blade_count = 0;
    CensusQuery q;
    q.max_blades = 12;
    q.cap = 12;
    q.signature = map_signature(TriangleSignature::infinity, TriangleSignature::infinity);
    q.filters.orientable = true;
    q.filters.boundary = {0, 0};
    census_enumerate(q, [&](const CensusRecord& rec) {
        ++blade_count;
        expect(is_isomorphic(to_blades(orient(rec.system).map), rec.system),
               "to_blades(orient(B)) isomorphic to B");
        return true;
    });
    std::ostringstream os;
    os << dart_count << " dart maps (N <= 6 exhaustive), " << blade_count
       << " orientable closed map systems (N <= 12)";
    detail = os.str();
}

// ---- criterion 6: critical-value normalization pipeline --------------------

bool in_standard_set(const ExtValue& v) {
    return v.infinite || (v.z.is_real() && (v.z.re == 0 || v.z.re == 1));
}

Rational rnd_rational(std::mt19937& rng, int bound) {
    int num = static_cast<int>(rng() % (2 * bound + 1)) - bound;
    int den = 1 + static_cast<int>(rng() % bound);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

void criterion6(std::string& detail) {
    // worked case {i, -i, inf}: the fold is final, h = X^2 + 1
    NormalizeResult wr = normalize(
        CriticalSet::of({ext_parse("i"), ext_parse("-i"), ext_parse("inf")}));
    expect(wr.h.num == std::vector<Rational>{Rational(1), Rational(0), Rational(1)} &&
               wr.h.den == std::vector<Rational>{Rational(1)},
           "worked case h = X^2 + 1");
    int zeros = 0, infs = 0;
    for (const auto& [in, out] : wr.certificate.images) {
        if (out == ExtValue::of(Rational(0))) ++zeros;
        if (out.infinite) ++infs;
    }
    expect(zeros == 2 && infs == 1, "worked case images {0, 0, inf}");
    expect(wr.certificate.own_critical_values.size() == 2 &&
               wr.certificate.own_critical_values[0] == ExtValue::of(Rational(1)) &&
               wr.certificate.own_critical_values[1].infinite,
           "worked case own critical values {1, inf}");

    std::mt19937 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<ExtValue> vals;
        int kind = static_cast<int>(rng() % 3);
        if (kind == 0) {
            int count = static_cast<int>(rng() % 4);
            for (int i = 0; i < count; ++i)
                vals.push_back(rng() % 5 == 0 ? ExtValue::inf()
                                              : ExtValue::of(rnd_rational(rng, 20)));
        } else {
            Gaussian p(rnd_rational(rng, 12), rnd_rational(rng, 12));
            if (p.is_real()) p.im = 1;
            vals.push_back(ExtValue::of(p));
            vals.push_back(ExtValue::of(p.conj()));
            if (kind == 2)
                vals.push_back(rng() % 3 == 0 ? ExtValue::inf()
                                              : ExtValue::of(rnd_rational(rng, 20)));
        }
        NormalizeResult r = normalize(CriticalSet::of(std::move(vals)));
        for (const auto& [in, out] : r.certificate.images)
            expect(in_standard_set(out), "image in {0,1,inf}");
        for (const auto& v : r.certificate.own_critical_values)
            expect(in_standard_set(v), "own critical value in {0,1,inf}");
    }
    detail = "worked case + 1000 randomized certificates, exact arithmetic";
}

// ---- criterion 7: j-invariant identities -----------------------------------

void criterion7(std::string& detail) {
    expect(j_invariant(Rational(0), Rational(1)) == Rational(0), "j(0,1) = 0");
    expect(j_invariant(Rational(1), Rational(0)) == Rational(1), "j(1,0) = 1");
    std::mt19937 rng(99999);
    int done = 0;
    while (done < 100) {
        Rational j = rnd_rational(rng, 60);
        if (j == 0 || j == 1) continue;
        ++done;
        Rational g = 27 * j / (j - 1);
        expect(j_invariant(g, g) == j, "j-invariant of the + curve");
        expect(j_invariant(g, -g) == j, "j-invariant of the - curve");
        expect((g > 0) != (-g > 0), "g3 signs distinguish the curves");
    }
    detail = "special curves and 100 random rational j, exact";
}

// ---- criterion 8: census existence filters ---------------------------------

void criterion8(std::string& detail) {
    int moebius_n = 0, annulus_n = 0;
    {
        CensusQuery q;
        q.max_blades = 10;
        q.filters.orientable = false;
        q.filters.boundary = {1, 1};
        q.filters.euler = 0;
        census_enumerate(q, [&](const CensusRecord& r) {
            moebius_n = r.system.n;
            return false;
        });
    }
    {
        CensusQuery q;
        q.max_blades = 10;
        q.filters.orientable = true;
        q.filters.boundary = {2, 2};
        q.filters.euler = 0;
        census_enumerate(q, [&](const CensusRecord& r) {
            annulus_n = r.system.n;
            return false;
        });
    }
    expect(moebius_n > 0, "census contains a Moebius band record");
    expect(annulus_n > 0, "census contains an annulus record");
    std::ostringstream os;
    os << "Moebius band at N=" << moebius_n << ", annulus at N=" << annulus_n
       << " (default cap 10)";
    detail = os.str();
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(std::string&)> run;
        double limit_seconds; // 0 = no stated limit
    };
    const std::vector<Criterion> criteria = {
        {1, "known-surface table", criterion1, 1.0},
        {2, "randomized invariant suite", criterion2, 60.0},
        {3, "complex double laws", criterion3, 0.0},
        {4, "census vs brute-force classification", criterion4, 30.0},
        {5, "dart/blade round trips", criterion5, 0.0},
        {6, "critical-value normalization pipeline", criterion6, 10.0},
        {7, "j-invariant identities", criterion7, 0.0},
        {8, "census existence: Moebius band and annulus", criterion8, 300.0},
    };

    build_corpus();

    int failed = 0;
    for (const auto& c : criteria) {
        long long before = failures;
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        c.run(detail);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = failures == before;
        bool in_time = c.limit_seconds == 0.0 || dt < c.limit_seconds;
        if (!in_time) ok = false;
        std::string limit_note;
        if (c.limit_seconds > 0)
            limit_note = " < " + std::to_string(static_cast<int>(c.limit_seconds)) + "s limit";
        std::printf("%s  %d  %s  [%s; %.2fs%s]\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str(), dt, limit_note.c_str());
        if (!ok) ++failed;
    }
    std::printf("%d/%zu criteria passed (%lld checks)\n", static_cast<int>(criteria.size()) - failed,
                criteria.size(), checks);
    return failed;
}
