#include "km/io.hpp"

#include <sstream>

namespace km {

Json cycles_to_json(const Permutation& p) {
    Json out = Json::array();
    for (const auto& cyc : p.cycles(false)) {
        Json jc = Json::array();
        for (int v : cyc) jc.push_back(v + 1);
        out.push_back(std::move(jc));
    }
    return out;
}

Permutation cycles_from_json(const Json& j, int n) {
    if (!j.is_array()) fail(errc::parse_error, "cycles must be an array of arrays");
    std::vector<std::vector<int>> cycles;
    for (const auto& jc : j) {
        if (!jc.is_array()) fail(errc::parse_error, "cycle must be an array");
        std::vector<int> cyc;
        for (const auto& v : jc) {
            if (!v.is_number_integer()) fail(errc::parse_error, "cycle entries must be integers");
            cyc.push_back(v.get<int>());
        }
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(n, cycles);
}

namespace {

int read_n(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        fail(errc::parse_error, "file needs an integer field \"n\"");
    return j["n"].get<int>();
}

TriangleSignature read_signature(const Json& j) {
    if (!j.contains("signature")) return TriangleSignature{};
    const Json& s = j["signature"];
    if (!s.is_array() || s.size() != 3)
        fail(errc::parse_error, "\"signature\" must be an array of 3 integers (0 = infinity)");
    for (const auto& v : s)
        if (!v.is_number_integer() || v.get<int>() < 0)
            fail(errc::parse_error, "signature entries must be integers >= 0");
    return TriangleSignature{s[0].get<int>(), s[1].get<int>(), s[2].get<int>()};
}

} // namespace

Json blade_to_json(const BladeSystem& b) {
    Json j;
    j["n"] = b.n;
    j["signature"] = {b.signature.l0, b.signature.l1, b.signature.linf};
    j["tau"] = cycles_to_json(b.tau);
    j["lambda"] = cycles_to_json(b.lambda);
    j["rho"] = cycles_to_json(b.rho);
    return j;
}

BladeSystem blade_from_json(const Json& j) {
    int n = read_n(j);
    TriangleSignature sig = read_signature(j);
    for (const char* key : {"tau", "lambda", "rho"})
        if (!j.contains(key)) fail(errc::parse_error, std::string("map file needs \"") + key + "\"");
    return validate(n, cycles_from_json(j["tau"], n), cycles_from_json(j["lambda"], n),
                    cycles_from_json(j["rho"], n), sig);
}

Json dart_to_json(const DartMap& d) {
    Json j;
    j["n"] = d.n;
    j["x"] = cycles_to_json(d.x);
    j["y"] = cycles_to_json(d.y);
    return j;
}

DartMap dart_from_json(const Json& j) {
    int n = read_n(j);
    for (const char* key : {"x", "y"})
        if (!j.contains(key)) fail(errc::parse_error, std::string("dart file needs \"") + key + "\"");
    return validate_dart(n, cycles_from_json(j["x"], n), cycles_from_json(j["y"], n));
}

bool looks_like_dart(const Json& j) {
    return j.is_object() && j.contains("x") && j.contains("y");
}

Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
    return j;
}

std::string blade_dot(const BladeSystem& b) {
    std::ostringstream os;
    os << "graph blades {\n";
    for (int i = 0; i < b.n; ++i) os << "  " << i + 1 << ";\n";
    for (Gen g : {Gen::tau, Gen::lambda, Gen::rho}) {
        const Permutation& p = generator(b, g);
        for (int i = 0; i < b.n; ++i) {
            if (p(i) < i) continue;
            if (p(i) == i)
                os << "  " << i + 1 << " -- " << i + 1 << " [label=\"" << gen_name(g)
                   << "\", style=dotted];\n";
            else
                os << "  " << i + 1 << " -- " << p(i) + 1 << " [label=\"" << gen_name(g) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

Json surface_to_json(const SurfaceType& s) {
    Json j;
    j["euler"] = s.euler;
    j["orientable"] = s.orientable;
    j["boundary"] = s.boundary;
    j["genus_or_crosscaps"] = s.genus_or_crosscaps;
    j["name"] = surface_name(s);
    return j;
}

Json passport_to_json(const Passport& p) {
    Json j;
    j["over0"] = p.over0;
    j["over1"] = p.over1;
    j["overinf"] = p.overinf;
    return j;
}

Json boundary_to_json(const BoundaryReport& r) {
    Json j;
    Json pairs = Json::array();
    for (const auto& fp : r.fixed_pairs) pairs.push_back({fp.blade + 1, gen_name(fp.gen)});
    Json comps = Json::array();
    for (const auto& comp : r.components) {
        Json jc = Json::array();
        for (int idx : comp)
            jc.push_back({r.fixed_pairs[idx].blade + 1, gen_name(r.fixed_pairs[idx].gen)});
        comps.push_back(std::move(jc));
    }
    j["fixed_pairs"] = std::move(pairs);
    j["components"] = std::move(comps);
    j["count"] = r.count();
    return j;
}

Json double_to_json(const ComplexDouble& d) {
    Json j;
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back(blade_to_json(c));
    Json labels = Json::array();
    for (const auto& block : d.labels) {
        Json jl = Json::array();
        for (int v : block) jl.push_back(v + 1);
        labels.push_back(std::move(jl));
    }
    j["components"] = std::move(comps);
    j["labels"] = std::move(labels);
    j["deck"] = cycles_to_json(d.deck);
    return j;
}

Json schreier_to_json(const SchreierData& s) {
    Json j;
    j["basepoint"] = s.basepoint + 1;
    Json reps = Json::array();
    for (const auto& w : s.representatives) reps.push_back(w.str());
    Json gens = Json::array();
    for (const auto& w : s.stabilizer_generators) gens.push_back(w.str());
    j["representatives"] = std::move(reps);
    j["stabilizer_generators"] = std::move(gens);
    return j;
}

Json census_record_to_json(const CensusRecord& r) {
    Json j = blade_to_json(r.system);
    j["surface"] = surface_to_json(r.surface);
    j["passport"] = passport_to_json(r.pass);
    j["map_type"] = {r.type.first, r.type.second};
    return j;
}

namespace {

Json ext_to_json(const ExtValue& v) {
    return ext_str(v);
}

Json poly_to_json(const std::vector<Rational>& p) {
    Json out = Json::array();
    for (const auto& c : p) out.push_back(rational_str(c));
    return out;
}

} // namespace

Json certificate_to_json(const NormalizeResult& r) {
    Json j;
    Json map;
    map["num"] = poly_to_json(r.h.num);
    map["den"] = poly_to_json(r.h.den);
    j["map"] = std::move(map);
    Json images = Json::array();
    for (const auto& [input, image] : r.certificate.images)
        images.push_back({ext_to_json(input), ext_to_json(image)});
    j["images"] = std::move(images);
    Json own = Json::array();
    for (const auto& v : r.certificate.own_critical_values) own.push_back(ext_to_json(v));
    j["own_critical_values"] = std::move(own);
    Json padding = Json::array();
    for (const auto& [src, dst] : r.certificate.padding)
        padding.push_back({ext_to_json(src), ext_to_json(dst)});
    j["padding"] = std::move(padding);
    j["steps"] = r.certificate.steps;
    return j;
}

} // namespace km
