#include "km/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "km/io.hpp"

namespace km {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json load(const std::string& path) {
    return parse_text(slurp(path));
}

BladeSystem load_blades(const std::string& path) {
    Json j = load(path);
    if (looks_like_dart(j)) return to_blades(dart_from_json(j));
    return blade_from_json(j);
}

TriangleSignature parse_signature_flag(const std::string& text) {
    std::array<int, 3> vals{};
    size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        size_t comma = k < 2 ? text.find(',', pos) : text.size();
        if (comma == std::string::npos) fail(errc::parse_error, "signature must be three comma-separated integers");
        std::string part = text.substr(pos, comma - pos);
        if (part == "inf") {
            vals[k] = TriangleSignature::infinity;
        } else {
            try {
                vals[k] = std::stoi(part);
            } catch (const std::exception&) {
                fail(errc::parse_error, "bad signature entry: " + part);
            }
            if (vals[k] < 0) fail(errc::parse_error, "signature entries are >= 0 (0 = infinity)");
        }
        pos = comma + 1;
    }
    return TriangleSignature{vals[0], vals[1], vals[2]};
}

struct SurfaceKey {
    int euler, boundary, gc;
    bool orientable;
    bool operator<(const SurfaceKey& o) const {
        return std::tie(euler, orientable, boundary, gc) <
               std::tie(o.euler, o.orientable, o.boundary, o.gc);
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"maps and hypermaps on compact Klein surfaces"};
    app.require_subcommand(1);

    std::string path, format = "json", to, values, g2, g3, signature = "0,0,0";
    int basepoint = 1, max_n = 10, cap = 10, threads = 0;
    bool mirror = false, count_only = false, summary = false;
    bool want_orientable = false, want_nonorientable = false;
    int boundary_exact = -1, boundary_min = -1, boundary_max = -1;
    int genus_filter = -1;
    int euler_filter = 0;

    auto* c_validate = app.add_subcommand("validate", "check a map or dart file");
    c_validate->add_option("file", path)->required();

    auto* c_inv = app.add_subcommand("invariants", "surface type, passport and map type");
    c_inv->add_option("file", path)->required();
    c_inv->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* c_double = app.add_subcommand("double", "complex double and deck involution");
    c_double->add_option("file", path)->required();

    auto* c_boundary = app.add_subcommand("boundary", "boundary components from fixed blades");
    c_boundary->add_option("file", path)->required();

    auto* c_convert = app.add_subcommand("convert", "convert between darts, blades and dot");
    c_convert->add_option("file", path)->required();
    c_convert->add_option("--to", to)->required()->check(CLI::IsMember({"darts", "blades", "dot"}));
    c_convert->add_flag("--mirror", mirror, "use the opposite orientation class");

    auto* c_census = app.add_subcommand("census", "enumerate blade systems up to isomorphism");
    c_census->add_option("--max-n", max_n, "largest blade count");
    c_census->add_option("--signature", signature, "l0,l1,linf with 0 = infinity");
    c_census->add_option("--cap", cap, "guard cap for max-n (default 10)");
    c_census->add_option("--threads", threads, "worker threads (default: KLEINMAPS_THREADS or cores)");
    c_census->add_flag("--count", count_only, "print only the class count");
    c_census->add_flag("--summary", summary, "print counts by surface type");
    c_census->add_flag("--orientable", want_orientable);
    c_census->add_flag("--non-orientable", want_nonorientable);
    auto* opt_b = c_census->add_option("--boundary", boundary_exact, "exact boundary count");
    auto* opt_bmin = c_census->add_option("--boundary-min", boundary_min);
    auto* opt_bmax = c_census->add_option("--boundary-max", boundary_max);
    opt_b->excludes(opt_bmin)->excludes(opt_bmax);
    auto* opt_g = c_census->add_option("--genus", genus_filter, "genus or crosscap count");
    auto* opt_e = c_census->add_option("--euler", euler_filter, "Euler characteristic");

    auto* c_schreier = app.add_subcommand("schreier", "coset representatives and stabilizer words");
    c_schreier->add_option("file", path)->required();
    c_schreier->add_option("--basepoint", basepoint, "1-based blade (default 1)");

    auto* c_norm = app.add_subcommand("normalize", "move critical values into {0,1,inf}");
    c_norm->add_option("--values", values, "comma-separated, e.g. i,-i,inf")->required();

    auto* c_jinv = app.add_subcommand("jinv", "j-invariant of y^2 = 4x^3 - g2 x - g3");
    c_jinv->add_option("--g2", g2)->required();
    c_jinv->add_option("--g3", g3)->required();

    std::vector<const char*> argv;
    argv.push_back("kleinmaps");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_validate) {
            Json j = load(path);
            Json result;
            if (looks_like_dart(j)) {
                DartMap d = dart_from_json(j);
                result["kind"] = "darts";
                result["n"] = d.n;
            } else {
                BladeSystem b = blade_from_json(j);
                result["kind"] = "blades";
                result["n"] = b.n;
                result["signature"] = {b.signature.l0, b.signature.l1, b.signature.linf};
            }
            result["valid"] = true;
            out << result.dump() << "\n";
        } else if (*c_inv) {
            BladeSystem b = load_blades(path);
            SurfaceType s = classify(b);
            if (format == "table") {
                auto [m, n] = map_type(b);
                out << "euler " << s.euler << "\norientable " << (s.orientable ? "yes" : "no")
                    << "\nboundary " << s.boundary << "\n"
                    << (s.orientable ? "genus " : "crosscaps ") << s.genus_or_crosscaps
                    << "\nsurface " << surface_name(s) << "\nmap type (" << m << "," << n << ")\n";
            } else {
                Json j = surface_to_json(s);
                j["passport"] = passport_to_json(passport(b));
                auto [m, n] = map_type(b);
                j["map_type"] = {m, n};
                out << j.dump() << "\n";
            }
        } else if (*c_double) {
            BladeSystem b = load_blades(path);
            out << double_to_json(complex_double(b)).dump() << "\n";
        } else if (*c_boundary) {
            BladeSystem b = load_blades(path);
            out << boundary_to_json(boundary(b)).dump() << "\n";
        } else if (*c_convert) {
            Json j = load(path);
            if (to == "darts") {
                BladeSystem b =
                    looks_like_dart(j) ? to_blades(dart_from_json(j)) : blade_from_json(j);
                out << dart_to_json(orient(b, mirror).map).dump() << "\n";
            } else if (to == "blades") {
                BladeSystem b =
                    looks_like_dart(j) ? to_blades(dart_from_json(j)) : blade_from_json(j);
                out << blade_to_json(b).dump() << "\n";
            } else {
                BladeSystem b =
                    looks_like_dart(j) ? to_blades(dart_from_json(j)) : blade_from_json(j);
                out << blade_dot(b);
            }
        } else if (*c_census) {
            CensusQuery q;
            q.max_blades = max_n;
            q.signature = parse_signature_flag(signature);
            q.cap = cap;
            q.threads = threads;
            if (want_orientable && want_nonorientable)
                fail(errc::invalid_parameter, "--orientable conflicts with --non-orientable");
            if (want_orientable) q.filters.orientable = true;
            if (want_nonorientable) q.filters.orientable = false;
            if (*opt_b) q.filters.boundary = {boundary_exact, boundary_exact};
            if (boundary_min >= 0 || boundary_max >= 0) {
                int lo = boundary_min >= 0 ? boundary_min : 0;
                int hi = boundary_max >= 0 ? boundary_max : std::numeric_limits<int>::max();
                q.filters.boundary = {lo, hi};
            }
            if (*opt_g) q.filters.genus_or_crosscaps = genus_filter;
            if (*opt_e) q.filters.euler = euler_filter;
            if (count_only) {
                out << census_count(q) << "\n";
            } else if (summary) {
                std::map<SurfaceKey, long long> counts;
                census_enumerate(q, [&](const CensusRecord& r) {
                    counts[SurfaceKey{r.surface.euler, r.surface.boundary,
                                      r.surface.genus_or_crosscaps, r.surface.orientable}]++;
                    return true;
                });
                out << "euler orientable boundary genus/crosscaps count surface\n";
                for (const auto& [key, cnt] : counts) {
                    SurfaceType s{key.euler, key.orientable, key.boundary, key.gc};
                    out << key.euler << " " << (key.orientable ? "yes" : "no") << " " << key.boundary
                        << " " << key.gc << " " << cnt << " " << surface_name(s) << "\n";
                }
            } else {
                census_enumerate(q, [&](const CensusRecord& r) {
                    out << census_record_to_json(r).dump() << "\n";
                    return true;
                });
            }
        } else if (*c_schreier) {
            BladeSystem b = load_blades(path);
            if (basepoint < 1 || basepoint > b.n)
                fail(errc::invalid_parameter, "basepoint out of range");
            const std::array<Permutation, 3> action{b.tau, b.lambda, b.rho};
            out << schreier_to_json(schreier_data(action, basepoint - 1)).dump() << "\n";
        } else if (*c_norm) {
            std::vector<ExtValue> vals;
            std::stringstream ss(values);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) vals.push_back(ext_parse(item));
            NormalizeResult r = normalize(CriticalSet::of(std::move(vals)));
            out << certificate_to_json(r).dump() << "\n";
        } else if (*c_jinv) {
            out << rational_str(j_invariant(rational_parse(g2), rational_parse(g3))) << "\n";
        }
    } catch (const error& e) {
        Json j;
        j["error"] = e.name();
        j["message"] = e.what();
        err << j.dump() << "\n";
        return 1;
    }
    return 0;
}

} // namespace km
