#include "km/blades.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace km {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::tau: return "tau";
        case Gen::lambda: return "lambda";
        case Gen::rho: return "rho";
    }
    return "?";
}

const Permutation& generator(const BladeSystem& b, Gen g) {
    switch (g) {
        case Gen::tau: return b.tau;
        case Gen::lambda: return b.lambda;
        case Gen::rho: return b.rho;
    }
    return b.tau;
}

BladeSystem validate(int n, Permutation tau, Permutation lambda, Permutation rho,
                     TriangleSignature signature) {
    if (n < 1) fail(errc::invalid_parameter, "blade count must be >= 1");
    check_signature_entries(signature);
    if (tau.degree() != n || lambda.degree() != n || rho.degree() != n)
        fail(errc::degree_mismatch, "generator degree does not match blade count");

    BladeSystem b{n, std::move(tau), std::move(lambda), std::move(rho), signature};
    for (Gen g : {Gen::tau, Gen::lambda, Gen::rho})
        if (!generator(b, g).is_involution())
            fail(errc::not_involution, std::string(gen_name(g)) + " is not an involution");

    const std::array<Permutation, 3> gens{b.tau, b.lambda, b.rho};
    if (!is_transitive(gens, n))
        fail(errc::not_transitive, "blade action is not transitive");

    struct Slot {
        const char* name;
        long long order;
        int entry;
        const char* entry_name;
    };
    const Slot slots[] = {
        {"tau*lambda", element_order(compose(b.tau, b.lambda)), signature.l0, "l0"},
        {"tau*rho", element_order(compose(b.tau, b.rho)), signature.l1, "l1"},
        {"rho*lambda", element_order(compose(b.rho, b.lambda)), signature.linf, "linf"},
    };
    for (const auto& s : slots)
        if (!entry_allows_order(s.entry, s.order))
            fail(errc::signature_violation,
                 std::string(s.name) + " has order " + std::to_string(s.order) + ", not a divisor of " +
                     s.entry_name + "=" + std::to_string(s.entry));
    return b;
}

std::pair<long long, long long> map_type(const BladeSystem& b) {
    return {element_order(compose(b.tau, b.rho)), element_order(compose(b.rho, b.lambda))};
}

Cells cells(const BladeSystem& b) {
    const std::array<Permutation, 2> vr{b.tau, b.rho};
    const std::array<Permutation, 2> ed{b.tau, b.lambda};
    const std::array<Permutation, 2> fc{b.rho, b.lambda};
    return Cells{orbits(vr, b.n), orbits(ed, b.n), orbits(fc, b.n)};
}

int euler_characteristic(const BladeSystem& b) {
    int num = cycle_count(compose(b.tau, b.lambda)) + cycle_count(compose(b.lambda, b.rho)) +
              cycle_count(compose(b.rho, b.tau)) - b.n;
    if (num % 2 != 0)
        fail(errc::internal_parity, "euler numerator is odd; blade system corrupted");
    return num / 2;
}

bool orientable(const BladeSystem& b) {
    std::vector<int> color(b.n, -1);
    std::queue<int> queue;
    for (int start = 0; start < b.n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (Gen g : {Gen::tau, Gen::lambda, Gen::rho}) {
                int v = generator(b, g)(u);
                if (v == u) continue;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Walk the <g,h>-orbit chain from a g-fixed blade, applying h, g, h, ...,
// stopping at the first blade fixed by the permutation due next.
FixedPair boundary_walk(const BladeSystem& b, int blade, Gen g, Gen h) {
    int cur = blade;
    Gen due = h, other = g;
    for (int steps = 0; steps <= 2 * b.n + 2; ++steps) {
        const Permutation& p = generator(b, due);
        if (p(cur) == cur) return {cur, due};
        cur = p(cur);
        std::swap(due, other);
    }
    fail(errc::internal_check, "boundary walk did not terminate");
}

} // namespace

BoundaryReport boundary(const BladeSystem& b) {
    BoundaryReport report;
    for (int i = 0; i < b.n; ++i)
        for (Gen g : {Gen::tau, Gen::lambda, Gen::rho})
            if (generator(b, g)(i) == i) report.fixed_pairs.push_back({i, g});
    std::sort(report.fixed_pairs.begin(), report.fixed_pairs.end());

    auto index_of = [&](const FixedPair& fp) {
        auto it = std::lower_bound(report.fixed_pairs.begin(), report.fixed_pairs.end(), fp);
        if (it == report.fixed_pairs.end() || !(*it == fp))
            fail(errc::internal_check, "boundary walk reached a non-fixed pair");
        return static_cast<int>(it - report.fixed_pairs.begin());
    };

    // Two neighbor links per fixed pair, one through each other generator.
    const int m = static_cast<int>(report.fixed_pairs.size());
    std::vector<std::array<int, 2>> link(m);   // neighbor node per slot
    std::vector<std::array<Gen, 2>> via(m);    // first-step generator per slot
    for (int i = 0; i < m; ++i) {
        const auto [blade, g] = report.fixed_pairs[i];
        int slot = 0;
        for (Gen h : {Gen::tau, Gen::lambda, Gen::rho}) {
            if (h == g) continue;
            link[i][slot] = index_of(boundary_walk(b, blade, g, h));
            via[i][slot] = h;
            ++slot;
        }
    }

    // Reciprocal slot at the far end: the walk stays inside the pair {g,h},
    // so the far node continues through the other member of that pair.
    auto far_slot = [&](int from, int slot, int to) {
        Gen g = report.fixed_pairs[from].gen;
        Gen h = via[from][slot];
        Gen tg = report.fixed_pairs[to].gen;
        Gen th = (tg == g) ? h : g;
        for (int s = 0; s < 2; ++s)
            if (via[to][s] == th) return s;
        fail(errc::internal_check, "boundary multigraph is not 2-regular");
    };

    std::vector<std::array<char, 2>> used(m, {0, 0});
    for (int start = 0; start < m; ++start) {
        if (used[start][0]) continue;
        std::vector<int> component;
        int node = start, slot = 0;
        do {
            component.push_back(node);
            used[node][slot] = 1;
            int next = link[node][slot];
            int back = far_slot(node, slot, next);
            if (used[next][back])
                fail(errc::internal_check, "boundary multigraph is not 2-regular");
            used[next][back] = 1;
            node = next;
            slot = 1 - back;
        } while (node != start || slot != 0);
        report.components.push_back(std::move(component));
    }
    return report;
}

SurfaceType classify(const BladeSystem& b) {
    SurfaceType s;
    s.euler = euler_characteristic(b);
    s.orientable = orientable(b);
    s.boundary = boundary(b).count();
    int rest = 2 - s.euler - s.boundary;
    if (s.orientable) {
        if (rest < 0 || rest % 2 != 0)
            fail(errc::internal_classification, "orientable surface with 2-chi-b = " + std::to_string(rest));
        s.genus_or_crosscaps = rest / 2;
    } else {
        if (rest < 1)
            fail(errc::internal_classification, "non-orientable surface with 2-chi-b = " + std::to_string(rest));
        s.genus_or_crosscaps = rest;
    }
    return s;
}

std::string surface_name(const SurfaceType& s) {
    if (s.orientable) {
        if (s.boundary == 0 && s.genus_or_crosscaps == 0) return "sphere";
        if (s.boundary == 0 && s.genus_or_crosscaps == 1) return "torus";
        if (s.boundary == 1 && s.genus_or_crosscaps == 0) return "disc";
        if (s.boundary == 2 && s.genus_or_crosscaps == 0) return "annulus";
        return "orientable, genus " + std::to_string(s.genus_or_crosscaps) + ", " +
               std::to_string(s.boundary) + " boundary";
    }
    if (s.boundary == 0 && s.genus_or_crosscaps == 1) return "projective plane";
    if (s.boundary == 0 && s.genus_or_crosscaps == 2) return "Klein bottle";
    if (s.boundary == 1 && s.genus_or_crosscaps == 1) return "Moebius band";
    return "non-orientable, " + std::to_string(s.genus_or_crosscaps) + " crosscaps, " +
           std::to_string(s.boundary) + " boundary";
}

ComplexDouble complex_double(const BladeSystem& b) {
    const int n2 = 2 * b.n;
    auto lift = [&](const Permutation& g) {
        std::vector<int> img(n2);
        for (int i = 0; i < b.n; ++i) {
            img[i] = g(i) + b.n;
            img[i + b.n] = g(i);
        }
        return Permutation::from_images(std::move(img));
    };
    const std::array<Permutation, 3> lifted{lift(b.tau), lift(b.lambda), lift(b.rho)};

    std::vector<int> deck_img(n2);
    for (int i = 0; i < b.n; ++i) {
        deck_img[i] = i + b.n;
        deck_img[i + b.n] = i;
    }

    ComplexDouble result;
    result.deck = Permutation::from_images(std::move(deck_img));
    for (auto& block : orbits(lifted, n2).blocks) {
        const int size = static_cast<int>(block.size());
        std::vector<int> pos(n2, -1);
        for (int i = 0; i < size; ++i) pos[block[i]] = i;
        std::array<std::vector<int>, 3> img;
        for (int k = 0; k < 3; ++k) {
            img[k].resize(size);
            for (int i = 0; i < size; ++i) img[k][i] = pos[lifted[k](block[i])];
        }
        result.components.push_back(validate(size, Permutation::from_images(std::move(img[0])),
                                             Permutation::from_images(std::move(img[1])),
                                             Permutation::from_images(std::move(img[2])),
                                             b.signature));
        result.labels.push_back(std::move(block));
    }
    return result;
}

Passport passport(const BladeSystem& b) {
    return Passport{cycle_lengths(compose(b.tau, b.rho)), cycle_lengths(compose(b.tau, b.lambda)),
                    cycle_lengths(compose(b.rho, b.lambda))};
}

CanonicalForm canonical_form(const BladeSystem& b) {
    const std::array<Permutation, 3> gens{b.tau, b.lambda, b.rho};
    CanonicalTable ct = canonical_table(gens, b.n);
    CanonicalForm cf;
    cf.system = BladeSystem{b.n, Permutation::from_images(ct.table[0]),
                            Permutation::from_images(ct.table[1]),
                            Permutation::from_images(ct.table[2]), b.signature};
    cf.relabel = Permutation::from_images(ct.relabel);
    return cf;
}

bool is_isomorphic(const BladeSystem& b1, const BladeSystem& b2) {
    if (b1.n != b2.n) return false;
    const std::array<Permutation, 3> g1{b1.tau, b1.lambda, b1.rho};
    const std::array<Permutation, 3> g2{b2.tau, b2.lambda, b2.rho};
    return canonical_table(g1, b1.n).table == canonical_table(g2, b2.n).table;
}

BladeSystem conjugate(const BladeSystem& b, const Permutation& by) {
    if (by.degree() != b.n) fail(errc::degree_mismatch, "conjugate: degree mismatch");
    const Permutation inv = by.inverse();
    auto conj = [&](const Permutation& g) { return compose(by, compose(g, inv)); };
    return validate(b.n, conj(b.tau), conj(b.lambda), conj(b.rho), b.signature);
}

} // namespace km
