#include "km/darts.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace km {

DartMap validate_dart(int n, Permutation x, Permutation y) {
    if (n < 1) fail(errc::invalid_parameter, "dart count must be >= 1");
    if (x.degree() != n || y.degree() != n)
        fail(errc::degree_mismatch, "generator degree does not match dart count");
    if (!x.is_involution()) fail(errc::not_involution, "x is not an involution");
    const std::array<Permutation, 2> gens{x, y};
    if (!is_transitive(gens, n)) fail(errc::not_transitive, "dart action is not transitive");
    return DartMap{n, std::move(x), std::move(y)};
}

DartCells dart_cells(const DartMap& d) {
    DartCells out;
    const std::array<Permutation, 1> ys{d.y};
    const std::array<Permutation, 1> xs{d.x};
    const std::array<Permutation, 1> fs{compose(d.y.inverse(), d.x)};
    out.vertices = orbits(ys, d.n);
    out.edges = orbits(xs, d.n);
    out.faces = orbits(fs, d.n);
    for (int i = 0; i < d.n; ++i)
        if (d.x(i) == i) out.free_edges.push_back(i);
    return out;
}

int dart_euler(const DartMap& d) {
    int num = cycle_count(d.x) + cycle_count(d.y) + cycle_count(compose(d.y.inverse(), d.x)) - d.n;
    if (num % 2 != 0) fail(errc::internal_parity, "dart euler characteristic is odd");
    return num;
}

int dart_genus(const DartMap& d) {
    int chi = dart_euler(d);
    if (chi > 2 || (2 - chi) % 2 != 0)
        fail(errc::internal_classification, "dart map chi = " + std::to_string(chi));
    return (2 - chi) / 2;
}

BladeSystem to_blades(const DartMap& d) {
    const int n2 = 2 * d.n;
    const Permutation yinv = d.y.inverse();
    std::vector<int> t(n2), l(n2), r(n2);
    for (int w = 0; w < d.n; ++w) {
        t[w] = w + d.n;
        t[w + d.n] = w;
        l[w] = d.x(w) + d.n;
        l[w + d.n] = d.x(w);
        r[w] = yinv(w) + d.n;
        r[w + d.n] = d.y(w);
    }
    Permutation tau = Permutation::from_images(std::move(t));
    Permutation lambda = Permutation::from_images(std::move(l));
    Permutation rho = Permutation::from_images(std::move(r));
    auto entry = [](long long order) {
        return order <= std::numeric_limits<int>::max() ? static_cast<int>(order)
                                                        : TriangleSignature::infinity;
    };
    int m = entry(element_order(compose(tau, rho)));
    int fn = entry(element_order(compose(rho, lambda)));
    return validate(n2, std::move(tau), std::move(lambda), std::move(rho), map_signature(m, fn));
}

OrientResult orient(const BladeSystem& b, bool mirror) {
    if (!orientable(b)) fail(errc::not_orientable_closed, "blade system is not orientable");
    if (boundary(b).count() != 0)
        fail(errc::not_orientable_closed, "blade system has boundary components");

    // 2-color the blade graph; all generators are fixed-point-free here, so
    // two-generator products preserve the classes.
    std::vector<int> color(b.n, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (Gen g : {Gen::tau, Gen::lambda, Gen::rho}) {
            int v = generator(b, g)(u);
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                stack.push_back(v);
            }
        }
    }

    const int want = mirror ? 1 : 0;
    std::vector<int> darts;
    std::vector<int> pos(b.n, -1);
    for (int i = 0; i < b.n; ++i)
        if (color[i] == want) {
            pos[i] = static_cast<int>(darts.size());
            darts.push_back(i);
        }

    const Permutation tl = compose(b.tau, b.lambda);
    const Permutation tr = compose(b.tau, b.rho);
    const int nd = static_cast<int>(darts.size());
    std::vector<int> ximg(nd), yinv_img(nd);
    for (int i = 0; i < nd; ++i) {
        int xi = tl(darts[i]), yi = tr(darts[i]);
        if (pos[xi] < 0 || pos[yi] < 0)
            fail(errc::internal_check, "orientation classes are not preserved");
        ximg[i] = pos[xi];
        yinv_img[i] = pos[yi];
    }

    OrientResult result;
    result.map = validate_dart(nd, Permutation::from_images(std::move(ximg)),
                               Permutation::from_images(std::move(yinv_img)).inverse());
    result.dart_blades = std::move(darts);
    result.mirror = mirror;
    return result;
}

bool dart_isomorphic(const DartMap& d1, const DartMap& d2) {
    if (d1.n != d2.n) return false;
    const std::array<Permutation, 2> g1{d1.x, d1.y};
    const std::array<Permutation, 2> g2{d2.x, d2.y};
    return canonical_table(g1, d1.n).table == canonical_table(g2, d2.n).table;
}

DartMap conjugate(const DartMap& d, const Permutation& by) {
    if (by.degree() != d.n) fail(errc::degree_mismatch, "conjugate: degree mismatch");
    const Permutation inv = by.inverse();
    return validate_dart(d.n, compose(by, compose(d.x, inv)), compose(by, compose(d.y, inv)));
}

} // namespace km
