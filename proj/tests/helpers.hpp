#ifndef KM_TESTS_HELPERS_HPP
#define KM_TESTS_HELPERS_HPP

#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "km/blades.hpp"
#include "km/darts.hpp"
#include "km/perm.hpp"

namespace kmtest {

inline km::Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return km::Permutation::from_images(std::move(img));
}

/// Random involution: shuffle the points, then pair them up greedily, leaving
/// each point fixed with the given probability.
inline km::Permutation random_involution(std::mt19937& rng, int n, double fix_prob = 0.2) {
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::bernoulli_distribution fix(fix_prob);
    size_t i = 0;
    while (i + 1 < pts.size()) {
        if (fix(rng)) {
            ++i;
            continue;
        }
        img[pts[i]] = pts[i + 1];
        img[pts[i + 1]] = pts[i];
        i += 2;
    }
    return km::Permutation::from_images(std::move(img));
}

inline std::array<km::Permutation, 3> random_involution_triple(std::mt19937& rng, int n,
                                                               double fix_prob = 0.2) {
    return {random_involution(rng, n, fix_prob), random_involution(rng, n, fix_prob),
            random_involution(rng, n, fix_prob)};
}

inline km::BladeSystem random_blade_system(std::mt19937& rng, int n, double fix_prob = 0.2) {
    for (;;) {
        auto gens = random_involution_triple(rng, n, fix_prob);
        if (!km::is_transitive(gens, n)) continue;
        return km::validate(n, gens[0], gens[1], gens[2], km::TriangleSignature{});
    }
}

inline km::DartMap random_dart_map(std::mt19937& rng, int n, double fix_prob = 0.2) {
    for (;;) {
        km::Permutation x = random_involution(rng, n, fix_prob);
        km::Permutation y = random_permutation(rng, n);
        const std::array<km::Permutation, 2> gens{x, y};
        if (!km::is_transitive(gens, n)) continue;
        return km::validate_dart(n, x, y);
    }
}

} // namespace kmtest

#endif
