#ifndef KM_DARTS_HPP
#define KM_DARTS_HPP

#include <vector>

#include "km/blades.hpp"
#include "km/perm.hpp"

namespace km {

/// Oriented boundary-free map (G, Omega, x, y): x an involution whose fixed
/// points are free edges, <x, y> transitive on the darts.
struct DartMap {
    int n = 0;
    Permutation x, y;

    friend bool operator==(const DartMap&, const DartMap&) = default;
};

DartMap validate_dart(int n, Permutation x, Permutation y);

struct DartCells {
    OrbitPartition vertices;     // orbits of <y>
    OrbitPartition edges;        // orbits of <x>
    OrbitPartition faces;        // orbits of <y^-1 x>
    std::vector<int> free_edges; // fixed points of x, 0-based
};
DartCells dart_cells(const DartMap& d);

/// chi = c(x) + c(y) + c(y^-1 x) - N with fixed points counted; always even.
/// Free ends are counted correctly, which plain V - E + F is not.
int dart_euler(const DartMap& d);
int dart_genus(const DartMap& d); // (2 - chi) / 2

/// Blade set Omega x {+,-} with (w,+) = w and (w,-) = w+N:
///   tau(w,e) = (w,-e); lambda(w,e) = (x(w),-e);
///   rho(w,+) = (y^-1(w),-), rho(w,-) = (y(w),+).
/// The result is a valid orientable boundary-free map blade system with
/// signature (2, m, n) and the same Euler characteristic.
BladeSystem to_blades(const DartMap& d);

struct OrientResult {
    DartMap map;
    std::vector<int> dart_blades; // blade (0-based) carried by each dart
    bool mirror = false;          // built from the color class opposite blade 1
};

/// Inverse correspondence for orientable blade systems without boundary:
/// darts = the 2-coloring class containing blade 1 (or the other class when
/// mirror is set; the two choices give mirror maps), x = tau*lambda and
/// y = (tau*rho)^-1 restricted to that class.
OrientResult orient(const BladeSystem& b, bool mirror = false);

bool dart_isomorphic(const DartMap& d1, const DartMap& d2);

DartMap conjugate(const DartMap& d, const Permutation& by);

} // namespace km

#endif
