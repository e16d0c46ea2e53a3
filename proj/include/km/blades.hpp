#ifndef KM_BLADES_HPP
#define KM_BLADES_HPP

#include <string>
#include <utility>
#include <vector>

#include "km/perm.hpp"
#include "km/words.hpp"

namespace km {

/// Three involutions acting transitively on N blades, together with the
/// extended triangle group signature they satisfy. Product orders are checked
/// slotwise: ord(tau*lambda) | l0, ord(tau*rho) | l1, ord(rho*lambda) | linf.
/// Construct through validate(); values are immutable afterwards.
struct BladeSystem {
    int n = 0;
    Permutation tau, lambda, rho;
    TriangleSignature signature;

    friend bool operator==(const BladeSystem&, const BladeSystem&) = default;
};

BladeSystem validate(int n, Permutation tau, Permutation lambda, Permutation rho,
                     TriangleSignature signature);

enum class Gen : unsigned char { tau = 0, lambda = 1, rho = 2 };
const char* gen_name(Gen g);
const Permutation& generator(const BladeSystem& b, Gen g);

/// (m, n) = (ord(tau*rho), ord(rho*lambda)): lcm of vertex valencies and of
/// face sizes.
std::pair<long long, long long> map_type(const BladeSystem& b);

struct Cells {
    OrbitPartition vertices; // orbits of <tau, rho>
    OrbitPartition edges;    // orbits of <tau, lambda>
    OrbitPartition faces;    // orbits of <rho, lambda>
};
Cells cells(const BladeSystem& b);

/// chi = (c(tau*lambda) + c(lambda*rho) + c(rho*tau) - N) / 2 with fixed
/// points counted as cycles. The numerator is always even for valid systems.
int euler_characteristic(const BladeSystem& b);

/// True iff the blade graph (an edge {b, g(b)} per generator g with
/// g(b) != b) is bipartite.
bool orientable(const BladeSystem& b);

struct FixedPair {
    int blade = 0; // 0-based
    Gen gen = Gen::tau;

    friend bool operator==(const FixedPair&, const FixedPair&) = default;
    friend auto operator<=>(const FixedPair&, const FixedPair&) = default;
};

/// Fixed blades organized into boundary components. Each fixed pair has
/// exactly two neighbor links; components are the cycles of the resulting
/// 2-regular multigraph.
struct BoundaryReport {
    std::vector<FixedPair> fixed_pairs;       // sorted
    std::vector<std::vector<int>> components; // cyclic index sequences into fixed_pairs

    int count() const { return static_cast<int>(components.size()); }
};
BoundaryReport boundary(const BladeSystem& b);

/// Homeomorphism type of the quotient Klein surface.
struct SurfaceType {
    int euler = 0;
    bool orientable = false;
    int boundary = 0;
    int genus_or_crosscaps = 0; // genus if orientable, crosscap count otherwise

    friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};
SurfaceType classify(const BladeSystem& b);
std::string surface_name(const SurfaceType& s); // "sphere", "disc", "Klein bottle", ...

/// Orientable boundary-free double cover. Doubled blades are (b,+) = b and
/// (b,-) = b+N (0-based); every generator lifts with a sign flip, and the
/// deck involution swaps the two sheets.
struct ComplexDouble {
    std::vector<BladeSystem> components;    // relabeled, each valid
    std::vector<std::vector<int>> labels;   // labels[c][i] = doubled blade of component blade i
    Permutation deck;                       // on the 2N doubled blades
};
ComplexDouble complex_double(const BladeSystem& b);

/// Cycle-type multisets of tau*rho, tau*lambda, rho*lambda: the ramification
/// of the Belyi projection over 0, 1, infinity.
struct Passport {
    std::vector<int> over0, over1, overinf; // each sorted descending, sums to N

    friend bool operator==(const Passport&, const Passport&) = default;
};
Passport passport(const BladeSystem& b);

/// Deterministic representative of the isomorphism class: breadth-first
/// relabeling from every base blade in generator order (tau, lambda, rho),
/// lexicographically least transition table wins.
struct CanonicalForm {
    BladeSystem system;
    Permutation relabel; // old blade -> new blade
};
CanonicalForm canonical_form(const BladeSystem& b);

/// Simultaneous conjugacy of the generator triples.
bool is_isomorphic(const BladeSystem& b1, const BladeSystem& b2);

/// Relabel by an arbitrary permutation (conjugation); mainly for tests and
/// ingestion.
BladeSystem conjugate(const BladeSystem& b, const Permutation& by);

} // namespace km

#endif
