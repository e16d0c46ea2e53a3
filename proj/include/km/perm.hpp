#ifndef KM_PERM_HPP
#define KM_PERM_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "km/errors.hpp"

namespace km {

/// Bijection of {0..n-1}. Points are 0-based internally; cycle text and file
/// formats use 1-based points, converted only at the I/O boundary.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);
    /// 0-based image table; validated as a bijection.
    static Permutation from_images(std::vector<int> images);
    /// Cycles of 1-based points, fixed points omitted.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    /// Text form "(1 2)(3 4 5)"; empty string is the identity.
    static Permutation parse_cycles(int n, std::string_view text);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    bool is_involution() const; // p*p == id, fixed points allowed

    Permutation inverse() const;
    Permutation power(long long k) const;

    /// Cycles as 0-based point lists, each starting at its minimum, sorted by
    /// that minimum. Fixed points included only when include_fixed is set.
    std::vector<std::vector<int>> cycles(bool include_fixed = false) const;
    /// 1-based cycle text, fixed points omitted; "" for the identity.
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_;
};

/// compose(p, q) applies q first: result(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Number of cycles, counting fixed points as 1-cycles.
int cycle_count(const Permutation& p);

/// Cycle lengths including fixed points, sorted descending.
std::vector<int> cycle_lengths(const Permutation& p);

/// Least k >= 1 with p^k = id; the lcm of the cycle lengths.
long long element_order(const Permutation& p);

/// Disjoint nonempty blocks covering {0..n-1}.
struct OrbitPartition {
    int degree = 0;
    std::vector<std::vector<int>> blocks; // each sorted, ordered by min element

    int count() const { return static_cast<int>(blocks.size()); }
};

OrbitPartition orbits(std::span<const Permutation> gens, int n);
bool is_transitive(std::span<const Permutation> gens, int n);

/// Breadth-first relabeling of a transitive tuple of generators, starting at
/// base: new labels in discovery order, generators applied in tuple order.
/// table[k][i] = new label of gens[k] applied to the point with new label i.
std::vector<std::vector<int>> bfs_table(std::span<const Permutation> gens, int base);

struct CanonicalTable {
    std::vector<std::vector<int>> table; // least bfs_table over all bases
    std::vector<int> relabel;            // old point -> new label
    int base = 0;                        // a base achieving the minimum
};

/// Lexicographically least BFS table over all base points, comparing the
/// per-generator image tables in generator order. Two generator tuples are
/// simultaneously conjugate iff their canonical tables are equal.
CanonicalTable canonical_table(std::span<const Permutation> gens, int n);

} // namespace km

#endif
