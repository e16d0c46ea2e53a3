#ifndef KM_WORDS_HPP
#define KM_WORDS_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "km/perm.hpp"

namespace km {

/// Extended triangle group signature (l0, l1, linf). Entries are positive
/// integers; 0 encodes infinity, matching the file format.
struct TriangleSignature {
    static constexpr int infinity = 0;

    int l0 = infinity;
    int l1 = infinity;
    int linf = infinity;

    friend bool operator==(const TriangleSignature&, const TriangleSignature&) = default;
};

/// Entry valid when infinite or >= 1.
void check_signature_entries(const TriangleSignature& sig);

/// Does an element of this order satisfy the relation for the given entry?
/// Infinite entries impose no constraint; finite entries require divisibility.
bool entry_allows_order(int entry, long long order);

std::string signature_string(const TriangleSignature& sig); // "(2,3,inf)"

enum class BuiltinSignature { modular_star, level2_star };

/// MODULAR_STAR -> (2,3,inf); LEVEL2_STAR -> (inf,inf,inf).
TriangleSignature builtin_signature(BuiltinSignature which);
/// MAP(m,n) -> (2,m,n); the edge-order slot is fixed to 2.
TriangleSignature map_signature(int m, int n);

enum class Letter : unsigned char { r0 = 0, r1 = 1, rinf = 2 };

/// Word over the three reflection generators. Text form is a string over
/// {a,b,c} for (r0,r1,rinf); the empty string is the identity.
struct GroupWord {
    std::vector<Letter> letters;

    static GroupWord parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

/// Cancel adjacent equal letters repeatedly. For signature (inf,inf,inf) this
/// is the free-product normal form; for finite entries it is a sound partial
/// reduction.
GroupWord reduce_word(const GroupWord& w);

/// Evaluate in a concrete action (images of r0, r1, rinf). Letters apply left
/// to right: the first letter acts first, matching the right-coset reading.
Permutation evaluate_word(const GroupWord& w, const std::array<Permutation, 3>& action);

/// True iff each pairwise product's order divides the matching finite entry:
/// ord(r0 r1) | linf, ord(rinf r0) | l1, ord(r1 rinf) | l0.
bool check_signature(const std::array<Permutation, 3>& action, const TriangleSignature& sig);

/// Schreier transversal and generators for the stabilizer of a point.
struct SchreierData {
    int basepoint = 0;                          // 0-based
    std::vector<GroupWord> representatives;     // representatives[p] sends basepoint to p
    std::vector<GroupWord> stabilizer_generators;
};

/// Breadth-first Schreier tree for a transitive action; stabilizer generators
/// are the reduced Schreier generators with duplicates and empties removed.
SchreierData schreier_data(const std::array<Permutation, 3>& action, int basepoint);

} // namespace km

#endif
