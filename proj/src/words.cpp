#include "km/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace km {

void check_signature_entries(const TriangleSignature& sig) {
    for (int v : {sig.l0, sig.l1, sig.linf})
        if (v < 0)
            fail(errc::invalid_parameter, "signature entry must be >= 1 or 0 (= infinity)");
}

bool entry_allows_order(int entry, long long order) {
    if (entry == TriangleSignature::infinity) return true;
    return entry % order == 0;
}

std::string signature_string(const TriangleSignature& sig) {
    auto one = [](int v) { return v == TriangleSignature::infinity ? std::string("inf") : std::to_string(v); };
    return "(" + one(sig.l0) + "," + one(sig.l1) + "," + one(sig.linf) + ")";
}

TriangleSignature builtin_signature(BuiltinSignature which) {
    switch (which) {
        case BuiltinSignature::modular_star: return {2, 3, TriangleSignature::infinity};
        case BuiltinSignature::level2_star:
            return {TriangleSignature::infinity, TriangleSignature::infinity, TriangleSignature::infinity};
    }
    fail(errc::invalid_parameter, "unknown builtin signature");
}

TriangleSignature map_signature(int m, int n) {
    if (m < 0 || n < 0)
        fail(errc::invalid_parameter, "map signature parameters must be >= 1 or 0 (= infinity)");
    return {2, m, n};
}

GroupWord GroupWord::parse(std::string_view text) {
    GroupWord w;
    w.letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'a': w.letters.push_back(Letter::r0); break;
            case 'b': w.letters.push_back(Letter::r1); break;
            case 'c': w.letters.push_back(Letter::rinf); break;
            default:
                if (!std::isspace(static_cast<unsigned char>(c)))
                    fail(errc::parse_error, std::string("word letter must be a, b or c: '") + c + "'");
        }
    }
    return w;
}

std::string GroupWord::str() const {
    static const char names[] = {'a', 'b', 'c'};
    std::string s;
    s.reserve(letters.size());
    for (Letter l : letters) s.push_back(names[static_cast<int>(l)]);
    return s;
}

GroupWord reduce_word(const GroupWord& w) {
    GroupWord out;
    for (Letter l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == l)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

Permutation evaluate_word(const GroupWord& w, const std::array<Permutation, 3>& action) {
    const int n = action[0].degree();
    for (const auto& g : action)
        if (g.degree() != n) fail(errc::degree_mismatch, "evaluate_word: unequal degrees");
    Permutation acc = Permutation::identity(n);
    for (Letter l : w.letters) acc = compose(action[static_cast<int>(l)], acc);
    return acc;
}

bool check_signature(const std::array<Permutation, 3>& action, const TriangleSignature& sig) {
    check_signature_entries(sig);
    const int n = action[0].degree();
    for (const auto& g : action) {
        if (g.degree() != n) fail(errc::degree_mismatch, "check_signature: unequal degrees");
        if (!g.is_involution()) fail(errc::not_involution, "check_signature: generator is not an involution");
    }
    const auto& r0 = action[0];
    const auto& r1 = action[1];
    const auto& rinf = action[2];
    return entry_allows_order(sig.linf, element_order(compose(r0, r1))) &&
           entry_allows_order(sig.l1, element_order(compose(rinf, r0))) &&
           entry_allows_order(sig.l0, element_order(compose(r1, rinf)));
}

SchreierData schreier_data(const std::array<Permutation, 3>& action, int basepoint) {
    const int n = action[0].degree();
    for (const auto& g : action)
        if (g.degree() != n) fail(errc::degree_mismatch, "schreier_data: unequal degrees");
    if (basepoint < 0 || basepoint >= n)
        fail(errc::invalid_parameter, "schreier_data: basepoint out of range");

    std::vector<GroupWord> reps(n);
    std::vector<char> known(n, 0);
    std::vector<int> order;
    known[basepoint] = 1;
    order.push_back(basepoint);
    for (size_t q = 0; q < order.size(); ++q) {
        int u = order[q];
        for (int k = 0; k < 3; ++k) {
            int v = action[k](u);
            if (!known[v]) {
                known[v] = 1;
                reps[v] = reps[u];
                reps[v].letters.push_back(static_cast<Letter>(k));
                order.push_back(v);
            }
        }
    }
    if (static_cast<int>(order.size()) != n)
        fail(errc::not_transitive, "schreier_data: action is not transitive");

    SchreierData data;
    data.basepoint = basepoint;
    data.representatives = reps;

    // Schreier generators rep(u) s rep(u.s)^-1; generators are involutions,
    // so the inverse of a representative is its reversal.
    std::set<GroupWord> seen;
    for (int u : order) {
        for (int k = 0; k < 3; ++k) {
            int v = action[k](u);
            GroupWord word = reps[u];
            word.letters.push_back(static_cast<Letter>(k));
            word.letters.insert(word.letters.end(), reps[v].letters.rbegin(), reps[v].letters.rend());
            word = reduce_word(word);
            if (word.letters.empty()) continue;
            if (seen.insert(word).second) data.stabilizer_generators.push_back(word);
        }
    }
    return data;
}

} // namespace km
