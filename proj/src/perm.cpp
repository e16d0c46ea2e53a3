#include "km/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace km {

Permutation Permutation::identity(int n) {
    if (n < 0) fail(errc::invalid_parameter, "degree must be non-negative");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v])
            fail(errc::invalid_parameter, "image table is not a bijection");
        seen[v] = 1;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    if (n < 0) fail(errc::invalid_parameter, "degree must be non-negative");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(n, 0);
    for (const auto& cyc : cycles) {
        if (cyc.empty()) fail(errc::parse_error, "empty cycle");
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
            if (a < 1 || a > n) fail(errc::parse_error, "cycle point out of range: " + std::to_string(a));
            if (used[a - 1]) fail(errc::parse_error, "point repeated across cycles: " + std::to_string(a));
            used[a - 1] = 1;
            img[a - 1] = b - 1;
        }
    }
    return from_images(std::move(img));
}

Permutation Permutation::parse_cycles(int n, std::string_view text) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') fail(errc::parse_error, "expected '(' in cycle text");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                fail(errc::parse_error, "expected point number in cycle text");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            cyc.push_back(v);
            skip_ws();
        }
        if (i >= text.size()) fail(errc::parse_error, "unterminated cycle");
        ++i; // ')'
        cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycles(n, cycles);
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

bool Permutation::is_involution() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[img_[i]] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::power(long long k) const {
    const int n = degree();
    Permutation base = k >= 0 ? *this : inverse();
    unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                  : static_cast<unsigned long long>(-(k + 1)) + 1ull;
    Permutation acc = identity(n);
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j] = 1;
            cyc.push_back(j);
            j = img_[j];
        } while (j != i);
        if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    for (const auto& cyc : cycles(false)) {
        os << '(';
        for (size_t k = 0; k < cyc.size(); ++k) {
            if (k) os << ' ';
            os << cyc[k] + 1;
        }
        os << ')';
    }
    return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        fail(errc::degree_mismatch, "compose: degrees " + std::to_string(p.degree()) + " vs " +
                                        std::to_string(q.degree()));
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
    return Permutation::from_images(std::move(img));
}

int cycle_count(const Permutation& p) {
    int count = 0;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = p(j)) seen[j] = 1;
    }
    return count;
}

std::vector<int> cycle_lengths(const Permutation& p) {
    std::vector<int> lens;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
}

long long element_order(const Permutation& p) {
    long long order = 1;
    for (int len : cycle_lengths(p)) order = std::lcm(order, static_cast<long long>(len));
    return order;
}

OrbitPartition orbits(std::span<const Permutation> gens, int n) {
    for (const auto& g : gens)
        if (g.degree() != n)
            fail(errc::degree_mismatch, "orbits: generator degree " + std::to_string(g.degree()) +
                                            " vs n=" + std::to_string(n));
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(g(i));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    OrbitPartition part;
    part.degree = n;
    std::vector<int> index(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (index[r] < 0) {
            index[r] = static_cast<int>(part.blocks.size());
            part.blocks.emplace_back();
        }
        part.blocks[index[r]].push_back(i);
    }
    return part;
}

bool is_transitive(std::span<const Permutation> gens, int n) {
    return orbits(gens, n).count() == (n == 0 ? 0 : 1);
}

std::vector<std::vector<int>> bfs_table(std::span<const Permutation> gens, int base) {
    const int n = gens.empty() ? 0 : gens[0].degree();
    std::vector<int> relabel(n, -1), order;
    order.reserve(n);
    relabel[base] = 0;
    order.push_back(base);
    for (size_t q = 0; q < order.size(); ++q) {
        int u = order[q];
        for (const auto& g : gens) {
            int v = g(u);
            if (relabel[v] < 0) {
                relabel[v] = static_cast<int>(order.size());
                order.push_back(v);
            }
        }
    }
    if (static_cast<int>(order.size()) != n)
        fail(errc::not_transitive, "bfs_table: action is not transitive");
    std::vector<std::vector<int>> table(gens.size(), std::vector<int>(n));
    for (size_t k = 0; k < gens.size(); ++k)
        for (int i = 0; i < n; ++i) table[k][i] = relabel[gens[k](order[i])];
    return table;
}

CanonicalTable canonical_table(std::span<const Permutation> gens, int n) {
    CanonicalTable best;
    for (int b = 0; b < n; ++b) {
        auto table = bfs_table(gens, b);
        if (best.table.empty() || table < best.table) {
            best.table = std::move(table);
            best.base = b;
        }
    }
    // recover the winning relabeling
    std::vector<int> relabel(n, -1), order;
    relabel[best.base] = 0;
    order.push_back(best.base);
    for (size_t q = 0; q < order.size(); ++q)
        for (const auto& g : gens) {
            int v = g(order[q]);
            if (relabel[v] < 0) {
                relabel[v] = static_cast<int>(order.size());
                order.push_back(v);
            }
        }
    best.relabel = std::move(relabel);
    return best;
}

} // namespace km
