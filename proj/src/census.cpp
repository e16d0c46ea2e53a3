#include "km/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace km {

namespace {

unsigned resolve_threads(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    if (const char* env = std::getenv("KLEINMAPS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Partial transition table of a blade system in breadth-first labeling:
// blades are introduced as fresh labels in slot-scan order, so a completed
// table equals its own BFS relabeling from base 0.
struct SearchState {
    std::array<std::vector<int>, 3> t; // -1 = unassigned
    int maxlabel = 1;
    int unassigned = 0;
    int slot = 0;
};

struct RawTable {
    std::array<std::vector<int>, 3> t;
};

class Search {
public:
    Search(int n, const TriangleSignature& sig, std::atomic<bool>* stop)
        : n_(n), stop_(stop), mark_(n, 0) {
        limits_ = {sig.l0, sig.l1, sig.linf};
    }

    SearchState initial() const {
        SearchState s;
        for (auto& g : s.t) g.assign(n_, -1);
        s.maxlabel = 1;
        s.unassigned = 3 * n_;
        s.slot = 0;
        return s;
    }

    // Expand the search tree breadth-first up to slot_cutoff decision slots,
    // producing independent subtree seeds; tables completed on the way are
    // finalized directly.
    std::vector<SearchState> expand(int slot_cutoff, std::vector<RawTable>& done) {
        std::vector<SearchState> frontier{initial()};
        std::vector<SearchState> next;
        bool progressed = true;
        while (progressed) {
            progressed = false;
            next.clear();
            for (auto& s : frontier) {
                if (s.slot >= slot_cutoff || s.slot == 3 * n_) {
                    if (s.slot == 3 * n_) {
                        if (s.maxlabel == n_ && is_canonical(s.t)) done.push_back(RawTable{s.t});
                    } else {
                        next.push_back(std::move(s));
                    }
                    continue;
                }
                progressed = true;
                step(s, [&](SearchState child) { next.push_back(std::move(child)); });
            }
            frontier.swap(next);
        }
        return frontier;
    }

    void run(SearchState s, std::vector<RawTable>& out) {
        out_ = &out;
        dfs(s);
        out_ = nullptr;
    }

private:
    template <class Emit>
    void step(SearchState& s, Emit&& emit) {
        const int i = s.slot / 3, g = s.slot % 3;
        if (i >= s.maxlabel) return; // blade never introduced: not transitive at this size
        if (s.t[g][i] != -1) {
            SearchState child = s;
            ++child.slot;
            emit(std::move(child));
            return;
        }
        auto attempt = [&](int j, bool fresh) {
            SearchState child = s;
            child.t[g][i] = j;
            if (j == i) {
                child.unassigned -= 1;
            } else {
                child.t[g][j] = i;
                child.unassigned -= 2;
            }
            if (fresh) ++child.maxlabel;
            ++child.slot;
            if (feasible(child, g)) emit(std::move(child));
        };
        // Fixed point first; a tau fixed point anywhere forces one at the base
        // blade, otherwise a smaller table exists from that base.
        if (g != 0 || i == 0 || s.t[0][0] == 0) attempt(i, false);
        for (int j = i + 1; j < s.maxlabel; ++j)
            if (s.t[g][j] == -1) attempt(j, false);
        if (s.maxlabel < n_) attempt(s.maxlabel, true);
    }

    void dfs(SearchState& s) {
        if (stop_ && stop_->load(std::memory_order_relaxed)) return;
        if (s.slot == 3 * n_) {
            if (s.maxlabel == n_ && is_canonical(s.t)) out_->push_back(RawTable{s.t});
            return;
        }
        const int i = s.slot / 3, g = s.slot % 3;
        if (i >= s.maxlabel) return;
        if (s.t[g][i] != -1) {
            ++s.slot;
            dfs(s);
            --s.slot;
            return;
        }
        auto attempt = [&](int j, bool fresh) {
            s.t[g][i] = j;
            if (j == i) {
                s.unassigned -= 1;
            } else {
                s.t[g][j] = i;
                s.unassigned -= 2;
            }
            if (fresh) ++s.maxlabel;
            ++s.slot;
            if (feasible(s, g)) dfs(s);
            --s.slot;
            if (fresh) --s.maxlabel;
            if (j == i) {
                s.unassigned += 1;
            } else {
                s.t[g][j] = -1;
                s.unassigned += 2;
            }
            s.t[g][i] = -1;
        };
        if (g != 0 || i == 0 || s.t[0][0] == 0) attempt(i, false);
        for (int j = i + 1; j < s.maxlabel; ++j)
            if (s.t[g][j] == -1) attempt(j, false);
        if (s.maxlabel < n_) attempt(s.maxlabel, true);
    }

    bool feasible(const SearchState& s, int changed_gen) {
        if (2 * (n_ - s.maxlabel) > s.unassigned) return false;
        // product-order constraints for the two pairs containing the changed
        // generator: (tau,lambda) | l0, (tau,rho) | l1, (rho,lambda) | linf
        static constexpr int pair_gens[3][2] = {{0, 1}, {0, 2}, {2, 1}};
        for (int p = 0; p < 3; ++p) {
            if (limits_[p] == TriangleSignature::infinity) continue;
            if (pair_gens[p][0] != changed_gen && pair_gens[p][1] != changed_gen) continue;
            if (!chains_ok(s.t[pair_gens[p][0]], s.t[pair_gens[p][1]], limits_[p], s.maxlabel))
                return false;
        }
        return true;
    }

    // Scan the cycles/chains of the partial product a(b(.)) over active
    // labels. A closed cycle must have length dividing limit; an open chain of
    // k blades forces an eventual cycle of length >= k.
    bool chains_ok(const std::vector<int>& a, const std::vector<int>& b, int limit, int active) {
        stamp_ += 1;
        auto fwd = [&](int i) {
            int j = b[i];
            return j < 0 ? -1 : a[j];
        };
        auto bwd = [&](int i) {
            int j = a[i];
            return j < 0 ? -1 : b[j];
        };
        for (int start = 0; start < active; ++start) {
            if (mark_[start] == stamp_) continue;
            int head = start;
            for (int guard = 0; guard <= active; ++guard) {
                int p = bwd(head);
                if (p < 0 || p == start) {
                    if (p == start) head = start;
                    break;
                }
                head = p;
            }
            int count = 0;
            int u = head;
            bool closed = false;
            while (u >= 0 && mark_[u] != stamp_) {
                mark_[u] = stamp_;
                ++count;
                int nx = fwd(u);
                if (nx == head) {
                    closed = true;
                    break;
                }
                u = nx;
            }
            if (closed) {
                if (limit % count != 0) return false;
            } else if (count > limit) {
                return false;
            }
        }
        return true;
    }

    // Accept only the least BFS table over all base blades.
    bool is_canonical(const std::array<std::vector<int>, 3>& t) {
        std::vector<int> relabel(n_), order(n_);
        for (int base = 1; base < n_; ++base) {
            std::fill(relabel.begin(), relabel.end(), -1);
            relabel[base] = 0;
            order[0] = base;
            int cnt = 1;
            for (int qi = 0; qi < cnt; ++qi) {
                int u = order[qi];
                for (int g = 0; g < 3; ++g) {
                    int v = t[g][u];
                    if (relabel[v] < 0) {
                        relabel[v] = cnt;
                        order[cnt++] = v;
                    }
                }
            }
            int cmp = 0;
            for (int g = 0; g < 3 && cmp == 0; ++g)
                for (int i = 0; i < n_; ++i) {
                    int cand = relabel[t[g][order[i]]];
                    if (cand != t[g][i]) {
                        cmp = cand < t[g][i] ? -1 : 1;
                        break;
                    }
                }
            if (cmp < 0) return false;
        }
        return true;
    }

    int n_;
    std::array<int, 3> limits_{};
    std::atomic<bool>* stop_;
    std::vector<RawTable>* out_ = nullptr;
    std::vector<int> mark_;
    int stamp_ = 0;
};

bool passes(const CensusFilters& f, const SurfaceType& s) {
    if (f.orientable && *f.orientable != s.orientable) return false;
    if (f.boundary && (s.boundary < f.boundary->first || s.boundary > f.boundary->second)) return false;
    if (f.genus_or_crosscaps && *f.genus_or_crosscaps != s.genus_or_crosscaps) return false;
    if (f.euler && *f.euler != s.euler) return false;
    return true;
}

std::vector<RawTable> tables_for_size(int n, const TriangleSignature& sig, unsigned nthreads,
                                      std::atomic<bool>* stop) {
    std::vector<RawTable> done;
    Search seq(n, sig, stop);
    std::vector<SearchState> seeds =
        seq.expand(nthreads <= 1 ? 0 : std::min(3 * n, 9), done);

    if (nthreads <= 1 || seeds.size() <= 1) {
        for (auto& s : seeds) seq.run(s, done);
        return done;
    }

    std::vector<std::vector<RawTable>> buckets(seeds.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        Search local(n, sig, stop);
        size_t k;
        while ((k = next.fetch_add(1)) < seeds.size()) {
            if (stop && stop->load(std::memory_order_relaxed)) break;
            local.run(seeds[k], buckets[k]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned th = 0; th < std::min<size_t>(nthreads, seeds.size()); ++th)
        pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& bucket : buckets)
        for (auto& table : bucket) done.push_back(std::move(table));
    return done;
}

} // namespace

void census_enumerate(const CensusQuery& q, const CensusSink& sink) {
    if (q.max_blades < 1) fail(errc::invalid_parameter, "max_blades must be >= 1");
    check_signature_entries(q.signature);
    if (q.filters.boundary && q.filters.boundary->first > q.filters.boundary->second)
        fail(errc::invalid_parameter, "boundary filter range is empty");
    if (q.max_blades > q.cap)
        fail(errc::cap_exceeded, "max_blades " + std::to_string(q.max_blades) + " exceeds cap " +
                                     std::to_string(q.cap) + "; raise the cap explicitly");

    const unsigned nthreads = resolve_threads(q.threads);
    std::atomic<bool> stop{false};

    for (int n = 1; n <= q.max_blades; ++n) {
        auto tables = tables_for_size(n, q.signature, nthreads, &stop);
        std::sort(tables.begin(), tables.end(),
                  [](const RawTable& a, const RawTable& b) { return a.t < b.t; });
        for (auto& raw : tables) {
            BladeSystem system = validate(n, Permutation::from_images(raw.t[0]),
                                          Permutation::from_images(raw.t[1]),
                                          Permutation::from_images(raw.t[2]), q.signature);
            CensusRecord record{system, classify(system), passport(system), map_type(system)};
            if (!passes(q.filters, record.surface)) continue;
            if (!sink(record)) {
                stop.store(true);
                return;
            }
        }
    }
}

long long census_count(const CensusQuery& q) {
    long long count = 0;
    census_enumerate(q, [&](const CensusRecord&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace km
