#ifndef GPACK_GENERATORS_HPP
#define GPACK_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpack/graph.hpp"
#include "gpack/invariants.hpp"
#include "gpack/rng.hpp"

namespace gpack {

// ---- deterministic families -----------------------------------------------

inline Graph matching(int n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("matching: n must be even");
    EdgeList e;
    for (int i = 0; i < n; i += 2) e.emplace_back(i, i + 1);
    return graph_from_edges(n, e);
}

inline Graph disjoint_cliques(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("disjoint_cliques: sizes must be >= 1");
        n += s;
    }
    EdgeList e;
    int base = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) e.emplace_back(base + i, base + j);
        base += s;
    }
    return graph_from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative part");
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return graph_from_edges(a + b, e);
}

inline Graph complete_tripartite(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("complete_tripartite: negative part");
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    for (int i = 0; i < a; ++i)
        for (int k = 0; k < c; ++k) e.emplace_back(i, a + b + k);
    for (int j = 0; j < b; ++j)
        for (int k = 0; k < c; ++k) e.emplace_back(a + j, a + b + k);
    return graph_from_edges(a + b + c, e);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return graph_from_edges(n, e);
}

// star on n vertices: center 0, leaves 1..n-1
inline Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return graph_from_edges(n, e);
}

// Non-packable pair on n = 2m vertices witnessing tightness of the
// Sauer-Spencer condition: G1 = m.K2 (Delta1 = 1), G2 = K_{m+1} + (m-1).K1
// (Delta2 = m), so 2.Delta1.Delta2 = n exactly.
inline std::pair<Graph, Graph> sauer_spencer_tight_pair(int m) {
    if (m < 2) throw std::invalid_argument("sauer_spencer_tight_pair: m must be >= 2");
    std::vector<int> sizes(std::size_t(m), 1);
    sizes[0] = m + 1;
    return {matching(2 * m), disjoint_cliques(sizes)};
}

// ---- randomized generators --------------------------------------------------
//
// Both samplers draw candidate edges uniformly and insert only those that
// keep every constraint satisfied, stopping after `attempt_cap` consecutive
// rejected draws. Output is a deterministic function of the arguments.

inline Graph random_bounded_degree(int n, int dmax, std::uint64_t seed, int attempt_cap = 0) {
    if (n < 0 || dmax < 0 || dmax >= std::max(n, 1))
        throw std::invalid_argument("random_bounded_degree: need 0 <= dmax < n");
    if (attempt_cap <= 0) attempt_cap = 50 * std::max(n, 1);
    std::vector<Bitset> rows(std::size_t(n), Bitset(n));
    std::vector<int> deg(std::size_t(n), 0);
    SplitMix64 rng(seed);
    if (n >= 2 && dmax >= 1) {
        int misses = 0;
        while (misses < attempt_cap) {
            int i = int(rng.next_below(std::uint64_t(n)));
            int j = int(rng.next_below(std::uint64_t(n)));
            if (i == j || rows[std::size_t(i)].test(j) || deg[std::size_t(i)] >= dmax ||
                deg[std::size_t(j)] >= dmax) {
                ++misses;
                continue;
            }
            rows[std::size_t(i)].set(j);
            rows[std::size_t(j)].set(i);
            ++deg[std::size_t(i)];
            ++deg[std::size_t(j)];
            misses = 0;
        }
    }
    return Graph::from_adjacency(std::move(rows));
}

// K_{2,t}-free sampler with a degree target: a star on hub 0 is seeded
// first so the output attains max degree dmax exactly (a star is K_{2,t}-
// free for every t >= 2); pure rejection sampling rarely reaches large
// degrees at feasible n. Insertion keeps max_codegree <= t-1 throughout.
inline Graph random_k2t_free(int n, int dmax, int t, std::uint64_t seed, int attempt_cap = 0) {
    if (n < 0 || dmax < 0 || dmax >= std::max(n, 1))
        throw std::invalid_argument("random_k2t_free: need 0 <= dmax < n");
    if (t < 2) throw std::invalid_argument("random_k2t_free: t must be >= 2");
    if (attempt_cap <= 0) attempt_cap = 50 * std::max(n, 1);
    std::vector<Bitset> rows(std::size_t(n), Bitset(n));
    std::vector<int> deg(std::size_t(n), 0);
    for (int v = 1; v <= dmax; ++v) {
        rows[0].set(v);
        rows[std::size_t(v)].set(0);
        ++deg[0];
        ++deg[std::size_t(v)];
    }
    // codegree changes only at pairs through the new edge's endpoints
    auto insert_ok = [&](int i, int j) {
        if (deg[std::size_t(i)] >= dmax || deg[std::size_t(j)] >= dmax) return false;
        if (rows[std::size_t(i)].intersection_count(rows[std::size_t(j)]) > t - 2) return false;
        const Bitset& nj = rows[std::size_t(j)];
        for (int x = nj.find_first(); x >= 0; x = nj.find_next(x)) {
            if (x != i && rows[std::size_t(i)].intersection_count(rows[std::size_t(x)]) > t - 2)
                return false;
        }
        const Bitset& ni = rows[std::size_t(i)];
        for (int y = ni.find_first(); y >= 0; y = ni.find_next(y)) {
            if (y != j && rows[std::size_t(j)].intersection_count(rows[std::size_t(y)]) > t - 2)
                return false;
        }
        return true;
    };
    SplitMix64 rng(seed);
    if (n >= 2 && dmax >= 1) {
        int misses = 0;
        while (misses < attempt_cap) {
            int i = int(rng.next_below(std::uint64_t(n)));
            int j = int(rng.next_below(std::uint64_t(n)));
            if (i == j || rows[std::size_t(i)].test(j) || !insert_ok(i, j)) {
                ++misses;
                continue;
            }
            rows[std::size_t(i)].set(j);
            rows[std::size_t(j)].set(i);
            ++deg[std::size_t(i)];
            ++deg[std::size_t(j)];
            misses = 0;
        }
    }
    return Graph::from_adjacency(std::move(rows));
}

// ---- exhaustive enumeration --------------------------------------------------

inline constexpr int kEnumerationCap = 5;

inline std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t(1) << (n * (n - 1) / 2);
}

// the graph on n vertices whose upper-triangle bitmask (lexicographic pair
// order (0,1),(0,2),...,(n-2,n-1), bit 0 = first pair) equals `mask`
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    EdgeList e;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1) e.emplace_back(i, j);
        }
    }
    return graph_from_edges(n, e);
}

// all labeled graphs on n vertices, ascending bitmask order, each once
inline std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0 || n > kEnumerationCap)
        throw std::invalid_argument("enumerate_graphs: n exceeds enumeration cap");
    std::vector<Graph> out;
    const std::uint64_t total = labeled_graph_count(n);
    out.reserve(std::size_t(total));
    for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(graph_from_mask(n, mask));
    return out;
}

// ---- generator specs (CLI / experiment plumbing) ----------------------------

struct GenSpec {
    std::string family; // matching | cliques | bipartite | tripartite | cycle | star |
                        // random-bounded | random-k2t-free | ss-tight
    int n = 0;
    std::vector<int> sizes;     // cliques
    int a = 0, b = 0, c = 0;    // bipartite / tripartite parts
    int m = 0;                  // ss-tight
    int dmax = 0;
    int t = 2;
    std::uint64_t seed = 0;
    int attempt_cap = 0;
};

// graphs described by the spec (two for ss-tight, one otherwise)
inline std::vector<Graph> build_graphs(const GenSpec& s) {
    if (s.family == "matching") return {matching(s.n)};
    if (s.family == "cliques") return {disjoint_cliques(s.sizes)};
    if (s.family == "bipartite") return {complete_bipartite(s.a, s.b)};
    if (s.family == "tripartite") return {complete_tripartite(s.a, s.b, s.c)};
    if (s.family == "cycle") return {cycle(s.n)};
    if (s.family == "star") return {star(s.n)};
    if (s.family == "random-bounded")
        return {random_bounded_degree(s.n, s.dmax, s.seed, s.attempt_cap)};
    if (s.family == "random-k2t-free")
        return {random_k2t_free(s.n, s.dmax, s.t, s.seed, s.attempt_cap)};
    if (s.family == "ss-tight") {
        auto [g1, g2] = sauer_spencer_tight_pair(s.m);
        return {g1, g2};
    }
    throw std::invalid_argument("unknown generator family: " + s.family);
}

} // namespace gpack

#endif
