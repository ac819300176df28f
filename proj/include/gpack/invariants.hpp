#ifndef GPACK_INVARIANTS_HPP
#define GPACK_INVARIANTS_HPP

#include <algorithm>

#include "gpack/graph.hpp"

namespace gpack {

struct DegreeStats {
    int max_degree = 0;          // Delta
    int max_codegree = 0;        // Delta^ : max over all vertex pairs of |N(i) & N(j)|
    int max_adjacent_codegree = 0; // Delta^tri : same maximum over adjacent pairs
};

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int i = 0; i < g.n(); ++i) d = std::max(d, g.degree(i));
    return d;
}

// max over unordered vertex pairs of their common degree; 0 when n < 2.
// max_codegree(g) < t  iff  g has no K_{2,t}.
inline int max_codegree(const Graph& g) {
    int c = 0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            c = std::max(c, g.neighbors(i).intersection_count(g.neighbors(j)));
        }
    }
    return c;
}

// same maximum restricted to adjacent pairs; 0 iff triangle-free.
// max_adjacent_codegree(g) < s  iff  g has no K_{1,1,s}.
inline int max_adjacent_codegree(const Graph& g) {
    int c = 0;
    for (int i = 0; i < g.n(); ++i) {
        const Bitset& ni = g.neighbors(i);
        for (int j = ni.find_next(i); j >= 0; j = ni.find_next(j)) {
            c = std::max(c, ni.intersection_count(g.neighbors(j)));
        }
    }
    return c;
}

inline DegreeStats degree_stats(const Graph& g) {
    return DegreeStats{max_degree(g), max_codegree(g), max_adjacent_codegree(g)};
}

inline bool contains_k2t(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("contains_k2t: t must be >= 1");
    return max_codegree(g) >= t;
}

inline bool contains_k11s(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("contains_k11s: s must be >= 1");
    return max_adjacent_codegree(g) >= s;
}

} // namespace gpack

#endif
