#ifndef GPACK_GRAPH_HPP
#define GPACK_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpack/bitset.hpp"

namespace gpack {

// Hard cap on vertex count; everything downstream indexes with int and
// allocates O(n^2) bits.
#ifndef GPACK_MAX_VERTICES
#define GPACK_MAX_VERTICES 512
#endif
inline constexpr int kMaxVertices = GPACK_MAX_VERTICES;

// unordered edges stored as (i, j) with i < j
using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

// Immutable simple graph on vertex set {0, ..., n-1} with bit-packed
// adjacency rows. Every construction path validates symmetry and the
// absence of loops.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }

    bool has_edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return i != j && rows_[std::size_t(i)].test(j);
    }

    const Bitset& neighbors(int i) const {
        check_vertex(i);
        return rows_[std::size_t(i)];
    }

    int degree(int i) const { return neighbors(i).count(); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : rows_) twice += row.count();
        return twice / 2;
    }

    EdgeList edges() const {
        EdgeList out;
        for (int i = 0; i < n_; ++i) {
            for (int j = rows_[std::size_t(i)].find_next(i); j >= 0;
                 j = rows_[std::size_t(i)].find_next(j)) {
                out.emplace_back(i, j);
            }
        }
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // Validating constructor from adjacency rows; the only way to build a
    // Graph, so the symmetry / no-loop invariants hold for every instance.
    static Graph from_adjacency(std::vector<Bitset> rows) {
        const int n = int(rows.size());
        if (n > kMaxVertices) throw std::invalid_argument("Graph: vertex cap exceeded");
        for (int i = 0; i < n; ++i) {
            if (rows[std::size_t(i)].size() != n)
                throw std::invalid_argument("Graph: row size mismatch");
            if (rows[std::size_t(i)].test(i)) throw std::invalid_argument("Graph: loop edge");
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rows[std::size_t(i)].test(j) != rows[std::size_t(j)].test(i))
                    throw std::invalid_argument("Graph: asymmetric adjacency");
            }
        }
        Graph g;
        g.n_ = n;
        g.rows_ = std::move(rows);
        return g;
    }

private:
    void check_vertex(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    std::vector<Bitset> rows_;
};

// Builds a graph from an explicit edge list. Loops, out-of-range endpoints
// and duplicate edges (in either orientation) are errors, not ignored:
// silently deduplicating hides generator bugs.
inline Graph graph_from_edges(int n, const EdgeList& edges) {
    if (n < 0) throw std::invalid_argument("graph_from_edges: negative n");
    if (n > kMaxVertices) throw std::invalid_argument("graph_from_edges: vertex cap exceeded");
    std::vector<Bitset> rows(std::size_t(n), Bitset(n));
    for (const auto& [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("graph_from_edges: endpoint out of range");
        if (i == j) throw std::invalid_argument("graph_from_edges: loop edge");
        if (rows[std::size_t(i)].test(j))
            throw std::invalid_argument("graph_from_edges: duplicate edge");
        rows[std::size_t(i)].set(j);
        rows[std::size_t(j)].set(i);
    }
    return Graph::from_adjacency(std::move(rows));
}

inline Graph complement(const Graph& g) {
    const int n = g.n();
    std::vector<Bitset> rows(std::size_t(n), Bitset(n));
    for (int i = 0; i < n; ++i) {
        Bitset row = Bitset::all_set(n);
        row -= g.neighbors(i);
        row.reset(i);
        rows[std::size_t(i)] = std::move(row);
    }
    return Graph::from_adjacency(std::move(rows));
}

// --- graph6 ---------------------------------------------------------------
//
// Standard printable encoding: size header N(n), then the upper-triangle
// bits x(0,1), x(0,2), x(1,2), x(0,3), ... in column-major order, packed
// into 6-bit groups (zero padded) with 63 added to each group.

inline std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        // 63 <= n <= 258047: '~' followed by 18 bits in three 6-bit groups
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(std::string_view s) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (s.size() - pos < k) throw std::invalid_argument("graph6: truncated input");
    };
    auto byte = [&]() -> int {
        int c = (unsigned char)s[pos++];
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    need(1);
    long long n;
    int first = byte();
    if (first < 63) {
        n = first;
    } else {
        need(3);
        long long b1 = byte(), b2 = byte(), b3 = byte();
        if (b1 == 63) throw std::invalid_argument("graph6: oversized header");
        n = (b1 << 12) | (b2 << 6) | b3;
    }
    if (n > kMaxVertices) throw std::invalid_argument("graph6: vertex cap exceeded");
    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = std::size_t((nbits + 5) / 6);
    need(nbytes);
    if (s.size() != pos + nbytes) throw std::invalid_argument("graph6: trailing bytes");

    std::vector<Bitset> rows(std::size_t(n), Bitset(int(n)));
    long long bit = 0;
    int acc = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (have == 0) {
                acc = byte();
                have = 6;
            }
            if ((acc >> (have - 1)) & 1) {
                rows[std::size_t(i)].set(j);
                rows[std::size_t(j)].set(i);
            }
            --have;
        }
    }
    // padding bits must be zero
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding");
    return Graph::from_adjacency(std::move(rows));
}

} // namespace gpack

#endif
