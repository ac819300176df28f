#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "gpack/generators.hpp"
#include "gpack/graph.hpp"
#include "gpack/rng.hpp"

using namespace gpack;

namespace {

// independent complement oracle: direct pair scan over the definition
Graph complement_oracle(const Graph& g) {
    EdgeList e;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            if (!g.has_edge(i, j)) e.emplace_back(i, j);
        }
    }
    return graph_from_edges(g.n(), e);
}

} // namespace

TEST_CASE("graph construction", "[graph_core]") {
    SECTION("2K2 has degrees 1,1,1,1") {
        const Graph g = graph_from_edges(4, {{0, 1}, {2, 3}});
        REQUIRE(g.n() == 4);
        REQUIRE(g.edge_count() == 2);
        for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 1);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 0));
        CHECK_FALSE(g.has_edge(0, 2));
    }
    SECTION("empty graph") {
        const Graph g = graph_from_edges(3, {});
        CHECK(g.n() == 3);
        CHECK(g.edge_count() == 0);
    }
    SECTION("rejected inputs") {
        CHECK_THROWS_AS(graph_from_edges(4, {{0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(graph_from_edges(4, {{0, 4}}), std::invalid_argument);
        CHECK_THROWS_AS(graph_from_edges(4, {{0, 1}, {1, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(graph_from_edges(4, {{2, 3}, {2, 3}}), std::invalid_argument);
        CHECK_THROWS_AS(graph_from_edges(-1, {}), std::invalid_argument);
    }
    SECTION("from_adjacency validates symmetry and loops") {
        std::vector<Bitset> rows(2, Bitset(2));
        rows[0].set(1); // missing the mirrored bit
        CHECK_THROWS_AS(Graph::from_adjacency(rows), std::invalid_argument);
        std::vector<Bitset> loop(1, Bitset(1));
        loop[0].set(0);
        CHECK_THROWS_AS(Graph::from_adjacency(loop), std::invalid_argument);
    }
}

TEST_CASE("complement", "[graph_core]") {
    SECTION("2K2 complement is the 4-cycle 0-2-1-3") {
        const Graph got = complement(graph_from_edges(4, {{0, 1}, {2, 3}}));
        const Graph want = graph_from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
        CHECK(got == want);
        for (int v = 0; v < 4; ++v) CHECK(got.degree(v) == 2);
    }
    SECTION("empty <-> complete") {
        const Graph empty5 = graph_from_edges(5, {});
        const Graph k5 = complement(empty5);
        CHECK(k5.edge_count() == 10);
        CHECK(complement(k5) == empty5);
    }
    SECTION("involution, exhaustive n <= 5") {
        for (int n = 0; n <= 5; ++n) {
            for (const Graph& g : enumerate_graphs(n)) {
                CHECK(complement(complement(g)) == g);
                CHECK(complement(g) == complement_oracle(g));
            }
        }
    }
    SECTION("involution, sampled n = 6") {
        SplitMix64 rng(7);
        for (int i = 0; i < 500; ++i) {
            EdgeList e;
            for (int a = 0; a < 6; ++a) {
                for (int b = a + 1; b < 6; ++b) {
                    if (rng.next() & 1) e.emplace_back(a, b);
                }
            }
            const Graph g = graph_from_edges(6, e);
            CHECK(complement(complement(g)) == g);
        }
    }
}

TEST_CASE("graph6 encoding", "[graph_core][graph6]") {
    SECTION("known encodings") {
        CHECK(graph6_encode(graph_from_edges(0, {})) == "?");
        CHECK(graph6_encode(graph_from_edges(2, {{0, 1}})) == "A_");
        CHECK(graph6_encode(graph_from_edges(2, {})) == "A?");
        // C5 and K4, cross-checked against networkx to_graph6_bytes
        CHECK(graph6_encode(cycle(5)) == "Dhc");
        CHECK(graph6_encode(disjoint_cliques({4})) == "C~");
        CHECK(graph6_decode("Dhc") == cycle(5));
    }
    SECTION("round trip over all graphs n <= 5") {
        for (int n = 0; n <= 5; ++n) {
            for (const Graph& g : enumerate_graphs(n)) {
                CHECK(graph6_decode(graph6_encode(g)) == g);
            }
        }
    }
    SECTION("large n uses the long header") {
        const Graph g = star(80);
        const std::string enc = graph6_encode(g);
        REQUIRE(enc.size() > 4);
        CHECK(enc.substr(0, 4) == "~?@O"); // N(80) in the 4-byte form
        CHECK(graph6_decode(enc) == g);
    }
    SECTION("malformed input is rejected") {
        CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
        CHECK_THROWS_AS(graph6_decode("A"), std::invalid_argument);     // truncated body
        CHECK_THROWS_AS(graph6_decode("A_\x20"), std::invalid_argument); // byte < 63
        CHECK_THROWS_AS(graph6_decode("A__"), std::invalid_argument);   // trailing bytes
        CHECK_THROWS_AS(graph6_decode("A\x7f"), std::invalid_argument); // byte > 126
    }
}
