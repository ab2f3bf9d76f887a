#include "doctest.h"

#include "rigidity/graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace rigidity;

namespace {

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

// Exhaustive canonical oracle: minimum encoding over all n! relabelings.
BigInt min_code_oracle(const Graph& g) {
    std::vector<int> perm(g.vertex_count());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    BigInt best = encode(g);
    do {
        best = std::min(best, encode(apply_permutation(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph three_prism() {
    return decode(7916, 6);
}

}  // namespace

TEST_CASE("encode matches the worked examples") {
    Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(encode(triangle) == 7);

    Graph four(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(encode(four) == 31);
}

TEST_CASE("decode matches the worked examples") {
    Graph triangle = decode(7, 3);
    CHECK(triangle.edge_count() == 3);
    CHECK(triangle.has_edge(0, 1));
    CHECK(triangle.has_edge(0, 2));
    CHECK(triangle.has_edge(1, 2));

    Graph four = decode(31, 4);
    CHECK(four.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(four.has_edge(0, 1));
}

TEST_CASE("decode(7916, 6) is the three-prism") {
    Graph g = three_prism();
    CHECK(g.edge_count() == 9);
    CHECK(g.degree_profile() == std::vector<int>{3, 3, 3, 3, 3, 3});
    // two disjoint triangles joined by a perfect matching
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(0, 4));
    CHECK(g.has_edge(3, 4));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 5));
    CHECK(g.has_edge(2, 5));
    CHECK(g.has_edge(0, 5));
    CHECK(g.has_edge(1, 4));
    CHECK(g.has_edge(2, 3));
}

TEST_CASE("encode/decode roundtrip on random graphs") {
    std::mt19937 rng(20240815);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u) g.add_edge(u, v);
        BigInt code = encode(g);
        CHECK(decode(code, n) == g);
        CHECK(code >= 0);
        CHECK(code < (BigInt(1) << code_bits(n)));
    }
}

TEST_CASE("decode rejects codes that do not fit") {
    CHECK_THROWS_AS(decode(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(decode(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(decode(0, 40), std::invalid_argument);
    CHECK_NOTHROW(decode(7, 3));
    CHECK_NOTHROW(decode(7, 6));
}

TEST_CASE("infer_vertex_count finds the minimal consistent n") {
    CHECK(infer_vertex_count(BigInt(0)) == 1);
    CHECK(infer_vertex_count(BigInt(1)) == 2);
    CHECK(infer_vertex_count(BigInt(7)) == 3);
    CHECK(infer_vertex_count(BigInt(31)) == 4);
    CHECK(infer_vertex_count(BigInt(7916)) == 6);
    CHECK(infer_vertex_count(BigInt("252590061719913632")) == 12);
    CHECK(decode_min(BigInt(7916)).vertex_count() == 6);
}

TEST_CASE("canonical_code is invariant under relabeling") {
    std::mt19937 rng(7);
    Graph g = three_prism();
    BigInt canon = canonical_code(g);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(apply_permutation(g, perm)) == canon);
    }
}

TEST_CASE("canonical_code separates isomorphism classes exhaustively") {
    // Oracle: group all graphs on n vertices by their minimum code over all
    // permutations; canonical_code must be constant within a class and
    // distinct across classes.
    for (int n = 2; n <= 5; ++n) {
        std::map<BigInt, std::set<BigInt>> classes;
        BigInt total = BigInt(1) << code_bits(n);
        for (BigInt code = 0; code < total; ++code) {
            Graph g = decode(code, n);
            classes[min_code_oracle(g)].insert(canonical_code(g));
        }
        std::set<BigInt> seen;
        for (const auto& [orbit, canons] : classes) {
            CHECK(canons.size() == 1);
            CHECK(seen.insert(*canons.begin()).second);
        }
    }
}

TEST_CASE("is_isomorphic distinguishes prism from K33") {
    Graph prism = three_prism();
    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(prism.degree_profile() == k33.degree_profile());
    CHECK_FALSE(is_isomorphic(prism, k33));

    std::vector<int> perm{3, 5, 0, 2, 4, 1};
    CHECK(is_isomorphic(prism, apply_permutation(prism, perm)));
}

TEST_CASE("canonical_code rejects graphs above the supported size") {
    Graph big(canonical_max_vertices() + 1);
    CHECK_THROWS_AS(canonical_code(big), std::invalid_argument);
}

TEST_CASE("canonical_code handles hard symmetric cases") {
    // Octahedron: vertex transitive, 4-regular.
    Graph octa = decode(16350, 6);
    std::mt19937 rng(99);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    BigInt canon = canonical_code(octa);
    for (int trial = 0; trial < 30; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(apply_permutation(octa, perm)) == canon);
    }
    // Empty and complete graphs on 12 vertices finish instantly only if twin
    // pruning works.
    Graph empty(12);
    CHECK(canonical_code(empty) == 0);
    Graph complete(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) complete.add_edge(u, v);
    CHECK(canonical_code(complete) == (BigInt(1) << code_bits(12)) - 1);
}

TEST_CASE("graph list roundtrip and error handling") {
    std::istringstream in("# comment\n6\t7916\n\n3 7 # inline comment\n");
    auto entries = read_graph_list(in);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].n == 6);
    CHECK(entries[0].code == 7916);
    CHECK(entries[1].n == 3);
    CHECK(entries[1].code == 7);

    std::ostringstream out;
    write_graph_list_line(out, 6, BigInt(7916));
    CHECK(out.str() == "6\t7916\n");

    std::istringstream bad1("6\n");
    CHECK_THROWS_AS(read_graph_list(bad1), std::invalid_argument);
    std::istringstream bad2("6 7916 extra\n");
    CHECK_THROWS_AS(read_graph_list(bad2), std::invalid_argument);
    CHECK_THROWS_AS(parse_code("12x"), std::invalid_argument);
}

TEST_CASE("graph primitives validate input") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.remove_edge(1, 2), std::invalid_argument);
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 0);

    CHECK(three_prism().is_connected());
    Graph two(2);
    CHECK_FALSE(two.is_connected());

    Graph sub = three_prism().induced_subgraph(0b011001u);  // vertices {0,3,4}, a prism triangle
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 3);
}
