#include "doctest.h"

#include "rigidity/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/henneberg.hpp"

using namespace rigidity;

namespace {

// Reference in_S: try every cyclic order (first vertex fixed) directly.
bool in_s_by_permutations(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool cycle_ok = true;
        for (int i = 0; i < n && cycle_ok; ++i) cycle_ok = g.has_edge(perm[i], perm[(i + 1) % n]);
        if (!cycle_ok) continue;
        auto maps_edges = [&](const std::vector<int>& sigma) {
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[perm[i]] = i;
            for (int u = 0; u < n; ++u)
                for (int v : g.neighbors(u))
                    if (v > u && !g.has_edge(perm[sigma[pos[u]]], perm[sigma[pos[v]]]))
                        return false;
            return true;
        };
        std::vector<int> sigma(n);
        if (n % 2 == 0) {
            for (int i = 0; i < n; ++i) sigma[i] = (i + n / 2) % n;
            if (maps_edges(sigma)) return true;
        } else {
            for (int k = 0; k < n; ++k) {
                for (int i = 0; i < n; ++i) sigma[i] = ((k - i) % n + n) % n;
                if (maps_edges(sigma)) return true;
            }
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

Graph two_ears() {  // two extra vertices hung on the same edge; not Hamiltonian
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    g.add_edge(0, 4);
    g.add_edge(1, 4);
    return g;
}

}  // namespace

TEST_CASE("T membership of the listed 12-vertex graphs") {
    FamilyReport yes = in_T(decode(BigInt("757486969329934592"), 12));
    CHECK(yes.verdict);
    CHECK(yes.planar);
    CHECK(yes.three_cycles == 2);
    CHECK(yes.four_cycles == 9);
    CHECK(yes.triangles_edge_disjoint);
    CHECK(yes.faces == 11);
    CHECK(std::count(yes.degrees.begin(), yes.degrees.end(), 3) == 6);
    CHECK(std::count(yes.degrees.begin(), yes.degrees.end(), 4) == 6);
    CHECK(yes.reason.empty());

    FamilyReport no = in_T(decode(BigInt("252590061719913632"), 12));
    CHECK_FALSE(no.verdict);
    CHECK(no.reason == "not planar");
    CHECK(no.three_cycles == 0);
}

TEST_CASE("T membership of the three-prism") {
    FamilyReport r = in_T(decode(7916, 6));
    CHECK(r.verdict);
    CHECK(r.three_cycles == 2);
    CHECK(r.four_cycles == 3);
    CHECK(r.faces == 5);
    CHECK(std::count(r.degrees.begin(), r.degrees.end(), 3) == 6);
}

TEST_CASE("global maximizers up to 11 vertices lie in T") {
    for (auto [code, n] : std::vector<std::pair<BigInt, int>>{
             {1269995, 7},
             {170989214, 8},
             {BigInt("11177989553"), 9},
             {BigInt("4778440734593"), 10},
             {BigInt("18120782205838348"), 11}}) {
        FamilyReport r = in_T(decode(code, n));
        CHECK(r.verdict);
        CHECK(r.four_cycles == n - 3);
    }
}

TEST_CASE("T rejections name the failed condition") {
    // 4-vertex graph: a single 3-cycle and a degree-2 vertex
    FamilyReport deg = in_T(decode(31, 4));
    CHECK_FALSE(deg.verdict);
    CHECK(deg.reason == "vertex degree outside {3,4}");

    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    FamilyReport planar = in_T(k33);
    CHECK_FALSE(planar.verdict);
    CHECK(planar.reason == "not planar");

    Graph not_tight(4);
    not_tight.add_edge(0, 1);
    CHECK_THROWS_AS(in_T(not_tight), std::invalid_argument);
    CHECK_THROWS_AS(in_S(not_tight), std::invalid_argument);
}

TEST_CASE("T(6) contains exactly the three-prism") {
    std::vector<FamilyMatch> t6 = search_family(6, 'T');
    REQUIRE(t6.size() == 1);
    CHECK(t6.front().code == canonical_code(decode(7916, 6)));
}

TEST_CASE("S membership of the maximal graphs") {
    std::vector<std::pair<BigInt, int>> maxima = {
        {7916, 6},
        {1269995, 7},
        {170989214, 8},
        {BigInt("11177989553"), 9},
        {BigInt("4778440734593"), 10},
        {BigInt("18120782205838348"), 11},
        {BigInt("252590061719913632"), 12},
    };
    for (auto [code, n] : maxima) {
        FamilyReport r = in_S(decode(code, n));
        CHECK(r.verdict);
        REQUIRE(r.hamiltonian.has_value());
        CHECK(r.symmetry == (n % 2 == 0 ? "half-turn" : "reflection"));
    }
}

TEST_CASE("S witnesses are sound") {
    for (auto [code, n] : std::vector<std::pair<BigInt, int>>{
             {7916, 6}, {1269995, 7}, {170989214, 8}, {BigInt("11177989553"), 9}}) {
        Graph g = decode(code, n);
        FamilyReport r = in_S(g);
        REQUIRE(r.verdict);
        const std::vector<Vertex>& cycle = *r.hamiltonian;
        REQUIRE(static_cast<int>(cycle.size()) == n);
        CHECK(std::set<Vertex>(cycle.begin(), cycle.end()).size() == cycle.size());
        for (int i = 0; i < n; ++i) CHECK(g.has_edge(cycle[i], cycle[(i + 1) % n]));

        // applying the witnessed symmetry must map the edge set onto itself
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
        std::vector<int> sigma(n);
        if (r.symmetry == "half-turn") {
            CHECK(n % 2 == 0);
            for (int i = 0; i < n; ++i) sigma[i] = (i + n / 2) % n;
        } else {
            CHECK(n % 2 == 1);
            int k = 2 * pos[r.axis_vertex] % n;
            for (int i = 0; i < n; ++i) sigma[i] = ((k - i) % n + n) % n;
            CHECK(sigma[pos[r.axis_vertex]] == pos[r.axis_vertex]);
        }
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                if (v > u) CHECK(g.has_edge(cycle[sigma[pos[u]]], cycle[sigma[pos[v]]]));
    }
}

TEST_CASE("S verdicts match the permutation oracle on all small graphs") {
    for (int n : {5, 6, 7}) {
        for (const GraphListEntry& e : generate_up_to(n, 2)) {
            if (e.n != n) continue;
            Graph g = decode(e.code, e.n);
            CHECK(in_S(g).verdict == in_s_by_permutations(g));
        }
    }
}

TEST_CASE("non-Hamiltonian graphs are excluded from S with that reason") {
    FamilyReport r = in_S(two_ears());
    CHECK_FALSE(r.verdict);
    CHECK(r.reason == "not Hamiltonian");
    CHECK_FALSE(r.hamiltonian.has_value());
}

TEST_CASE("family search ranks by realization count") {
    CountConfig config;
    std::vector<FamilyMatch> ranked = search_family(6, 'S', true, config);
    REQUIRE(!ranked.empty());
    CHECK(ranked.front().code == canonical_code(decode(7916, 6)));
    CHECK(ranked.front().count == BigInt(24));
    for (size_t i = 1; i < ranked.size(); ++i) {
        REQUIRE(ranked[i].count.has_value());
        CHECK(*ranked[i - 1].count >= *ranked[i].count);
    }
    // membership in the ranked list agrees with the predicate itself
    std::set<BigInt> in_list;
    for (const FamilyMatch& m : ranked) in_list.insert(m.code);
    for (const GraphListEntry& e : generate_up_to(6, 2)) {
        if (e.n != 6) continue;
        CHECK(in_list.count(e.code) == (in_S(decode(e.code, e.n)).verdict ? 1 : 0));
    }
    CHECK_THROWS_AS(search_family(6, 'X'), std::invalid_argument);
}