#include "doctest.h"

#include "rigidity/henneberg.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "rigidity/analysis.hpp"
#include "rigidity/graph.hpp"

using namespace rigidity;
namespace fs = std::filesystem;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph k2() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

auto descriptor_key(const StepDescriptor& s) {
    return std::make_tuple(static_cast<int>(s.kind), s.attach, s.removed, s.split_vertex,
                           s.split_partner, s.moved);
}

// all connected (2,3)-tight graphs on n vertices, by exhaustive edge subsets
std::set<BigInt> laman_classes_brute_force(int n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.push_back({u, v});
    int m = 2 * n - 3;
    std::set<BigInt> classes;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        Graph g(n);
        for (int i : pick) g.add_edge(all_edges[i].first, all_edges[i].second);
        if (is_laman(g)) classes.insert(canonical_code(g));
        int i = m - 1;
        while (i >= 0 && pick[i] == static_cast<int>(all_edges.size()) - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return classes;
}

std::map<int, std::vector<BigInt>> by_level(const std::vector<GraphListEntry>& entries) {
    std::map<int, std::vector<BigInt>> m;
    for (const auto& e : entries) m[e.n].push_back(e.code);
    return m;
}

}  // namespace

TEST_CASE("step application on small graphs") {
    SUBCASE("vertex addition turns an edge into a triangle") {
        Graph g = apply_step(k2(), {StepKind::H1, {0, 1}, {}, -1, -1, {}});
        CHECK(g.vertex_count() == 3);
        CHECK(encode(g) == 7);
    }
    SUBCASE("edge split on the triangle gives the 4-vertex Laman graph") {
        StepDescriptor s{StepKind::H2a, {0, 1, 2}, {{0, 1}}, -1, -1, {}};
        Graph g = apply_step(decode(7, 3), s);
        CHECK(encode(g) == 31);
        // both auxiliary edges exist in the triangle, so this is subtype 2a only
        s.kind = StepKind::H2c;
        CHECK_THROWS_AS(apply_step(decode(7, 3), s), std::invalid_argument);
    }
    SUBCASE("3D vertex addition turns the triangle into K4") {
        Graph g = apply_step(decode(7, 3), {StepKind::H3d1, {0, 1, 2}, {}, -1, -1, {}});
        CHECK(encode(g) == 63);
    }
    SUBCASE("vertex split on the triangle matches the edge split up to relabeling") {
        StepDescriptor s;
        s.kind = StepKind::VertexSplit;
        s.split_vertex = 0;
        s.split_partner = 1;
        s.moved = {2};
        s.removed = {{0, 2}};
        s.attach = {0, 1, 2};
        Graph g = apply_step(decode(7, 3), s);
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 5);
        CHECK(is_isomorphic(g, decode(31, 4)));
    }
    SUBCASE("empty move set degenerates to vertex addition") {
        StepDescriptor s;
        s.kind = StepKind::VertexSplit;
        s.split_vertex = 0;
        s.split_partner = 1;
        s.attach = {0, 1};
        Graph g = apply_step(decode(7, 3), s);
        CHECK(is_isomorphic(g, apply_step(decode(7, 3), {StepKind::H1, {0, 1}, {}, -1, -1, {}})));
    }
}

TEST_CASE("descriptor validation names the violated pattern") {
    Graph tri = decode(7, 3);
    Graph K5 = complete(5);
    CHECK_THROWS_AS(apply_step(tri, {StepKind::H1, {1, 0}, {}, -1, -1, {}}),
                    std::invalid_argument);  // unsorted
    CHECK_THROWS_AS(apply_step(tri, {StepKind::H1, {0, 0}, {}, -1, -1, {}}),
                    std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(apply_step(tri, {StepKind::H1, {0, 3}, {}, -1, -1, {}}),
                    std::invalid_argument);  // out of range
    CHECK_THROWS_AS(apply_step(tri, {StepKind::H1, {0}, {}, -1, -1, {}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_step(K5, {StepKind::H2a, {0, 1, 2}, {{0, 1}, {2, 3}}, -1, -1, {}}),
                    std::invalid_argument);  // too many removals
    CHECK_THROWS_AS(apply_step(tri, {StepKind::H2a, {0, 1, 2}, {{1, 0}}, -1, -1, {}}),
                    std::invalid_argument);  // malformed edge
    // removed endpoints must be attached
    CHECK_THROWS_AS(apply_step(K5, {StepKind::H3d2, {0, 1, 2, 3}, {{0, 4}}, -1, -1, {}}),
                    std::invalid_argument);
    // 3x requires vertex-disjoint edges
    CHECK_THROWS_AS(apply_step(K5, {StepKind::H3d3x, {0, 1, 2, 3, 4}, {{0, 1}, {1, 2}}, -1, -1, {}}),
                    std::invalid_argument);
    // 3v requires exactly one shared vertex
    CHECK_THROWS_AS(apply_step(K5, {StepKind::H3d3v, {0, 1, 2, 3, 4}, {{0, 1}, {2, 3}}, -1, -1, {}}),
                    std::invalid_argument);
    // vertex split: moved vertices must neighbour the split vertex
    Graph path = Graph(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    StepDescriptor bad;
    bad.kind = StepKind::VertexSplit;
    bad.split_vertex = 0;
    bad.split_partner = 1;
    bad.moved = {2};
    bad.removed = {{0, 2}};
    bad.attach = {0, 1, 2};
    CHECK_THROWS_AS(apply_step(path, bad), std::invalid_argument);
}

TEST_CASE("step enumeration is complete and duplicate-free") {
    SUBCASE("triangle") {
        CHECK(enumerate_steps(decode(7, 3), 2, {StepKind::H1}).size() == 3);
        auto h2 = enumerate_steps(decode(7, 3), 2,
                                  {StepKind::H2a, StepKind::H2b, StepKind::H2c});
        CHECK(h2.size() == 3);  // 3 edges, one third-vertex choice each
        for (const auto& s : h2) CHECK(s.kind == StepKind::H2a);
    }
    SUBCASE("three-prism H2 subtypes partition the choices") {
        Graph prism = decode(7916, 6);
        auto all = enumerate_steps(
            prism, 2, {StepKind::H2a, StepKind::H2b, StepKind::H2c});
        CHECK(all.size() == 9 * 4);
        std::set<decltype(descriptor_key(all.front()))> keys;
        for (const auto& s : all) {
            keys.insert(descriptor_key(s));
            auto [u, w] = s.removed.front();
            int x = -1;
            for (int v : s.attach)
                if (v != u && v != w) x = v;
            int aux = (prism.has_edge(u, x) ? 1 : 0) + (prism.has_edge(w, x) ? 1 : 0);
            StepKind expect =
                aux == 2 ? StepKind::H2a : aux == 1 ? StepKind::H2b : StepKind::H2c;
            CHECK(s.kind == expect);
        }
        CHECK(keys.size() == all.size());
    }
    SUBCASE("type 3 on K5 splits by the shared-vertex pattern") {
        Graph K5 = complete(5);
        CHECK(enumerate_steps(K5, 3, {StepKind::H3d3x}).size() == 15);  // 15 disjoint pairs
        CHECK(enumerate_steps(K5, 3, {StepKind::H3d3v}).size() == 30);  // 30 sharing pairs
        CHECK(enumerate_steps(complete(4), 3, {StepKind::H3d2}).size() == 6);
    }
    SUBCASE("vertex split count follows the neighbourhood subsets") {
        // per split vertex c: deg(c) partner choices x 2^(deg(c)-1) subsets
        Graph tri = decode(7, 3);
        CHECK(enumerate_steps(tri, 2, {StepKind::VertexSplit}).size() == 3 * 2 * 2);
    }
    CHECK_THROWS_AS(enumerate_steps(decode(7, 3), 3, {StepKind::H1}), std::invalid_argument);
}

TEST_CASE("every applied step keeps the counting condition") {
    for (const GraphListEntry& e : generate_up_to(5, 2)) {
        Graph g = decode(e.code, e.n);
        std::vector<StepKind> kinds = default_kinds(2);
        kinds.push_back(StepKind::VertexSplit);
        for (const StepDescriptor& s : enumerate_steps(g, 2, kinds)) {
            Graph out = apply_step(g, s);
            CHECK(out.vertex_count() == g.vertex_count() + 1);
            CHECK(out.edge_count() == 2 * out.vertex_count() - 3);
            CHECK(is_laman(out));  // edge splitting and vertex splitting preserve tightness
        }
    }
    for (BigInt code : {BigInt(63), BigInt(511)}) {
        Graph g = decode(code, code == 63 ? 4 : 5);
        for (const StepDescriptor& s : enumerate_steps(g, 3, default_kinds(3))) {
            Graph out = apply_step(g, s);
            CHECK(out.edge_count() == 3 * out.vertex_count() - 6);
        }
    }
}

TEST_CASE("a 2c split of the three-prism reaches the listed 7-vertex graph") {
    Graph prism = decode(7916, 6);
    Graph target = decode(481867, 7);
    bool reached = false;
    for (const StepDescriptor& s : enumerate_steps(prism, 2, {StepKind::H2c}))
        reached = reached || is_isomorphic(apply_step(prism, s), target);
    CHECK(reached);
}

TEST_CASE("generation matches the brute-force census") {
    auto levels = by_level(generate_up_to(6, 2));
    CHECK(levels[2].size() == 1);
    CHECK(levels[3] == std::vector<BigInt>{canonical_code(decode(7, 3))});
    for (int n = 4; n <= 6; ++n) {
        std::set<BigInt> brute = laman_classes_brute_force(n);
        CHECK(levels[n].size() == brute.size());
        std::set<BigInt> got(levels[n].begin(), levels[n].end());
        CHECK(got == brute);
    }
    CHECK(levels[5].size() == 3);
    CHECK(levels[6].size() == 13);
}

TEST_CASE("3D generation reaches the known candidates") {
    auto levels = by_level(generate_up_to(6, 3));
    CHECK(levels[3] == std::vector<BigInt>{canonical_code(decode(7, 3))});
    CHECK(levels[4] == std::vector<BigInt>{canonical_code(decode(63, 4))});
    CHECK(levels[5] == std::vector<BigInt>{canonical_code(decode(511, 5))});
    std::set<BigInt> six(levels[6].begin(), levels[6].end());
    CHECK(six.count(canonical_code(decode(16350, 6))));
    Graph flex(6);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                        {1, 3}, {2, 3}, {0, 5}, {1, 5}, {2, 5},
                                                        {3, 5}, {4, 5}})
        flex.add_edge(u, v);
    CHECK(six.count(canonical_code(flex)));  // the non-rigid type-3v construction appears
}

TEST_CASE("generation is deterministic across worker counts and spilling") {
    std::vector<GraphListEntry> plain = generate_up_to(6, 2);

    GenerateOptions two_jobs;
    two_jobs.jobs = 2;
    std::vector<GraphListEntry> parallel = generate_up_to(6, 2, two_jobs);
    REQUIRE(parallel.size() == plain.size());
    for (size_t i = 0; i < plain.size(); ++i) {
        CHECK(parallel[i].n == plain[i].n);
        CHECK(parallel[i].code == plain[i].code);
    }

    fs::path dir = fs::temp_directory_path() / "rigidity-test-spill";
    fs::remove_all(dir);
    GenerateOptions spill;
    spill.state_dir = dir.string();
    spill.spill_threshold = 3;
    GenerateStats stats;
    spill.stats = &stats;
    std::vector<GraphListEntry> spilled = generate_up_to(6, 2, spill);
    CHECK(stats.spill_files > 0);
    REQUIRE(spilled.size() == plain.size());
    for (size_t i = 0; i < plain.size(); ++i) CHECK(spilled[i].code == plain[i].code);
    fs::remove_all(dir);
}

TEST_CASE("interrupted runs resume from the last complete level") {
    fs::path dir = fs::temp_directory_path() / "rigidity-test-resume";
    fs::remove_all(dir);
    GenerateOptions opts;
    opts.state_dir = dir.string();
    generate_up_to(5, 2, opts);
    CHECK(fs::exists(dir / "level_5.graphs"));

    GenerateStats stats;
    opts.stats = &stats;
    std::vector<GraphListEntry> resumed = generate_up_to(7, 2, opts);
    CHECK(stats.levels_resumed == 4);  // levels 2..5 came from disk
    std::vector<GraphListEntry> fresh = generate_up_to(7, 2);
    REQUIRE(resumed.size() == fresh.size());
    for (size_t i = 0; i < fresh.size(); ++i) CHECK(resumed[i].code == fresh[i].code);
    CHECK(by_level(fresh)[7].size() == 70);
    fs::remove_all(dir);
}

TEST_CASE("generation input validation") {
    CHECK_THROWS_AS(generate_up_to(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_up_to(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(generate_up_to(17, 2), std::invalid_argument);
    GenerateOptions bad;
    bad.kinds = {StepKind::H1, StepKind::H3d1};
    CHECK_THROWS_AS(generate_up_to(5, 2, bad), std::invalid_argument);
}

TEST_CASE("step kind names round-trip") {
    for (StepKind k :
         {StepKind::H1, StepKind::H2a, StepKind::H2b, StepKind::H2c, StepKind::VertexSplit,
          StepKind::H3d1, StepKind::H3d2, StepKind::H3d3x, StepKind::H3d3v}) {
        CHECK(parse_step_kind(to_string(k)) == k);
        CHECK(step_dimension(k) == (to_string(k)[0] == '3' || k == StepKind::H3d1 ? 3 : 2));
    }
    CHECK_THROWS_AS(parse_step_kind("h9"), std::invalid_argument);
}