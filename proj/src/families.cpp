#include "rigidity/families.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <utility>

#include "rigidity/henneberg.hpp"

namespace rigidity {

namespace {

void require_tight(const Graph& g, const char* op) {
    if (!is_laman(g))
        throw std::invalid_argument(std::string(op) + ": input graph is not (2,3)-tight");
}

std::vector<int> vertex_degrees(const Graph& g) {
    std::vector<int> degrees(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
    return degrees;
}

using Triangle = std::array<int, 3>;

std::vector<Triangle> triangles_of(const Graph& g) {
    std::vector<Triangle> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int w = v + 1; w < g.vertex_count(); ++w)
                if (g.has_edge(u, w) && g.has_edge(v, w)) out.push_back({u, v, w});
        }
    return out;
}

bool edge_disjoint(const Triangle& a, const Triangle& b) {
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) edges.insert({a[i], a[j]});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (edges.count({b[i], b[j]})) return false;
    return true;
}

// True if relabeling position i to sigma(i) maps every edge of g (with
// vertices in positions given by cycle) onto an edge.
bool invariant_under(const Graph& g, const std::vector<Vertex>& cycle,
                     const std::vector<int>& pos, const std::vector<int>& sigma) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            if (!g.has_edge(cycle[sigma[pos[u]]], cycle[sigma[pos[v]]])) return false;
        }
    return true;
}

}  // namespace

FamilyReport in_T(const Graph& g) {
    require_tight(g, "in_T");
    FamilyReport r;
    r.family = 'T';
    r.degrees = vertex_degrees(g);
    int n = g.vertex_count();

    r.embedding = planar_embedding(g);
    r.planar = r.embedding.has_value();
    if (r.embedding) r.faces = face_count(g, *r.embedding);

    std::tie(r.three_cycles, r.four_cycles) = count_short_cycles(g);
    std::vector<Triangle> tris = triangles_of(g);
    r.triangles_edge_disjoint =
        tris.size() == 2 ? edge_disjoint(tris[0], tris[1]) : tris.size() < 2;

    if (!r.planar)
        r.reason = "not planar";
    else if (std::any_of(r.degrees.begin(), r.degrees.end(),
                         [](int d) { return d != 3 && d != 4; }))
        r.reason = "vertex degree outside {3,4}";
    else if (r.three_cycles != 2)
        r.reason = "number of 3-cycles is not 2";
    else if (!r.triangles_edge_disjoint)
        r.reason = "the two 3-cycles share an edge";
    else if (r.four_cycles != n - 3)
        r.reason = "number of 4-cycles is not n-3";
    else if (r.faces != n - 1)
        r.reason = "embedding face count is not n-1";
    r.verdict = r.reason.empty();
    return r;
}

FamilyReport in_S(const Graph& g) {
    require_tight(g, "in_S");
    FamilyReport r;
    r.family = 'S';
    r.degrees = vertex_degrees(g);
    std::tie(r.three_cycles, r.four_cycles) = count_short_cycles(g);
    int n = g.vertex_count();

    bool hamiltonian = false;
    for_each_hamiltonian_cycle(g, [&](const std::vector<Vertex>& cycle) {
        hamiltonian = true;
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
        std::vector<int> sigma(n);
        if (n % 2 == 0) {
            for (int i = 0; i < n; ++i) sigma[i] = (i + n / 2) % n;
            if (invariant_under(g, cycle, pos, sigma)) {
                r.hamiltonian = cycle;
                r.symmetry = "half-turn";
                return false;
            }
        } else {
            for (int k = 0; k < n; ++k) {
                for (int i = 0; i < n; ++i) sigma[i] = ((k - i) % n + n) % n;
                if (invariant_under(g, cycle, pos, sigma)) {
                    r.hamiltonian = cycle;
                    r.symmetry = "reflection";
                    // the axis fixes the unique position i with 2i = k (mod n)
                    r.axis_vertex = cycle[k % 2 == 0 ? k / 2 : (k + n) / 2];
                    return false;
                }
            }
        }
        return true;
    });

    if (r.hamiltonian)
        r.verdict = true;
    else
        r.reason = hamiltonian ? "no circular embedding is symmetric" : "not Hamiltonian";
    return r;
}

std::vector<FamilyMatch> search_family(int n, char family, bool with_counts,
                                       const CountConfig& config) {
    if (family != 'T' && family != 'S')
        throw std::invalid_argument("search_family: family must be 'T' or 'S'");
    std::vector<FamilyMatch> out;
    for (const GraphListEntry& e : generate_up_to(n, 2)) {
        if (e.n != n) continue;
        Graph g = decode(e.code, e.n);
        FamilyReport report = family == 'T' ? in_T(g) : in_S(g);
        if (!report.verdict) continue;
        FamilyMatch match{e.code, e.n, std::move(report), std::nullopt};
        if (with_counts) match.count = count_realizations(g, 2, config).value;
        out.push_back(std::move(match));
    }
    std::sort(out.begin(), out.end(), [](const FamilyMatch& a, const FamilyMatch& b) {
        if (a.count != b.count) {
            if (!a.count) return false;
            if (!b.count) return true;
            return *a.count > *b.count;
        }
        return a.code < b.code;
    });
    return out;
}

}  // namespace rigidity
