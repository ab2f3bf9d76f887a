#include "rigidity/analysis.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rigidity {

namespace {

// Lee-Streinu pebble game. Each vertex holds up to k pebbles; inserting an
// edge needs l+1 pebbles on its endpoints, gathered by reversing directed
// paths to free pebbles.
struct PebbleGame {
    int k, l, n;
    std::vector<int> pebbles;
    std::vector<std::uint32_t> out;  // orientation of inserted edges

    PebbleGame(int n, int k, int l)
        : k(k), l(l), n(n), pebbles(static_cast<size_t>(n), k), out(static_cast<size_t>(n), 0) {}

    bool find_pebble(Vertex root, std::uint32_t forbidden) {
        std::vector<Vertex> stack{root};
        std::vector<Vertex> parent(static_cast<size_t>(n), -1);
        std::uint32_t seen = 1u << root;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (pebbles[v] > 0 && !((forbidden >> v) & 1u)) {
                // reverse the path root -> v and move one pebble to root
                Vertex cur = v;
                while (cur != root) {
                    Vertex prev = parent[cur];
                    out[prev] &= ~(1u << cur);
                    out[cur] |= 1u << prev;
                    cur = prev;
                }
                --pebbles[v];
                ++pebbles[root];
                return true;
            }
            for (std::uint32_t m = out[v] & ~seen; m; m &= m - 1) {
                Vertex w = __builtin_ctz(m);
                seen |= 1u << w;
                parent[w] = v;
                stack.push_back(w);
            }
        }
        return false;
    }

    bool insert_edge(Vertex u, Vertex v) {
        while (pebbles[u] + pebbles[v] < l + 1) {
            if (!find_pebble(u, (1u << u) | (1u << v)) &&
                !find_pebble(v, (1u << u) | (1u << v)))
                return false;
        }
        if (pebbles[u] == 0) std::swap(u, v);
        --pebbles[u];
        out[u] |= 1u << v;
        return true;
    }
};

}  // namespace

bool pebble_game_tight(const Graph& g, int k, int l) {
    if (k <= 0 || l < 0 || l >= 2 * k)
        throw std::invalid_argument("pebble game requires k > 0 and 0 <= l < 2k");
    const int n = g.vertex_count();
    if (g.edge_count() != k * n - l) return false;
    PebbleGame game(n, k, l);
    for (auto [u, v] : g.edges())
        if (!game.insert_edge(u, v)) return false;
    return true;
}

bool is_laman(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("is_laman needs at least 2 vertices");
    return pebble_game_tight(g, 2, 3);
}

bool satisfies_3d_count(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("satisfies_3d_count needs at least 3 vertices");
    if (n > 22) throw std::invalid_argument("satisfies_3d_count supports at most 22 vertices");
    if (g.edge_count() != 3 * n - 6) return false;
    // Subsets of size <= 4 can never violate 3|S|-6 in a simple graph.
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t s = 0; s <= full; ++s) {
        const int size = __builtin_popcount(s);
        if (size < 5) continue;
        int edges = 0;
        for (std::uint32_t m = s; m; m &= m - 1)
            edges += __builtin_popcount(g.neighbors_mask(__builtin_ctz(m)) & s);
        if (edges / 2 > 3 * size - 6) return false;
    }
    return true;
}

std::pair<long long, long long> count_short_cycles(const Graph& g) {
    const int n = g.vertex_count();
    long long c3 = 0, c4 = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const int common = __builtin_popcount(g.neighbors_mask(u) & g.neighbors_mask(v));
            if (g.has_edge(u, v)) c3 += common;
            // every 4-cycle is counted once per diagonal pair
            c4 += static_cast<long long>(common) * (common - 1) / 2;
        }
    return {c3 / 3, c4 / 2};
}

std::optional<PlanarEmbedding> planar_embedding(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::no_property,
                                             boost::property<boost::edge_index_t, int>>;
    const int n = g.vertex_count();
    BoostGraph bg(static_cast<size_t>(n));
    int index = 0;
    for (auto [u, v] : g.edges())
        boost::put(boost::edge_index, bg, boost::add_edge(u, v, bg).first, index++);

    using EdgeDescriptor = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDescriptor>> embedding(static_cast<size_t>(std::max(n, 1)));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data());
    if (!planar) return std::nullopt;

    PlanarEmbedding out;
    out.rotation.resize(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (const auto& e : embedding[v]) {
            Vertex a = static_cast<Vertex>(boost::source(e, bg));
            Vertex b = static_cast<Vertex>(boost::target(e, bg));
            out.rotation[v].push_back(a == v ? b : a);
        }
    return out;
}

bool is_planar(const Graph& g) {
    return planar_embedding(g).has_value();
}

int face_count(const Graph& g, const PlanarEmbedding& embedding) {
    if (!g.is_connected()) throw std::invalid_argument("face_count needs a connected graph");
    const int n = g.vertex_count();
    // position of u within v's rotation
    std::vector<std::map<Vertex, size_t>> pos(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (size_t i = 0; i < embedding.rotation[v].size(); ++i)
            pos[v][embedding.rotation[v][i]] = i;

    std::set<std::pair<Vertex, Vertex>> visited;  // directed half-edges
    int faces = 0;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : embedding.rotation[v]) {
            if (visited.count({v, w})) continue;
            ++faces;
            Vertex a = v, b = w;
            while (!visited.count({a, b})) {
                visited.insert({a, b});
                // next half-edge of the face: successor of a in b's rotation
                const auto& rot = embedding.rotation[b];
                size_t i = pos[b].at(a);
                Vertex c = rot[(i + 1) % rot.size()];
                a = b;
                b = c;
            }
        }
    return faces;
}

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g) {
    std::optional<std::vector<Vertex>> found;
    for_each_hamiltonian_cycle(g, [&](const std::vector<Vertex>& cycle) {
        found = cycle;
        return false;
    });
    return found;
}

void for_each_hamiltonian_cycle(const Graph& g,
                                const std::function<bool(const std::vector<Vertex>&)>& fn) {
    const int n = g.vertex_count();
    if (n < 3 || !g.is_connected()) return;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) < 2) return;

    std::vector<Vertex> path{0};
    std::uint32_t used = 1u;
    bool stop = false;

    auto dfs = [&](auto&& self, Vertex v) -> void {
        if (stop) return;
        if (static_cast<int>(path.size()) == n) {
            // close the cycle; path[1] < path.back() picks one direction
            if (g.has_edge(v, 0) && path[1] < path.back())
                if (!fn(path)) stop = true;
            return;
        }
        for (std::uint32_t m = g.neighbors_mask(v) & ~used; m; m &= m - 1) {
            Vertex w = __builtin_ctz(m);
            used |= 1u << w;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used &= ~(1u << w);
            if (stop) return;
        }
    };
    dfs(dfs, 0);
}

namespace {

bool subgraph_search(const Graph& host, const Graph& pattern, std::vector<int>& order,
                     size_t depth, std::vector<Vertex>& image, std::uint32_t used) {
    if (depth == order.size()) return true;
    const Vertex p = order[depth];
    for (Vertex h = 0; h < host.vertex_count(); ++h) {
        if ((used >> h) & 1u) continue;
        if (host.degree(h) < pattern.degree(p)) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; ++i)
            if (pattern.has_edge(p, order[i]) && !host.has_edge(h, image[order[i]])) ok = false;
        if (!ok) continue;
        image[p] = h;
        if (subgraph_search(host, pattern, order, depth + 1, image, used | (1u << h))) return true;
    }
    return false;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
        return false;
    std::vector<int> order(static_cast<size_t>(pattern.vertex_count()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    // high-degree pattern vertices first, connected to already-placed ones when possible
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<Vertex> image(static_cast<size_t>(pattern.vertex_count()), -1);
    return subgraph_search(host, pattern, order, 0, image, 0);
}

}  // namespace rigidity
