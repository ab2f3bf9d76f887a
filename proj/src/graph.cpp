#include "rigidity/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rigidity {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    adj_.assign(static_cast<size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if ((adj_[u] >> v) & 1u) throw std::invalid_argument("duplicate edge");
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
    ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!((adj_[u] >> v) & 1u)) throw std::invalid_argument("edge not present");
    adj_[u] &= ~(1u << v);
    adj_[v] &= ~(1u << u);
    --m_;
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return __builtin_popcount(adj_[v]);
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (std::uint32_t m = adj_[v]; m; m &= m - 1) out.push_back(__builtin_ctz(m));
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (std::uint32_t m = adj_[u] >> (u + 1) << (u + 1); m; m &= m - 1)
            out.emplace_back(u, __builtin_ctz(m));
    return out;
}

std::vector<int> Graph::degree_profile() const {
    std::vector<int> d(static_cast<size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) d[v] = __builtin_popcount(adj_[v]);
    std::sort(d.begin(), d.end());
    return d;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m; m &= m - 1) next |= adj_[__builtin_ctz(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n_ == 31 ? 0x7fffffffu : (1u << n_) - 1u);
}

Graph Graph::induced_subgraph(std::uint32_t mask) const {
    std::vector<Vertex> verts;
    for (std::uint32_t m = mask; m; m &= m - 1) {
        Vertex v = __builtin_ctz(m);
        check_vertex(v);
        verts.push_back(v);
    }
    Graph out(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Vertex Graph::add_vertex() {
    if (n_ >= max_vertices) throw std::invalid_argument("vertex limit reached");
    adj_.push_back(0);
    return n_++;
}

int code_bits(int n) {
    return n * (n - 1) / 2;
}

BigInt encode(const Graph& g) {
    const int n = g.vertex_count();
    const int bits = code_bits(n);
    BigInt code = 0;
    int k = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j, ++k)
            if (g.has_edge(i, j)) boost::multiprecision::bit_set(code, static_cast<unsigned>(bits - 1 - k));
    return code;
}

Graph decode(const BigInt& code, int n) {
    if (n < 0 || n > Graph::max_vertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    if (code < 0) throw std::invalid_argument("negative graph code");
    const int bits = code_bits(n);
    if (code > 0 && static_cast<int>(boost::multiprecision::msb(code)) >= bits)
        throw std::invalid_argument("graph code needs more than " + std::to_string(n) + " vertices");
    Graph g(n);
    int k = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j, ++k)
            if (boost::multiprecision::bit_test(code, static_cast<unsigned>(bits - 1 - k))) g.add_edge(i, j);
    return g;
}

int infer_vertex_count(const BigInt& code) {
    if (code < 0) throw std::invalid_argument("negative graph code");
    const int bit_length = code == 0 ? 0 : static_cast<int>(boost::multiprecision::msb(code)) + 1;
    int n = 1;
    while (code_bits(n) < bit_length) ++n;
    return n;
}

Graph decode_min(const BigInt& code) {
    return decode(code, infer_vertex_count(code));
}

int canonical_max_vertices() {
    return 16;
}

namespace {

// Iterated color refinement; color ids are ranks of sorted signatures, so the
// result depends only on the isomorphism class.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (Vertex u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

// Backtracking over color-consistent labelings, minimizing the adjacency
// bitstring read in slot order. best_len is the number of leading chunks of
// best_chunks that are known optimal for the current path prefix; the search
// keeps the invariant chunks[0..k-1] == best_chunks[0..k-1] on entry to
// dfs(k), so a single chunk comparison decides pruning.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> color;
    std::vector<int> target;           // required color per slot
    std::vector<Vertex> slot;          // slot -> vertex
    std::vector<int> pos;              // vertex -> slot
    std::uint32_t used = 0;
    std::vector<std::uint32_t> best_chunks;
    int best_len = 0;
    std::vector<Vertex> best_perm;

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.vertex_count()), color(refine_colors(graph)),
          pos(static_cast<size_t>(n), -1), best_chunks(static_cast<size_t>(n), 0) {
        target = color;
        std::sort(target.begin(), target.end());
    }

    bool twins(Vertex u, Vertex v) const {
        std::uint32_t mu = g.neighbors_mask(u) & ~(1u << v);
        std::uint32_t mv = g.neighbors_mask(v) & ~(1u << u);
        return mu == mv;
    }

    void dfs(int k) {
        if (k == n) {
            best_perm = slot;
            best_len = n;
            return;
        }
        std::vector<std::pair<std::uint32_t, Vertex>> cands;
        for (Vertex v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            if (color[v] != target[k]) continue;
            std::uint32_t chunk = 0;
            for (std::uint32_t m = g.neighbors_mask(v) & used; m; m &= m - 1)
                chunk |= 1u << (k - 1 - pos[__builtin_ctz(m)]);
            cands.emplace_back(chunk, v);
        }
        std::sort(cands.begin(), cands.end());
        std::vector<Vertex> tried;
        for (auto [chunk, v] : cands) {
            if (best_len > k && chunk > best_chunks[k]) break;
            bool dup = false;
            for (Vertex u : tried)
                if (twins(u, v)) { dup = true; break; }
            if (dup) continue;
            tried.push_back(v);
            if (best_len > k && chunk < best_chunks[k]) best_len = k;
            if (best_len == k) {
                best_chunks[k] = chunk;
                best_len = k + 1;
            }
            slot.push_back(v);
            pos[v] = k;
            used |= 1u << v;
            dfs(k + 1);
            used &= ~(1u << v);
            pos[v] = -1;
            slot.pop_back();
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > canonical_max_vertices())
        throw std::invalid_argument("canonical form supports at most " +
                                    std::to_string(canonical_max_vertices()) + " vertices");
    if (n <= 1) return g;
    CanonSearch search(g);
    search.dfs(0);
    Graph out(n);
    std::vector<int> where(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) where[search.best_perm[k]] = k;
    for (auto [u, v] : g.edges()) out.add_edge(where[u], where[v]);
    return out;
}

BigInt canonical_code(const Graph& g) {
    return encode(canonical_form(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_profile() != b.degree_profile()) return false;
    return canonical_code(a) == canonical_code(b);
}

std::vector<GraphListEntry> read_graph_list(std::istream& in) {
    std::vector<GraphListEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int n;
        std::string code_text;
        if (!(ls >> n)) {
            std::string rest;
            if (ls.clear(), ls >> rest)
                throw std::invalid_argument("graph list line " + std::to_string(lineno) + ": bad vertex count");
            continue;  // blank or comment-only line
        }
        if (!(ls >> code_text))
            throw std::invalid_argument("graph list line " + std::to_string(lineno) + ": missing code");
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("graph list line " + std::to_string(lineno) + ": trailing tokens");
        out.push_back({n, parse_code(code_text)});
    }
    return out;
}

void write_graph_list_line(std::ostream& out, int n, const BigInt& code) {
    out << n << '\t' << code.str() << '\n';
}

BigInt parse_code(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty graph code");
    for (char c : text)
        if (c < '0' || c > '9') throw std::invalid_argument("bad graph code: " + text);
    return BigInt(text);
}

}  // namespace rigidity
