#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rigidity {

using BigInt = boost::multiprecision::cpp_int;
using Vertex = int;

// Undirected simple graph on vertices 0..n-1, adjacency kept as bitmasks.
class Graph {
public:
    static constexpr int max_vertices = 31;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::uint32_t neighbors_mask(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    // Edges as (u,v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Degrees sorted ascending.
    std::vector<int> degree_profile() const;

    bool is_connected() const;

    // Returns the subgraph induced by the vertices in `mask`, relabeled to
    // 0..k-1 in increasing original order.
    Graph induced_subgraph(std::uint32_t mask) const;

    // Appends an isolated vertex and returns its index.
    Vertex add_vertex();

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint32_t> adj_;
};

// Number of adjacency bits for an n-vertex graph, n*(n-1)/2.
int code_bits(int n);

// Flattens the upper triangle of the adjacency matrix row by row into an
// integer; the (0,1) entry becomes the most significant bit.
BigInt encode(const Graph& g);

// Inverse of encode. Throws std::invalid_argument if code has more than
// code_bits(n) bits or n is out of range.
Graph decode(const BigInt& code, int n);

// Smallest n whose adjacency bit budget fits the code.
int infer_vertex_count(const BigInt& code);

// decode() with the vertex count inferred by infer_vertex_count().
Graph decode_min(const BigInt& code);

// Largest n for which canonical_code/is_isomorphic are supported.
int canonical_max_vertices();

// Encoding of a canonical relabeling: equal for isomorphic graphs, distinct
// otherwise. Computed by degree-partition refinement plus backtracking over
// labelings, minimizing the adjacency bitstring. Throws when
// vertex_count() exceeds canonical_max_vertices().
BigInt canonical_code(const Graph& g);

// Canonically relabeled copy of g (encode of it equals canonical_code(g)).
Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// One graph per line as "<n>\t<decimal code>"; '#' starts a comment.
struct GraphListEntry {
    int n;
    BigInt code;
};

std::vector<GraphListEntry> read_graph_list(std::istream& in);
void write_graph_list_line(std::ostream& out, int n, const BigInt& code);

BigInt parse_code(const std::string& text);

}  // namespace rigidity
