#pragma once

#include "rigidity/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rigidity {

// Input to the gluing-construction lower bounds.  The counts are supplied by
// the caller (typically from count_realizations or a reference table); the
// graphs themselves are carried so that structural preconditions can be
// checked.  `base_vertices` / `glue_vertices` may be left at 0 to be derived
// from the graphs.
struct BoundSpec {
    int dimension = 2;
    std::optional<Graph> base_graph;  // G
    int base_vertices = 0;            // |V|
    BigInt base_count = 0;            // number of realizations of G
    std::optional<Graph> glue_graph;  // H, the shared subgraph
    int glue_vertices = 0;            // |W|
    BigInt glue_count = 1;            // number of realizations of H
    int n = 0;                        // target vertex count
};

struct BoundResult {
    BigInt value;       // the lower bound on the maximal realization count
    int k = 0;          // number of glued copies, floor((n-|W|)/(|V|-|W|))
    int padding = 0;    // exponent of the vertex-addition padding, (n-|W|) mod (|V|-|W|)
    bool exact = true;  // false when the rational formula value was floored
    double rate = 0.0;  // per-vertex growth rate (L(G)/L(H))^(1/(|V|-|W|))
};

enum class BoundKind { Caterpillar, Fan, GeneralizedFan, GeneralizedFan3D };

// Chains copies of the base along a shared edge:
// 2^((n-2) mod (|V|-2)) * L(G)^floor((n-2)/(|V|-2)), n >= 2.
BoundResult caterpillar_bound(const BoundSpec& spec);

// Glues copies of the base along a shared triangle (the base must contain
// one): 2^((n-3) mod (|V|-3)) * 2 * (L(G)/2)^floor((n-3)/(|V|-3)), n >= 3.
BoundResult fan_bound(const BoundSpec& spec);

// Glues along an arbitrary tight subgraph H:
// 2^((n-|W|) mod (|V|-|W|)) * L(H) * (L(G)/L(H))^floor((n-|W|)/(|V|-|W|)),
// n >= |W|.  The value is computed exactly; if it is fractional it is
// floored and the result is marked inexact.
BoundResult generalized_fan_bound(const BoundSpec& spec);

// Same formula with 3D realization counts and the 3D counting condition on H.
BoundResult generalized_fan_bound_3d(const BoundSpec& spec);

BoundResult evaluate_bound(BoundKind kind, const BoundSpec& spec);

// Best published closed-form lower bound on the maximal realization count:
// 2D: 2 * 2^((n-3) mod 15) * 976908^floor((n-3)/15)
// 3D:     2^((n-3) mod 7)  * 2560^floor((n-3)/7)
BigInt theorem_bound(int dimension, int n);

// Growth rate rounded half-up to five decimals, e.g. "2.21336".
std::string format_rate(double rate);

struct GrowthEntry {
    BoundKind kind;
    std::string construction;  // column label
    BoundSpec spec;
};

// CSV with header "n,construction,base_code,glue_code,bound,rate"; one row
// per entry, codes blank when the graph was not supplied.
std::string growth_table_csv(const std::vector<GrowthEntry>& entries);

// Gnuplot script drawing rate against n, one line per construction label.
std::string growth_plot_script(const std::vector<GrowthEntry>& entries);

}  // namespace rigidity
