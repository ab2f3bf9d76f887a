#include "rigidity/bounds.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rigidity/analysis.hpp"

namespace rigidity {

namespace {

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument("bound: " + message);
}

Graph triangle() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    return g;
}

// Resolves |V| / |W| against the supplied graphs and checks the shared
// numeric preconditions.
std::pair<int, int> resolve_sizes(const BoundSpec& spec, int expected_glue) {
    int V = spec.base_vertices;
    if (spec.base_graph) {
        if (V == 0) V = spec.base_graph->vertex_count();
        require(V == spec.base_graph->vertex_count(),
                "base_vertices disagrees with the base graph");
    }
    int W = spec.glue_vertices;
    if (spec.glue_graph) {
        if (W == 0) W = spec.glue_graph->vertex_count();
        require(W == spec.glue_graph->vertex_count(),
                "glue_vertices disagrees with the glue graph");
    }
    if (W == 0) W = expected_glue;
    require(V > 0, "base vertex count is required");
    require(W >= 2, "glue must have at least 2 vertices");
    require(W < V, "glue must be smaller than the base");
    require(spec.base_count >= 1, "base count must be positive");
    require(spec.glue_count >= 1, "glue count must be positive");
    require(spec.base_count >= spec.glue_count, "base count must be at least the glue count");
    require(spec.n >= W, "target vertex count is below the glue size");
    return {V, W};
}

// 2^((n-W) mod (V-W)) * LH * (LG/LH)^floor((n-W)/(V-W)), exact with floor flag.
BoundResult formula(int n, int V, int W, const BigInt& LG, const BigInt& LH) {
    BoundResult r;
    int span = V - W;
    r.k = (n - W) / span;
    r.padding = (n - W) % span;
    BigInt num = (BigInt(1) << r.padding) * LH * boost::multiprecision::pow(LG, r.k);
    BigInt den = boost::multiprecision::pow(LH, r.k);
    r.value = num / den;
    r.exact = num % den == 0;
    long double ratio = LG.convert_to<long double>() / LH.convert_to<long double>();
    r.rate = static_cast<double>(std::exp(std::log(ratio) / span));
    return r;
}

}  // namespace

BoundResult caterpillar_bound(const BoundSpec& spec) {
    require(spec.dimension == 2, "the caterpillar construction is for the plane");
    require(spec.n >= 2, "target vertex count must be at least 2");
    require(!spec.glue_graph && (spec.glue_vertices == 0 || spec.glue_vertices == 2) &&
                spec.glue_count == 1,
            "the caterpillar glues along an edge (2 vertices, count 1)");
    auto [V, W] = resolve_sizes(spec, 2);
    require(W == 2, "the caterpillar glues along an edge");
    if (spec.base_graph) require(is_laman(*spec.base_graph), "base graph is not (2,3)-tight");
    return formula(spec.n, V, 2, spec.base_count, 1);
}

BoundResult fan_bound(const BoundSpec& spec) {
    require(spec.dimension == 2, "the fan construction is for the plane");
    require(spec.n >= 3, "target vertex count must be at least 3");
    require(!spec.glue_graph && (spec.glue_vertices == 0 || spec.glue_vertices == 3),
            "the fan glues along a triangle");
    auto [V, W] = resolve_sizes(spec, 3);
    require(W == 3, "the fan glues along a triangle");
    require(spec.base_graph.has_value(), "fan validation needs the base graph");
    require(is_laman(*spec.base_graph), "base graph is not (2,3)-tight");
    require(contains_subgraph(*spec.base_graph, triangle()),
            "base graph has no 3-cycle, so the fan construction does not apply");
    return formula(spec.n, V, 3, spec.base_count, 2);
}

BoundResult generalized_fan_bound(const BoundSpec& spec) {
    require(spec.dimension == 2, "use the 3D variant for dimension 3");
    require(spec.base_graph.has_value() && spec.glue_graph.has_value(),
            "generalized fan validation needs both graphs");
    auto [V, W] = resolve_sizes(spec, 0);
    require(is_laman(*spec.base_graph), "base graph is not (2,3)-tight");
    require(is_laman(*spec.glue_graph), "glue graph is not (2,3)-tight");
    require(contains_subgraph(*spec.base_graph, *spec.glue_graph),
            "glue graph is not a subgraph of the base graph");
    return formula(spec.n, V, W, spec.base_count, spec.glue_count);
}

BoundResult generalized_fan_bound_3d(const BoundSpec& spec) {
    require(spec.dimension == 3, "use the 2D variant for dimension 2");
    require(spec.base_graph.has_value() && spec.glue_graph.has_value(),
            "generalized fan validation needs both graphs");
    auto [V, W] = resolve_sizes(spec, 0);
    require(W >= 3, "3D gluing needs at least a triangle");
    require(satisfies_3d_count(*spec.base_graph), "base graph fails the 3D counting condition");
    require(satisfies_3d_count(*spec.glue_graph), "glue graph fails the 3D counting condition");
    require(contains_subgraph(*spec.base_graph, *spec.glue_graph),
            "glue graph is not a subgraph of the base graph");
    return formula(spec.n, V, W, spec.base_count, spec.glue_count);
}

BoundResult evaluate_bound(BoundKind kind, const BoundSpec& spec) {
    switch (kind) {
        case BoundKind::Caterpillar: return caterpillar_bound(spec);
        case BoundKind::Fan: return fan_bound(spec);
        case BoundKind::GeneralizedFan: return generalized_fan_bound(spec);
        case BoundKind::GeneralizedFan3D: return generalized_fan_bound_3d(spec);
    }
    throw std::invalid_argument("bound: unknown construction");
}

BigInt theorem_bound(int dimension, int n) {
    require(n >= 3, "target vertex count must be at least 3");
    if (dimension == 2)
        return 2 * (BigInt(1) << ((n - 3) % 15)) *
               boost::multiprecision::pow(BigInt(976908), (n - 3) / 15);
    if (dimension == 3)
        return (BigInt(1) << ((n - 3) % 7)) *
               boost::multiprecision::pow(BigInt(2560), (n - 3) / 7);
    throw std::invalid_argument("bound: dimension must be 2 or 3");
}

std::string format_rate(double rate) {
    long long scaled = static_cast<long long>(std::floor(rate * 100000.0 + 0.5));
    std::ostringstream out;
    out << scaled / 100000 << '.';
    std::string frac = std::to_string(scaled % 100000);
    out << std::string(5 - frac.size(), '0') << frac;
    return out.str();
}

namespace {

std::string code_or_blank(const std::optional<Graph>& g) {
    return g ? encode(*g).str() : std::string();
}

}  // namespace

std::string growth_table_csv(const std::vector<GrowthEntry>& entries) {
    std::ostringstream out;
    out << "n,construction,base_code,glue_code,bound,rate\n";
    for (const GrowthEntry& e : entries) {
        BoundResult r = evaluate_bound(e.kind, e.spec);
        out << e.spec.n << ',' << e.construction << ',' << code_or_blank(e.spec.base_graph) << ','
            << code_or_blank(e.spec.glue_graph) << ',' << r.value << ',' << format_rate(r.rate)
            << '\n';
    }
    return out.str();
}

std::string growth_plot_script(const std::vector<GrowthEntry>& entries) {
    std::map<std::string, std::map<int, double>> columns;
    for (const GrowthEntry& e : entries)
        columns[e.construction][e.spec.n] = evaluate_bound(e.kind, e.spec).rate;
    std::ostringstream out;
    out << "set xlabel 'n'\nset ylabel 'growth rate'\nset key left top\nplot";
    bool first = true;
    for (const auto& [label, _] : columns) {
        out << (first ? " " : ", ") << "'-' using 1:2 with linespoints title '" << label << "'";
        first = false;
    }
    out << '\n';
    for (const auto& [label, points] : columns) {
        for (const auto& [n, rate] : points) out << n << ' ' << format_rate(rate) << '\n';
        out << "e\n";
    }
    return out.str();
}

}  // namespace rigidity
