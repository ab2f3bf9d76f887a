#include "rigidity/realizations.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "rigidity/analysis.hpp"

namespace rigidity {

namespace {

int expected_edges(int n, int dimension) { return dimension == 2 ? 2 * n - 3 : 3 * n - 6; }

void validate_input(const Graph& g, int dimension) {
    if (dimension != 2 && dimension != 3) throw std::invalid_argument("dimension must be 2 or 3");
    int base = dimension == 2 ? 2 : 3;
    if (g.vertex_count() < base) throw std::invalid_argument("graph too small for this dimension");
    if (g.edge_count() != expected_edges(g.vertex_count(), dimension))
        throw std::invalid_argument("edge count does not match the counting condition");
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
}

// Pin the edge whose endpoints carry the most incident constraints.
std::pair<int, int> select_pin_2d(const Graph& g) {
    std::pair<int, int> best{-1, -1};
    int best_score = -1;
    for (auto [u, v] : g.edges()) {
        int score = g.degree(u) + g.degree(v);
        if (score > best_score) {
            best_score = score;
            best = {u, v};
        }
    }
    if (best.first < 0) throw std::invalid_argument("graph has no edge to pin");
    return best;
}

// Grow the trilateration closure of a triangle: repeatedly absorb any vertex
// with at least three neighbours inside the set.
std::uint32_t trilateration_closure(const Graph& g, std::uint32_t start) {
    std::uint32_t s = start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (s >> v & 1u) continue;
            if (__builtin_popcount(g.neighbors_mask(v) & s) >= 3) {
                s |= 1u << v;
                grew = true;
            }
        }
    }
    return s;
}

struct Pin3d {
    std::array<int, 3> verts{};
    bool fallback = false;
};

Pin3d select_pin_3d(const Graph& g) {
    Pin3d best;
    int best_size = -1;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            std::uint32_t common = g.neighbors_mask(a) & g.neighbors_mask(b);
            for (int c = b + 1; c < n; ++c) {
                if (!(common >> c & 1u)) continue;
                std::uint32_t closure =
                    trilateration_closure(g, (1u << a) | (1u << b) | (1u << c));
                int size = __builtin_popcount(closure);
                if (size > best_size) {
                    best_size = size;
                    best.verts = {a, b, c};
                }
            }
        }
    if (best_size >= 0) return best;
    // triangle-free: frame-pin the first pairwise-nonadjacent triple
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                best.verts = {a, b, c};
                best.fallback = true;
                return best;
            }
        }
    throw std::invalid_argument("no triangle and no independent vertex triple to pin");
}

std::uint32_t draw_nonzero(std::mt19937_64& rng, const PrimeField& f) {
    std::uniform_int_distribution<std::uint64_t> dist(1, f.p - 1);
    return static_cast<std::uint32_t>(dist(rng));
}

// A linear expression in the system variables: sum of +-x_i plus a constant.
struct LinExpr {
    std::vector<std::pair<int, std::uint32_t>> vars;  // (variable, coefficient)
    std::uint32_t constant = 0;
};

LinExpr coord_difference(const CoordSlot& a, const CoordSlot& b, const PrimeField& f) {
    LinExpr e;
    if (a.var >= 0)
        e.vars.push_back({a.var, 1});
    else
        e.constant = f.add(e.constant, a.value);
    if (b.var >= 0)
        e.vars.push_back({b.var, f.p - 1});
    else
        e.constant = f.sub(e.constant, b.value);
    return e;
}

void append_square(std::vector<Term>& ts, const LinExpr& e, const PrimeField& f) {
    auto var_mon = [](int v) {
        Monomial m;
        m.set_exponent(v, 1);
        return m;
    };
    for (size_t i = 0; i < e.vars.size(); ++i) {
        Monomial sq;
        sq.set_exponent(e.vars[i].first, 2);
        ts.push_back({sq, f.mul(e.vars[i].second, e.vars[i].second)});
        for (size_t j = i + 1; j < e.vars.size(); ++j) {
            std::uint32_t c = f.mul(2, f.mul(e.vars[i].second, e.vars[j].second));
            if (c)
                ts.push_back(
                    {Monomial::product(var_mon(e.vars[i].first), var_mon(e.vars[j].first)), c});
        }
        std::uint32_t cross = f.mul(2, f.mul(e.vars[i].second, e.constant));
        if (cross) ts.push_back({var_mon(e.vars[i].first), cross});
    }
    if (e.constant) ts.push_back({Monomial{}, f.mul(e.constant, e.constant)});
}

PinnedSystem assemble(const Graph& g, const PrimeField& f, const EdgeLengthAssignment& lengths,
                      int dimension, const std::vector<std::vector<CoordSlot>>& layout,
                      std::uint32_t pinned_mask, bool all_fixed_skipped) {
    PinnedSystem sys;
    sys.dimension = dimension;
    sys.layout = layout;
    int nv = 0;
    for (const auto& slots : layout)
        for (const CoordSlot& s : slots) nv = std::max(nv, s.var + 1);
    sys.num_vars = nv;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (std::any_of(layout[v].begin(), layout[v].end(),
                        [](const CoordSlot& s) { return s.var < 0; }))
            sys.pinned.push_back(v);
    for (auto [u, v] : g.edges()) {
        bool both_fixed = (pinned_mask >> u & 1u) && (pinned_mask >> v & 1u);
        if (all_fixed_skipped && both_fixed) continue;  // length derived from pin coordinates
        std::vector<Term> ts;
        for (int k = 0; k < dimension; ++k)
            append_square(ts, coord_difference(layout[u][k], layout[v][k], f), f);
        ts.push_back({Monomial{}, f.neg(lengths.at(u, v))});
        sys.equations.push_back(Polynomial(std::move(ts), f));
    }
    return sys;
}

}  // namespace

std::uint32_t EdgeLengthAssignment::at(int u, int v) const {
    auto it = lambda.find({std::min(u, v), std::max(u, v)});
    if (it == lambda.end()) throw std::out_of_range("no length assigned to this edge");
    return it->second;
}

PreprocessResult preprocess(const Graph& g, int dimension) {
    if (dimension != 2 && dimension != 3) throw std::invalid_argument("dimension must be 2 or 3");
    PreprocessResult res;
    res.reduced = g;
    res.original_label.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) res.original_label[v] = v;
    int base = dimension;  // K2 in 2D, triangle in 3D
    while (res.reduced.vertex_count() > base) {
        int n = res.reduced.vertex_count();
        std::uint32_t all = (1u << n) - 1u;
        int found = -1;
        for (int v = 0; v < n && found < 0; ++v) {
            if (res.reduced.degree(v) != dimension) continue;
            if (res.reduced.induced_subgraph(all & ~(1u << v)).is_connected()) found = v;
        }
        if (found < 0) break;
        res.removed.push_back(res.original_label[found]);
        res.original_label.erase(res.original_label.begin() + found);
        res.reduced = res.reduced.induced_subgraph(all & ~(1u << found));
        res.factor *= 2;
    }
    return res;
}

// Lengths are induced from a randomly placed realization whose pinned
// vertices already sit at their fixed coordinates.  This keeps the system
// consistent even for non-rigid graphs, so flexibility shows up as a
// positive-dimensional ideal instead of an empty variety; for rigid graphs
// the induced lengths are generic with high probability.
EdgeLengthAssignment sample_lengths(const Graph& g, int dimension, const PrimeField& field,
                                    std::uint64_t seed) {
    validate_input(g, dimension);
    EdgeLengthAssignment out;
    out.seed = seed;
    out.prime = field.p;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> any(0, field.p - 1);
    int n = g.vertex_count();
    std::vector<std::array<std::uint32_t, 3>> pos(n, {0, 0, 0});
    for (int attempt = 0; attempt < 64; ++attempt) {
        out.lambda.clear();
        out.pin_coords.clear();
        std::uint32_t placed_mask = 0;
        if (dimension == 2) {
            auto [a, b] = select_pin_2d(g);
            std::uint32_t c = draw_nonzero(rng, field);
            out.pin_coords = {c};
            pos[a] = {0, 0, 0};
            pos[b] = {c, 0, 0};
            placed_mask = (1u << a) | (1u << b);
        } else {
            Pin3d pin = select_pin_3d(g);
            auto [a, b, c] = pin.verts;
            pos[a] = {0, 0, 0};
            if (!pin.fallback) {
                std::uint32_t w = draw_nonzero(rng, field);
                std::uint32_t u = draw_nonzero(rng, field);
                std::uint32_t v = draw_nonzero(rng, field);
                out.pin_coords = {w, u, v};
                pos[b] = {w, 0, 0};
                pos[c] = {u, v, 0};
            } else {
                pos[b] = {draw_nonzero(rng, field), 0, 0};
                pos[c] = {draw_nonzero(rng, field), draw_nonzero(rng, field), 0};
            }
            placed_mask = (1u << a) | (1u << b) | (1u << c);
        }
        for (int v = 0; v < n; ++v) {
            if (placed_mask >> v & 1u) continue;
            for (int k = 0; k < dimension; ++k)
                pos[v][k] = static_cast<std::uint32_t>(any(rng));
        }
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            std::uint32_t l = 0;
            for (int k = 0; k < dimension; ++k) {
                std::uint32_t d = field.sub(pos[u][k], pos[v][k]);
                l = field.add(l, field.mul(d, d));
            }
            if (l == 0) {
                ok = false;
                break;
            }
            out.lambda[{u, v}] = l;
        }
        if (ok) {
            out.witness = pos;
            return out;
        }
    }
    throw std::runtime_error("failed to sample nondegenerate edge lengths");
}

PinnedSystem build_system_2d(const Graph& g, const PrimeField& field,
                             const EdgeLengthAssignment& lengths) {
    validate_input(g, 2);
    if (lengths.pin_coords.size() != 1)
        throw std::invalid_argument("length assignment lacks the pinned-edge coordinate");
    auto [a, b] = select_pin_2d(g);
    int n = g.vertex_count();
    if (2 * (n - 2) > Monomial::max_vars)
        throw std::invalid_argument("graph too large for the polynomial backend");
    std::vector<std::vector<CoordSlot>> layout(n, std::vector<CoordSlot>(2));
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v == a) {
            layout[v] = {{-1, 0}, {-1, 0}};
        } else if (v == b) {
            layout[v] = {{-1, lengths.pin_coords[0]}, {-1, 0}};
        } else {
            layout[v] = {{next, 0}, {next + 1, 0}};
            next += 2;
        }
    }
    return assemble(g, field, lengths, 2, layout, (1u << a) | (1u << b), true);
}

PinnedSystem build_system_3d(const Graph& g, const PrimeField& field,
                             const EdgeLengthAssignment& lengths) {
    validate_input(g, 3);
    Pin3d pin = select_pin_3d(g);
    int n = g.vertex_count();
    auto [a, b, c] = pin.verts;
    std::vector<std::vector<CoordSlot>> layout(n, std::vector<CoordSlot>(3));
    int next = 0;
    if (!pin.fallback) {
        if (lengths.pin_coords.size() != 3)
            throw std::invalid_argument("length assignment lacks the pinned-triangle coordinates");
        if (3 * (n - 3) > Monomial::max_vars)
            throw std::invalid_argument("graph too large for the polynomial backend");
        for (int v = 0; v < n; ++v) {
            if (v == a) {
                layout[v] = {{-1, 0}, {-1, 0}, {-1, 0}};
            } else if (v == b) {
                layout[v] = {{-1, lengths.pin_coords[0]}, {-1, 0}, {-1, 0}};
            } else if (v == c) {
                layout[v] = {{-1, lengths.pin_coords[1]}, {-1, lengths.pin_coords[2]}, {-1, 0}};
            } else {
                layout[v] = {{next, 0}, {next + 1, 0}, {next + 2, 0}};
                next += 3;
            }
        }
    } else {
        if (3 * n - 6 > Monomial::max_vars)
            throw std::invalid_argument("graph too large for the polynomial backend");
        for (int v = 0; v < n; ++v) {
            if (v == a) {
                layout[v] = {{-1, 0}, {-1, 0}, {-1, 0}};
            } else if (v == b) {
                layout[v] = {{next, 0}, {-1, 0}, {-1, 0}};
                next += 1;
            } else if (v == c) {
                layout[v] = {{next, 0}, {next + 1, 0}, {-1, 0}};
                next += 2;
            } else {
                layout[v] = {{next, 0}, {next + 1, 0}, {next + 2, 0}};
                next += 3;
            }
        }
    }
    PinnedSystem sys = assemble(g, field, lengths, 3, layout,
                                (1u << a) | (1u << b) | (1u << c), !pin.fallback);
    sys.fallback_pin = pin.fallback;
    return sys;
}

RealizationCount count_realizations(const Graph& g, int dimension, const CountConfig& config) {
    validate_input(g, dimension);
    if (!is_prime(config.prime)) throw std::invalid_argument("configured modulus is not prime");
    if (config.prime < config.prime_floor)
        throw std::invalid_argument("configured prime is below the floor");
    if (config.runs < 1 || config.max_runs < config.runs)
        throw std::invalid_argument("invalid run configuration");

    RealizationCount out;
    PreprocessResult pre;
    if (config.preprocess) {
        pre = preprocess(g, dimension);
    } else {
        pre.reduced = g;
        pre.original_label.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) pre.original_label[v] = v;
    }
    out.removed = pre.removed;
    out.factor = pre.factor;

    std::uint32_t prime = config.prime;
    // effective per-run outcome: raw after the frame-pin correction; empty = flexible
    std::vector<std::optional<std::uint64_t>> outcomes;
    bool any_degenerate = false;
    for (int r = 0; r < config.max_runs; ++r) {
        if (r > 0) {
            prime = previous_prime(prime);
            if (prime < config.prime_floor)
                throw std::runtime_error("prime stepping fell below the floor");
        }
        PrimeField field(prime);
        std::uint64_t seed = config.seed + static_cast<std::uint64_t>(r);
        EdgeLengthAssignment lengths = sample_lengths(pre.reduced, dimension, field, seed);
        PinnedSystem sys = dimension == 2 ? build_system_2d(pre.reduced, field, lengths)
                                          : build_system_3d(pre.reduced, field, lengths);
        if (r == 0) {
            for (int v : sys.pinned) out.pinned.push_back(pre.original_label[v]);
            out.fallback_pin = sys.fallback_pin;
        }
        std::vector<Polynomial> gb = groebner_basis(sys.equations, field);
        std::optional<std::uint64_t> raw = quotient_dimension(gb, sys.num_vars);

        RunRecord rec;
        rec.prime = prime;
        rec.seed = seed;
        rec.raw = raw;
        rec.flexible = !raw.has_value();
        std::optional<std::uint64_t> effective;
        if (raw) {
            if (sys.fallback_pin) {
                // the frame pin leaves a 4-element isometry stabilizer
                if (*raw % 4 != 0) {
                    rec.degenerate = true;
                    any_degenerate = true;
                } else {
                    effective = *raw / 4;
                }
            } else {
                effective = raw;
            }
        }
        out.runs.push_back(rec);
        if (!rec.degenerate) outcomes.push_back(effective);

        if (static_cast<int>(out.runs.size()) < config.runs) continue;
        bool all_equal = !outcomes.empty() &&
                         std::all_of(outcomes.begin(), outcomes.end(),
                                     [&](const auto& o) { return o == outcomes.front(); });
        if (all_equal && !any_degenerate && static_cast<int>(out.runs.size()) >= config.runs)
            break;  // stable; stop early
    }

    bool all_equal = !outcomes.empty() &&
                     std::all_of(outcomes.begin(), outcomes.end(),
                                 [&](const auto& o) { return o == outcomes.front(); });
    out.flexible = std::any_of(out.runs.begin(), out.runs.end(),
                               [](const RunRecord& r) { return r.flexible; });
    out.agreed = all_equal && !any_degenerate && outcomes.size() >= 3;
    if (all_equal && !any_degenerate && !out.flexible && outcomes.front())
        out.value = *outcomes.front() * out.factor;
    return out;
}

}  // namespace rigidity
