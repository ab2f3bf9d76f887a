#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rigidity/algebra.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

// Squared edge lengths over Z_p, reproducible from the seed.  The lengths are
// induced by a randomly placed realization whose pinned vertices sit at their
// fixed coordinates, so the system stays consistent: non-rigid graphs show up
// as positive-dimensional ideals rather than empty varieties, and lengths of
// edges inside the pinned set agree with the pin coordinates by construction.
struct EdgeLengthAssignment {
    std::uint64_t seed = 0;
    std::uint32_t prime = 0;
    std::map<std::pair<int, int>, std::uint32_t> lambda;
    std::vector<std::uint32_t> pin_coords;  // sampled fixed coordinates ({c} / {w,u,v})
    std::vector<std::array<std::uint32_t, 3>> witness;  // the placed realization

    std::uint32_t at(int u, int v) const;
};

// Where each coordinate of each vertex lives: a polynomial variable (var >= 0)
// or a fixed field element (var == -1).
struct CoordSlot {
    int var = -1;
    std::uint32_t value = 0;
};

struct PinnedSystem {
    std::vector<Polynomial> equations;
    int num_vars = 0;
    int dimension = 0;
    std::vector<int> pinned;                       // vertices with fixed coordinates
    bool fallback_pin = false;                     // 3D frame pin on a non-adjacent triple
    std::vector<std::vector<CoordSlot>> layout;    // [vertex][coordinate]
};

struct PreprocessResult {
    Graph reduced;
    std::vector<int> original_label;  // reduced vertex -> input vertex
    std::vector<int> removed;         // input labels, in removal order
    std::uint64_t factor = 1;         // 2^removed.size()
};

struct RunRecord {
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> raw;  // quotient dimension; empty if flexible
    bool flexible = false;
    bool degenerate = false;  // genericity failure (e.g. fallback residue)
};

struct RealizationCount {
    std::optional<std::uint64_t> value;  // empty when flexible
    bool flexible = false;
    bool agreed = false;
    std::vector<RunRecord> runs;
    // preprocessing log
    std::vector<int> removed;
    std::uint64_t factor = 1;
    std::vector<int> pinned;  // input-graph labels
    bool fallback_pin = false;
};

struct CountConfig {
    std::uint32_t prime = 2147483629u;
    std::uint32_t prime_floor = 1u << 20;
    int runs = 3;
    int max_runs = 5;
    std::uint64_t seed = 0;
    bool preprocess = true;
};

// Removes degree-d vertices (d = dimension) while the remainder stays
// connected, down to the base graph (K2 / triangle); factor doubles per
// removal.
PreprocessResult preprocess(const Graph& g, int dimension);

// Samples pin coordinates and realization-induced squared lengths for the
// given graph; dimension selects the pinning scheme.  All values are nonzero
// (the placement is resampled otherwise).
EdgeLengthAssignment sample_lengths(const Graph& g, int dimension, const PrimeField& field,
                                    std::uint64_t seed);

// Pins one edge (first endpoint at the origin, second on the first axis) and
// emits one equation per remaining edge.  Requires |E| = 2n-3 and g connected.
PinnedSystem build_system_2d(const Graph& g, const PrimeField& field,
                             const EdgeLengthAssignment& lengths);

// Pins a triangle (preferring one whose trilateration closure is largest), or
// falls back to a frame pin on three pairwise-nonadjacent vertices when the
// graph is triangle-free.  Requires |E| = 3n-6 and g connected.
PinnedSystem build_system_3d(const Graph& g, const PrimeField& field,
                             const EdgeLengthAssignment& lengths);

// Full probabilistic counting protocol: preprocess, then at least
// config.runs independent runs (distinct primes and seeds); on disagreement
// more runs are added up to config.max_runs before giving up.
RealizationCount count_realizations(const Graph& g, int dimension, const CountConfig& config = {});

}  // namespace rigidity
