#pragma once

#include "rigidity/graph.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace rigidity {

// (k,l)-pebble game tightness test: |E| == k*n - l and every edge independent.
// Valid for 0 <= l < 2k.
bool pebble_game_tight(const Graph& g, int k, int l);

// Laman / (2,3)-tight test for generic minimal rigidity in the plane.
bool is_laman(const Graph& g);

// Necessary 3D counting condition: |E| == 3n-6 and every vertex subset S with
// |S| >= 3 spans at most 3|S|-6 edges. Not sufficient for minimal rigidity.
bool satisfies_3d_count(const Graph& g);

// Numbers of simple 3-cycles and simple 4-cycles.
std::pair<long long, long long> count_short_cycles(const Graph& g);

// Rotation system: for each vertex its neighbors in cyclic order.
struct PlanarEmbedding {
    std::vector<std::vector<Vertex>> rotation;
};

std::optional<PlanarEmbedding> planar_embedding(const Graph& g);
bool is_planar(const Graph& g);

// Number of faces induced by the rotation system; g must be connected.
int face_count(const Graph& g, const PlanarEmbedding& embedding);

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g);

// Visits every Hamiltonian cycle exactly once (up to rotation/reflection) as
// a vertex sequence starting at vertex 0. Stops early if fn returns false.
void for_each_hamiltonian_cycle(const Graph& g,
                                const std::function<bool(const std::vector<Vertex>&)>& fn);

// True if host has a (not necessarily induced) subgraph isomorphic to pattern.
bool contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace rigidity
