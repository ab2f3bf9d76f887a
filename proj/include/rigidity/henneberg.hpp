#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

enum class StepKind { H1, H2a, H2b, H2c, VertexSplit, H3d1, H3d2, H3d3x, H3d3v };

int step_dimension(StepKind kind);
std::string to_string(StepKind kind);
StepKind parse_step_kind(const std::string& name);  // "h1", "h2a", ..., "3d3v"
const std::vector<StepKind>& default_kinds(int dimension);

// One concrete application of a step: `attach` lists the neighbours of the
// new vertex, `removed` the edges deleted from the source graph.  For vertex
// splitting, attach = {c, d} + moved and removed = {c,b} for b in moved.
struct StepDescriptor {
    StepKind kind = StepKind::H1;
    std::vector<int> attach;
    std::vector<std::pair<int, int>> removed;
    int split_vertex = -1;   // vertex split only: c
    int split_partner = -1;  // vertex split only: d
    std::vector<int> moved;  // vertex split only: B
};

// Validates the descriptor against the source graph (throws
// std::invalid_argument naming the violated pattern) and returns the grown
// graph; the new vertex gets the next free label.
Graph apply_step(const Graph& g, const StepDescriptor& s);

// Complete, duplicate-free list of valid descriptors of the requested kinds.
std::vector<StepDescriptor> enumerate_steps(const Graph& g, int dimension,
                                            const std::vector<StepKind>& kinds);

struct GenerateStats {
    int levels_resumed = 0;       // levels loaded from a previous run's state
    std::size_t spill_files = 0;  // dedup runs written to disk
};

struct GenerateOptions {
    std::vector<StepKind> kinds;  // empty: default set for the dimension
    int jobs = 1;
    // level results are persisted here (shared graph list format, one file per
    // vertex count); interrupted runs resume from the last complete level
    std::string state_dir;
    // dedup codes held in memory per level before a sorted run is spilled
    std::size_t spill_threshold = SIZE_MAX;
    GenerateStats* stats = nullptr;
};

// All canonical codes with at most n vertices reachable from the base (K2 in
// 2D, triangle in 3D) by the configured step kinds, deduplicated by canonical
// form and sorted by (vertex count, code).  In 3D the results are candidates
// only and must be filtered by the realizations module.
std::vector<GraphListEntry> generate_up_to(int n, int dimension, const GenerateOptions& = {});

}  // namespace rigidity
