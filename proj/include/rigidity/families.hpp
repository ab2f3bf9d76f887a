#pragma once

#include "rigidity/analysis.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/realizations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rigidity {

// Membership evidence for the two heuristic graph families.  Every item of a
// positive report can be re-verified with the analysis-module operations.
struct FamilyReport {
    char family = 'T';
    bool verdict = false;
    std::string reason;  // first failed condition; empty when the verdict is true

    std::vector<int> degrees;     // degree profile, indexed by vertex
    long long three_cycles = 0;   // simple 3-cycle count
    long long four_cycles = 0;    // simple 4-cycle count

    // T evidence
    bool planar = false;
    bool triangles_edge_disjoint = false;
    int faces = 0;  // face count of the embedding witness; 0 when not planar
    std::optional<PlanarEmbedding> embedding;

    // S evidence: vertices in n-gon position order plus the symmetry that
    // leaves the chord set invariant.
    std::optional<std::vector<Vertex>> hamiltonian;
    std::string symmetry;   // "half-turn" (n even) or "reflection" (n odd)
    int axis_vertex = -1;   // vertex fixed by the reflection axis; -1 otherwise
};

// Planar, all degrees 3 or 4, exactly two edge-disjoint 3-cycles, and
// exactly n-3 simple 4-cycles.  The input must be (2,3)-tight.
FamilyReport in_T(const Graph& g);

// Some Hamiltonian cycle, laid out on the regular n-gon, makes the chord set
// invariant under the half-turn (n even) or under some reflection (n odd).
// The input must be (2,3)-tight.
FamilyReport in_S(const Graph& g);

struct FamilyMatch {
    BigInt code;  // canonical form
    int n = 0;
    FamilyReport report;
    std::optional<BigInt> count;  // realization count when requested
};

// Enumerates the tight graphs on n vertices, filters by family membership,
// and optionally counts realizations; results are ranked by count (then by
// code).  family is 'T' or 'S'.
std::vector<FamilyMatch> search_family(int n, char family, bool with_counts = false,
                                       const CountConfig& config = {});

}  // namespace rigidity
