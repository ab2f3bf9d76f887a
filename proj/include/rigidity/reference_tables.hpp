#pragma once

#include "rigidity/graph.hpp"

#include <string>
#include <vector>

namespace rigidity {

// Embedded reference datasets: known graph encodings with realization
// counts, per-n extremal values, single-step examples, and growth-rate
// tables. The reproduce engine diffs recomputed values against these.

struct RefGraph {
    int n;
    BigInt code;
    BigInt count;
};

const std::vector<RefGraph>& ref_max_2d();     // maximal 2D count per n, 6..12
const std::vector<RefGraph>& ref_t_family();   // best T-family graphs, 12..18
const std::vector<RefGraph>& ref_s_high();     // best S-family graphs found, 13..18
const std::vector<RefGraph>& ref_fan_high();   // triangle-containing, high count
const std::vector<RefGraph>& ref_fan31();      // contain graph 31
const std::vector<RefGraph>& ref_fan254();     // contain graph 254
const std::vector<RefGraph>& ref_fan223();     // contain graph 223
const std::vector<RefGraph>& ref_fan239();     // contain graph 239
const std::vector<RefGraph>& ref_fan7916();    // contain the three-prism
const std::vector<RefGraph>& ref_max_3d();     // maximal 3D count per n, 4..10
const std::vector<RefGraph>& ref_fan_3d();     // contain the tetrahedron, 3D
const std::vector<RefGraph>& ref_genfan_3d();  // contain graph 511, 3D

// A single construction step whose effect on the count is known.
struct RefStep {
    std::string kinds;  // step kinds that reach the target, comma-separated
    int dimension;
    BigInt from_code;
    int from_n;
    BigInt from_count;
    BigInt to_code;
    int to_n;
    BigInt to_count;
    std::string factor;  // count ratio as listed, two decimals
};

const std::vector<RefStep>& ref_steps_2d();
const std::vector<RefStep>& ref_steps_3d();

// Extremal counts per vertex number; 0 marks values with no reference entry.
struct RefExtremal {
    int n;
    BigInt min;         // minimal count over all graphs (2D: always 2^(n-2))
    BigInt max;         // maximal count
    BigInt prior_low;   // previously known lower bound
    BigInt prior_high;  // previously known upper bound
};

const std::vector<RefExtremal>& ref_extremal_2d();  // n = 6..12
const std::vector<RefExtremal>& ref_extremal_3d();  // n = 6..12

// Best counts found inside the T and S families.
struct RefFamilyBest {
    int n;
    BigInt t_code;
    BigInt t_count;
    BigInt s_code;
    BigInt s_count;
};

const std::vector<RefFamilyBest>& ref_family_best();  // n = 12..18

// One growth-rate table cell: rate = (base_count/glue_count)^(1/(n-glue_vertices)).
struct RefRate {
    std::string column;   // construction label
    int n;                // base graph size
    std::string expected; // the value as listed
    BigInt base_code;     // 0 when no encoding is listed for this cell
    BigInt base_count;    // 0 when unknown
    int glue_vertices;
    BigInt glue_count;
    bool consistent;      // false: listed value disagrees with the listed base data
};

const std::vector<RefRate>& ref_rates_2d();
const std::vector<RefRate>& ref_rates_3d();

// Closed-form prior 3D upper bound: 2^(n-3) * C(2n-6, n-3) / (n-2).
BigInt prior_upper_3d(int n);

}  // namespace rigidity
