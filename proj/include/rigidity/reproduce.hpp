#pragma once

#include "rigidity/realizations.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rigidity {

// Cost class of one reproduce line on a single desktop core.
enum class ReproTier {
    Desk,     // seconds; always run
    Stretch,  // minutes to about an hour; run with the stretch option
    Beyond,   // longer than a working day; never run, reported as skipped
};

// One comparison between an embedded expected value and a recomputation.
struct ReproLine {
    std::string table;     // table identifier this line belongs to
    std::string name;      // what is being checked
    std::string expected;  // embedded value
    std::string computed;  // recomputed value; empty when the line was skipped
    ReproTier tier = ReproTier::Desk;
    bool checked = false;  // true when the comparison was actually made
    bool pass = false;     // meaningful only when checked
    std::string note;      // skip reason or informational annotation
};

struct ReproduceOptions {
    bool stretch = false;             // also run Stretch-tier lines
    CountConfig count;                // configuration for realization counts
    std::function<void(const ReproLine&)> on_line;  // streamed as produced
};

// Valid table identifiers, in presentation order.
const std::vector<std::string>& reproduce_table_names();

// Recompute one table and diff against the embedded values.
// The identifier must come from reproduce_table_names().
std::vector<ReproLine> reproduce_table(const std::string& table,
                                       const ReproduceOptions& options = {});

// True when every checked line passed (skipped and informational lines
// do not count, but at least one line must have been checked).
bool reproduce_passed(const std::vector<ReproLine>& lines);

std::string to_string(ReproTier tier);

}  // namespace rigidity
