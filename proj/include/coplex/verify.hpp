#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coplex/graph.hpp"
#include "coplex/lp.hpp"

namespace coplex {

// The known fractional vertex of the 4-cycle model: x = 1/2 on all four
// vertices, 1/2 on one edge path, everything else 0. Extremality is certified
// by the exact rank of the tight valid inequalities at the point.
struct FractionalPointReport {
    MasterModel model;
    std::vector<Rat> point;             // per column
    bool feasible = false;
    std::vector<std::string> tight;     // names of tight valid inequalities
    int tight_rank = 0;
    int variable_count = 0;
    bool fractional = false;
    std::vector<std::string> failures;  // empty iff the report passes

    bool passed() const { return failures.empty(); }
};

FractionalPointReport check_c4_fractional_point();

struct StressReport {
    int trials = 0;
    int fractional_hits = 0;
    bool all_integral() const { return fractional_hits == 0; }
};

// Solves the full model (every column) under random rational objectives.
// Chordal hosts must never yield a fractional basic optimum; for non-chordal
// hosts the report simply records whether one was hit.
StressReport integrality_stress(const Graph& g, int trials, std::uint64_t seed,
                                bool randomize_tp = false,
                                long cap = kDefaultEnumerationCap);

}  // namespace coplex
