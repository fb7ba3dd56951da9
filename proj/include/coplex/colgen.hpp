#pragma once

#include <vector>

#include "coplex/lp.hpp"
#include "coplex/pricing.hpp"
#include "coplex/structures.hpp"

namespace coplex {

struct ColgenConfig {
    PricingConvention convention = PricingConvention::dual;
    int columns_per_iteration = 1;
    long enumeration_cap = kDefaultEnumerationCap;
    bool warm_start = true;
    long max_pivots = 1'000'000;
};

enum class CertificateKind { duality, enumeration };

struct IterationLog {
    Rat objective;
    Rat best_reduced_cost;  // of the admitted candidates, before admission
    int columns;            // model size when the iteration was solved
};

struct ColgenReport {
    long iterations = 0;
    long columns_added = 0;
    Rat objective;
    Co3Plex solution;
    CertificateKind certificate = CertificateKind::duality;
    std::vector<IterationLog> log;
};

// One connected host: final restricted master, its optimal solution and
// duals, alongside the report. What the tests and the certificate consume.
struct ConnectedSolve {
    ColgenReport report;
    MasterModel model;
    DualValues duals;
    LpSolution lp;
};

// Restricted master seeded with all x, all triangles and all single-edge
// paths; pricing admits positive-reduced-cost induced paths until none is
// left. The final basic solution is asserted exactly 0/1 and decoded into a
// co-3-plex whose weight must match the LP objective. Throws on non-chordal
// input; an integrality failure raises (it would be a bug, never rounded).
ConnectedSolve solve_connected(const Graph& g, const ColgenConfig& config = {});

// Disconnected hosts are solved per component and merged.
ColgenReport solve_co3plex(const Graph& g, const ColgenConfig& config = {});

// Desk-scale certificate: enumerates every induced path of g and checks that
// each one absent from the model has reduced cost <= 0 under the final duals.
bool certify_optimality(const Graph& g, const MasterModel& m, const DualValues& duals,
                        long cap = kDefaultEnumerationCap);

}  // namespace coplex
