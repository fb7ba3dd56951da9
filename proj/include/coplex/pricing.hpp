#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coplex/chordal.hpp"
#include "coplex/graph.hpp"
#include "coplex/lp.hpp"

namespace coplex {

// Composite weights fed to the induced-path search.
struct PricingWeights {
    std::vector<Rat> vertex;   // 1-indexed
    std::map<Edge, Rat> edge;  // defined exactly on E(G)

    const Rat& edge_weight(int u, int v) const;
};

enum class PricingConvention {
    dual,   // vertex weight -mu_v: path value equals the column's reduced cost
    paper,  // vertex weight w_v - mu_v
};

// Edge weight of uv: sum of lambda over the maximal cliques containing both
// endpoints.
PricingWeights pricing_weights_from_duals(const Graph& g, const CliqueSet& k,
                                          const DualValues& duals,
                                          PricingConvention convention = PricingConvention::dual);

struct PricedPath {
    std::vector<int> sequence;  // starts at the smaller endpoint
    VertexSet key;
    Rat value;
};

// Argmax of sum of vertex weights + sum of edge weights over induced paths
// with at least one edge; empty optional iff the graph has no edge. Best-first
// endpoint extension, pruned by the optimistic bound current value + all
// positive weights not yet used; exact, exponential worst case. Ties go to the
// lexicographically smallest vertex set.
std::optional<PricedPath> max_weight_induced_path(const Graph& g, const PricingWeights& pw);

// Same search, keeping the k best distinct vertex sets (multi-column pricing).
std::vector<PricedPath> top_weight_induced_paths(const Graph& g, const PricingWeights& pw,
                                                 int k);

// Independent oracle: scans all vertex subsets for path-ness. Desk scale.
std::optional<PricedPath> brute_force_pricing(const Graph& g, const PricingWeights& pw,
                                              int max_vertices = 22);

}  // namespace coplex
