#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coplex/graph.hpp"

namespace coplex {

inline constexpr long kDefaultEnumerationCap = 1'000'000;

// Induced path stored both as a traversal (starting at the smaller endpoint)
// and as its unordered vertex-set key; the key is what the LP dedupes on.
struct InducedPath {
    std::vector<int> sequence;
    VertexSet key;
};

struct ComponentCatalog {
    std::vector<VertexSet> triangles;  // canonical (lex) order
    std::vector<InducedPath> paths;    // sorted by key
};

// Vertex subset of max induced degree <= 2, with the component partition of
// the induced subgraph. In chordal hosts every component is a path or a
// triangle.
struct Co3Plex {
    VertexSet members;
    std::vector<VertexSet> components;
};

bool is_co3plex(const Graph& g, const VertexSet& s);

Co3Plex make_co3plex(const Graph& g, const VertexSet& s);  // throws if not one

Rat set_weight(const Graph& g, const VertexSet& s);

// All 3-sets inducing K3, canonically sorted.
std::vector<VertexSet> enumerate_triangles(const Graph& g);

// Every vertex set inducing a path with >= 1 edge, once per set. Exponential
// output; the cap names itself when exceeded.
std::vector<InducedPath> enumerate_induced_paths(const Graph& g,
                                                 long cap = kDefaultEnumerationCap);

ComponentCatalog enumerate_catalog(const Graph& g, long cap = kDefaultEnumerationCap);

// All independent sets including the empty one, lex order over sorted sets.
std::vector<VertexSet> enumerate_stable_sets(const Graph& g,
                                             long cap = kDefaultEnumerationCap);

// Exhaustive oracle over all 2^n subsets; ties broken by lexicographically
// smallest vertex set. Desk scale only.
std::pair<Co3Plex, Rat> brute_force_max_co3plex(const Graph& g, int max_vertices = 22);

}  // namespace coplex
