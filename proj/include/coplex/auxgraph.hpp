#pragma once

#include <vector>

#include "coplex/chordal.hpp"
#include "coplex/graph.hpp"
#include "coplex/structures.hpp"

namespace coplex {

enum class AuxNodeKind { vertex, triangle, path };

// The companion graph over V + triangles + induced paths: two nodes are
// adjacent exactly when the union of their vertex sets induces a connected
// subgraph of the host. Node i of `aux` carries its vertex set as
// aux.label(i), so the two constructions compare by label equality. Node
// weights are the host weight of the set, making maximum-weight stable sets
// of the companion graph line up with maximum-weight co-3-plexes.
struct AuxGraph {
    Graph host;
    Graph aux;
    std::vector<AuxNodeKind> kind;  // 1-indexed alongside aux vertices

    int node_count() const { return aux.vertex_count(); }
    const VertexSet& node_set(int i) const { return aux.label(i); }
    int node_of(const VertexSet& s) const;  // -1 if absent
};

// Nodes in canonical order (singletons, then triangles, then paths); each
// adjacency decided by an explicit connectivity check on the host.
AuxGraph build_aux_direct(const Graph& g, const ComponentCatalog& cat);

// Same graph grown from the host: per non-singleton component set, add a true
// twin of each member, then contract the twin set into one labeled node.
AuxGraph build_aux_by_twins(const Graph& g, const ComponentCatalog& cat);

// One twin-and-contract step; exposed so the intermediate graphs can be
// compared against the known small constructions.
Graph append_component_node(const Graph& working, const VertexSet& component_set);

// The two directions of the stable-set / co-3-plex correspondence. Inputs are
// validated and the maps are mutually inverse.
Co3Plex stable_to_co3plex(const AuxGraph& a, const std::vector<int>& stable_nodes);
std::vector<int> co3plex_to_stable(const AuxGraph& a, const Co3Plex& c);

// Per maximal clique K of the chordal host: the singletons of K plus every
// non-singleton node meeting K. Host must be chordal.
std::vector<VertexSet> aux_cliques_by_formula(const Graph& g, const CliqueSet& k,
                                              const AuxGraph& a);

}  // namespace coplex
