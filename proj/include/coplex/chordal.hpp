#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coplex/graph.hpp"

namespace coplex {

// Elimination order: order[0] is eliminated first. Perfect iff for every
// vertex the neighbors eliminated later form a clique.
using EliminationOrdering = std::vector<int>;

struct CliqueSet {
    std::vector<VertexSet> cliques;         // inclusion-wise maximal, stable order
    std::map<Edge, std::vector<int>> by_edge;  // edge -> indices of cliques containing it

    int size() const { return static_cast<int>(cliques.size()); }
    const std::vector<int>& cliques_of_edge(int u, int v) const;
};

// LexBFS order, reversed and then verified; empty optional iff g is not
// chordal. The returned ordering is a certificate, not a trusted byproduct.
std::optional<EliminationOrdering> peo(const Graph& g);

bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& order);

bool is_chordal(const Graph& g);

// The candidate cliques {v} + later neighbors along a PEO, filtered for
// maximality. Indices are ordered by the PEO position of the generating
// vertex, which keeps LP row order reproducible. At most n cliques.
CliqueSet maximal_cliques_chordal(const Graph& g, const EliminationOrdering& order);

// Bron-Kerbosch with pivoting; desk-scale graphs only. Canonically sorted.
CliqueSet maximal_cliques_general(const Graph& g);

}  // namespace coplex
