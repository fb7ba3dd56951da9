#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coplex/rational.hpp"

namespace coplex {

// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<int>;

// Normalized edge: first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

VertexSet make_vertex_set(std::vector<int> v);  // sorts, rejects duplicates
bool is_vertex_set(const VertexSet& s);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 1..n with exact rational vertex
// weights. Each vertex carries a label: the set of original host vertices it
// stands for. Labels start as singletons and are maintained by
// induced_subgraph / add_true_twin / contract_edges, so derived graphs stay
// comparable to their host by label equality.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);  // rejects loops and duplicates
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<Edge> edges() const;  // sorted

    const Rat& weight(int v) const;
    void set_weight(int v, Rat w);

    const VertexSet& label(int v) const;
    void set_label(int v, VertexSet l);

    void check_vertex(int v) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;  // 1-indexed, sorted
    std::vector<Rat> weight_;
    std::vector<VertexSet> label_;
};

// --- DIMACS dialect I/O ---------------------------------------------------
// "c ..." comments, "p edge <n> <m>" header, "n <v> <num>[/<den>]" weights
// (default 1), "e <u> <v>" edges. The writer emits the sorted canonical form.

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

// --- elementary operations -------------------------------------------------

// Vertices of s relabeled 1..|s| in ascending order; labels and weights kept.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Appends vertex n+1 with N[new] = N[v]; copies v's weight and label.
Graph add_true_twin(const Graph& g, int v);

// G/F, contracted component-wise on (V(F), F). Surviving vertices keep their
// ascending order; each contracted component becomes one trailing vertex
// labeled by the union of the old labels, weighted by their sum.
Graph contract_edges(const Graph& g, const std::vector<Edge>& f);

bool is_connected(const Graph& g);  // true for the empty graph
std::vector<VertexSet> connected_components(const Graph& g);

// Components of the subgraph induced by s, as sets of g's vertex ids.
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s);
bool induces_connected(const Graph& g, const VertexSet& s);

// Connected chordal graph: vertex i > 1 is attached to a nonempty random
// subset of a clique of the current graph, so it is simplicial at insertion.
// Density steers subset size (0 -> trees, 1 -> thick k-tree-like graphs).
// Unit weights; deterministic per (n, density, seed).
Graph generate_random_chordal(int n, double density, std::uint64_t seed);

// Deterministic integer weights in [lo, hi] (test and bench plumbing).
void randomize_weights(Graph& g, long lo, long hi, std::uint64_t seed);

}  // namespace coplex
