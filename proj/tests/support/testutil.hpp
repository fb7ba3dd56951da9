#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coplex/graph.hpp"

namespace coplex::testutil {

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

// Triangle 1,2,3 with pendant vertex 4 attached to 3.
inline Graph paw_graph() {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    return g;
}

// Star K_{1,k} with center 1.
inline Graph star_graph(int k) {
    Graph g(k + 1);
    for (int v = 2; v <= k + 1; ++v) g.add_edge(1, v);
    return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Subset-exhaustive hole search; the independent chordality oracle.
inline bool has_induced_hole(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 1; v <= n; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) s.push_back(v);
        if (s.size() < 4) continue;
        bool cycle = true;
        int edges = 0;
        for (int v : s) {
            int deg = 0;
            for (int w : g.neighbors(v))
                if (std::binary_search(s.begin(), s.end(), w)) ++deg;
            if (deg != 2) {
                cycle = false;
                break;
            }
            edges += deg;
        }
        if (cycle && edges / 2 == static_cast<int>(s.size()) && induces_connected(g, s))
            return true;
    }
    return false;
}

// Independent re-check that a set induces a path with at least one edge.
inline bool induces_path(const Graph& g, const VertexSet& s) {
    if (s.size() < 2) return false;
    int edges = 0;
    for (int v : s) {
        int deg = 0;
        for (int w : g.neighbors(v))
            if (std::binary_search(s.begin(), s.end(), w)) ++deg;
        if (deg > 2) return false;
        edges += deg;
    }
    return edges / 2 == static_cast<int>(s.size()) - 1 && induces_connected(g, s);
}

inline Graph tree_from_pruefer(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n + 1, 1);
    for (int v : seq) ++deg[v];
    Graph g(n);
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<int> rest = seq;
    for (int v : rest) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, v);
        if (--deg[v] == 1) leaves.insert(v);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    g.add_edge(a, b);
    return g;
}

inline std::string ahu_encoding(const Graph& g, int v, int parent) {
    std::vector<std::string> children;
    for (int w : g.neighbors(v))
        if (w != parent) children.push_back(ahu_encoding(g, w, v));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const auto& c : children) s += c;
    return s + ")";
}

inline std::string tree_canonical_form(const Graph& g) {
    // peel leaves down to the one or two centers
    const int n = g.vertex_count();
    std::vector<int> deg(n + 1);
    std::vector<bool> gone(n + 1, false);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    std::vector<int> layer;
    for (int v = 1; v <= n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            gone[v] = true;
            --remaining;
            for (int w : g.neighbors(v))
                if (!gone[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::string best;
    for (int v = 1; v <= n; ++v)
        if (!gone[v]) {
            std::string s = ahu_encoding(g, v, 0);
            if (best.empty() || s < best) best = s;
        }
    return best;
}

// All trees on 1..nmax vertices up to isomorphism (Pruefer + AHU dedupe).
inline std::vector<Graph> all_trees_up_to(int nmax) {
    std::vector<Graph> out;
    if (nmax >= 1) out.push_back(Graph(1));
    if (nmax >= 2) out.push_back(path_graph(2));
    for (int n = 3; n <= nmax; ++n) {
        std::set<std::string> seen;
        std::vector<int> seq(n - 2, 1);
        while (true) {
            Graph t = tree_from_pruefer(seq);
            if (seen.insert(tree_canonical_form(t)).second) out.push_back(t);
            int i = n - 3;
            while (i >= 0 && seq[i] == n) seq[i--] = 1;
            if (i < 0) break;
            ++seq[i];
        }
    }
    return out;
}

}  // namespace coplex::testutil
