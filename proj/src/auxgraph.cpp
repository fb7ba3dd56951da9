#include "coplex/auxgraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coplex {

int AuxGraph::node_of(const VertexSet& s) const {
    for (int i = 1; i <= node_count(); ++i)
        if (node_set(i) == s) return i;
    return -1;
}

static std::vector<VertexSet> canonical_nodes(const Graph& g, const ComponentCatalog& cat) {
    std::vector<VertexSet> nodes;
    for (int v = 1; v <= g.vertex_count(); ++v) nodes.push_back({v});
    for (const auto& t : cat.triangles) nodes.push_back(t);
    for (const auto& p : cat.paths) nodes.push_back(p.key);
    return nodes;
}

// Nodes come out as singletons 1..n, then triangles, then paths; kinds follow
// from the catalog ranges.
static std::vector<AuxNodeKind> kinds_by_range(const Graph& g, const ComponentCatalog& cat) {
    std::vector<AuxNodeKind> kind(1, AuxNodeKind::vertex);  // slot 0 unused
    kind.insert(kind.end(), g.vertex_count(), AuxNodeKind::vertex);
    kind.insert(kind.end(), cat.triangles.size(), AuxNodeKind::triangle);
    kind.insert(kind.end(), cat.paths.size(), AuxNodeKind::path);
    return kind;
}

AuxGraph build_aux_direct(const Graph& g, const ComponentCatalog& cat) {
    const std::vector<VertexSet> nodes = canonical_nodes(g, cat);
    const int n = static_cast<int>(nodes.size());
    AuxGraph a{g, Graph(n), kinds_by_range(g, cat)};
    for (int i = 0; i < n; ++i) {
        a.aux.set_label(i + 1, nodes[i]);
        Rat w(0);  // node weight = host weight of the set, as the twin route yields
        for (int v : nodes[i]) w += g.weight(v);
        a.aux.set_weight(i + 1, std::move(w));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            VertexSet u = nodes[i - 1];
            u.insert(u.end(), nodes[j - 1].begin(), nodes[j - 1].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            if (induces_connected(g, u)) a.aux.add_edge(i, j);
        }
    return a;
}

Graph append_component_node(const Graph& working, const VertexSet& component_set) {
    if (component_set.size() < 2)
        throw std::invalid_argument("component node needs at least two vertices");
    Graph h = working;
    std::vector<int> twins;
    for (int v : component_set) {
        h = add_true_twin(h, v);
        twins.push_back(h.vertex_count());
    }
    std::vector<Edge> inner;
    for (std::size_t i = 0; i < twins.size(); ++i)
        for (std::size_t j = i + 1; j < twins.size(); ++j)
            if (h.has_edge(twins[i], twins[j])) inner.push_back(make_edge(twins[i], twins[j]));
    if (inner.empty()) throw std::invalid_argument("component set does not induce edges");
    return contract_edges(h, inner);
}

AuxGraph build_aux_by_twins(const Graph& g, const ComponentCatalog& cat) {
    Graph working = g;
    for (const auto& t : cat.triangles) working = append_component_node(working, t);
    for (const auto& p : cat.paths) working = append_component_node(working, p.key);

    // contract_edges appends the merged vertex last, so node order already
    // matches the canonical one.
    return AuxGraph{g, std::move(working), kinds_by_range(g, cat)};
}

Co3Plex stable_to_co3plex(const AuxGraph& a, const std::vector<int>& stable_nodes) {
    for (std::size_t i = 0; i < stable_nodes.size(); ++i)
        for (std::size_t j = i + 1; j < stable_nodes.size(); ++j)
            if (a.aux.has_edge(stable_nodes[i], stable_nodes[j]))
                throw std::invalid_argument("node set is not stable");
    VertexSet s;
    std::vector<VertexSet> comps;
    for (int idx : stable_nodes) {
        const auto& part = a.node_set(idx);
        s.insert(s.end(), part.begin(), part.end());
        comps.push_back(part);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("stable nodes overlap");  // cannot happen: overlap is adjacency
    std::sort(comps.begin(), comps.end());
    if (!is_co3plex(a.host, s)) throw std::logic_error("stable set mapped outside co-3-plexes");
    return Co3Plex{std::move(s), std::move(comps)};
}

std::vector<int> co3plex_to_stable(const AuxGraph& a, const Co3Plex& c) {
    if (!is_co3plex(a.host, c.members))
        throw std::invalid_argument("set is not a co-3-plex of the host");
    std::vector<int> nodes;
    for (const auto& comp : induced_components(a.host, c.members)) {
        const int idx = a.node_of(comp);
        if (idx < 0)
            throw std::logic_error("component is not a node of the companion graph");
        nodes.push_back(idx);
    }
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

std::vector<VertexSet> aux_cliques_by_formula(const Graph& g, const CliqueSet& k,
                                              const AuxGraph& a) {
    if (!is_chordal(g)) throw std::invalid_argument("host graph is not chordal");
    std::vector<VertexSet> out;
    for (const auto& kq : k.cliques) {
        VertexSet clique;
        for (int i = 1; i <= a.node_count(); ++i) {
            const auto& s = a.node_set(i);
            if (s.size() == 1) {
                if (std::binary_search(kq.begin(), kq.end(), s[0])) clique.push_back(i);
            } else {
                bool meets = std::any_of(s.begin(), s.end(), [&](int v) {
                    return std::binary_search(kq.begin(), kq.end(), v);
                });
                if (meets) clique.push_back(i);
            }
        }
        out.push_back(std::move(clique));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace coplex
