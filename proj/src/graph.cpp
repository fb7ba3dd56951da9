#include "coplex/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace coplex {

VertexSet make_vertex_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument("duplicate vertex in set");
    return v;
}

bool is_vertex_set(const VertexSet& s) {
    return std::is_sorted(s.begin(), s.end()) &&
           std::adjacent_find(s.begin(), s.end()) == s.end();
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n + 1);
    weight_.assign(n + 1, Rat(1));
    label_.resize(n + 1);
    for (int v = 1; v <= n; ++v) label_[v] = {v};
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const int t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> e;
    e.reserve(m_);
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

const Rat& Graph::weight(int v) const {
    check_vertex(v);
    return weight_[v];
}

void Graph::set_weight(int v, Rat w) {
    check_vertex(v);
    weight_[v] = std::move(w);
}

const VertexSet& Graph::label(int v) const {
    check_vertex(v);
    return label_[v];
}

void Graph::set_label(int v, VertexSet l) {
    check_vertex(v);
    if (!is_vertex_set(l)) throw std::invalid_argument("label is not a vertex set");
    label_[v] = std::move(l);
}

// --- DIMACS dialect --------------------------------------------------------

Graph parse_graph(std::istream& in) {
    Graph g;
    bool have_header = false;
    long declared_edges = 0;
    int lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "second problem line");
            std::string kind;
            long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw ParseError(lineno, "malformed problem line (want 'p edge <n> <m>')");
            g = Graph(static_cast<int>(n));
            declared_edges = m;
            have_header = true;
        } else if (tag == "n") {
            if (!have_header) throw ParseError(lineno, "weight line before problem line");
            long v;
            std::string w;
            if (!(ls >> v >> w)) throw ParseError(lineno, "malformed weight line");
            if (v < 1 || v > g.vertex_count())
                throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
            try {
                g.set_weight(static_cast<int>(v), parse_rat(w));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge line before problem line");
            long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > g.vertex_count())
                throw ParseError(lineno, "vertex " + std::to_string(u) + " out of range");
            if (v < 1 || v > g.vertex_count())
                throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
            try {
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing problem line");
    if (g.edge_count() != declared_edges)
        throw ParseError(lineno, "header declares " + std::to_string(declared_edges) +
                                     " edges, found " + std::to_string(g.edge_count()));
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.weight(v) != 1) out << "n " << v << " " << rat_str(g.weight(v)) << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

// --- elementary operations -------------------------------------------------

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!is_vertex_set(s)) throw std::invalid_argument("not a vertex set");
    std::vector<int> to_new(g.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        g.check_vertex(s[i]);
        to_new[s[i]] = static_cast<int>(i) + 1;
    }
    Graph h(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int old = s[i];
        h.set_weight(static_cast<int>(i) + 1, g.weight(old));
        h.set_label(static_cast<int>(i) + 1, g.label(old));
        for (int w : g.neighbors(old))
            if (to_new[w] > to_new[old]) h.add_edge(to_new[old], to_new[w]);
    }
    return h;
}

Graph add_true_twin(const Graph& g, int v) {
    g.check_vertex(v);
    Graph h(g.vertex_count() + 1);
    for (int u = 1; u <= g.vertex_count(); ++u) {
        h.set_weight(u, g.weight(u));
        h.set_label(u, g.label(u));
    }
    for (const auto& [a, b] : g.edges()) h.add_edge(a, b);
    const int tw = g.vertex_count() + 1;
    h.set_weight(tw, g.weight(v));
    h.set_label(tw, g.label(v));
    h.add_edge(tw, v);
    for (int u : g.neighbors(v)) h.add_edge(tw, u);
    return h;
}

Graph contract_edges(const Graph& g, const std::vector<Edge>& f) {
    for (const auto& [u, v] : f)
        if (!g.has_edge(u, v))
            throw std::invalid_argument("contraction set contains non-edge " +
                                        std::to_string(u) + " " + std::to_string(v));

    // Union the endpoints of f; everything else maps to itself.
    std::vector<int> parent(g.vertex_count() + 1);
    for (int v = 1; v <= g.vertex_count(); ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : f) {
        int ru = find(u), rv = find(v);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }

    std::vector<bool> contracted(g.vertex_count() + 1, false);
    for (const auto& [u, v] : f) contracted[u] = contracted[v] = true;

    // Survivors first in ascending order, then one vertex per contracted
    // component, ordered by smallest member.
    std::vector<int> to_new(g.vertex_count() + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!contracted[v]) to_new[v] = ++next;
    std::map<int, std::vector<int>> comps;  // root -> members
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (contracted[v]) comps[find(v)].push_back(v);
    for (auto& [root, members] : comps) {
        ++next;
        for (int v : members) to_new[v] = next;
    }

    Graph h(next);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!contracted[v]) {
            h.set_weight(to_new[v], g.weight(v));
            h.set_label(to_new[v], g.label(v));
        }
    }
    for (auto& [root, members] : comps) {
        std::vector<int> lbl;
        Rat w(0);
        for (int v : members) {
            const auto& l = g.label(v);
            lbl.insert(lbl.end(), l.begin(), l.end());
            w += g.weight(v);
        }
        std::sort(lbl.begin(), lbl.end());
        lbl.erase(std::unique(lbl.begin(), lbl.end()), lbl.end());
        h.set_weight(to_new[members.front()], w);
        h.set_label(to_new[members.front()], lbl);
    }
    for (const auto& [u, v] : g.edges()) {
        const int a = to_new[u], b = to_new[v];
        if (a != b && !h.has_edge(a, b)) h.add_edge(a, b);
    }
    return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(g.vertex_count() + 1, false);
    for (int s = 1; s <= g.vertex_count(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s) {
    if (!is_vertex_set(s)) throw std::invalid_argument("not a vertex set");
    std::vector<bool> in_s(g.vertex_count() + 1, false);
    for (int v : s) {
        g.check_vertex(v);
        in_s[v] = true;
    }
    std::vector<bool> seen(g.vertex_count() + 1, false);
    std::vector<VertexSet> comps;
    for (int start : s) {
        if (seen[start]) continue;
        VertexSet comp;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in_s[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
    return induced_components(g, s).size() <= 1;
}

Graph generate_random_chordal(int n, double density, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density outside [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    std::vector<VertexSet> cliques = {{1}};
    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        VertexSet base = cliques[pick(rng)];
        std::shuffle(base.begin(), base.end(), rng);
        std::size_t take = 1;
        std::bernoulli_distribution grow(density);
        while (take < base.size() && grow(rng)) ++take;
        VertexSet nb(base.begin(), base.begin() + take);
        std::sort(nb.begin(), nb.end());
        for (int u : nb) g.add_edge(v, u);
        nb.push_back(v);
        cliques.push_back(std::move(nb));
    }
    return g;
}

void randomize_weights(Graph& g, long lo, long hi, std::uint64_t seed) {
    if (lo > hi) throw std::invalid_argument("empty weight range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(lo, hi);
    for (int v = 1; v <= g.vertex_count(); ++v) g.set_weight(v, Rat(dist(rng)));
}

}  // namespace coplex
