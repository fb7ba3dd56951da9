#include "coplex/chordal.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace coplex {

const std::vector<int>& CliqueSet::cliques_of_edge(int u, int v) const {
    static const std::vector<int> none;
    auto it = by_edge.find(make_edge(u, v));
    return it == by_edge.end() ? none : it->second;
}

// Lexicographic BFS by partition refinement. Ties inside the front class are
// broken by smallest vertex id, so the order is deterministic.
static std::vector<int> lex_bfs(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    std::list<std::vector<int>> classes;
    {
        std::vector<int> all(n);
        for (int v = 1; v <= n; ++v) all[v - 1] = v;
        classes.push_back(std::move(all));
    }
    std::vector<int> order;
    order.reserve(n);
    while (!classes.empty()) {
        auto& front = classes.front();
        const int v = *std::min_element(front.begin(), front.end());
        front.erase(std::find(front.begin(), front.end(), v));
        if (front.empty()) classes.pop_front();
        order.push_back(v);
        std::vector<bool> is_nb(n + 1, false);
        for (int w : g.neighbors(v)) is_nb[w] = true;
        for (auto it = classes.begin(); it != classes.end(); ++it) {
            std::vector<int> hit, miss;
            for (int w : *it) (is_nb[w] ? hit : miss).push_back(w);
            if (hit.empty() || miss.empty()) continue;
            *it = std::move(miss);
            classes.insert(it, std::move(hit));
        }
    }
    return order;
}

bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 1 || order[i] > n || pos[order[i]] != -1) return false;
        pos[order[i]] = i;
    }
    // Golumbic's test: the earliest later neighbor must dominate the rest.
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> later;
        for (int w : g.neighbors(v))
            if (pos[w] > i) later.push_back(w);
        if (later.size() < 2) continue;
        const int u = *std::min_element(later.begin(), later.end(),
                                        [&](int a, int b) { return pos[a] < pos[b]; });
        for (int w : later)
            if (w != u && !g.has_edge(u, w)) return false;
    }
    return true;
}

std::optional<EliminationOrdering> peo(const Graph& g) {
    std::vector<int> order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    if (!is_perfect_elimination_ordering(g, order)) return std::nullopt;
    return order;
}

bool is_chordal(const Graph& g) { return peo(g).has_value(); }

static void index_edges(const Graph& g, CliqueSet& ks) {
    for (int i = 0; i < ks.size(); ++i) {
        const auto& k = ks.cliques[i];
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t b = a + 1; b < k.size(); ++b) {
                if (!g.has_edge(k[a], k[b]))
                    throw std::logic_error("clique set contains a non-clique");
                ks.by_edge[make_edge(k[a], k[b])].push_back(i);
            }
    }
}

CliqueSet maximal_cliques_chordal(const Graph& g, const EliminationOrdering& order) {
    if (!is_perfect_elimination_ordering(g, order))
        throw std::invalid_argument("not a perfect elimination ordering");
    const int n = g.vertex_count();
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<VertexSet> cand;
    cand.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        VertexSet c{v};
        for (int w : g.neighbors(v))
            if (pos[w] > i) c.push_back(w);
        std::sort(c.begin(), c.end());
        cand.push_back(std::move(c));
    }
    CliqueSet ks;
    for (int i = 0; i < n; ++i) {
        bool dominated = false;
        for (int j = 0; j < n && !dominated; ++j)
            if (j != i && cand[i].size() < cand[j].size())
                dominated = std::includes(cand[j].begin(), cand[j].end(), cand[i].begin(),
                                          cand[i].end());
        if (!dominated) ks.cliques.push_back(cand[i]);
    }
    index_edges(g, ks);
    return ks;
}

static void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        VertexSet c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    // Pivot maximizing |P ∩ N(u)|, smallest id on ties.
    int pivot = 0, best = -1;
    for (int u : p) {
        int cnt = 0;
        for (int w : p)
            if (g.has_edge(u, w)) ++cnt;
        if (cnt > best) best = cnt, pivot = u;
    }
    for (int u : x) {
        int cnt = 0;
        for (int w : p)
            if (g.has_edge(u, w)) ++cnt;
        if (cnt > best) best = cnt, pivot = u;
    }
    std::vector<int> ext;
    for (int v : p)
        if (!g.has_edge(pivot, v)) ext.push_back(v);
    for (int v : ext) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (g.has_edge(v, w)) p2.push_back(w);
        for (int w : x)
            if (g.has_edge(v, w)) x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

CliqueSet maximal_cliques_general(const Graph& g) {
    std::vector<int> p(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) p[v - 1] = v;
    std::vector<int> r;
    CliqueSet ks;
    bron_kerbosch(g, r, std::move(p), {}, ks.cliques);
    std::sort(ks.cliques.begin(), ks.cliques.end());
    index_edges(g, ks);
    return ks;
}

}  // namespace coplex
