#include "coplex/pricing.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace coplex {

const Rat& PricingWeights::edge_weight(int u, int v) const {
    auto it = edge.find(make_edge(u, v));
    if (it == edge.end())
        throw std::invalid_argument("no weight for edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    return it->second;
}

PricingWeights pricing_weights_from_duals(const Graph& g, const CliqueSet& k,
                                          const DualValues& duals,
                                          PricingConvention convention) {
    PricingWeights pw;
    pw.vertex.assign(g.vertex_count() + 1, Rat(0));
    for (int v = 1; v <= g.vertex_count(); ++v) {
        pw.vertex[v] = -duals.mu[v];
        if (convention == PricingConvention::paper) pw.vertex[v] += g.weight(v);
    }
    for (const auto& e : g.edges()) {
        Rat w(0);
        for (int i : k.cliques_of_edge(e.first, e.second)) w += duals.lambda[i];
        pw.edge.emplace(e, std::move(w));
    }
    return pw;
}

namespace {

// value desc, then lexicographically smallest vertex set. The stored sequence
// starts at the smaller endpoint, which settles the remaining freedom.
bool better(const PricedPath& a, const PricedPath& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.key < b.key;
}

PricedPath canonical(std::vector<int> seq, Rat value) {
    if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
    VertexSet key = seq;
    std::sort(key.begin(), key.end());
    return PricedPath{std::move(seq), std::move(key), std::move(value)};
}

struct TopK {
    int k;
    std::vector<PricedPath> best;  // sorted best-first, distinct keys

    void offer(PricedPath cand) {
        for (const auto& p : best)
            if (p.key == cand.key) return;
        auto pos = std::upper_bound(best.begin(), best.end(), cand,
                                    [](const PricedPath& a, const PricedPath& b) {
                                        return better(a, b);
                                    });
        best.insert(pos, std::move(cand));
        if (static_cast<int>(best.size()) > k) best.pop_back();
    }

    // Anything strictly below this can never enter; ties still can.
    bool cuts(const Rat& bound) const {
        return static_cast<int>(best.size()) == k && bound < best.back().value;
    }
};

struct SearchState {
    std::vector<int> seq;
    Rat value;
    Rat slack;  // positive weight still available outside the path
    Rat bound() const { return value + slack; }
};

struct StateOrder {
    bool operator()(const SearchState& a, const SearchState& b) const {
        const Rat ba = a.bound(), bb = b.bound();
        if (ba != bb) return ba < bb;
        return a.seq > b.seq;
    }
};

}  // namespace

std::vector<PricedPath> top_weight_induced_paths(const Graph& g, const PricingWeights& pw,
                                                 int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (static_cast<int>(pw.vertex.size()) != g.vertex_count() + 1)
        throw std::invalid_argument("vertex weight vector has wrong size");

    Rat positive_total(0);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (pw.vertex[v] > 0) positive_total += pw.vertex[v];
    for (const auto& [e, w] : pw.edge)
        if (w > 0) positive_total += w;

    TopK top{k, {}};
    std::priority_queue<SearchState, std::vector<SearchState>, StateOrder> queue;

    auto spawn = [&](SearchState s) {
        top.offer(canonical(s.seq, s.value));
        if (!top.cuts(s.bound())) queue.push(std::move(s));
    };

    for (const auto& [u, v] : g.edges())
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            SearchState s;
            s.seq = {a, b};
            s.value = pw.vertex[a] + pw.vertex[b] + pw.edge_weight(a, b);
            s.slack = positive_total;
            for (const Rat* w : {&pw.vertex[a], &pw.vertex[b], &pw.edge_weight(a, b)})
                if (*w > 0) s.slack -= *w;
            spawn(std::move(s));
        }

    std::vector<bool> in_path(g.vertex_count() + 1, false);
    while (!queue.empty()) {
        SearchState s = queue.top();
        queue.pop();
        if (top.cuts(s.bound())) break;  // best-first: nothing left can improve
        for (int v : s.seq) in_path[v] = true;
        const int tail = s.seq.back();
        for (int w : g.neighbors(tail)) {
            if (in_path[w]) continue;
            bool chord = false;
            for (std::size_t i = 0; i + 1 < s.seq.size() && !chord; ++i)
                chord = g.has_edge(w, s.seq[i]);
            if (chord) continue;
            SearchState ext = s;
            ext.seq.push_back(w);
            const Rat& ew = pw.edge_weight(tail, w);
            ext.value += pw.vertex[w] + ew;
            if (pw.vertex[w] > 0) ext.slack -= pw.vertex[w];
            if (ew > 0) ext.slack -= ew;
            spawn(std::move(ext));
        }
        for (int v : s.seq) in_path[v] = false;
    }
    return top.best;
}

std::optional<PricedPath> max_weight_induced_path(const Graph& g, const PricingWeights& pw) {
    auto best = top_weight_induced_paths(g, pw, 1);
    if (best.empty()) return std::nullopt;
    return best.front();
}

std::optional<PricedPath> brute_force_pricing(const Graph& g, const PricingWeights& pw,
                                              int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceeded("brute-force pricing capped at " + std::to_string(max_vertices) +
                          " vertices, got " + std::to_string(n));
    std::optional<PricedPath> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 1; v <= n; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) s.push_back(v);
        if (s.size() < 2) continue;

        // path-ness: connected with |S|-1 edges and max degree 2
        int edges = 0, ends = 0;
        bool ok = true;
        for (int v : s) {
            int deg = 0;
            for (int w : g.neighbors(v))
                if (std::binary_search(s.begin(), s.end(), w)) ++deg;
            if (deg > 2 || deg == 0) {
                ok = false;
                break;
            }
            if (deg == 1) ++ends;
            edges += deg;
        }
        edges /= 2;
        if (!ok || ends != 2 || edges != static_cast<int>(s.size()) - 1 ||
            !induces_connected(g, s))
            continue;

        Rat value(0);
        for (int v : s) value += pw.vertex[v];
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (g.has_edge(s[i], s[j])) value += pw.edge_weight(s[i], s[j]);

        if (best && !better(PricedPath{{}, s, value}, *best)) continue;

        // walk the traversal from the smaller endpoint
        std::vector<int> endpoints;
        for (int v : s) {
            int deg = 0;
            for (int w : g.neighbors(v))
                if (std::binary_search(s.begin(), s.end(), w)) ++deg;
            if (deg == 1) endpoints.push_back(v);
        }
        std::vector<int> seq{*std::min_element(endpoints.begin(), endpoints.end())};
        std::vector<bool> used(n + 1, false);
        used[seq[0]] = true;
        while (seq.size() < s.size()) {
            for (int w : g.neighbors(seq.back()))
                if (!used[w] && std::binary_search(s.begin(), s.end(), w)) {
                    seq.push_back(w);
                    used[w] = true;
                    break;
                }
        }
        best = PricedPath{std::move(seq), s, std::move(value)};
    }
    return best;
}

}  // namespace coplex
