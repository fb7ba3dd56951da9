#include "coplex/structures.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace coplex {

bool is_co3plex(const Graph& g, const VertexSet& s) {
    if (!is_vertex_set(s)) throw std::invalid_argument("not a vertex set");
    std::vector<bool> in_s(g.vertex_count() + 1, false);
    for (int v : s) {
        g.check_vertex(v);
        in_s[v] = true;
    }
    for (int v : s) {
        int deg = 0;
        for (int w : g.neighbors(v))
            if (in_s[w] && ++deg > 2) return false;
    }
    return true;
}

Co3Plex make_co3plex(const Graph& g, const VertexSet& s) {
    if (!is_co3plex(g, s)) throw std::invalid_argument("set is not a co-3-plex");
    return Co3Plex{s, induced_components(g, s)};
}

Rat set_weight(const Graph& g, const VertexSet& s) {
    Rat w(0);
    for (int v : s) w += g.weight(v);
    return w;
}

std::vector<VertexSet> enumerate_triangles(const Graph& g) {
    std::vector<VertexSet> out;
    for (const auto& [u, v] : g.edges())
        for (int w : g.neighbors(v))
            if (w > v && g.has_edge(u, w)) out.push_back({u, v, w});
    std::sort(out.begin(), out.end());
    return out;
}

static void cap_check(long count, long cap, const char* what) {
    if (count > cap)
        throw CapExceeded(std::string(what) + " enumeration exceeded cap (" +
                          std::to_string(cap) + ")");
}

// Grows a path at its tail: the new vertex must be adjacent to the current
// endpoint and to no other path vertex, so every emitted sequence is an
// induced path and every induced path is reached from both its endpoints.
// Emitting only traversals with first < last keeps one copy per set.
std::vector<InducedPath> enumerate_induced_paths(const Graph& g, long cap) {
    std::vector<InducedPath> out;
    long emitted = 0;
    std::vector<int> path;
    std::vector<bool> in_path(g.vertex_count() + 1, false);

    auto emit = [&]() {
        if (path.front() > path.back()) return;
        cap_check(++emitted, cap, "induced path");
        VertexSet key = path;
        std::sort(key.begin(), key.end());
        out.push_back(InducedPath{path, std::move(key)});
    };

    std::function<void()> grow = [&]() {
        emit();
        const int tail = path.back();
        for (int w : g.neighbors(tail)) {
            if (in_path[w]) continue;
            bool chord = false;
            for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i)
                chord = g.has_edge(w, path[i]);
            if (chord) continue;
            path.push_back(w);
            in_path[w] = true;
            grow();
            in_path[w] = false;
            path.pop_back();
        }
    };

    for (int v = 1; v <= g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) {
            path = {v, w};
            in_path[v] = in_path[w] = true;
            grow();
            in_path[v] = in_path[w] = false;
        }

    std::sort(out.begin(), out.end(),
              [](const InducedPath& a, const InducedPath& b) { return a.key < b.key; });
    return out;
}

ComponentCatalog enumerate_catalog(const Graph& g, long cap) {
    return ComponentCatalog{enumerate_triangles(g), enumerate_induced_paths(g, cap)};
}

std::vector<VertexSet> enumerate_stable_sets(const Graph& g, long cap) {
    std::vector<VertexSet> out;
    long emitted = 0;
    VertexSet cur;
    // Output-sensitive: each stable set is visited exactly once, extending by
    // non-adjacent vertices larger than the current maximum.
    std::function<void(int)> extend = [&](int from) {
        cap_check(++emitted, cap, "stable set");
        out.push_back(cur);
        for (int v = from; v <= g.vertex_count(); ++v) {
            bool clash = false;
            for (int u : cur)
                if (g.has_edge(u, v)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            cur.push_back(v);
            extend(v + 1);
            cur.pop_back();
        }
    };
    extend(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Co3Plex, Rat> brute_force_max_co3plex(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapExceeded("brute-force co-3-plex search capped at " +
                          std::to_string(max_vertices) + " vertices, got " + std::to_string(n));
    VertexSet best;  // empty set is a co-3-plex of weight 0
    Rat best_w(0);
    bool have = false;
    std::vector<bool> in_s(n + 1, false);
    VertexSet s;
    std::function<void(int)> scan = [&](int v) {
        if (v > n) {
            Rat w = set_weight(g, s);
            if (!have || w > best_w || (w == best_w && s < best)) {
                best = s;
                best_w = w;
                have = true;
            }
            return;
        }
        scan(v + 1);
        s.push_back(v);
        in_s[v] = true;
        bool ok = true;
        for (int u : s) {
            int deg = 0;
            for (int w : g.neighbors(u))
                if (in_s[w] && ++deg > 2) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) scan(v + 1);
        in_s[v] = false;
        s.pop_back();
    };
    scan(1);
    return {make_co3plex(g, best), best_w};
}

}  // namespace coplex
