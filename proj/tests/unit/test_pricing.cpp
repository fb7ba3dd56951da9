#include <doctest.h>

#include <algorithm>
#include <random>

#include "coplex/pricing.hpp"
#include "support/testutil.hpp"

using namespace coplex;
namespace tu = coplex::testutil;

namespace {

PricingWeights manual_weights(const Graph& g, std::vector<Rat> vertex_by_id,
                              std::vector<std::pair<Edge, Rat>> edges) {
    PricingWeights pw;
    pw.vertex.assign(g.vertex_count() + 1, Rat(0));
    for (std::size_t v = 0; v < vertex_by_id.size(); ++v)
        pw.vertex[v + 1] = vertex_by_id[v];
    for (const auto& e : g.edges()) pw.edge.emplace(e, Rat(0));
    for (auto& [e, w] : edges) pw.edge[e] = w;
    return pw;
}

PricingWeights random_weights(const Graph& g, std::mt19937_64& rng) {
    PricingWeights pw;
    pw.vertex.assign(g.vertex_count() + 1, Rat(0));
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 4);
    for (int v = 1; v <= g.vertex_count(); ++v) pw.vertex[v] = rat(num(rng), den(rng));
    for (const auto& e : g.edges()) pw.edge.emplace(e, rat(num(rng), den(rng)));
    return pw;
}

}  // namespace

TEST_CASE("pricing weights collect clique duals on edges") {
    const Graph p3 = tu::path_graph(3);
    const CliqueSet ks = maximal_cliques_general(p3);

    DualValues zeros{{Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0), Rat(0)}};
    PricingWeights pw = pricing_weights_from_duals(p3, ks, zeros);
    CHECK(pw.edge_weight(1, 2) == 0);
    CHECK(pw.edge_weight(2, 3) == 0);

    // cliques sorted: index 0 = {1,2}, index 1 = {2,3}
    DualValues duals{{rat(1, 2), rat(1, 3)}, {Rat(0), Rat(0), Rat(0), Rat(0)}};
    pw = pricing_weights_from_duals(p3, ks, duals);
    CHECK(pw.edge_weight(1, 2) == rat(1, 2));
    CHECK(pw.edge_weight(2, 3) == rat(1, 3));

    const Graph k4 = tu::complete_graph(4);
    const CliqueSet k4s = maximal_cliques_general(k4);
    DualValues one{{Rat(1)}, std::vector<Rat>(5, Rat(0))};
    pw = pricing_weights_from_duals(k4, k4s, one);
    for (const auto& e : k4.edges()) CHECK(pw.edge_weight(e.first, e.second) == 1);
}

TEST_CASE("pricing conventions differ by the vertex weight term") {
    Graph p2 = tu::path_graph(2);
    p2.set_weight(1, rat(5));
    const CliqueSet ks = maximal_cliques_general(p2);
    DualValues duals{{Rat(0)}, {Rat(0), rat(2), rat(3)}};
    const PricingWeights dual_pw = pricing_weights_from_duals(p2, ks, duals);
    CHECK(dual_pw.vertex[1] == rat(-2));
    CHECK(dual_pw.vertex[2] == rat(-3));
    const PricingWeights paper_pw =
        pricing_weights_from_duals(p2, ks, duals, PricingConvention::paper);
    CHECK(paper_pw.vertex[1] == rat(3));   // 5 - 2
    CHECK(paper_pw.vertex[2] == rat(-2));  // 1 - 3
}

TEST_CASE("max weight induced path on hand-checked instances") {
    const Graph p2 = tu::path_graph(2);
    auto best = max_weight_induced_path(
        p2, manual_weights(p2, {rat(2), rat(3)}, {{make_edge(1, 2), rat(4)}}));
    REQUIRE(best.has_value());
    CHECK(best->value == 9);
    CHECK(best->key == VertexSet{1, 2});

    const Graph p3 = tu::path_graph(3);
    best = max_weight_induced_path(p3, manual_weights(p3, {rat(1), rat(-5), rat(1)}, {}));
    REQUIRE(best.has_value());
    CHECK(best->value == -3);
    CHECK(best->sequence == std::vector<int>{1, 2, 3});

    const Graph k3 = tu::complete_graph(3);
    best = max_weight_induced_path(
        k3, manual_weights(k3, {Rat(0), Rat(0), Rat(0)}, {{make_edge(1, 2), rat(5)},
                                                          {make_edge(1, 3), rat(1)},
                                                          {make_edge(2, 3), rat(1)}}));
    REQUIRE(best.has_value());
    CHECK(best->value == 5);
    CHECK(best->key == VertexSet{1, 2});  // K3 has no 3-vertex induced path
}

TEST_CASE("edgeless graphs price to nothing") {
    const Graph lonely(1);
    PricingWeights pw;
    pw.vertex.assign(2, Rat(0));
    CHECK_FALSE(max_weight_induced_path(lonely, pw).has_value());
    CHECK_FALSE(brute_force_pricing(lonely, pw).has_value());
}

TEST_CASE("all-zero weights return a zero-value edge deterministically") {
    const Graph p3 = tu::path_graph(3);
    const PricingWeights pw = manual_weights(p3, {Rat(0), Rat(0), Rat(0)}, {});
    const auto best = max_weight_induced_path(p3, pw);
    REQUIRE(best.has_value());
    CHECK(best->value == 0);
    CHECK(best->key == VertexSet{1, 2});  // lexicographic tie-break
    CHECK(brute_force_pricing(p3, pw)->key == VertexSet{1, 2});
}

TEST_CASE("search equals the subset oracle on random weighted instances") {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = tu::random_graph(n, 0.45, rng);
        const PricingWeights pw = random_weights(g, rng);
        const auto fast = max_weight_induced_path(g, pw);
        const auto slow = brute_force_pricing(g, pw);
        REQUIRE(fast.has_value() == slow.has_value());
        if (!fast) continue;
        CHECK(fast->value == slow->value);
        CHECK(fast->key == slow->key);
        CHECK(fast->sequence == slow->sequence);
        CHECK(tu::induces_path(g, fast->key));
    }
}

TEST_CASE("pricing value is invariant under relabeling") {
    std::mt19937_64 rng(121);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = tu::random_graph(n, 0.5, rng);
        const PricingWeights pw = random_weights(g, rng);

        std::vector<int> perm(n + 1);
        for (int v = 1; v <= n; ++v) perm[v] = v;
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        Graph h(n);
        for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        PricingWeights pw2;
        pw2.vertex.assign(n + 1, Rat(0));
        for (int v = 1; v <= n; ++v) pw2.vertex[perm[v]] = pw.vertex[v];
        for (const auto& [e, w] : pw.edge)
            pw2.edge.emplace(make_edge(perm[e.first], perm[e.second]), w);

        const auto a = max_weight_induced_path(g, pw);
        const auto b = max_weight_induced_path(h, pw2);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->value == b->value);
    }
}

TEST_CASE("top-k pricing returns distinct keys in value order") {
    const Graph p4 = tu::path_graph(4);
    const PricingWeights pw = manual_weights(p4, {rat(4), rat(3), rat(2), rat(1)}, {});
    const auto top = top_weight_induced_paths(p4, pw, 3);
    REQUIRE(top.size() == 3);
    CHECK(top[0].key == VertexSet{1, 2, 3, 4});  // value 10
    CHECK(top[1].key == VertexSet{1, 2, 3});     // value 9
    CHECK(top[2].key == VertexSet{1, 2});        // value 7
    for (std::size_t i = 0; i + 1 < top.size(); ++i) CHECK(top[i].value >= top[i + 1].value);
}
