#include <doctest.h>

#include <random>

#include "coplex/chordal.hpp"
#include "coplex/graph.hpp"
#include "support/testutil.hpp"

using namespace coplex;
namespace tu = coplex::testutil;

TEST_CASE("parse_graph reads the dialect") {
    const Graph g = parse_graph("c a comment\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.weight(1) == 1);

    const Graph one = parse_graph("p edge 1 0\n");
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);
}

TEST_CASE("parse_graph reads rational weights") {
    const Graph g = parse_graph("p edge 2 1\nn 1 7/2\nn 2 -3\ne 1 2\n");
    CHECK(g.weight(1) == rat(7, 2));
    CHECK(g.weight(2) == rat(-3));
}

TEST_CASE("parse_graph errors name the line") {
    CHECK_THROWS_WITH_AS(parse_graph("p edge 3 1\ne 1 5\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_graph("p edge 2 1\nq broken\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);  // edge before header
}

TEST_CASE("write_graph round-trips its canonical form") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = tu::random_graph(8, 0.4, rng);
        randomize_weights(g, -5, 5, trial);
        const std::string text = write_graph(g);
        CHECK(write_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("induced_subgraph keeps edges inside the set") {
    const Graph p3 = tu::path_graph(3);
    const Graph h = induced_subgraph(p3, {1, 3});
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 0);
    CHECK(h.label(1) == VertexSet{1});
    CHECK(h.label(2) == VertexSet{3});

    const Graph k4 = tu::complete_graph(4);
    const Graph t = induced_subgraph(k4, {1, 3, 4});
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);

    const Graph same = induced_subgraph(p3, {1, 2, 3});
    CHECK(write_graph(same) == write_graph(p3));

    CHECK_THROWS_AS(induced_subgraph(p3, {1, 4}), std::invalid_argument);
}

TEST_CASE("add_true_twin copies the closed neighborhood") {
    const Graph p3 = tu::path_graph(3);
    const Graph g = add_true_twin(p3, 1);
    CHECK(g.vertex_count() == 4);
    CHECK(g.has_edge(4, 1));
    CHECK(g.has_edge(4, 2));
    CHECK_FALSE(g.has_edge(4, 3));

    Graph lone(1);
    const Graph pair = add_true_twin(lone, 1);
    CHECK(pair.vertex_count() == 2);
    CHECK(pair.has_edge(1, 2));

    const Graph k4 = add_true_twin(tu::complete_graph(3), 2);
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) CHECK(k4.has_edge(u, v));

    CHECK_THROWS_AS(add_true_twin(p3, 9), std::invalid_argument);
}

TEST_CASE("true twin property holds on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = tu::random_graph(1 + static_cast<int>(rng() % 9), 0.5, rng);
        for (int v = 1; v <= g.vertex_count(); ++v) {
            const Graph h = add_true_twin(g, v);
            const int tw = h.vertex_count();
            // N[tw] == N[v] in h
            for (int u = 1; u < tw; ++u) {
                const bool in_nv = u == v || h.has_edge(v, u);
                const bool in_ntw = h.has_edge(tw, u) || u == tw;
                CHECK(in_nv == in_ntw);
            }
        }
    }
}

TEST_CASE("contract_edges merges components of the contracted set") {
    // Figure-style check: P3 plus a twin of 1 and a twin of 2, then
    // contracting the twin edge leaves one vertex adjacent to 1, 2, 3.
    Graph g = add_true_twin(tu::path_graph(3), 1);   // vertex 4 ~ {1,2}
    g = add_true_twin(g, 2);                         // vertex 5 ~ {1,2,3,4}
    const Graph c = contract_edges(g, {make_edge(4, 5)});
    CHECK(c.vertex_count() == 4);
    const int merged = 4;  // survivors 1..3 keep their ids
    CHECK(c.label(merged) == VertexSet{1, 2});
    CHECK(c.has_edge(merged, 1));
    CHECK(c.has_edge(merged, 2));
    CHECK(c.has_edge(merged, 3));

    const Graph k2 = contract_edges(tu::complete_graph(3), {make_edge(1, 2)});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    const Graph e = contract_edges(tu::path_graph(3), {make_edge(1, 2)});
    CHECK(e.vertex_count() == 2);
    CHECK(e.edge_count() == 1);

    CHECK_THROWS_AS(contract_edges(tu::path_graph(3), {make_edge(1, 3)}),
                    std::invalid_argument);
}

TEST_CASE("contracting a spanning connected edge set leaves one vertex") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = generate_random_chordal(2 + static_cast<int>(rng() % 7), 0.6, rng());
        const Graph c = contract_edges(g, g.edges());  // g is connected
        CHECK(c.vertex_count() == 1);
        VertexSet everyone;
        for (int v = 1; v <= g.vertex_count(); ++v) everyone.push_back(v);
        CHECK(c.label(1) == everyone);
    }
}

TEST_CASE("connectivity basics") {
    CHECK(is_connected(tu::path_graph(3)));
    const Graph two(2);
    CHECK_FALSE(is_connected(two));
    CHECK(connected_components(two).size() == 2);
    const Graph empty(0);
    CHECK(is_connected(empty));
    CHECK(connected_components(empty).empty());
}

TEST_CASE("random chordal generator is chordal, connected, deterministic") {
    CHECK(generate_random_chordal(1, 0.5, 9).vertex_count() == 1);
    const Graph a = generate_random_chordal(30, 0.4, 123);
    const Graph b = generate_random_chordal(30, 0.4, 123);
    CHECK(write_graph(a) == write_graph(b));
    CHECK(is_connected(a));
    CHECK(is_chordal(a));
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = generate_random_chordal(3 + seed % 10, 0.1 * (seed % 10), seed);
        CHECK(is_connected(g));
        CHECK(is_chordal(g));
    }
}
