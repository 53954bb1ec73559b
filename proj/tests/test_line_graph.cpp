#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgcm/errors.hpp"
#include "lgcm/harness.hpp"
#include "lgcm/line_graph.hpp"

using namespace lgcm;
using harness::canonical_key;
using harness::enumerate_connected_graphs;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

} // namespace

TEST_CASE("line graph of a path is a shorter path") {
    LineGraphMap lg = line_graph(path(4));
    CHECK(lg.line().num_vertices() == 3);
    CHECK(lg.line() == path(3));
    CHECK(lg.edge_of_vertex(0) == std::pair<int, int>{0, 1});
    CHECK(lg.vertex_of_edge(1, 0) == 0);
    CHECK_THROWS_AS(lg.vertex_of_edge(0, 2), input_error);
    CHECK_THROWS_AS(line_graph(Graph(3)), input_error); // edgeless
}

TEST_CASE("line graph of the claw is a triangle") {
    LineGraphMap lg = line_graph(star(3));
    CHECK(lg.line() == complete(3));
}

TEST_CASE("line graph edge counts") {
    // |E(L(H))| = sum over vertices of C(deg, 2)
    Graph h = complete(4);
    LineGraphMap lg = line_graph(h);
    CHECK(lg.line().num_vertices() == 6);
    CHECK(lg.line().num_edges() == 4 * 3);
}

TEST_CASE("triangle is recognized with the claw as root") {
    auto rec = recognize_root(complete(3));
    REQUIRE(rec.has_value());
    CHECK(canonical_key(rec->map.root()) == canonical_key(star(3)));
}

TEST_CASE("claw is not a line graph") {
    CHECK(!recognize_root(star(3)).has_value());
}

TEST_CASE("known non-line graphs are rejected") {
    CHECK(!recognize_root(star(4)).has_value());
    Graph k23(5);
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) k23.add_edge(a, b);
    CHECK(!recognize_root(k23).has_value());
    // the 4-wheel, by contrast, is the line graph of K4 minus an edge
    Graph w(5);
    w.add_edge(0, 1);
    w.add_edge(1, 2);
    w.add_edge(2, 3);
    w.add_edge(3, 0);
    for (int v = 0; v < 4; ++v) w.add_edge(4, v);
    CHECK(recognize_root(w).has_value());
}

TEST_CASE("recognition round trip over all small roots") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& h : enumerate_connected_graphs(n)) {
            LineGraphMap expected = line_graph(h);
            auto rec = recognize_root(expected.line());
            REQUIRE(rec.has_value());
            // the recovered root's line graph must match the input up to the
            // recorded isomorphism
            const Graph& g = expected.line();
            const Graph& lg = rec->map.line();
            REQUIRE(lg.num_vertices() == g.num_vertices());
            for (auto [u, v] : g.edges())
                CHECK(lg.has_edge(rec->line_vertex_of[u], rec->line_vertex_of[v]));
            CHECK(lg.num_edges() == g.num_edges());
        }
    }
}

TEST_CASE("recognition agrees with exhaustive root search") {
    int checked = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n)) {
            auto rec = recognize_root(g);
            CHECK(rec.has_value() == harness::line_graph_by_search(g));
            if (rec)
                CHECK(canonical_key(rec->map.line()) == canonical_key(g));
            ++checked;
        }
    }
    CHECK(checked == 1 + 2 + 6 + 21);
}
