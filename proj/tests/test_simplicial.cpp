#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "lgcm/errors.hpp"
#include "lgcm/line_graph.hpp"
#include "lgcm/simplicial.hpp"

using namespace lgcm;

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

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("void complex vs empty-facet complex") {
    SimplicialComplex void_c = SimplicialComplex::void_complex();
    SimplicialComplex empty = SimplicialComplex::empty_facet_complex();
    CHECK(void_c.is_void());
    CHECK(!empty.is_void());
    CHECK(void_c != empty);
    CHECK(empty.dim() == -1);
    CHECK(empty.is_simplex());
    CHECK(!void_c.is_simplex());
    CHECK_THROWS_AS(void_c.dim(), input_error);
    CHECK_THROWS_AS(void_c.is_pure(), input_error);
    CHECK(empty.contains_face({}));
    CHECK(!void_c.contains_face({}));
    CHECK(SimplicialComplex::from_facets({{}}) == empty);
    CHECK(SimplicialComplex::from_facets({}) == void_c);
}

TEST_CASE("from_facets keeps only maximal faces") {
    auto c = SimplicialComplex::from_facets({{2, 1}, {1, 2, 3}, {3}, {1, 2, 3}, {4}, {}});
    CHECK(c.facets() == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
    CHECK(c.vertices() == std::vector<int>{1, 2, 3, 4});
    CHECK(c.num_vertices() == 4);
    CHECK(c.dim() == 2);
    CHECK(!c.is_pure());
    CHECK(c.contains_face({1, 3}));
    CHECK(c.contains_face({}));
    CHECK(!c.contains_face({1, 4}));
    // repeated vertices inside a facet collapse
    CHECK(SimplicialComplex::from_facets({{1, 1}}) ==
          SimplicialComplex::from_facets({{1}}));
}

TEST_CASE("faces_by_dim") {
    auto c = SimplicialComplex::from_facets({{0, 1, 2}});
    auto faces = c.faces_by_dim();
    REQUIRE(faces.size() == 4); // dims -1..2
    CHECK(faces[0] == std::vector<std::vector<int>>{{}});
    CHECK(faces[1].size() == 3);
    CHECK(faces[2].size() == 3);
    CHECK(faces[3].size() == 1);
    CHECK(SimplicialComplex::void_complex().faces_by_dim().empty());
}

TEST_CASE("clique complexes") {
    CHECK(clique_complex(complete(4)).is_simplex());
    CHECK(clique_complex(complete(4)).dim() == 3);
    auto c = clique_complex(path(4));
    CHECK(c.dim() == 1);
    CHECK(c.facets().size() == 3);
    Graph empty(3); // no edges: three isolated points
    CHECK(clique_complex(empty).facets() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(clique_complex(Graph()) == SimplicialComplex::empty_facet_complex());
}

TEST_CASE("clique complex via line-graph structure agrees with generic route") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Graph h = random_graph(rng, 2 + trial % 6, 0.5);
        if (h.num_edges() == 0) continue;
        LineGraphMap lg = line_graph(h);
        CHECK(clique_complex(lg) == clique_complex(lg.line()));
    }
}

TEST_CASE("link and deletion") {
    auto c = SimplicialComplex::from_facets({{0, 1, 2}, {2, 3}});
    CHECK(link(c, {2}) == SimplicialComplex::from_facets({{0, 1}, {3}}));
    CHECK(link(c, {0, 1}) == SimplicialComplex::from_facets({{2}}));
    CHECK(link(c, {0, 1, 2}) == SimplicialComplex::empty_facet_complex());
    CHECK(link(c, {}) == c);
    CHECK_THROWS_AS(link(c, {0, 3}), input_error); // not a face
    CHECK(delete_vertex(c, 2) == SimplicialComplex::from_facets({{0, 1}, {3}}));
    CHECK(delete_vertex(c, 3) == SimplicialComplex::from_facets({{0, 1, 2}}));
    auto point = SimplicialComplex::from_facets({{5}});
    CHECK(delete_vertex(point, 5) == SimplicialComplex::empty_facet_complex());
}

TEST_CASE("pure skeletons") {
    auto c = SimplicialComplex::from_facets({{0, 1, 2}, {2, 3}, {4}});
    // pure i-skeleton: faces of dimension i that lie in a facet of dimension >= i
    CHECK(pure_skeleton(c, 2) == SimplicialComplex::from_facets({{0, 1, 2}}));
    CHECK(pure_skeleton(c, 1) ==
          SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
    CHECK(pure_skeleton(c, 0) ==
          SimplicialComplex::from_facets({{0}, {1}, {2}, {3}, {4}}));
    CHECK_THROWS_AS(pure_skeleton(c, 3), input_error);
    CHECK(pure_skeleton(c, -1) == SimplicialComplex::empty_facet_complex());
    CHECK(pure_skeleton(c, 2).is_pure());
}

TEST_CASE("strong connectivity") {
    // two triangles glued along an edge: connected in codimension 1
    CHECK(is_strongly_connected(SimplicialComplex::from_facets({{0, 1, 2}, {1, 2, 3}})));
    // glued at a single vertex: not
    CHECK(!is_strongly_connected(SimplicialComplex::from_facets({{0, 1, 2}, {2, 3, 4}})));
    CHECK(is_strongly_connected(SimplicialComplex::from_facets({{0, 1, 2}})));
    CHECK(is_strongly_connected(SimplicialComplex::empty_facet_complex()));
    // any two points meet in the empty face, which has codimension 1 here
    CHECK(is_strongly_connected(SimplicialComplex::from_facets({{0}, {1}})));
    // ... but two disjoint edges do not
    CHECK(!is_strongly_connected(SimplicialComplex::from_facets({{0, 1}, {2, 3}})));
    CHECK_THROWS_AS(is_strongly_connected(SimplicialComplex::void_complex()), input_error);
    CHECK_THROWS_AS(
        is_strongly_connected(SimplicialComplex::from_facets({{0, 1}, {2}})),
        input_error);
}

TEST_CASE("free vertices") {
    auto c = SimplicialComplex::from_facets({{0, 1, 2}, {2, 3}});
    CHECK(free_vertices(c) == std::vector<int>{0, 1, 3});
    CHECK(free_vertices(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}})).empty());
}

TEST_CASE("facet list io") {
    std::istringstream in("# facets\na b c\nc d\n\nd\n");
    NamedComplex nc = read_facet_list(in);
    CHECK(nc.names == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(nc.complex == SimplicialComplex::from_facets({{0, 1, 2}, {2, 3}}));
    std::istringstream dup("a a\n");
    CHECK_THROWS_AS(read_facet_list(dup), input_error);
    std::istringstream nothing("# only a comment\n");
    CHECK(read_facet_list(nothing).complex.is_void());
}
