#include <doctest.h>

#include "rcw/coloring.hpp"
#include "rcw/errors.hpp"
#include "rcw/graph.hpp"
#include "rcw/json_io.hpp"
#include "rcw/witness.hpp"

using namespace rcw;

namespace {

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("make_coloring counts and dedup") {
    auto c = CompleteColoring::make(3, {{0, 1}});
    CHECK(c.red_edge_count() == 1);
    CHECK(c.blue_edge_count() == 2);

    auto single = CompleteColoring::make(1, {});
    CHECK(single.red_edge_count() == 0);
    CHECK(single.blue_edge_count() == 0);

    auto dedup = CompleteColoring::make(4, {{0, 1}, {1, 0}});
    CHECK(dedup.red_edge_count() == 1);
}

TEST_CASE("make_coloring rejects bad pairs") {
    CHECK_THROWS_AS(CompleteColoring::make(2, {{0, 2}}), out_of_range_error);
    CHECK_THROWS_AS(CompleteColoring::make(3, {{1, 1}}), self_loop_error);
}

TEST_CASE("color_of symmetry and complement") {
    auto c = CompleteColoring::make(3, {{0, 1}});
    CHECK(c.color_of(0, 1) == Color::Red);
    CHECK(c.color_of(0, 2) == Color::Blue);
    CHECK(c.color_of(2, 1) == Color::Blue);
    CHECK(c.color_of(1, 0) == Color::Red);
    CHECK_THROWS_AS(c.color_of(0, 0), self_loop_error);
}

TEST_CASE("monochromatic graphs complement each other") {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) all.emplace_back(u, v);
    auto c = CompleteColoring::make(4, all);
    CHECK(c.blue_graph().edge_count() == 0);
    CHECK(c.red_graph().edge_count() == 6);

    auto mixed = CompleteColoring::make(5, {{0, 1}, {2, 3}});
    CHECK(mixed.red_graph().edge_count() + mixed.blue_graph().edge_count() == 10);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            bool red = mixed.red_graph().adjacent(u, v);
            bool blue = mixed.blue_graph().adjacent(u, v);
            CHECK(red != blue);
        }
}

TEST_CASE("induced coloring preserves colors under the map") {
    auto c = CompleteColoring::make(5, {{0, 3}, {1, 2}, {3, 4}});
    VertexSet s = VertexSet::of({1, 3, 4});
    std::vector<int> map;
    auto sub = c.induced(s, &map);
    CHECK(sub.order() == 3);
    REQUIRE(map == std::vector<int>{1, 3, 4});
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            CHECK(sub.color_of(a, b) == c.color_of(map[a], map[b]));

    auto one = c.induced(VertexSet::of({2}));
    CHECK(one.order() == 1);
    CHECK_THROWS_AS(c.induced(VertexSet{}), precondition_error);
}

TEST_CASE("degrees") {
    auto c5 = cycle_graph(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(complete_graph(6).min_degree() == 5);
    CHECK_THROWS_AS(c5.degree(9), out_of_range_error);

    // degree sum = twice the edge count
    auto g = Graph::from_edges(6, {{0, 1}, {0, 2}, {3, 4}, {1, 2}});
    int sum = 0;
    for (int v = 0; v < 6; ++v) sum += g.degree(v);
    CHECK(sum == static_cast<int>(2 * g.edge_count()));
}

TEST_CASE("witness validation is decidable and strict") {
    auto k4 = complete_graph(4);
    CycleWitness tri{{0, 1, 2}};
    CHECK(tri.validate(k4));
    CHECK_FALSE(CycleWitness{{0, 1}}.validate(k4));
    CHECK_FALSE(CycleWitness{{0, 1, 1}}.validate(k4));

    auto c5 = cycle_graph(5);
    CHECK(CycleWitness{{0, 1, 2, 3, 4}}.validate(c5));
    CHECK_FALSE(CycleWitness{{0, 1, 3, 2, 4}}.validate(c5));

    WheelWitness w;
    w.hub = 3;
    w.rim = CycleWitness{{0, 1, 2}};
    CHECK(w.validate(k4));
    w.hub = 2;
    CHECK_FALSE(w.validate(k4));  // hub on the rim

    PathWitness p{{0, 1, 2}};
    CHECK(p.validate(c5));
    CHECK(p.length() == 2);
    CHECK_FALSE(PathWitness{{0, 2}}.validate(c5));
}

TEST_CASE("partition shape checks") {
    Partition p({{0, 1}, {2}, {3}, {}});
    CHECK(p.is_partition_of(4));
    CHECK_FALSE(p.is_partition_of(5));
    CHECK_FALSE(Partition({{0, 0}, {1}}).is_partition_of(2));
}

TEST_CASE("canonical document round trip") {
    auto c = CompleteColoring::make(4, {{2, 3}, {1, 0}, {0, 3}});
    std::string doc = io::serialize_coloring(c);
    CHECK(doc == R"({"n":4,"red_edges":[[0,1],[0,3],[2,3]]})");
    auto back = io::parse_coloring(doc);
    CHECK(io::serialize_coloring(back) == doc);
    CHECK(back == c);

    // non-canonical input is accepted and canonicalized
    auto messy = io::parse_coloring(R"({"red_edges":[[3,2],[1,0],[2,3]],"n":4})");
    CHECK(io::serialize_coloring(messy) == R"({"n":4,"red_edges":[[0,1],[2,3]]})");
}

TEST_CASE("document parse failures") {
    CHECK_THROWS_AS(io::parse_coloring("not json"), malformed_input_error);
    CHECK_THROWS_AS(io::parse_coloring(R"({"n":2})"), malformed_input_error);
    CHECK_THROWS_AS(io::parse_coloring(R"({"n":2,"red_edges":[[0,2]]})"), out_of_range_error);
    CHECK_THROWS_AS(io::parse_coloring(R"({"n":2,"red_edges":[[1,1]]})"), self_loop_error);
    CHECK_THROWS_AS(io::parse_coloring(R"({"n":0,"red_edges":[]})"), malformed_input_error);
}

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of({3, 70, 5});
    CHECK(s.count() == 3);
    CHECK(s.first() == 3);
    CHECK(s.next_above(3) == 5);
    CHECK(s.next_above(5) == 70);
    CHECK(s.next_above(70) == -1);
    CHECK(s.to_vector() == std::vector<int>{3, 5, 70});
    CHECK(VertexSet::full(66).count() == 66);
    CHECK((s - VertexSet::of({5})).count() == 2);
    CHECK(VertexSet::full(10).contains(s - VertexSet::of({70})));
}
