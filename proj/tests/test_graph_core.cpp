#include "domlab/canonical.hpp"
#include "domlab/graph.hpp"
#include "domlab/graph6.hpp"
#include "domlab/vertex_set.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace domlab;

TEST_CASE("vertex set basics")
{
    VertexSet s(70, {0, 3, 64, 69});
    CHECK(s.size() == 4);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(65));
    CHECK(s.members() == std::vector<Vertex>{0, 3, 64, 69});
    s.erase(3);
    CHECK(s.size() == 3);
    CHECK(VertexSet::full(70).size() == 70);
    CHECK((s & VertexSet(70, {0, 1})).members() == std::vector<Vertex>{0});
    CHECK((s - VertexSet(70, {0})).members() == std::vector<Vertex>{64, 69});
    CHECK(VertexSet(70, {64}).is_subset_of(s));
    CHECK_THROWS_AS(s.insert(70), std::out_of_range);
    CHECK_THROWS_AS(s |= VertexSet(5), std::invalid_argument);
}

TEST_CASE("graph construction rejects loops and bad endpoints")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.size() == 2);
    for (Vertex v = 0; v < g.order(); ++v) {
        CHECK_FALSE(g.adjacent(v, v));
        g.neighbors(v).for_each([&](Vertex u) { CHECK(g.adjacent(u, v)); });
    }
    CHECK_THROWS_AS(g.neighbors(3), std::out_of_range);
}

TEST_CASE("families")
{
    CHECK(path_graph(3).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(is_isomorphic(cycle_graph(3), complete_graph(3)));
    const auto star = star_graph(4);
    CHECK(star.order() == 5);
    CHECK(star.degree(0) == 4);
    for (Vertex v = 1; v < 5; ++v)
        CHECK(star.degree(v) == 1);
    CHECK(empty_graph(4).size() == 0);
    CHECK_THROWS_AS(make_family(Family::path, 0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("neighborhoods and degree classes")
{
    const auto p3 = path_graph(3);
    CHECK(neighborhood(p3, 1, Neighborhood::open).members() == std::vector<Vertex>{0, 2});
    CHECK(neighborhood(p3, 1, Neighborhood::closed).members() == std::vector<Vertex>{0, 1, 2});
    CHECK(neighborhood(empty_graph(3), 0, Neighborhood::open).empty());
    CHECK(degree_class(path_graph(4), 2).members() == std::vector<Vertex>{1, 2});
    CHECK(degree_class(complete_graph(4), 3).size() == 4);
    CHECK(degree_class(cycle_graph(5), 3).empty());
    CHECK(max_degree(complete_graph(5)) == 4);
    CHECK(max_degree(path_graph(6)) == 2);
    CHECK(max_degree(star_graph(7)) == 7);
}

TEST_CASE("distance, induced subgraphs, cliques, common neighbors")
{
    const auto p4 = path_graph(4);
    CHECK(distance(p4, 2, 2) == 0);
    CHECK(distance(p4, 0, 3) == 3);
    CHECK_FALSE(distance(empty_graph(2), 0, 1).has_value());

    const auto c4 = cycle_graph(4);
    CHECK(induced_subgraph(c4, VertexSet(4, {0, 1})) == complete_graph(2));
    CHECK(induced_subgraph(c4, VertexSet(4, {0, 2})) == empty_graph(2));
    CHECK(is_isomorphic(induced_subgraph(c4, VertexSet::full(4)), c4));

    CHECK(is_clique(complete_graph(4), VertexSet(4, {0, 2, 3})));
    CHECK(is_clique(p4, VertexSet(4, {0, 1})));
    CHECK_FALSE(is_clique(c4, VertexSet(4, {0, 2})));

    CHECK(common_neighbors(c4, 0, 2).members() == std::vector<Vertex>{1, 3});
    CHECK(common_neighbors(p4, 0, 3).empty());
    CHECK(common_neighbors(complete_graph(4), 1, 2).members() == std::vector<Vertex>{0, 3});
}

TEST_CASE("graph6 reference strings")
{
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6("Bg") == path_graph(3));
    CHECK(parse_graph6("@") == empty_graph(1));
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(empty_graph(1)) == "@");
    CHECK(parse_graph6("Bw\n") == complete_graph(3));
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B!"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // padding bits set
    CHECK_THROWS_AS(parse_graph6("~"), ParseError);
}

TEST_CASE("graph6 agrees with a literal encoder on random graphs")
{
    std::mt19937_64 rng(oracle::seed());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        const auto g = random_connected_graph(n, 0.3, rng);
        const auto text = to_graph6(g);
        CHECK(text == oracle::graph6(g));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("edge list format")
{
    const auto g = parse_edge_list("# a comment\n4 3\n0 1\n1 2 # trailing\n2 3\n");
    CHECK(g == path_graph(4));
    CHECK(parse_edge_list(to_edge_list(cycle_graph(5))) == cycle_graph(5));
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK(read_graph("3 2\n0 1\n1 2\n") == path_graph(3));
    CHECK(read_graph("Bg\n") == path_graph(3));
    CHECK_THROWS_AS(read_graph("Bg\nBw\n"), ParseError);
}

TEST_CASE("subgraph containment")
{
    CHECK(has_subgraph(cycle_graph(6), path_graph(4)));
    CHECK_FALSE(has_subgraph(star_graph(3), cycle_graph(3)));
    CHECK(has_subgraph(path_graph(7), path_graph(7)));

    const auto embedding = find_subgraph(cycle_graph(6), path_graph(4));
    REQUIRE(embedding.has_value());
    const auto c6 = cycle_graph(6);
    for (const auto& e : path_graph(4).edges())
        CHECK(c6.adjacent((*embedding)[e.u], (*embedding)[e.v]));
}

TEST_CASE("subgraph containment matches brute force")
{
    std::mt19937_64 rng(oracle::seed() + 1);
    const std::vector<Graph> patterns{path_graph(4), cycle_graph(4), star_graph(3), cycle_graph(5),
                                      complete_graph(4), path_graph(6)};
    for (int trial = 0; trial < 60; ++trial) {
        const auto target = random_connected_graph(4 + rng() % 4, 0.35, rng);
        for (const auto& pattern : patterns)
            CHECK(has_subgraph(target, pattern) == oracle::contains(target, pattern));
    }
}

TEST_CASE("isomorphism")
{
    CHECK(is_isomorphic(cycle_graph(3), complete_graph(3)));
    CHECK(is_isomorphic(path_graph(3), star_graph(2)));
    CHECK_FALSE(is_isomorphic(path_graph(4), star_graph(3)));

    std::mt19937_64 rng(oracle::seed() + 2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const auto g = random_connected_graph(n, 0.4, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = relabel(g, perm);
        CHECK(canonical_graph6(g) == canonical_graph6(h));
        const auto other = random_connected_graph(n, 0.4, rng);
        CHECK(is_isomorphic(g, other) == oracle::isomorphic(g, other));
    }
}

TEST_CASE("isomorphism beyond the canonical range")
{
    std::mt19937_64 rng(oracle::seed() + 3);
    const auto g = random_connected_graph(14, 0.25, rng);
    std::vector<Vertex> perm(14);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_isomorphic(g, relabel(g, perm)));
    CHECK_FALSE(is_isomorphic(cycle_graph(14), path_graph(14)));
}

TEST_CASE("connected graph counts")
{
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n)
        CHECK(enumerate_connected(n).size() == expected[n - 1]);
    const std::size_t all[] = {1, 2, 4, 11, 34, 156};
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(enumerate_graphs(n).size() == all[n - 1]);
}

TEST_CASE("enumeration yields pairwise non-isomorphic connected graphs")
{
    const auto graphs = enumerate_connected(5);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CHECK(is_connected(graphs[i]));
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
    }
    std::set<std::string> codes;
    for (const auto& g : enumerate_connected(6))
        codes.insert(canonical_graph6(g));
    CHECK(codes.size() == 112);
}
