#include "oracles.hpp"

#include <ramsey/errors.hpp>
#include <ramsey/graph.hpp>

#include <doctest.h>

#include <random>

using namespace ramsey;

TEST_CASE("vertex set basics")
{
    auto s = VertexSet::of({1, 5, 64, 300});
    CHECK(s.count() == 4);
    CHECK(s.first() == 1);
    CHECK(s.next(5) == 64);
    CHECK(s.members() == std::vector<int>{1, 5, 64, 300});
    auto r = VertexSet::range(70);
    CHECK(r.count() == 70);
    CHECK((r - s).count() == 67);
    CHECK(s.is_subset_of(VertexSet::range(301)));
    CHECK(! s.is_subset_of(r));
}

TEST_CASE("complete graph sizes")
{
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(10).edge_count() == 45);
    CHECK_THROWS_AS(Graph(0), OutOfRange);
    CHECK_THROWS_AS(Graph(513), OutOfRange);
    CHECK_NOTHROW(Graph(512));
}

TEST_CASE("holes and deletions")
{
    auto k4 = apply_holes_and_deletions(complete_graph(4), HoleSpec{{VertexSet::of({0, 1, 2})}}, {});
    CHECK(k4.edge_count() == 3);
    CHECK(k4.degree(3) == 3);

    auto k5 = apply_holes_and_deletions(complete_graph(5), HoleSpec{{VertexSet::of({0, 1}), VertexSet::of({1, 2})}}, {});
    CHECK(k5.edge_count() == 8);

    auto k6 = apply_holes_and_deletions(complete_graph(6), HoleSpec{{VertexSet{}}}, {Edge(0, 1)});
    CHECK(k6.edge_count() == 14);

    // idempotent
    CHECK(apply_holes_and_deletions(k6, HoleSpec{{VertexSet{}}}, {Edge(0, 1)}) == k6);
}

TEST_CASE("colour classes")
{
    EdgeColoring c(3, 2);
    c.set_color(0, 1, 1);
    c.set_color(0, 2, 1);
    c.set_color(1, 2, 1);
    c.validate();
    CHECK(color_class(c, 1).edge_count() == 3);
    CHECK(color_class(c, 2).edge_count() == 0);

    EdgeColoring partial(3, 2);
    partial.set_color(0, 1, 2);
    CHECK_THROWS_AS(partial.validate(), InvalidColoring);

    EdgeColoring holed(4, 2, HoleSpec{{VertexSet::of({0, 1})}});
    CHECK_THROWS_AS(holed.set_color(0, 1, 1), InvalidColoring);
    CHECK_THROWS_AS(EdgeColoring(4, 4), OutOfRange);
}

TEST_CASE("colour class edge counts sum to the host")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + trial % 10;
        HoleSpec h{{VertexSet::of({0, 1, 2})}};
        EdgeColoring c(n, 3, h, {Edge(n - 1, n - 2)});
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (c.in_host(u, v))
                    c.set_color(u, v, 1 + static_cast<int>(rng() % 3));
        c.validate();
        long total = 0;
        for (int i = 1; i <= 3; ++i)
            total += color_class(c, i).edge_count();
        CHECK(total == c.host().edge_count());
    }
}

TEST_CASE("components")
{
    Graph two(6);
    two.add_edge(0, 1), two.add_edge(1, 2), two.add_edge(0, 2);
    two.add_edge(3, 4), two.add_edge(4, 5), two.add_edge(3, 5);
    auto cs = components(two);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].count() == 3);
    CHECK(cs[1].count() == 3);

    CHECK(components(Graph(5)).size() == 5);

    Graph p4(4);
    p4.add_edge(0, 1), p4.add_edge(1, 2), p4.add_edge(2, 3);
    CHECK(components(p4).size() == 1);
}

TEST_CASE("components form a partition on random graphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(2 + trial % 30, 0.08, rng);
        auto cs = components(g);
        VertexSet all;
        for (const auto & c : cs) {
            CHECK(! c.intersects(all));
            all |= c;
            CHECK(component_of(g, c.first()) == c);
            for (int v : c)
                CHECK((g.neighbours(v) - c).empty());
        }
        CHECK(all == g.vertices());
    }
}

TEST_CASE("bipartition")
{
    auto c4 = bipartition(oracle::cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->left.count() == 2);
    CHECK(c4->right.count() == 2);

    CHECK(! bipartition(oracle::cycle_graph(5)));

    Graph k33(6);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            if (b != a + 3)
                k33.add_edge(a, b);
    auto s = bipartition(k33);
    REQUIRE(s);
    CHECK(s->left.count() == 3);
    CHECK(s->right.count() == 3);
}

TEST_CASE("bipartition or odd cycle evidence on random graphs")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(3 + trial % 15, 0.15, rng);
        auto b = bipartition(g);
        auto odd = odd_cycle(g);
        CHECK(b.has_value() != odd.has_value());
        if (b) {
            CHECK(g.edges_within(b->left) == 0);
            CHECK(g.edges_within(b->right) == 0);
            CHECK((b->left | b->right) == g.vertices());
        }
        else {
            const auto & c = *odd;
            CHECK(c.size() % 2 == 1);
            for (std::size_t i = 0; i < c.size(); ++i)
                CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
        }
    }
}

TEST_CASE("degree stats")
{
    auto k4 = degree_stats(complete_graph(4));
    CHECK(k4.min == 3);
    CHECK(k4.max == 3);
    CHECK(k4.average == 3);

    Graph star(6);
    for (int v = 1; v < 6; ++v)
        star.add_edge(0, v);
    auto s = degree_stats(star);
    CHECK(s.min == 1);
    CHECK(s.max == 5);
    CHECK(s.average == Rational(10, 6));

    auto c6 = degree_stats(oracle::cycle_graph(6));
    CHECK(c6.min == 2);
    CHECK(c6.average == 2);
}

TEST_CASE("self loops rejected")
{
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), OutOfRange);
}
