#include "oracles.hpp"

#include <ramsey/errors.hpp>
#include <ramsey/matching.hpp>

#include <doctest.h>

#include <random>

using namespace ramsey;

namespace {

auto triangle_plus_c4() -> Graph
{
    Graph g(7);
    g.add_edge(0, 1), g.add_edge(1, 2), g.add_edge(0, 2);
    g.add_edge(3, 4), g.add_edge(4, 5), g.add_edge(5, 6), g.add_edge(3, 6);
    return g;
}

auto star(int leaves) -> Graph
{
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

} // namespace

TEST_CASE("maximum matching examples")
{
    auto k4 = maximum_matching(complete_graph(4));
    CHECK(k4.edges.size() == 2);
    CHECK(k4.saturation() == 4);
    CHECK(maximum_matching(oracle::cycle_graph(5)).edges.size() == 2);
    auto p = maximum_matching(oracle::petersen());
    CHECK(p.edges.size() == 5);
    CHECK(verify_matching(oracle::petersen(), p));
}

TEST_CASE("matching agrees with exhaustive branching")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 12;
        auto g = oracle::random_graph(n, 0.1 + 0.08 * (trial % 10), rng);
        auto m = maximum_matching(g);
        CHECK(verify_matching(g, m));
        CHECK(static_cast<int>(m.edges.size()) == oracle::matching_size(g));
        CHECK(std::is_sorted(m.edges.begin(), m.edges.end()));
    }
}

TEST_CASE("Tutte-Berge duality and the Gallai-Edmonds barrier")
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + trial % 10;
        auto g = oracle::random_graph(n, 0.15 + 0.07 * (trial % 8), rng);
        int nu = oracle::matching_size(g);
        CHECK(2 * nu == n - oracle::tutte_berge_deficiency(g));

        auto ge = gallai_edmonds(g);
        CHECK(ge.matching_size == nu);
        // deficient = vertices some maximum matching misses
        for (int v = 0; v < n; ++v) {
            Graph minus = g;
            for (int w : g.neighbours(v))
                minus.remove_edge(v, w);
            CHECK(ge.deficient.test(v) == (oracle::matching_size(minus) == nu));
        }
        // the barrier attains the deficiency
        int odd = 0;
        for (const auto & c : components(g.induced(g.vertices() - ge.barrier)))
            if (! c.intersects(ge.barrier))
                odd += c.count() % 2;
        CHECK(odd - ge.barrier.count() == n - 2 * nu);
    }
}

TEST_CASE("best component matching")
{
    auto g = triangle_plus_c4();
    auto odd = best_component_matching(g, true);
    CHECK(odd.component == VertexSet::of({0, 1, 2}));
    CHECK(odd.matching.edges.size() == 1);

    auto any = best_component_matching(g, false);
    CHECK(any.component == VertexSet::of({3, 4, 5, 6}));
    CHECK(any.matching.edges.size() == 2);

    CHECK_THROWS_AS(best_component_matching(oracle::cycle_graph(6), true), NoQualifyingComponent);
    CHECK(best_component_saturation(oracle::cycle_graph(6), true) == 0);
    CHECK(best_component_saturation(g, false) == 4);
}

TEST_CASE("Tutte partition examples")
{
    auto s = star(5);
    auto p = tutte_partition(s, 3);
    CHECK(p.s == VertexSet::of({0}));
    CHECK(p.t == VertexSet::of({1, 2, 3, 4, 5}));
    CHECK(p.u.empty());
    CHECK(check_tutte_partition(s, p));

    auto e = tutte_partition(Graph(6), 1);
    CHECK(e.s.empty());
    CHECK(e.t.count() == 6);
    CHECK(e.u.empty());

    Graph tri(7);
    tri.add_edge(0, 1), tri.add_edge(1, 2), tri.add_edge(0, 2);
    CHECK(check_tutte_partition(tri, tutte_partition(tri, 4)));

    CHECK_THROWS_AS(tutte_partition(complete_graph(4), 4), PreconditionViolated);
}

TEST_CASE("Tutte partition checker rejects broken partitions")
{
    auto s = star(5);
    TuttePartition bad{VertexSet{}, VertexSet::of({1, 2, 3, 4, 5}), VertexSet::of({0}), 3};
    CHECK(! check_tutte_partition(s, bad));
    TuttePartition missing{VertexSet::of({0}), VertexSet::of({1, 2, 3}), VertexSet{}, 3};
    CHECK(! check_tutte_partition(s, missing));
}

TEST_CASE("Tutte partition on random graphs")
{
    std::mt19937_64 rng(41);
    int done = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + trial % 30;
        auto g = oracle::random_graph(n, 0.02 + 0.01 * (trial % 10), rng);
        int nu = static_cast<int>(maximum_matching(g).edges.size());
        for (int target = 2 * nu + 1; target <= n; target += 1 + n / 4) {
            CHECK(check_tutte_partition(g, tutte_partition(g, target)));
            ++done;
        }
    }
    CHECK(done > 200);
}

TEST_CASE("bipartite split")
{
    Graph g(7);
    g.add_edge(0, 1), g.add_edge(1, 2), g.add_edge(2, 3), g.add_edge(0, 3);
    g.add_edge(4, 5), g.add_edge(5, 6), g.add_edge(4, 6);
    auto s = bipartite_split(g, Rational(1), 3);
    CHECK(s.bipartite_part == VertexSet::of({0, 1, 2, 3}));
    CHECK(s.rest == VertexSet::of({4, 5, 6}));
    CHECK(check_bipartite_split(g, s));

    auto c6 = bipartite_split(oracle::cycle_graph(6), Rational(1), 2);
    CHECK(c6.rest.empty());

    try {
        bipartite_split(complete_graph(5), Rational(1), 2);
        FAIL("expected a precondition violation");
    }
    catch (const LargeNonBipartiteMatching & e) {
        CHECK(e.witness.matching.saturation() >= 2);
        CHECK(verify_matching(complete_graph(5), e.witness.matching));
    }
}

TEST_CASE("closed walk examples")
{
    auto k3 = complete_graph(3);
    MatchingCertificate one{{Edge(0, 1)}};
    auto w = closed_walk_through_matching(k3, one, WalkParity::odd);
    CHECK(w.length() == 3);
    CHECK(check_closed_walk(k3, w, one, WalkParity::odd, k3.vertices()));

    Graph path(4);
    path.add_edge(0, 1), path.add_edge(1, 2), path.add_edge(2, 3);
    MatchingCertificate ends{{Edge(0, 1), Edge(2, 3)}};
    auto e = closed_walk_through_matching(path, ends, WalkParity::even);
    CHECK(e.length() % 2 == 0);
    CHECK(e.length() == 6);
    CHECK(check_closed_walk(path, e, ends, WalkParity::even, path.vertices()));

    auto c4 = oracle::cycle_graph(4);
    MatchingCertificate opposite{{Edge(0, 1), Edge(2, 3)}};
    CHECK_THROWS_AS(closed_walk_through_matching(c4, opposite, WalkParity::odd), PreconditionViolated);
}

TEST_CASE("closed walks on random components")
{
    std::mt19937_64 rng(43);
    int done = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_graph(3 + trial % 20, 0.25, rng);
        auto comp = best_component_matching(g, false);
        if (comp.matching.edges.empty())
            continue;
        // random sub-matching, at least one edge
        MatchingCertificate m;
        for (const auto & edge : comp.matching.edges)
            if (m.edges.empty() || rng() % 2)
                m.edges.push_back(edge);
        for (auto parity : {WalkParity::odd, WalkParity::even}) {
            if (parity == WalkParity::odd && is_bipartite(g, comp.component))
                continue;
            auto w = closed_walk_through_matching(g, m, parity);
            CHECK(check_closed_walk(g, w, m, parity, comp.component));
            ++done;
        }
    }
    CHECK(done > 150);
}
