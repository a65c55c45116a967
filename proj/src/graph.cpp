#include <ramsey/errors.hpp>
#include <ramsey/graph.hpp>

#include <algorithm>
#include <string>

namespace ramsey {

namespace {

auto check_vertex(int n, int v) -> void
{
    if (v < 0 || v >= n)
        throw OutOfRange("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
}

} // namespace

Graph::Graph(int n) : _n(n)
{
    if (n < 1 || n > max_vertices)
        throw OutOfRange("vertex count " + std::to_string(n) + " outside 1..512");
    _adj.resize(n);
}

auto Graph::add_edge(int u, int v) -> void
{
    check_vertex(_n, u);
    check_vertex(_n, v);
    if (u == v)
        throw OutOfRange("self-loop at " + std::to_string(u));
    _adj[u].set(v);
    _adj[v].set(u);
}

auto Graph::remove_edge(int u, int v) -> void
{
    check_vertex(_n, u);
    check_vertex(_n, v);
    _adj[u].reset(v);
    _adj[v].reset(u);
}

auto Graph::edge_count() const -> long
{
    long twice = 0;
    for (const auto & row : _adj)
        twice += row.count();
    return twice / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (int u = 0; u < _n; ++u)
        for (int v = _adj[u].next(u); v != -1; v = _adj[u].next(v))
            out.emplace_back(u, v);
    return out;
}

auto Graph::induced(const VertexSet & keep) const -> Graph
{
    Graph h(_n);
    for (int v : keep)
        if (v < _n)
            h._adj[v] = _adj[v] & keep;
    return h;
}

auto Graph::edges_within(const VertexSet & s) const -> long
{
    long twice = 0;
    for (int v : s)
        twice += (_adj[v] & s).count();
    return twice / 2;
}

auto complete_graph(int n) -> Graph
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

auto apply_holes_and_deletions(const Graph & g, const HoleSpec & h, const std::vector<Edge> & deleted) -> Graph
{
    const auto all = g.vertices();
    for (const auto & hole : h.holes)
        if (! hole.is_subset_of(all))
            throw OutOfRange("hole member outside vertex range");

    Graph out = g;
    for (const auto & hole : h.holes)
        for (int u : hole)
            for (int v = hole.next(u); v != -1; v = hole.next(v))
                out.remove_edge(u, v);
    for (const auto & e : deleted)
        out.remove_edge(e.u, e.v);
    return out;
}

auto component_of(const Graph & g, int v) -> VertexSet
{
    VertexSet seen, frontier;
    seen.set(v);
    frontier.set(v);
    while (! frontier.empty()) {
        VertexSet grown;
        for (int u : frontier)
            grown |= g.neighbours(u);
        grown -= seen;
        seen |= grown;
        frontier = grown;
    }
    return seen;
}

auto components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    VertexSet remaining = g.vertices();
    while (! remaining.empty()) {
        auto c = component_of(g, remaining.first());
        remaining -= c;
        out.push_back(c);
    }
    return out;
}

namespace {

// BFS 2-colouring of the subgraph induced by `within`. On conflict, fills
// `conflict` with the offending edge.
struct TwoColouring
{
    std::vector<int> side, parent, depth;
    std::optional<Edge> conflict;
};

auto two_colour(const Graph & g, const VertexSet & within) -> TwoColouring
{
    const int n = g.size();
    TwoColouring t{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, 0), std::nullopt};
    std::vector<int> queue;
    for (int s : within) {
        if (t.side[s] != -1)
            continue;
        t.side[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbours(u) & within) {
                if (t.side[v] == -1) {
                    t.side[v] = 1 - t.side[u];
                    t.parent[v] = u;
                    t.depth[v] = t.depth[u] + 1;
                    queue.push_back(v);
                }
                else if (t.side[v] == t.side[u] && ! t.conflict)
                    t.conflict = Edge(u, v);
            }
        }
    }
    return t;
}

} // namespace

auto bipartition(const Graph & g) -> std::optional<Bipartition>
{
    auto t = two_colour(g, g.vertices());
    if (t.conflict)
        return std::nullopt;
    Bipartition b;
    for (int v = 0; v < g.size(); ++v)
        (t.side[v] == 0 ? b.left : b.right).set(v);
    return b;
}

auto is_bipartite(const Graph & g, const VertexSet & within) -> bool
{
    return ! two_colour(g, within).conflict;
}

auto odd_cycle(const Graph & g, const VertexSet & within) -> std::optional<std::vector<int>>
{
    auto t = two_colour(g, within);
    if (! t.conflict)
        return std::nullopt;

    // Both ends share a BFS tree and a side; their tree paths meet at the
    // lowest common ancestor, and the two paths plus the edge form an odd cycle.
    int a = t.conflict->u, b = t.conflict->v;
    std::vector<int> up_a, up_b;
    while (t.depth[a] > t.depth[b]) {
        up_a.push_back(a);
        a = t.parent[a];
    }
    while (t.depth[b] > t.depth[a]) {
        up_b.push_back(b);
        b = t.parent[b];
    }
    while (a != b) {
        up_a.push_back(a);
        up_b.push_back(b);
        a = t.parent[a];
        b = t.parent[b];
    }
    std::vector<int> cycle = up_a;
    cycle.push_back(a);
    cycle.insert(cycle.end(), up_b.rbegin(), up_b.rend());
    return cycle;
}

auto odd_cycle(const Graph & g) -> std::optional<std::vector<int>>
{
    return odd_cycle(g, g.vertices());
}

auto degree_stats(const Graph & g) -> DegreeStats
{
    DegreeStats s;
    s.min = g.degree(0);
    s.max = g.degree(0);
    for (int v = 1; v < g.size(); ++v) {
        s.min = std::min(s.min, g.degree(v));
        s.max = std::max(s.max, g.degree(v));
    }
    s.average = Rational(2 * g.edge_count(), g.size());
    return s;
}

EdgeColoring::EdgeColoring(int n, int k, HoleSpec holes, std::vector<Edge> deleted) :
    _n(n),
    _k(k),
    _holes(std::move(holes)),
    _deleted(std::move(deleted)),
    _color(static_cast<std::size_t>(n) * n, 0)
{
    if (n < 1 || n > max_vertices)
        throw OutOfRange("vertex count " + std::to_string(n) + " outside 1..512");
    if (k < 2 || k > 3)
        throw OutOfRange("colour count " + std::to_string(k) + " outside 2..3");
    const auto all = VertexSet::range(n);
    for (const auto & h : _holes.holes)
        if (! h.is_subset_of(all))
            throw OutOfRange("hole member outside vertex range");
    for (const auto & e : _deleted) {
        check_vertex(n, e.u);
        check_vertex(n, e.v);
        if (e.u == e.v)
            throw OutOfRange("deleted self-pair");
    }
    std::sort(_deleted.begin(), _deleted.end());
    _deleted.erase(std::unique(_deleted.begin(), _deleted.end()), _deleted.end());
}

auto EdgeColoring::in_host(int u, int v) const -> bool
{
    if (u == v || _holes.contains_pair(u, v))
        return false;
    return ! std::binary_search(_deleted.begin(), _deleted.end(), Edge(u, v));
}

auto EdgeColoring::host() const -> Graph
{
    return apply_holes_and_deletions(complete_graph(_n), _holes, _deleted);
}

auto EdgeColoring::set_color(int u, int v, int c) -> void
{
    check_vertex(_n, u);
    check_vertex(_n, v);
    if (c < 0 || c > _k)
        throw OutOfRange("colour " + std::to_string(c) + " outside 1.." + std::to_string(_k));
    if (c != 0 && ! in_host(u, v))
        throw InvalidColoring("pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not a host edge");
    _color[u * _n + v] = static_cast<std::uint8_t>(c);
    _color[v * _n + u] = static_cast<std::uint8_t>(c);
}

auto EdgeColoring::is_complete() const -> bool
{
    for (int u = 0; u < _n; ++u)
        for (int v = u + 1; v < _n; ++v)
            if (in_host(u, v) != (color(u, v) != 0))
                return false;
    return true;
}

auto EdgeColoring::validate() const -> void
{
    for (int u = 0; u < _n; ++u)
        for (int v = u + 1; v < _n; ++v) {
            bool host = in_host(u, v);
            int c = color(u, v);
            if (host && c == 0)
                throw InvalidColoring("host edge {" + std::to_string(u) + "," + std::to_string(v) + "} is uncoloured");
            if (! host && c != 0)
                throw InvalidColoring("non-host pair {" + std::to_string(u) + "," + std::to_string(v) + "} is coloured");
        }
}

auto color_class(const EdgeColoring & c, int color) -> Graph
{
    if (color < 1 || color > c.colors())
        throw OutOfRange("colour " + std::to_string(color) + " outside 1.." + std::to_string(c.colors()));
    Graph g(c.size());
    for (int u = 0; u < c.size(); ++u)
        for (int v = u + 1; v < c.size(); ++v)
            if (c.color(u, v) == color)
                g.add_edge(u, v);
    return g;
}

} // namespace ramsey
