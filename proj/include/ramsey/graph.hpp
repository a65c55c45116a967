#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <ramsey/rational.hpp>
#include <ramsey/vertex_set.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

/// Unordered vertex pair, always stored with u < v.
struct Edge
{
    int u = 0, v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Undirected simple graph on vertices 0..n-1 with one adjacency bitset per
 * vertex. Symmetric and irreflexive by construction.
 */
class Graph
{
public:
    /// Edgeless graph on n vertices; throws OutOfRange unless 1 <= n <= 512.
    explicit Graph(int n);

    auto size() const -> int { return _n; }
    auto vertices() const -> VertexSet { return VertexSet::range(_n); }

    auto adjacent(int u, int v) const -> bool { return _adj[u].test(v); }
    auto neighbours(int v) const -> const VertexSet & { return _adj[v]; }
    auto degree(int v) const -> int { return _adj[v].count(); }

    auto add_edge(int u, int v) -> void;
    auto remove_edge(int u, int v) -> void;

    auto edge_count() const -> long;
    auto edges() const -> std::vector<Edge>;

    /// Same vertex labels, keeping only edges with both ends in `keep`.
    auto induced(const VertexSet & keep) const -> Graph;

    /// Number of edges with both ends in `s`.
    auto edges_within(const VertexSet & s) const -> long;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    int _n;
    std::vector<VertexSet> _adj;
};

/// Sets whose internal pairs are absent from the host ("holes"); may overlap.
struct HoleSpec
{
    std::vector<VertexSet> holes;

    auto contains_pair(int u, int v) const -> bool
    {
        for (const auto & h : holes)
            if (h.test(u) && h.test(v))
                return true;
        return false;
    }

    friend auto operator==(const HoleSpec &, const HoleSpec &) -> bool = default;
};

struct DegreeStats
{
    int min = 0, max = 0;
    Rational average;
};

auto complete_graph(int n) -> Graph;

auto apply_holes_and_deletions(const Graph & g, const HoleSpec & h, const std::vector<Edge> & deleted) -> Graph;

/// Connected components, ordered by smallest member.
auto components(const Graph & g) -> std::vector<VertexSet>;

/// Component of `g` containing `v`.
auto component_of(const Graph & g, int v) -> VertexSet;

struct Bipartition
{
    VertexSet left, right;
};

/// A proper 2-colouring of all vertices, if one exists. Each component's
/// smallest vertex goes to `left`.
auto bipartition(const Graph & g) -> std::optional<Bipartition>;

/// An odd cycle (as a vertex sequence) inside `within`, or nothing if the
/// induced subgraph is bipartite. Evidence for a failed bipartition.
auto odd_cycle(const Graph & g, const VertexSet & within) -> std::optional<std::vector<int>>;
auto odd_cycle(const Graph & g) -> std::optional<std::vector<int>>;

auto is_bipartite(const Graph & g, const VertexSet & within) -> bool;

auto degree_stats(const Graph & g) -> DegreeStats;

/**
 * Edge colouring of K_n minus hole pairs minus explicitly deleted pairs.
 * Colour 0 marks "not yet coloured"; valid colours are 1..k.
 */
class EdgeColoring
{
public:
    EdgeColoring(int n, int k, HoleSpec holes = {}, std::vector<Edge> deleted = {});

    auto size() const -> int { return _n; }
    auto colors() const -> int { return _k; }
    auto holes() const -> const HoleSpec & { return _holes; }
    auto deleted() const -> const std::vector<Edge> & { return _deleted; }

    auto in_host(int u, int v) const -> bool;
    auto host() const -> Graph;

    auto color(int u, int v) const -> int { return _color[u * _n + v]; }
    auto set_color(int u, int v, int c) -> void;

    /// Throws InvalidColoring unless every host pair carries a colour in 1..k.
    auto validate() const -> void;
    auto is_complete() const -> bool;

    friend auto operator==(const EdgeColoring &, const EdgeColoring &) -> bool = default;

private:
    int _n, _k;
    HoleSpec _holes;
    std::vector<Edge> _deleted;
    std::vector<std::uint8_t> _color;
};

auto color_class(const EdgeColoring & c, int color) -> Graph;

} // namespace ramsey

#endif
