#ifndef RAMSEY_MATCHING_HPP
#define RAMSEY_MATCHING_HPP

#include <ramsey/errors.hpp>
#include <ramsey/graph.hpp>

#include <string>
#include <vector>

namespace ramsey {

/// Pairwise vertex-disjoint edges, kept sorted.
struct MatchingCertificate
{
    std::vector<Edge> edges;

    auto saturation() const -> int { return 2 * static_cast<int>(edges.size()); }
    friend auto operator==(const MatchingCertificate &, const MatchingCertificate &) -> bool = default;
};

auto verify_matching(const Graph & g, const MatchingCertificate & m) -> bool;

/// Maximum-cardinality matching (Edmonds' blossom contraction).
auto maximum_matching(const Graph & g) -> MatchingCertificate;

struct ComponentMatching
{
    VertexSet component;
    MatchingCertificate matching;
};

/// Component whose internal maximum matching saturates the most vertices,
/// restricted to non-bipartite components when asked. Ties go to the
/// component with the smallest vertex. Throws NoQualifyingComponent.
auto best_component_matching(const Graph & g, bool require_nonbipartite) -> ComponentMatching;

/// Saturation of best_component_matching, or 0 when no component qualifies.
auto best_component_saturation(const Graph & g, bool require_nonbipartite) -> int;

/**
 * Gallai-Edmonds decomposition. `deficient` holds the vertices missed by
 * some maximum matching, `barrier` their outside neighbours, `rest` the
 * remainder. The barrier attains the Tutte-Berge maximum of
 * odd(G - S) - |S|.
 */
struct GallaiEdmonds
{
    VertexSet deficient, barrier, rest;
    int matching_size = 0;
};

auto gallai_edmonds(const Graph & g) -> GallaiEdmonds;

struct TuttePartition
{
    VertexSet s, t, u;
    int n_target = 0;
};

/// Checks every conclusion of the partition lemma against `g`:
/// (S,T,U) partitions V; no T-U edges; Delta(G[T]) <= sqrt|V| - 1;
/// |U| + 2|S| < n_target + sqrt|V|.
auto check_tutte_partition(const Graph & g, const TuttePartition & p) -> bool;

/// Requires the maximum matching to saturate fewer than n_target vertices
/// (PreconditionViolated otherwise). S is the Gallai-Edmonds barrier;
/// components of G-S with at most floor(sqrt|V|) vertices form T, larger
/// ones form U.
auto tutte_partition(const Graph & g, int n_target) -> TuttePartition;

struct BipartiteSplit
{
    VertexSet bipartite_part, rest;
    Rational alpha;
    int n_scale = 0;
};

/// Raised by bipartite_split when a non-bipartite component carries a
/// matching at the threshold; carries that matching.
class LargeNonBipartiteMatching : public PreconditionViolated
{
public:
    LargeNonBipartiteMatching(const std::string & what, ComponentMatching witness) :
        PreconditionViolated(what), witness(std::move(witness))
    {
    }
    ComponentMatching witness;
};

/// Edges-in-rest bound |E(G[rest])| <= alpha * n_scale * |rest| / 2 plus the
/// structural conditions.
auto check_bipartite_split(const Graph & g, const BipartiteSplit & s) -> bool;

auto bipartite_split(const Graph & g, const Rational & alpha, int n_scale) -> BipartiteSplit;

/// Closed walk w0 w1 ... w_{p-1} (returning to w0); repeats allowed.
struct ClosedWalk
{
    std::vector<int> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()); }
};

enum class WalkParity
{
    odd,
    even
};

/// Walk predicate: closed, consecutive pairs are edges, parity as asked,
/// every matching edge traversed, every vertex inside `component`.
auto check_closed_walk(const Graph & g, const ClosedWalk & w, const MatchingCertificate & m, WalkParity parity,
    const VertexSet & component) -> bool;

/**
 * Closed walk of the requested parity through every edge of `m`. The
 * matching edges (and, for odd parity, the vertices of an odd cycle of
 * their component) are joined into a minimal tree; the walk traverses each
 * tree edge twice and, for odd parity, splices in the odd cycle once.
 * Throws PreconditionViolated if the matching is empty, spans several
 * components, or odd parity is asked of a bipartite component.
 */
auto closed_walk_through_matching(const Graph & g, const MatchingCertificate & m, WalkParity parity) -> ClosedWalk;

} // namespace ramsey

#endif
