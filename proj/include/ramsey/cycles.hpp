#ifndef RAMSEY_CYCLES_HPP
#define RAMSEY_CYCLES_HPP

#include <ramsey/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

/// Ordered cycle v0 v1 ... v_{l-1}; the closing pair (v_{l-1}, v0) is implied.
struct CycleCertificate
{
    std::vector<int> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()); }
    friend auto operator==(const CycleCertificate &, const CycleCertificate &) -> bool = default;
};

enum class Parity
{
    any,
    odd,
    even
};

auto parity_matches(Parity p, int length) -> bool;

enum class SearchStatus
{
    found,
    absent,
    budget_exceeded
};

struct CycleBudget
{
    std::uint64_t max_expansions = 100'000'000;
};

struct CycleSearchResult
{
    SearchStatus status = SearchStatus::absent;
    std::optional<CycleCertificate> cycle;
    std::uint64_t expansions = 0;
};

/// Exact search for a cycle of length exactly `length` (>= 3).
auto has_cycle_of_length(const Graph & g, int length, CycleBudget budget = {}) -> CycleSearchResult;

/// Exact search for any cycle of length >= `min_length`.
auto has_cycle_at_least(const Graph & g, int min_length, CycleBudget budget = {}) -> CycleSearchResult;

/// Maximum cycle length of the requested parity. `found` carries the first
/// certificate reaching the maximum in the fixed search order.
auto longest_cycle(const Graph & g, Parity parity, CycleBudget budget = {}) -> CycleSearchResult;

/**
 * A cycle of length >= m in any graph with at least (m-1)(n-1)/2 + 1 edges.
 * Strips low-degree vertices and drops to a dense block until the remainder
 * is 2-connected with minimum degree >= ceil(m/2), then closes a rotated
 * maximal path through an endpoint's neighbourhood. Throws
 * PreconditionViolated below the edge threshold.
 */
auto erdos_gallai_cycle(const Graph & g, int m, CycleBudget budget = {}) -> CycleCertificate;

auto verify_cycle(const Graph & g, const CycleCertificate & c) -> bool;

/// Whether a simple path with exactly `edges` edges joins `from` and `to`
/// (distinct vertices, edges >= 1).
auto has_path_of_length(const Graph & g, int from, int to, int edges) -> bool;

/// Blocks (2-connected components, or bridges) as vertex sets.
auto biconnected_blocks(const Graph & g) -> std::vector<VertexSet>;

} // namespace ramsey

#endif
