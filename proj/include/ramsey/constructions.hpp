#ifndef RAMSEY_CONSTRUCTIONS_HPP
#define RAMSEY_CONSTRUCTIONS_HPP

#include <ramsey/cycles.hpp>
#include <ramsey/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ramsey {

enum class ClaimKind
{
    no_cycle_at_least,  // no cycle of length >= bound
    no_odd_cycle,
    no_cycle            // acyclic
};

auto claim_kind_name(ClaimKind k) -> const char *;

struct Claim
{
    int color = 1;
    ClaimKind kind = ClaimKind::no_cycle;
    int bound = 0;

    /// Optional certificates the verifier tries before searching: claimed
    /// bipartition sides of the colour class, and a vertex set meeting every
    /// edge of the colour class (a cycle through a cover C has length at
    /// most 2|C ∩ component|).
    std::optional<Bipartition> sides;
    std::optional<VertexSet> cover;

    /// Reported but not required for the construction to be correct.
    bool informational = false;
    std::string note;
};

enum class ClaimStatus
{
    unchecked,
    holds,
    fails,
    budget_exceeded
};

auto claim_status_name(ClaimStatus s) -> const char *;

struct ClaimVerdict
{
    ClaimStatus status = ClaimStatus::unchecked;
    std::string method;
    std::optional<CycleCertificate> witness;
};

struct Part
{
    std::string name;
    int first = 0, size = 0;

    auto members() const -> VertexSet;
};

struct ConstructionReport
{
    std::string id;
    std::vector<int> lengths;
    EdgeColoring coloring{1, 2};
    std::vector<Part> parts;
    std::vector<Claim> claims;
    std::vector<ClaimVerdict> verdicts;

    /// Every non-informational claim has been checked and holds.
    auto all_hold() const -> bool;
};

/// Four parts of size m1-1; colour 1 inside parts, colour 2 on V1V2, V2V3,
/// V3V4 and colour 3 on V1V3, V2V4, V1V4. Any m1 >= 3.
auto build_four_part_cliques(int m1) -> ConstructionReport;

/// build_four_part_cliques for odd m1.
auto build_odd_triple(int m1) -> ConstructionReport;

/// m1 >= m2 >= 4, both even. N = 2 m1 + m2 - 4.
auto build_eeo_four_part(int m1, int m2) -> ConstructionReport;

/// m1, m2 even >= 4, m3 odd >= 3. N = m1/2 + m2/2 + m3 - 3.
auto build_eeo_three_part(int m1, int m2, int m3) -> ConstructionReport;

/// m1 even >= 4, m2 odd >= 3. N = m1 + 2 m2 - 4.
auto build_oee_four_part(int m1, int m2) -> ConstructionReport;

/// Checks each claim by the cheapest sufficient method: component sizes,
/// supplied certificates, bipartite side sizes, then exact search within
/// `budget` per component. Failed claims carry a witness cycle.
auto verify_claims(ConstructionReport r, CycleBudget budget = {}) -> ConstructionReport;

} // namespace ramsey

#endif
