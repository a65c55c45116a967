#ifndef RAMSEY_SEARCH_HPP
#define RAMSEY_SEARCH_HPP

#include <ramsey/cycles.hpp>
#include <ramsey/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

enum class TargetKind
{
    cycle,
    matching
};

/// Demand for one colour: a cycle of exactly `length`, or a matching
/// saturating at least `saturation` vertices inside one component of that
/// colour (a non-bipartite component when `nonbipartite`).
struct Target
{
    TargetKind kind = TargetKind::cycle;
    int length = 0;
    int saturation = 0;
    bool nonbipartite = false;

    static auto cycle(int length) -> Target { return {TargetKind::cycle, length, 0, false}; }
    static auto matching(int saturation, bool nonbipartite) -> Target
    {
        return {TargetKind::matching, 0, saturation, nonbipartite};
    }

    friend auto operator==(const Target &, const Target &) -> bool = default;
};

/// "C5", "M4", "M4n".
auto target_name(const Target & t) -> std::string;

/// Parses target_name output; throws ParseError.
auto parse_target(const std::string & text) -> Target;

/// Matching demand implied by a cycle demand: a cycle of length l carries a
/// matching saturating 2 floor(l/2) vertices, in a non-bipartite component
/// when l is odd.
auto matching_from_cycle(const Target & t) -> Target;

/// Host K_n minus holes minus `deleted`; the colouring may additionally
/// leave out up to `deleted_budget` host edges. Target i belongs to colour i+1.
struct ArrowInstance
{
    int n = 1;
    HoleSpec holes;
    std::vector<Edge> deleted;
    int deleted_budget = 0;
    std::vector<Target> targets;
};

/// Throws OutOfRange unless 2 <= k <= 3, lengths >= 3, saturations even
/// and >= 2, the budget is non-negative and every vertex index fits.
auto validate(const ArrowInstance & inst) -> void;

enum class Arrows
{
    yes,
    no,
    unknown
};

auto arrows_name(Arrows a) -> const char *;

struct SearchStats
{
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    double seconds = 0;
};

struct ArrowVerdict
{
    Arrows arrows = Arrows::unknown;
    std::optional<EdgeColoring> witness;
    SearchStats stats;
    std::string note;
};

/// Whether colour `color` of `c` contains target `t`; `absent` and `found`
/// are exact, `budget_exceeded` means undecided.
auto contains_target(const EdgeColoring & c, int color, const Target & t, CycleBudget budget = {}) -> SearchStatus;

/// Whether the colouring dodges every target (independent re-check of a
/// witness). Throws BudgetExceeded if a cycle search runs out.
auto avoids_all_targets(const EdgeColoring & c, const std::vector<Target> & targets) -> bool;

/// Whether `c` is a legal colouring for `inst`: same host minus at most
/// deleted_budget extra edges, with k = number of targets.
auto fits_instance(const EdgeColoring & c, const ArrowInstance & inst) -> bool;

struct ExhaustiveOptions
{
    std::uint64_t node_budget = 2'000'000'000;
    int exact_cap = 13;
    bool symmetry = true;
    int symmetry_prefix = 5;
    int split_depth = 10;
    int threads = 1;
};

/// Exact decision by backtracking over colourings in edge order (max
/// endpoint, min endpoint). Unknown above the cap or past the budget.
auto arrow_exhaustive(const ArrowInstance & inst, const ExhaustiveOptions & options = {}) -> ArrowVerdict;

/// arrow_exhaustive restricted to matching demands; throws
/// PreconditionViolated if a cycle demand is present.
auto tau_check(const ArrowInstance & inst, const ExhaustiveOptions & options = {}) -> ArrowVerdict;

struct RamseyNumberResult
{
    /// Set when some N in range arrows and N-1 (also in range) does not.
    std::optional<int> value;
    /// The Ramsey number lies in [lower, upper]; upper unset means unbounded.
    int lower = 1;
    std::optional<int> upper;
    std::vector<std::pair<int, ArrowVerdict>> verdicts;
};

/// Decides every N in [from, to] on complete hosts. Throws Error if the
/// verdicts break monotonicity.
auto ramsey_number_exact(const std::vector<Target> & targets, int from, int to, const ExhaustiveOptions & options = {})
    -> RamseyNumberResult;

struct AnnealSchedule
{
    std::uint64_t steps = 200'000;
    int restarts = 8;
    double start_temperature = 2.0;
    double end_temperature = 0.05;
    /// Probability of picking the next edge among those on a target copy.
    double focus = 0.8;
};

/**
 * Simulated annealing over colourings of the host (no optional deletions)
 * minimising target violations. Returns arrows=no with a witness on
 * reaching zero, unknown otherwise. Restart r uses derive_seed(seed, r);
 * threads run restarts in parallel and the lowest successful restart wins.
 * A supplied `initial` colouring is returned at once if it already avoids
 * every target, and otherwise seeds restart 0.
 */
auto arrow_randomized(const ArrowInstance & inst, const AnnealSchedule & schedule, std::uint64_t seed, int threads = 1,
    const std::optional<EdgeColoring> & initial = std::nullopt) -> ArrowVerdict;

} // namespace ramsey

#endif
