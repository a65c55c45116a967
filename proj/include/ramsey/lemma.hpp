#ifndef RAMSEY_LEMMA_HPP
#define RAMSEY_LEMMA_HPP

#include <ramsey/graph.hpp>
#include <ramsey/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

/**
 * Finite property checks of the matching lemmas.
 *  - l2:     bipartite graph on V1 + V2 missing at most eps|V1||V2| edges has
 *            a component of >= (1-3eps)(|V1|+|V2|) vertices with a matching
 *            of >= (1-3eps)|V2| edges.
 *  - double: K_N minus the pairs inside two holes U1, U2 (and a few more
 *            edges) has a component whose matching saturates (1-5eps)N
 *            vertices, or (2-7eps)N - 2|U2| when |U2| >= N/2.
 *  - dwa:    two-coloured K_N with a hole of nu n vertices has a colour-1
 *            component saturating (alpha+eps)n or a colour-2 component
 *            saturating (beta+eps)n.
 *  - trzy:   as dwa on more vertices, the colour-2 component non-bipartite.
 *  - f1:     three-coloured near-complete graph whose third colour has large
 *            bipartite components has a colour-1 component saturating
 *            (alpha1+eps)n or a colour-2 component saturating (alpha2+eps)n.
 */
enum class LemmaId
{
    l2,
    double_hole,
    dwa,
    trzy,
    f1
};

auto lemma_name(LemmaId id) -> const char *;
auto parse_lemma(const std::string & text) -> LemmaId;

struct LemmaParams
{
    LemmaId id = LemmaId::dwa;
    /// |V1| for l2, N for double, the scale n otherwise.
    int n = 40;
    /// |V2| for l2.
    int n2 = 40;
    /// alpha1 and alpha2 for f1.
    Rational alpha = 1, beta = 1;
    /// nu for dwa and trzy; nu1, nu2 for double.
    Rational nu = 0, nu2 = 0;
    Rational epsilon = Rational(1, 200);
};

struct LemmaFailure
{
    int sample = 0;
    std::string kind;
    std::string detail;
    bool hypotheses_hold = true;
    std::optional<Graph> graph;
    std::optional<EdgeColoring> coloring;
};

struct LemmaReport
{
    LemmaParams params;
    std::uint64_t seed = 0;
    int samples = 0;
    /// Derived sizes and thresholds, in display order.
    std::vector<std::pair<std::string, std::string>> header;
    /// Asymptotic side conditions that the finite parameters do not meet.
    std::vector<std::string> unmet_scale_conditions;
    int uniform_samples = 0, adversarial_samples = 0;
    int passes = 0;
    /// Conclusion failures whose sample meets every hypothesis.
    int failures = 0;
    /// Conclusion failures discarded because the sample broke a hypothesis.
    int rejected = 0;
    /// Smallest over samples of the best (saturation - required) margin.
    long min_slack = 0;
    std::vector<LemmaFailure> failure_list;
};

/// Throws OutOfRange when the parameters break a structural hypothesis
/// (ranges, orderings, epsilon bounds, vertex cap).
auto lemma_harness(const LemmaParams & params, int samples, std::uint64_t seed, int threads = 1,
    int local_steps = 60) -> LemmaReport;

} // namespace ramsey

#endif
