#include <ramsey/constructions.hpp>
#include <ramsey/errors.hpp>

#include <algorithm>
#include <string>

namespace ramsey {

auto claim_kind_name(ClaimKind k) -> const char *
{
    switch (k) {
    case ClaimKind::no_cycle_at_least: return "no-cycle-length-at-least";
    case ClaimKind::no_odd_cycle: return "no-odd-cycle";
    case ClaimKind::no_cycle: return "no-cycle-at-all";
    }
    return "?";
}

auto claim_status_name(ClaimStatus s) -> const char *
{
    switch (s) {
    case ClaimStatus::unchecked: return "unchecked";
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::fails: return "fails";
    case ClaimStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

auto Part::members() const -> VertexSet
{
    VertexSet s;
    for (int v = first; v < first + size; ++v)
        s.set(v);
    return s;
}

auto ConstructionReport::all_hold() const -> bool
{
    if (verdicts.size() != claims.size())
        return false;
    for (std::size_t i = 0; i < claims.size(); ++i)
        if (! claims[i].informational && verdicts[i].status != ClaimStatus::holds)
            return false;
    return true;
}

namespace {

auto require(bool ok, const std::string & what) -> void
{
    if (! ok)
        throw PreconditionViolated(what);
}

auto layout(const std::vector<std::pair<std::string, int>> & sizes) -> std::vector<Part>
{
    std::vector<Part> parts;
    int next = 0;
    for (const auto & [name, size] : sizes) {
        parts.push_back({name, next, size});
        next += size;
    }
    return parts;
}

auto total_size(const std::vector<Part> & parts) -> int
{
    return parts.back().first + parts.back().size;
}

/// Colours pairs inside part a with inside(a) and pairs between parts a < b
/// with across(a, b).
template <typename Inside, typename Across>
auto paint(const std::vector<Part> & parts, Inside inside, Across across) -> EdgeColoring
{
    int n = total_size(parts);
    EdgeColoring c(n, 3);
    std::vector<int> part_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i].members())
            part_of[v] = static_cast<int>(i);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int a = part_of[u], b = part_of[v];
            c.set_color(u, v, a == b ? inside(a) : across(a, b));
        }
    c.validate();
    return c;
}

auto side(const std::vector<Part> & parts, std::initializer_list<int> idx) -> VertexSet
{
    VertexSet s;
    for (int i : idx)
        s |= parts[i].members();
    return s;
}

auto longest_bound(int color, int bound) -> Claim
{
    Claim c;
    c.color = color;
    c.kind = ClaimKind::no_cycle_at_least;
    c.bound = bound;
    return c;
}

auto bipartite_claim(int color, VertexSet left, VertexSet right) -> Claim
{
    Claim c;
    c.color = color;
    c.kind = ClaimKind::no_odd_cycle;
    c.sides = Bipartition{left, right};
    return c;
}

} // namespace

auto build_four_part_cliques(int m1) -> ConstructionReport
{
    require(m1 >= 3, "four-part construction needs m1 >= 3");
    ConstructionReport r;
    r.id = "four-part-cliques";
    r.lengths = {m1};
    r.parts = layout({{"V1", m1 - 1}, {"V2", m1 - 1}, {"V3", m1 - 1}, {"V4", m1 - 1}});
    r.coloring = paint(
        r.parts, [](int) { return 1; },
        [](int a, int b) { return b == a + 1 ? 2 : 3; });
    r.claims.push_back(longest_bound(1, m1));
    r.claims.push_back(bipartite_claim(2, side(r.parts, {0, 2}), side(r.parts, {1, 3})));
    r.claims.push_back(bipartite_claim(3, side(r.parts, {0, 1}), side(r.parts, {2, 3})));
    return r;
}

auto build_odd_triple(int m1) -> ConstructionReport
{
    require(m1 >= 3 && m1 % 2 == 1, "odd-triple construction needs odd m1 >= 3");
    auto r = build_four_part_cliques(m1);
    r.id = "odd-triple";
    return r;
}

auto build_eeo_four_part(int m1, int m2) -> ConstructionReport
{
    require(m1 % 2 == 0 && m2 % 2 == 0 && m2 >= 4, "eeo four-part construction needs even m1, m2 >= 4");
    require(m1 >= m2, "eeo four-part construction needs m1 >= m2");
    ConstructionReport r;
    r.id = "eeo-four-part";
    r.lengths = {m1, m2};
    r.parts = layout({{"V1", m1 - 1}, {"V2", m1 - 1}, {"V3", m2 / 2 - 1}, {"V4", m2 / 2 - 1}});
    // colour 2 on V1V3 and V2V4, colour 3 elsewhere
    r.coloring = paint(
        r.parts, [](int) { return 1; },
        [](int a, int b) { return (a == 0 && b == 2) || (a == 1 && b == 3) ? 2 : 3; });
    r.claims.push_back(longest_bound(1, m1));
    auto second = longest_bound(2, m2);
    second.cover = side(r.parts, {2, 3});
    r.claims.push_back(second);
    r.claims.push_back(bipartite_claim(3, side(r.parts, {0, 2}), side(r.parts, {1, 3})));
    return r;
}

auto build_eeo_three_part(int m1, int m2, int m3) -> ConstructionReport
{
    require(m1 % 2 == 0 && m1 >= 4 && m2 % 2 == 0 && m2 >= 4, "eeo three-part construction needs even m1, m2 >= 4");
    require(m3 % 2 == 1 && m3 >= 3, "eeo three-part construction needs odd m3 >= 3");
    ConstructionReport r;
    r.id = "eeo-three-part";
    r.lengths = {m1, m2, m3};
    r.parts = layout({{"V1", m1 / 2 - 1}, {"V2", m2 / 2 - 1}, {"V3", m3 - 1}});
    // colour 3 inside V3, colour 2 on everything meeting V2, colour 1 on the rest
    r.coloring = paint(
        r.parts, [](int a) { return a == 2 ? 3 : a == 1 ? 2 : 1; },
        [](int a, int b) { return a == 1 || b == 1 ? 2 : 1; });
    auto first = longest_bound(1, m1 - 1);
    first.cover = side(r.parts, {0});
    auto second = longest_bound(2, m2 - 1);
    second.cover = side(r.parts, {1});
    r.claims = {first, second, longest_bound(3, m3)};
    return r;
}

auto build_oee_four_part(int m1, int m2) -> ConstructionReport
{
    require(m1 % 2 == 0 && m1 >= 4, "oee construction needs even m1 >= 4");
    require(m2 % 2 == 1 && m2 >= 3, "oee construction needs odd m2 >= 3");
    ConstructionReport r;
    r.id = "oee-four-part";
    r.lengths = {m1, m2};
    r.parts = layout({{"V1", m1 / 2 - 1}, {"V2", m1 / 2 - 1}, {"V3", m2 - 1}, {"V4", m2 - 1}});
    r.coloring = paint(
        r.parts, [](int a) { return a < 2 ? 1 : 2; },
        [](int a, int b) { return (a == 0 && b == 2) || (a == 1 && b == 3) ? 1 : 3; });
    auto first = longest_bound(1, m1);
    first.cover = side(r.parts, {0, 1});
    r.claims.push_back(first);
    r.claims.push_back(longest_bound(2, m2));
    r.claims.push_back(bipartite_claim(3, side(r.parts, {0, 2}), side(r.parts, {1, 3})));

    // The stated sharper colour-1 bound: no cycle longer than m1/2 - 2.
    auto sharper = longest_bound(1, std::max(3, m1 / 2 - 1));
    sharper.informational = true;
    sharper.note = "sharper colour-1 bound: no cycle longer than m1/2-2";
    r.claims.push_back(sharper);
    return r;
}

namespace {

auto check_no_long_cycle(const Graph & cls, int bound, const std::optional<VertexSet> & cover, CycleBudget budget)
    -> ClaimVerdict
{
    bound = std::max(bound, 3);
    auto comps = components(cls);

    // 1. every component too small to hold such a cycle
    if (std::all_of(comps.begin(), comps.end(), [&](const VertexSet & c) { return c.count() < bound; }))
        return {ClaimStatus::holds, "component-size", std::nullopt};

    // 2. supplied cover, or 3. smaller bipartite side, bounds each component
    const auto edges = cls.edges();
    bool cover_ok = cover && std::all_of(edges.begin(), edges.end(),
                                 [&](const Edge & e) { return cover->test(e.u) || cover->test(e.v); });
    bool structural = true;
    bool used_cover = false, used_sides = false;
    for (const auto & c : comps) {
        if (c.count() < bound)
            continue;
        if (cover_ok && 2 * (*cover & c).count() < bound) {
            used_cover = true;
            continue;
        }
        if (auto b = bipartition(cls.induced(c))) {
            int small = std::min((b->left & c).count(), (b->right & c).count());
            if (2 * small < bound) {
                used_sides = true;
                continue;
            }
        }
        structural = false;
        break;
    }
    if (structural)
        return {ClaimStatus::holds, used_cover ? "vertex-cover" : used_sides ? "bipartite-side" : "component-size",
            std::nullopt};

    // 4. exact search, component by component in vertex order
    for (const auto & c : comps) {
        if (c.count() < bound)
            continue;
        auto r = has_cycle_at_least(cls.induced(c), bound, budget);
        if (r.status == SearchStatus::found)
            return {ClaimStatus::fails, "exact-search", r.cycle};
        if (r.status == SearchStatus::budget_exceeded)
            return {ClaimStatus::budget_exceeded, "exact-search", std::nullopt};
    }
    return {ClaimStatus::holds, "exact-search", std::nullopt};
}

auto check_no_odd_cycle(const Graph & cls, const std::optional<Bipartition> & sides) -> ClaimVerdict
{
    if (sides && (sides->left | sides->right) == cls.vertices() && ! sides->left.intersects(sides->right)
        && cls.edges_within(sides->left) == 0 && cls.edges_within(sides->right) == 0)
        return {ClaimStatus::holds, "explicit-bipartition", std::nullopt};
    if (bipartition(cls))
        return {ClaimStatus::holds, "two-colouring", std::nullopt};
    return {ClaimStatus::fails, "two-colouring", CycleCertificate{*odd_cycle(cls)}};
}

} // namespace

auto verify_claims(ConstructionReport r, CycleBudget budget) -> ConstructionReport
{
    r.verdicts.clear();
    for (const auto & claim : r.claims) {
        Graph cls = color_class(r.coloring, claim.color);
        switch (claim.kind) {
        case ClaimKind::no_cycle_at_least:
            r.verdicts.push_back(check_no_long_cycle(cls, claim.bound, claim.cover, budget));
            break;
        case ClaimKind::no_cycle:
            r.verdicts.push_back(check_no_long_cycle(cls, 3, claim.cover, budget));
            break;
        case ClaimKind::no_odd_cycle: r.verdicts.push_back(check_no_odd_cycle(cls, claim.sides)); break;
        }
    }
    return r;
}

} // namespace ramsey
