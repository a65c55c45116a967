#include <ramsey/bounds.hpp>
#include <ramsey/errors.hpp>
#include <ramsey/lemma.hpp>
#include <ramsey/matching.hpp>
#include <ramsey/parallel.hpp>
#include <ramsey/rng.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <limits>

namespace ramsey {

auto lemma_name(LemmaId id) -> const char *
{
    switch (id) {
    case LemmaId::l2: return "l2";
    case LemmaId::double_hole: return "double";
    case LemmaId::dwa: return "dwa";
    case LemmaId::trzy: return "trzy";
    case LemmaId::f1: return "f1";
    }
    return "?";
}

auto parse_lemma(const std::string & text) -> LemmaId
{
    for (auto id : {LemmaId::l2, LemmaId::double_hole, LemmaId::dwa, LemmaId::trzy, LemmaId::f1})
        if (text == lemma_name(id))
            return id;
    throw ParseError("unknown lemma '" + text + "' (expected l2, double, dwa, trzy or f1)");
}

namespace {

    constexpr int vertex_cap = 512;

    auto ceil_long(const Rational & q) -> long { return static_cast<long>(ceil_of(q)); }
    auto floor_long(const Rational & q) -> long { return static_cast<long>(floor_of(q)); }

    /// Outcome of one sample. `slack` >= 0 exactly when the conclusion holds.
    struct Outcome
    {
        long slack = 0;
        bool hypotheses_hold = true;
        std::string detail;
        std::optional<Graph> graph;
        std::optional<EdgeColoring> coloring;
    };

    auto random_subset(int n, int size, Rng & rng) -> VertexSet
    {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i)
            order[i] = i;
        for (int i = 0; i < size; ++i)
            std::swap(order[i], order[i + static_cast<int>(rng.below(n - i))]);
        VertexSet s;
        for (int i = 0; i < size; ++i)
            s.set(order[i]);
        return s;
    }

    /// Up to `count` distinct edges of `pool`, chosen uniformly.
    auto random_edges(std::vector<Edge> pool, long count, Rng & rng) -> std::vector<Edge>
    {
        count = std::min<long>(count, static_cast<long>(pool.size()));
        for (long i = 0; i < count; ++i)
            std::swap(pool[i], pool[i + static_cast<long>(rng.below(pool.size() - i))]);
        pool.resize(count);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    /// Generic hill climb: keep a move when the score does not rise.
    template <typename State, typename Move, typename Score>
    auto hill_climb(State & state, int steps, Rng & rng, Move && move, Score && score) -> long
    {
        long best = score(state);
        for (int s = 0; s < steps && best >= 0; ++s) {
            State trial = state;
            move(trial, rng);
            long value = score(trial);
            if (value <= best) {
                state = std::move(trial);
                best = value;
            }
        }
        return best;
    }

    // ---------------------------------------------------------------- l2

    struct L2
    {
        int a, b;
        Rational eps;
        long budget;
        long need_size, need_edges;

        explicit L2(const LemmaParams & p) : a(p.n), b(p.n2), eps(p.epsilon)
        {
            if (b < 1 || a < b)
                throw OutOfRange("l2 needs |V1| >= |V2| >= 1");
            if (a + b > vertex_cap)
                throw OutOfRange("l2 instance exceeds 512 vertices");
            if (eps <= 0 || eps >= Rational(1, 100))
                throw OutOfRange("l2 needs 0 < epsilon < 0.01");
            budget = floor_long(eps * a * b);
            need_size = ceil_long((1 - 3 * eps) * (a + b));
            need_edges = ceil_long((1 - 3 * eps) * b);
        }

        auto graph(const std::vector<Edge> & deleted) const -> Graph
        {
            Graph g(a + b);
            for (int u = 0; u < a; ++u)
                for (int v = a; v < a + b; ++v)
                    g.add_edge(u, v);
            for (auto e : deleted)
                g.remove_edge(e.u, e.v);
            return g;
        }

        auto slack(const Graph & g) const -> long
        {
            long best = std::numeric_limits<long>::min();
            for (const auto & comp : components(g)) {
                long size = comp.count();
                long edges = static_cast<long>(maximum_matching(g.induced(comp)).edges.size());
                best = std::max(best, std::min(size - need_size, edges - need_edges));
            }
            return best;
        }

        auto cross_pair(Rng & rng) const -> Edge
        {
            return {static_cast<int>(rng.below(a)), a + static_cast<int>(rng.below(b))};
        }

        auto sample(bool adversarial, Rng & rng, int steps) const -> Outcome
        {
            std::vector<Edge> pool;
            for (int u = 0; u < a; ++u)
                for (int v = a; v < a + b; ++v)
                    pool.emplace_back(u, v);
            auto deleted = random_edges(pool, budget, rng);
            if (adversarial && ! deleted.empty()) {
                // Concentrate deletions: move one deleted pair next to another.
                auto move = [&](std::vector<Edge> & del, Rng & r) {
                    auto idx = r.below(del.size());
                    const Edge & anchor = del[r.below(del.size())];
                    Edge fresh = r.chance(0.5) ? Edge(anchor.u, a + static_cast<int>(r.below(b)))
                                               : Edge(static_cast<int>(r.below(a)), anchor.v);
                    if (r.chance(0.2))
                        fresh = cross_pair(r);
                    if (std::find(del.begin(), del.end(), fresh) == del.end())
                        del[idx] = fresh;
                };
                hill_climb(deleted, steps, rng, move, [&](const std::vector<Edge> & del) { return slack(graph(del)); });
            }
            Outcome out;
            auto g = graph(deleted);
            out.slack = slack(g);
            out.hypotheses_hold = is_bipartite(g, g.vertices())
                && Rational(g.edge_count()) >= (1 - eps) * a * b;
            out.detail = "best component misses the size or matching demand by " + std::to_string(-out.slack);
            out.graph = std::move(g);
            return out;
        }

        auto header(std::vector<std::pair<std::string, std::string>> & h) const -> void
        {
            h.emplace_back("V1", std::to_string(a));
            h.emplace_back("V2", std::to_string(b));
            h.emplace_back("deleted edges", std::to_string(budget));
            h.emplace_back("component size needed", std::to_string(need_size));
            h.emplace_back("matching edges needed", std::to_string(need_edges));
        }
    };

    // ---------------------------------------------------------------- double

    struct Double
    {
        int n;
        Rational nu1, nu2, eps;
        int s1, s2;
        long budget;
        long need;

        explicit Double(const LemmaParams & p) : n(p.n), nu1(p.nu), nu2(p.nu2), eps(p.epsilon)
        {
            if (n < 2 || n > vertex_cap)
                throw OutOfRange("double needs 2 <= N <= 512");
            if (nu1 < 0 || nu1 > nu2 || nu2 > 1)
                throw OutOfRange("double needs 0 <= nu1 <= nu2 <= 1");
            if (eps <= 0 || eps >= Rational(1, 7))
                throw OutOfRange("double needs 0 < epsilon < 1/7");
            s1 = static_cast<int>(floor_long(nu1 * n));
            s2 = static_cast<int>(floor_long(nu2 * n));
            budget = floor_long(eps * eps * eps * n * (n - 1) / 2);
            Rational threshold = 2 * s2 <= n ? (1 - 5 * eps) * n : (2 - 7 * eps) * n - 2 * s2;
            need = std::max<long>(0, ceil_long(threshold));
        }

        struct State
        {
            VertexSet u1, u2;
            std::vector<Edge> deleted;
        };

        auto graph(const State & s) const -> Graph
        {
            return apply_holes_and_deletions(complete_graph(n), HoleSpec{{s.u1, s.u2}}, s.deleted);
        }

        auto slack(const State & s) const -> long { return best_component_saturation(graph(s), false) - need; }

        static auto swap_member(VertexSet & set, int n, Rng & rng) -> void
        {
            int in = -1, out = -1;
            for (int tries = 0; tries < 4 * n && (in < 0 || out < 0); ++tries) {
                int v = static_cast<int>(rng.below(n));
                (set.test(v) ? in : out) = v;
            }
            if (in >= 0 && out >= 0)
                set.reset(in), set.set(out);
        }

        auto sample(bool adversarial, Rng & rng, int steps) const -> Outcome
        {
            State st{random_subset(n, s1, rng), random_subset(n, s2, rng), {}};
            std::vector<Edge> pool = graph(st).edges();
            st.deleted = random_edges(pool, budget, rng);
            if (adversarial) {
                auto move = [&](State & s, Rng & r) {
                    auto pick = r.below(3);
                    if (pick == 0)
                        swap_member(s.u1, n, r);
                    else if (pick == 1)
                        swap_member(s.u2, n, r);
                    else if (! s.deleted.empty()) {
                        int v = s.deleted[r.below(s.deleted.size())].u;
                        int w = static_cast<int>(r.below(n));
                        Edge e(v, w);
                        if (v != w && ! HoleSpec{{s.u1, s.u2}}.contains_pair(v, w)
                            && std::find(s.deleted.begin(), s.deleted.end(), e) == s.deleted.end())
                            s.deleted[r.below(s.deleted.size())] = e;
                    }
                    // Deleted pairs that slid into a hole are simply redundant.
                };
                hill_climb(st, steps, rng, move, [&](const State & s) { return slack(s); });
            }
            Outcome out;
            auto g = graph(st);
            out.slack = best_component_saturation(g, false) - need;
            out.hypotheses_hold = st.u1.count() == s1 && st.u2.count() == s2
                && static_cast<long>(st.deleted.size()) <= budget;
            out.detail = "best component matching saturates " + std::to_string(need + out.slack) + " < "
                + std::to_string(need);
            out.graph = std::move(g);
            return out;
        }

        auto header(std::vector<std::pair<std::string, std::string>> & h) const -> void
        {
            h.emplace_back("N", std::to_string(n));
            h.emplace_back("|U1|", std::to_string(s1));
            h.emplace_back("|U2|", std::to_string(s2));
            h.emplace_back("deleted edges", std::to_string(budget));
            h.emplace_back("saturation needed", std::to_string(need));
        }

        auto scale(std::vector<std::string> & unmet) const -> void
        {
            if (! (eps < nu1 / 100))
                unmet.push_back("epsilon < 0.01 nu1");
            if (Rational(n) < 4 / eps)
                unmet.push_back("N >= 4/epsilon");
        }
    };

    // -------------------------------------------------- coloured samples

    /**
     * Colouring shaped by vertex blocks: each vertex carries a block label
     * and each block pair a colour, plus single-edge exceptions. Only edges
     * marked free change colour; the rest stay fixed.
     */
    struct BlockColouring
    {
        static constexpr int blocks = 4;
        EdgeColoring coloring;
        std::vector<int> label;
        std::array<std::array<int, blocks>, blocks> rule{};
        std::vector<Edge> free;

        auto apply_pair(const Edge & e) -> void
        {
            coloring.set_color(e.u, e.v, rule[label[e.u]][label[e.v]]);
        }

        auto apply_all() -> void
        {
            for (const auto & e : free)
                apply_pair(e);
        }

        auto randomise(Rng & rng) -> void
        {
            int used = 1 + static_cast<int>(rng.below(blocks));
            for (auto & l : label)
                l = static_cast<int>(rng.below(used));
            for (int i = 0; i < blocks; ++i)
                for (int j = i; j < blocks; ++j)
                    rule[i][j] = rule[j][i] = 1 + static_cast<int>(rng.below(2));
            apply_all();
        }

        auto move(Rng & rng) -> void
        {
            auto pick = rng.below(4);
            if (pick <= 1) {
                int v = static_cast<int>(rng.below(label.size()));
                label[v] = static_cast<int>(rng.below(blocks));
                for (const auto & e : free)
                    if (e.u == v || e.v == v)
                        apply_pair(e);
            } else if (pick == 2) {
                int i = static_cast<int>(rng.below(blocks)), j = static_cast<int>(rng.below(blocks));
                rule[i][j] = rule[j][i] = 3 - rule[i][j];
                for (const auto & e : free) {
                    int x = label[e.u], y = label[e.v];
                    if ((x == i && y == j) || (x == j && y == i))
                        apply_pair(e);
                }
            } else if (! free.empty()) {
                const auto & e = free[rng.below(free.size())];
                coloring.set_color(e.u, e.v, 3 - coloring.color(e.u, e.v));
            }
        }
    };

    /// Colourings of K_N minus a hole minus deletions, two colours.
    struct HoleLemma
    {
        bool nonbipartite;
        HoleParams hp;
        int n;
        long host, hole;
        long budget;
        long need1, need2;

        HoleLemma(const LemmaParams & p, bool trzy) :
            nonbipartite(trzy), hp{p.alpha, p.beta, p.nu, p.epsilon}, n(p.n)
        {
            check_hole_params(hp);
            if (n < 1)
                throw OutOfRange("n must be positive");
            host = trzy ? lemma_trzy_host_size(hp, n) : lemma_dwa_host_size(hp, n);
            if (host > vertex_cap)
                throw OutOfRange("host of " + std::to_string(host) + " vertices exceeds 512");
            hole = ceil_long(hp.nu * n);
            budget = floor_long(hp.epsilon * hp.epsilon * hp.epsilon * n * n);
            need1 = ceil_long((hp.alpha + hp.epsilon) * n);
            need2 = ceil_long((hp.beta + hp.epsilon) * n);
        }

        auto slack(const EdgeColoring & c) const -> long
        {
            long s1 = best_component_saturation(color_class(c, 1), false) - need1;
            long s2 = best_component_saturation(color_class(c, 2), nonbipartite) - need2;
            return std::max(s1, s2);
        }

        auto sample(bool adversarial, Rng & rng, int steps) const -> Outcome
        {
            HoleSpec holes;
            if (hole > 0)
                holes.holes.push_back(VertexSet::range(static_cast<int>(hole)));
            int h = static_cast<int>(host);
            auto pool = apply_holes_and_deletions(complete_graph(h), holes, {}).edges();
            auto deleted = random_edges(pool, budget, rng);
            BlockColouring bc{EdgeColoring(h, 2, holes, deleted), std::vector<int>(h, 0), {}, {}};
            bc.free = bc.coloring.host().edges();
            if (adversarial) {
                bc.randomise(rng);
                hill_climb(bc, steps, rng, [](BlockColouring & s, Rng & r) { s.move(r); },
                    [&](const BlockColouring & s) { return slack(s.coloring); });
            } else {
                for (const auto & e : bc.free)
                    bc.coloring.set_color(e.u, e.v, 1 + static_cast<int>(rng.below(2)));
            }
            Outcome out;
            out.slack = slack(bc.coloring);
            auto expected = apply_holes_and_deletions(complete_graph(h), holes, deleted);
            out.hypotheses_hold = bc.coloring.is_complete() && bc.coloring.host() == expected
                && static_cast<long>(deleted.size()) <= budget;
            out.detail = std::string("no colour-1 component saturating ") + std::to_string(need1)
                + " and no " + (nonbipartite ? "non-bipartite " : "") + "colour-2 component saturating "
                + std::to_string(need2);
            out.coloring = std::move(bc.coloring);
            return out;
        }

        auto header(std::vector<std::pair<std::string, std::string>> & hd) const -> void
        {
            hd.emplace_back("n", std::to_string(n));
            hd.emplace_back("N", std::to_string(host));
            hd.emplace_back("|W|", std::to_string(hole));
            hd.emplace_back("deleted edges", std::to_string(budget));
            hd.emplace_back("colour-1 saturation needed", std::to_string(need1));
            hd.emplace_back(nonbipartite ? "colour-2 non-bipartite saturation needed" : "colour-2 saturation needed",
                std::to_string(need2));
        }
    };

    /// Three colourings whose third colour has a large bipartite part.
    struct F1
    {
        Rational a1, a2, eps;
        int n;
        long host, budget, need_bip, need1, need2;

        explicit F1(const LemmaParams & p) : a1(p.alpha), a2(p.beta), eps(p.epsilon), n(p.n)
        {
            if (! (a2 > 0 && a1 >= a2))
                throw OutOfRange("f1 needs alpha1 >= alpha2 > 0");
            if (! (eps > 0 && eps < a2 / 100))
                throw OutOfRange("f1 needs 0 < epsilon < 0.01 alpha2");
            if (n < 1)
                throw OutOfRange("n must be positive");
            auto root = sqrt_enclosure(eps).hi;
            host = ceil_long((2 * a1 + a2 + 9 * root) * n);
            if (host > vertex_cap)
                throw OutOfRange("host of " + std::to_string(host) + " vertices exceeds 512");
            budget = floor_long(eps * eps * eps * eps * n * n);
            need_bip = ceil_long((Rational(3, 2) * a1 + a2 / 2 + 8 * root) * n);
            need1 = ceil_long((a1 + eps) * n);
            need2 = ceil_long((a2 + eps) * n);
        }

        auto slack(const EdgeColoring & c) const -> long
        {
            long s1 = best_component_saturation(color_class(c, 1), false) - need1;
            long s2 = best_component_saturation(color_class(c, 2), false) - need2;
            return std::max(s1, s2);
        }

        auto bipartite_union(const EdgeColoring & c) const -> long
        {
            auto g3 = color_class(c, 3);
            long total = 0;
            for (const auto & comp : components(g3))
                if (is_bipartite(g3, comp))
                    total += comp.count();
            return total;
        }

        auto sample(bool adversarial, Rng & rng, int steps) const -> Outcome
        {
            int h = static_cast<int>(host);
            auto deleted = random_edges(complete_graph(h).edges(), budget, rng);
            BlockColouring bc{EdgeColoring(h, 3, {}, deleted), std::vector<int>(h, 0), {}, {}};

            // Colour 3: random X-Y edges inside a large set B, optionally
            // anything outside B; never an edge leaving B.
            int extra = static_cast<int>(rng.below(std::max<long>(1, host - need_bip + 1)));
            int b_size = static_cast<int>(std::min<long>(host, need_bip + extra));
            VertexSet b = random_subset(h, b_size, rng), x;
            for (int v = 0; v < h; ++v)
                if (b.test(v) && rng.chance(0.5))
                    x.set(v);
            double cross = 0.5 + 0.5 * rng.unit(), outside = rng.unit();
            for (const auto & e : bc.coloring.host().edges()) {
                bool in_u = b.test(e.u), in_v = b.test(e.v);
                bool third = false;
                if (in_u && in_v)
                    third = x.test(e.u) != x.test(e.v) && rng.chance(cross);
                else if (! in_u && ! in_v)
                    third = rng.chance(outside);
                if (third)
                    bc.coloring.set_color(e.u, e.v, 3);
                else
                    bc.free.push_back(e);
            }
            if (adversarial) {
                bc.randomise(rng);
                hill_climb(bc, steps, rng, [](BlockColouring & s, Rng & r) { s.move(r); },
                    [&](const BlockColouring & s) { return slack(s.coloring); });
            } else {
                for (const auto & e : bc.free)
                    bc.coloring.set_color(e.u, e.v, 1 + static_cast<int>(rng.below(2)));
            }
            Outcome out;
            out.slack = slack(bc.coloring);
            out.hypotheses_hold = bc.coloring.is_complete() && static_cast<long>(deleted.size()) <= budget
                && bipartite_union(bc.coloring) >= need_bip;
            out.detail = "no colour-1 component saturating " + std::to_string(need1)
                + " and no colour-2 component saturating " + std::to_string(need2);
            out.coloring = std::move(bc.coloring);
            return out;
        }

        auto header(std::vector<std::pair<std::string, std::string>> & hd) const -> void
        {
            hd.emplace_back("n", std::to_string(n));
            hd.emplace_back("|V|", std::to_string(host));
            hd.emplace_back("deleted edges", std::to_string(budget));
            hd.emplace_back("bipartite colour-3 union at least", std::to_string(need_bip));
            hd.emplace_back("colour-1 saturation needed", std::to_string(need1));
            hd.emplace_back("colour-2 saturation needed", std::to_string(need2));
        }
    };

} // namespace

auto lemma_harness(const LemmaParams & params, int samples, std::uint64_t seed, int threads, int local_steps)
    -> LemmaReport
{
    if (samples < 0)
        throw OutOfRange("sample count must be non-negative");
    if (local_steps < 0)
        throw OutOfRange("local search steps must be non-negative");

    LemmaReport report;
    report.params = params;
    report.seed = seed;
    report.samples = samples;
    report.header.emplace_back("lemma", lemma_name(params.id));
    report.header.emplace_back("epsilon", to_string(params.epsilon));

    std::function<Outcome(bool, Rng &)> run;
    auto bind = [&](auto lemma) {
        lemma.header(report.header);
        run = [lemma, local_steps](bool adversarial, Rng & rng) { return lemma.sample(adversarial, rng, local_steps); };
        return lemma;
    };
    switch (params.id) {
    case LemmaId::l2: bind(L2(params)); break;
    case LemmaId::double_hole: bind(Double(params)).scale(report.unmet_scale_conditions); break;
    case LemmaId::dwa: bind(HoleLemma(params, false)); break;
    case LemmaId::trzy: bind(HoleLemma(params, true)); break;
    case LemmaId::f1: bind(F1(params)); break;
    }
    if (params.id != LemmaId::l2 && params.id != LemmaId::double_hole)
        report.unmet_scale_conditions.push_back("n > n0 (threshold not quantified; finite n used as a proxy)");

    std::vector<Outcome> outcomes(samples);
    parallel_indices(samples, threads, [&](int i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        outcomes[i] = run(i % 2 == 1, rng);
    });

    report.min_slack = samples ? std::numeric_limits<long>::max() : 0;
    for (int i = 0; i < samples; ++i) {
        auto & o = outcomes[i];
        bool adversarial = i % 2 == 1;
        ++(adversarial ? report.adversarial_samples : report.uniform_samples);
        report.min_slack = std::min(report.min_slack, o.slack);
        if (o.slack >= 0) {
            ++report.passes;
            continue;
        }
        ++(o.hypotheses_hold ? report.failures : report.rejected);
        report.failure_list.push_back({i, adversarial ? "adversarial" : "uniform", std::move(o.detail),
            o.hypotheses_hold, std::move(o.graph), std::move(o.coloring)});
    }
    return report;
}

} // namespace ramsey
